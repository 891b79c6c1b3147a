//! Parity-partition enumeration, the spectrum, degree-balance and the
//! per-partition non-edge counts.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bits::{self, count, k_subsets};
use crate::graph::Graph;
use crate::signed::{ParityPartition, SignedGraph};
use crate::{Error, Result};

/// Above this order the spectrum is still exact, just slow.
pub const SPECTRUM_SOFT_LIMIT: usize = 20;

/// Every unordered parity-partition of `0..n` exactly once, in canonical
/// orientation: for even `n` vertex 0 is fixed in `v1` (`C(n, n/2) / 2`
/// partitions), for odd `n` `v1` is the smaller side (`C(n, (n-1)/2)`).
/// Ordered by the numeric value of the `v1` bitset.
pub fn parity_partitions(n: usize) -> impl Iterator<Item = ParityPartition> {
    assert!(
        (1..=crate::graph::MAX_ORDER).contains(&n),
        "order {n} out of range"
    );
    let (width, k, fixed) = if n.is_multiple_of(2) {
        (n - 1, n / 2 - 1, 1u64)
    } else {
        (n, (n - 1) / 2, 0u64)
    };
    let shift = fixed as u32;
    k_subsets(width, k).map(move |m| {
        ParityPartition::from_v1_mask(n, (m << shift) | fixed).expect("balanced by construction")
    })
}

pub fn enumerate_parity_partitions(g: &Graph) -> impl Iterator<Item = ParityPartition> {
    parity_partitions(g.order())
}

/// Number of unordered parity-partitions of an `n`-set.
pub fn partition_count(n: usize) -> u128 {
    let binom = |n: u128, k: u128| (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1));
    let n = n as u128;
    if n.is_multiple_of(2) {
        binom(n, n / 2) / 2
    } else {
        binom(n, (n - 1) / 2)
    }
}

/// The set of achievable negative-edge counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Spectrum {
    values: BTreeSet<usize>,
}

impl Spectrum {
    pub fn values(&self) -> impl Iterator<Item = usize> + '_ {
        self.values.iter().copied()
    }

    pub fn min(&self) -> usize {
        *self.values.first().expect("spectrum is never empty")
    }

    pub fn max(&self) -> usize {
        *self.values.last().expect("spectrum is never empty")
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_singleton(&self) -> bool {
        self.values.len() == 1
    }

    pub fn contains(&self, v: usize) -> bool {
        self.values.contains(&v)
    }
}

impl FromIterator<usize> for Spectrum {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Spectrum {
            values: iter.into_iter().collect(),
        }
    }
}

/// `{4,6}`
impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

impl FromStr for Spectrum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Precondition(format!("malformed spectrum `{s}`"));
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(bad)?;
        inner
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
            .collect()
    }
}

/// Spectrum of a connected graph.
pub fn spectrum(g: &Graph) -> Result<Spectrum> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(cut_spectrum(g))
}

/// Cut sizes over all parity-partitions, without the connectivity
/// precondition.
pub fn cut_spectrum(g: &Graph) -> Spectrum {
    parity_partitions(g.order())
        .map(|p| p.cut_size(g))
        .collect()
}

/// Sign-differences `d_neg - d_pos` of every vertex under the signature
/// induced by `p`.
pub fn sign_differences(g: &Graph, p: &ParityPartition) -> Vec<i64> {
    let (a, b) = (p.v1_mask(), p.v2_mask());
    (0..g.order())
        .map(|v| {
            let (own, other) = if p.in_v1(v) { (a, b) } else { (b, a) };
            let nb = g.neighbor_mask(v);
            count(nb & other) as i64 - count(nb & own) as i64
        })
        .collect()
}

/// Degree-balance of the signature induced by `p` on `g`.
pub fn partition_is_degree_balanced(g: &Graph, p: &ParityPartition) -> bool {
    let d = sign_differences(g, p);
    bits::ones(p.v1_mask()).all(|u| {
        bits::ones(p.v2_mask()).all(|v| {
            let want = if g.has_edge(u, v) { 2 } else { 0 };
            d[u] + d[v] == want
        })
    })
}

/// True iff for all `u in v1`, `v in v2`: `d(u) + d(v)` is 2 when `uv` is
/// an edge and 0 otherwise.
pub fn is_degree_balanced(s: &SignedGraph, p: &ParityPartition) -> Result<bool> {
    if p.order() != s.graph().order() {
        return Err(Error::PartitionOrderMismatch {
            partition: p.order(),
            graph: s.graph().order(),
        });
    }
    if !s.matches_partition(p) {
        return Err(Error::SignatureMismatch);
    }
    Ok(partition_is_degree_balanced(s.graph(), p))
}

/// Non-edge counts for a partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionStats {
    /// Non-edges inside `v1`.
    pub x1: usize,
    /// Non-edges inside `v2`.
    pub x2: usize,
    /// Non-edges across.
    pub y: usize,
    /// Edges across.
    pub cut: usize,
}

impl PartitionStats {
    /// `x1 + x2 + y + m = n(n-1)/2` and `cut + y = |v1||v2|`.
    pub fn is_consistent(&self, g: &Graph, p: &ParityPartition) -> bool {
        let n = g.order();
        let (a, b) = (count(p.v1_mask()), count(p.v2_mask()));
        self.x1 + self.x2 + self.y + g.size() == n * (n - 1) / 2 && self.cut + self.y == a * b
    }
}

pub fn partition_stats(g: &Graph, p: &ParityPartition) -> Result<PartitionStats> {
    if p.order() != g.order() {
        return Err(Error::PartitionOrderMismatch {
            partition: p.order(),
            graph: g.order(),
        });
    }
    let pairs = |k: usize| k * k.saturating_sub(1) / 2;
    let (a, b) = (p.v1_mask(), p.v2_mask());
    let inside = |side: u64| g.edges_between(side, side) / 2;
    let cut = p.cut_size(g);
    Ok(PartitionStats {
        x1: pairs(count(a)) - inside(a),
        x2: pairs(count(b)) - inside(b),
        y: count(a) * count(b) - cut,
        cut,
    })
}

/// For odd `n` with `|v1| = (n-1)/2`, checks
/// `sum_{v1} d = n - 1 + 2 x1 - y` and `sum_{v2} d = 2 x2 - y`.
pub fn check_odd_identities(g: &Graph, p: &ParityPartition) -> Result<bool> {
    let n = g.order();
    if n.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "odd-order identities need odd n, got {n}"
        )));
    }
    if count(p.v1_mask()) != (n - 1) / 2 {
        return Err(Error::Precondition(format!(
            "odd-order identities need |v1| = {}, got {}",
            (n - 1) / 2,
            count(p.v1_mask())
        )));
    }
    let st = partition_stats(g, p)?;
    let d = sign_differences(g, p);
    let sum = |mask: u64| bits::ones(mask).map(|v| d[v]).sum::<i64>();
    let (x1, x2, y) = (st.x1 as i64, st.x2 as i64, st.y as i64);
    Ok(sum(p.v1_mask()) == n as i64 - 1 + 2 * x1 - y && sum(p.v2_mask()) == 2 * x2 - y)
}
