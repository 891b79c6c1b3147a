//! Exact rna-number solvers, parity-switch descent and the upper bounds.
//!
//! The rna number is the minimum cut over parity-partitions. It is defined
//! here for any graph, connected or not, so complements can be evaluated.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bits::{self, bit, count};
use crate::graph::{generate, Family, FamilySpec, Graph};
use crate::parity::{parity_partitions, sign_differences};
use crate::signed::ParityPartition;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Bruteforce,
    Bnb,
    Descent,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Bruteforce => "bruteforce",
            Method::Bnb => "bnb",
            Method::Descent => "descent",
        }
    }
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RnaResult {
    /// Minimum cut found (exact for the exact methods).
    pub value: usize,
    /// A partition achieving `value`, in canonical orientation.
    pub witness: ParityPartition,
    pub method: Method,
    /// Partitions scanned (brute force), search nodes (branch and bound) or
    /// improving switches applied (descent).
    pub nodes_explored: u64,
}

/// `ceil(n/2) * floor(n/2)`.
pub fn upper_bound_trivial(n: usize) -> usize {
    n.div_ceil(2) * (n / 2)
}

/// `floor(m/2 + n/4)`, computed as `floor((2m + n) / 4)`.
pub fn upper_bound_main(m: usize, n: usize) -> usize {
    (2 * m + n) / 4
}

/// Scans every parity-partition; ties go to the first in enumeration order.
pub fn rna_exact_bruteforce(g: &Graph) -> RnaResult {
    let mut nodes = 0u64;
    let mut best: Option<(usize, ParityPartition)> = None;
    for p in parity_partitions(g.order()) {
        nodes += 1;
        let cut = p.cut_size(g);
        if best.is_none_or(|(b, _)| cut < b) {
            best = Some((cut, p));
        }
    }
    let (value, witness) = best.expect("every order has a parity-partition");
    RnaResult {
        value,
        witness,
        method: Method::Bruteforce,
        nodes_explored: nodes,
    }
}

/// Branch and bound over side assignments.
///
/// Vertices are assigned in descending-degree order to side A (capacity
/// `ceil(n/2)`) or B (capacity `floor(n/2)`). A node is pruned when the cut
/// so far plus, for each unassigned vertex, the cheaper of its edges into A
/// or into B (the forced one once a side is full) cannot beat the incumbent.
/// The incumbent starts at the descent optimum from [`default_start`].
pub fn rna_exact_bnb(g: &Graph) -> RnaResult {
    let n = g.order();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    let seed = rna_switch_descent(g, &default_start(n)).expect("default start matches g");
    let mut search = Bnb {
        g,
        order,
        best: seed.value,
        best_a: seed.witness,
        nodes: 0,
    };
    let (cap_a, cap_b) = (n.div_ceil(2), n / 2);
    if n.is_multiple_of(2) {
        // Sides are interchangeable; pin the first vertex to A.
        let first = search.order[0];
        search.dfs(1, bit(first), 0, 0, cap_a - 1, cap_b);
    } else {
        search.dfs(0, 0, 0, 0, cap_a, cap_b);
    }
    RnaResult {
        value: search.best,
        witness: search.best_a.canonical(),
        method: Method::Bnb,
        nodes_explored: search.nodes,
    }
}

struct Bnb<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    best: usize,
    best_a: ParityPartition,
    nodes: u64,
}

impl Bnb<'_> {
    fn dfs(&mut self, depth: usize, a: u64, b: u64, cut: usize, rem_a: usize, rem_b: usize) {
        self.nodes += 1;
        let g = self.g;
        if depth == self.order.len() {
            if cut < self.best {
                self.best = cut;
                self.best_a = ParityPartition::from_v1_mask(g.order(), a)
                    .expect("capacities keep the sides balanced");
            }
            return;
        }
        let unassigned = g.vertex_mask() & !(a | b);
        let mut bound = cut;
        for v in bits::ones(unassigned) {
            let nb = g.neighbor_mask(v);
            let (to_a, to_b) = (count(nb & a), count(nb & b));
            bound += if rem_a == 0 {
                to_a
            } else if rem_b == 0 {
                to_b
            } else {
                to_a.min(to_b)
            };
            if bound >= self.best {
                return;
            }
        }

        let v = self.order[depth];
        let nb = g.neighbor_mask(v);
        // Joining A cuts v's edges into B and vice versa.
        let (cost_a, cost_b) = (count(nb & b), count(nb & a));
        let a_first = cost_a <= cost_b;
        for take_a in [a_first, !a_first] {
            if take_a && rem_a > 0 {
                self.dfs(depth + 1, a | bit(v), b, cut + cost_a, rem_a - 1, rem_b);
            } else if !take_a && rem_b > 0 {
                self.dfs(depth + 1, a, b | bit(v), cut + cost_b, rem_a, rem_b - 1);
            }
        }
    }
}

/// Vertices `0..ceil(n/2)` against the rest, canonically oriented.
pub fn default_start(n: usize) -> ParityPartition {
    ParityPartition::from_v1_mask(n, bits::low_bits(n.div_ceil(2)))
        .expect("balanced")
        .canonical()
}

/// Formula-level certificate that no parity-switch lowers the cut: for all
/// `u in v1`, `v in v2`, `d(u) + d(v) <= 2` if `uv` is an edge and `<= 0`
/// otherwise.
pub fn satisfies_switch_certificate(g: &Graph, p: &ParityPartition) -> bool {
    let d = sign_differences(g, p);
    bits::ones(p.v1_mask()).all(|u| {
        bits::ones(p.v2_mask()).all(|v| d[u] + d[v] <= if g.has_edge(u, v) { 2 } else { 0 })
    })
}

/// Best-improvement parity-switch descent.
///
/// Swapping `u in v1` with `v in v2` changes the cut by
/// `-(d(u) + d(v)) + 2 [uv in E]`. Each step applies the largest decrease,
/// ties to the lexicographically smallest `(u, v)`, and stops when no swap
/// decreases the cut. The cut strictly drops each step, so there are at most
/// `m` steps.
pub fn rna_switch_descent(g: &Graph, start: &ParityPartition) -> Result<RnaResult> {
    if start.order() != g.order() {
        return Err(Error::PartitionOrderMismatch {
            partition: start.order(),
            graph: g.order(),
        });
    }
    let mut p = *start;
    let mut cut = p.cut_size(g);
    let mut steps = 0u64;
    loop {
        let d = sign_differences(g, &p);
        let mut best: Option<(i64, usize, usize)> = None;
        for u in bits::ones(p.v1_mask()) {
            for v in bits::ones(p.v2_mask()) {
                let gain = d[u] + d[v] - if g.has_edge(u, v) { 2 } else { 0 };
                if gain > 0 && best.is_none_or(|(b, _, _)| gain > b) {
                    best = Some((gain, u, v));
                }
            }
        }
        let Some((gain, u, v)) = best else { break };
        p = p.swap(u, v).expect("u in v1, v in v2");
        cut -= gain as usize;
        steps += 1;
        debug_assert_eq!(cut, p.cut_size(g));
    }
    Ok(RnaResult {
        value: cut,
        witness: p.canonical(),
        method: Method::Descent,
        nodes_explored: steps,
    })
}

/// Descent from [`default_start`] followed by `restarts` descents from
/// random balanced starts drawn from a ChaCha8 stream seeded with `seed`.
/// Keeps the first best result; `nodes_explored` sums all runs.
pub fn rna_descent_with_restarts(g: &Graph, restarts: usize, seed: u64) -> RnaResult {
    let n = g.order();
    let mut best = rna_switch_descent(g, &default_start(n)).expect("orders match");
    let mut total = best.nodes_explored;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut verts: Vec<usize> = (0..n).collect();
    for _ in 0..restarts {
        verts.shuffle(&mut rng);
        let v1 = verts[..n.div_ceil(2)].iter().fold(0u64, |m, &v| m | bit(v));
        let start = ParityPartition::from_v1_mask(n, v1).expect("balanced");
        let r = rna_switch_descent(g, &start).expect("orders match");
        total += r.nodes_explored;
        if r.value < best.value {
            best = r;
        }
    }
    best.nodes_explored = total;
    best
}

/// The even star `K_{1,2k-1}`, whose rna number is `k`.
pub fn graph_with_rna(k: usize) -> Result<Graph> {
    if k < 1 {
        return Err(Error::Precondition(format!(
            "k must be at least 1, got {k}"
        )));
    }
    let spec = FamilySpec::new(Family::Star, 2 * k)?;
    Ok(generate(spec))
}
