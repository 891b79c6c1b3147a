//! Signatures, parity-partitions, parity-labelings and the switch calculus.
//!
//! A signature is stored explicitly, one bit per edge, so arbitrary switch
//! sequences can be applied and audited. A parity-partition `(v1, v2)` with
//! sizes differing by at most one induces the signature in which exactly the
//! edges across the split are negative.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bits::{self, bit, count};
use crate::graph::{parse_edge_tokens, parse_graph6, write_graph6, Graph};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i8 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }
}

// ---------------------------------------------------------------------------
// ParityPartition
// ---------------------------------------------------------------------------

/// An ordered bipartition `(v1, v2)` of `0..n` with `||v1| - |v2|| <= 1`.
///
/// `(v1, v2)` and `(v2, v1)` induce the same signature; use
/// [`ParityPartition::same_partition`] to compare without orientation and
/// [`ParityPartition::canonical`] for the orientation used by enumeration and
/// the solvers (odd `n`: `v1` is the smaller side; even `n`: vertex 0 in `v1`).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct ParityPartition {
    n: usize,
    v1: u64,
}

impl ParityPartition {
    pub fn new(n: usize, v1: &[usize], v2: &[usize]) -> Result<Self> {
        let mut m1 = 0u64;
        let mut m2 = 0u64;
        for (side, mask) in [(v1, &mut m1), (v2, &mut m2)] {
            for &v in side {
                if v >= n {
                    return Err(Error::InvalidVertex { vertex: v, n });
                }
                *mask |= bit(v);
            }
        }
        if m1 & m2 != 0 {
            return Err(Error::InvalidPartition(format!(
                "vertex {} is on both sides",
                (m1 & m2).trailing_zeros()
            )));
        }
        if count(m1) + count(m2) != v1.len() + v2.len() {
            return Err(Error::InvalidPartition("repeated vertex".into()));
        }
        if m1 | m2 != bits::low_bits(n) {
            return Err(Error::InvalidPartition(format!(
                "vertex {} is on neither side",
                (!(m1 | m2) & bits::low_bits(n)).trailing_zeros()
            )));
        }
        Self::from_v1_mask(n, m1)
    }

    /// Partition with `v1` given as a bitset and `v2` its complement.
    pub fn from_v1_mask(n: usize, v1: u64) -> Result<Self> {
        if n == 0 || n > crate::graph::MAX_ORDER {
            return Err(Error::InvalidOrder {
                n,
                max: crate::graph::MAX_ORDER,
            });
        }
        if v1 & !bits::low_bits(n) != 0 {
            return Err(Error::InvalidVertex {
                vertex: (v1 & !bits::low_bits(n)).trailing_zeros() as usize,
                n,
            });
        }
        let a = count(v1);
        if a.abs_diff(n - a) > 1 {
            return Err(Error::InvalidPartition(format!(
                "sides of size {a} and {} differ by more than one",
                n - a
            )));
        }
        Ok(ParityPartition { n, v1 })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn v1_mask(&self) -> u64 {
        self.v1
    }

    #[inline]
    pub fn v2_mask(&self) -> u64 {
        bits::low_bits(self.n) & !self.v1
    }

    pub fn v1(&self) -> Vec<usize> {
        bits::ones(self.v1_mask()).collect()
    }

    pub fn v2(&self) -> Vec<usize> {
        bits::ones(self.v2_mask()).collect()
    }

    #[inline]
    pub fn in_v1(&self, v: usize) -> bool {
        self.v1 & bit(v) != 0
    }

    /// `(v2, v1)`.
    pub fn flipped(&self) -> Self {
        ParityPartition {
            n: self.n,
            v1: self.v2_mask(),
        }
    }

    pub fn canonical(&self) -> Self {
        let flip = if self.n % 2 == 1 {
            count(self.v1) > self.n / 2
        } else {
            !self.in_v1(0)
        };
        if flip {
            self.flipped()
        } else {
            *self
        }
    }

    /// Equality as unordered bipartitions.
    pub fn same_partition(&self, other: &Self) -> bool {
        self.n == other.n && (self.v1 == other.v1 || self.v1 == other.v2_mask())
    }

    /// Exchanges `u in v1` with `v in v2`.
    pub fn swap(&self, u: usize, v: usize) -> Result<Self> {
        if u >= self.n || v >= self.n || !self.in_v1(u) || self.in_v1(v) {
            return Err(Error::NotOppositeSides { u, v });
        }
        Ok(ParityPartition {
            n: self.n,
            v1: (self.v1 & !bit(u)) | bit(v),
        })
    }

    /// Number of edges of `g` across the partition.
    pub fn cut_size(&self, g: &Graph) -> usize {
        g.edges_between(self.v1_mask(), self.v2_mask())
    }

    fn check_order(&self, g: &Graph) -> Result<()> {
        if self.n == g.order() {
            Ok(())
        } else {
            Err(Error::PartitionOrderMismatch {
                partition: self.n,
                graph: g.order(),
            })
        }
    }
}

fn join(vs: impl Iterator<Item = usize>) -> String {
    vs.map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

/// `v1=0,2;v2=1`
impl fmt::Display for ParityPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "v1={};v2={}",
            join(bits::ones(self.v1_mask())),
            join(bits::ones(self.v2_mask()))
        )
    }
}

impl fmt::Debug for ParityPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ParityPartition({self})")
    }
}

impl FromStr for ParityPartition {
    type Err = Error;

    /// The order is inferred as the total number of listed vertices.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidPartition(format!("expected `v1=..;v2=..`, got `{s}`"));
        let (left, right) = s.trim().split_once(';').ok_or_else(bad)?;
        let side = |part: &str, key: &str| -> Result<Vec<usize>> {
            let list = part.trim().strip_prefix(key).ok_or_else(bad)?;
            list.split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| bad()))
                .collect()
        };
        let v1 = side(left, "v1=")?;
        let v2 = side(right, "v2=")?;
        ParityPartition::new(v1.len() + v2.len(), &v1, &v2)
    }
}

impl Serialize for ParityPartition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for ParityPartition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

// ---------------------------------------------------------------------------
// ParityLabeling
// ---------------------------------------------------------------------------

/// A bijection from vertices to `1..=n`; `labels[v]` is the label of `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityLabeling {
    labels: Vec<usize>,
}

impl ParityLabeling {
    pub fn new(labels: Vec<usize>) -> Result<Self> {
        let n = labels.len();
        let mut seen = vec![false; n + 1];
        for &l in &labels {
            if l == 0 || l > n || std::mem::replace(&mut seen[l], true) {
                return Err(Error::NotBijective(n));
            }
        }
        if n == 0 {
            return Err(Error::NotBijective(0));
        }
        Ok(ParityLabeling { labels })
    }

    /// A labeling whose odd labels go to the side of `p` with `ceil(n/2)`
    /// vertices.
    pub fn from_partition(p: &ParityPartition) -> Self {
        let odd_side = if count(p.v1_mask()) >= count(p.v2_mask()) {
            p.v1_mask()
        } else {
            p.v2_mask()
        };
        let mut labels = vec![0; p.order()];
        let (mut odd, mut even) = (1, 2);
        for (v, label) in labels.iter_mut().enumerate() {
            if odd_side & bit(v) != 0 {
                *label = odd;
                odd += 2;
            } else {
                *label = even;
                even += 2;
            }
        }
        ParityLabeling { labels }
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }
}

/// `v1` = odd-labeled vertices, `v2` = even-labeled ones.
pub fn partition_from_labeling(f: &ParityLabeling) -> ParityPartition {
    let v1 = f
        .labels
        .iter()
        .enumerate()
        .filter(|(_, &l)| l % 2 == 1)
        .fold(0u64, |m, (v, _)| m | bit(v));
    ParityPartition::from_v1_mask(f.order(), v1).expect("odd labels are ceil(n/2) of 1..=n")
}

// ---------------------------------------------------------------------------
// SignedGraph
// ---------------------------------------------------------------------------

/// Per-vertex sign counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SignStats {
    pub d_neg: usize,
    pub d_pos: usize,
    /// `d_neg - d_pos`, the sign-difference.
    pub d_delta: i64,
}

/// Edge signs of an associated graph, stored as negative-neighbor bitsets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Signature {
    negative: Vec<u64>,
}

impl Signature {
    /// Negative neighbors of `v`.
    pub fn negative_mask(&self, v: usize) -> u64 {
        self.negative[v]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    graph: Graph,
    signature: Signature,
}

impl SignedGraph {
    /// `(G, +)`.
    pub fn all_positive(graph: Graph) -> Self {
        let negative = vec![0; graph.order()];
        SignedGraph {
            graph,
            signature: Signature { negative },
        }
    }

    /// Signs every listed edge negative and every other edge positive.
    pub fn new<I>(graph: Graph, negative_edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut s = SignedGraph::all_positive(graph);
        for (u, v) in negative_edges {
            if !s.graph.has_edge(u, v) {
                return Err(Error::NotAnEdge { u, v });
            }
            s.signature.negative[u] |= bit(v);
            s.signature.negative[v] |= bit(u);
        }
        Ok(s)
    }

    /// Cross edges negative, inside edges positive.
    pub fn from_partition(graph: &Graph, p: &ParityPartition) -> Result<Self> {
        p.check_order(graph)?;
        let (a, b) = (p.v1_mask(), p.v2_mask());
        let negative = (0..graph.order())
            .map(|v| {
                let other = if p.in_v1(v) { b } else { a };
                graph.neighbor_mask(v) & other
            })
            .collect();
        Ok(SignedGraph {
            graph: graph.clone(),
            signature: Signature { negative },
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    /// Sign of edge `uv`, or `None` if `uv` is not an edge.
    pub fn sign(&self, u: usize, v: usize) -> Option<Sign> {
        if !self.graph.has_edge(u, v) {
            None
        } else if self.signature.negative[u] & bit(v) != 0 {
            Some(Sign::Negative)
        } else {
            Some(Sign::Positive)
        }
    }

    pub fn negative_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.graph
            .edges()
            .filter(|&(u, v)| self.signature.negative[u] & bit(v) != 0)
    }

    /// `|E^-(s)|`.
    pub fn negative_edge_count(&self) -> usize {
        self.signature
            .negative
            .iter()
            .map(|&m| count(m))
            .sum::<usize>()
            / 2
    }

    pub fn positive_edge_count(&self) -> usize {
        self.graph.size() - self.negative_edge_count()
    }

    pub fn sign_stats(&self, v: usize) -> Result<SignStats> {
        self.graph.check_vertex(v)?;
        let d_neg = count(self.signature.negative[v]);
        let d_pos = self.graph.degree(v) - d_neg;
        Ok(SignStats {
            d_neg,
            d_pos,
            d_delta: d_neg as i64 - d_pos as i64,
        })
    }

    /// Negates every edge incident to `v`.
    pub fn switch(&self, v: usize) -> Result<Self> {
        self.graph.check_vertex(v)?;
        Ok(self.switch_at_mask(bit(v)))
    }

    /// Flips exactly the edges with one endpoint in `vs`; the same as
    /// switching at each vertex of `vs` in turn.
    pub fn switch_at_set<I>(&self, vs: I) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut mask = 0u64;
        for v in vs {
            self.graph.check_vertex(v)?;
            mask |= bit(v);
        }
        Ok(self.switch_at_mask(mask))
    }

    pub(crate) fn switch_at_mask(&self, set: u64) -> Self {
        let negative = (0..self.graph.order())
            .map(|x| {
                let flip = if set & bit(x) != 0 { !set } else { set };
                self.signature.negative[x] ^ (self.graph.neighbor_mask(x) & flip)
            })
            .collect();
        SignedGraph {
            graph: self.graph.clone(),
            signature: Signature { negative },
        }
    }

    /// True iff the signature equals the one induced by `p`.
    pub fn matches_partition(&self, p: &ParityPartition) -> bool {
        p.order() == self.graph.order()
            && (0..self.graph.order()).all(|v| {
                let other = if p.in_v1(v) { p.v2_mask() } else { p.v1_mask() };
                self.signature.negative[v] == self.graph.neighbor_mask(v) & other
            })
    }

    /// Switches at `u in v1` and `v in v2` and returns the result with the
    /// partition in which `u` and `v` have exchanged sides.
    pub fn parity_switch(
        &self,
        p: &ParityPartition,
        u: usize,
        v: usize,
    ) -> Result<(Self, ParityPartition)> {
        p.check_order(&self.graph)?;
        let swapped = p.swap(u, v)?;
        if !self.matches_partition(p) {
            return Err(Error::SignatureMismatch);
        }
        Ok((self.switch_at_mask(bit(u) | bit(v)), swapped))
    }

    /// Recovers a parity-partition inducing this signature, if one exists.
    ///
    /// Positive edges force their endpoints to the same side and negative
    /// edges to opposite sides; on a connected graph that two-coloring is
    /// unique up to a global swap, and it is accepted iff it is consistent
    /// and its sides differ in size by at most one.
    pub fn recognize_parity_partition(&self) -> Result<Option<ParityPartition>> {
        let g = &self.graph;
        if !g.is_connected() {
            return Err(Error::Disconnected);
        }
        let n = g.order();
        let mut side: Vec<Option<bool>> = vec![None; n];
        side[0] = Some(false);
        let mut stack = vec![0usize];
        while let Some(x) = stack.pop() {
            let sx = side[x].expect("pushed vertices are colored");
            for y in g.neighbors(x) {
                let want = sx ^ (self.signature.negative[x] & bit(y) != 0);
                match side[y] {
                    None => {
                        side[y] = Some(want);
                        stack.push(y);
                    }
                    Some(s) if s != want => return Ok(None),
                    Some(_) => {}
                }
            }
        }
        let v1 = side
            .iter()
            .enumerate()
            .filter(|(_, s)| **s == Some(false))
            .fold(0u64, |m, (v, _)| m | bit(v));
        Ok(ParityPartition::from_v1_mask(n, v1)
            .ok()
            .map(|p| p.canonical()))
    }

    /// Two lines: the graph6 string, then the negative edges as `u-v`
    /// separated by commas (possibly empty).
    pub fn to_text(&self) -> Result<String> {
        let edges: Vec<String> = self
            .negative_edges()
            .map(|(u, v)| format!("{u}-{v}"))
            .collect();
        Ok(format!(
            "{}\n{}",
            write_graph6(&self.graph)?,
            edges.join(",")
        ))
    }

    pub fn parse_text(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        let head = lines
            .next()
            .ok_or_else(|| Error::Precondition("missing graph6 line".into()))?;
        let graph = parse_graph6(head.as_bytes())?;
        let negatives = parse_edge_tokens(lines.next().unwrap_or(""))?;
        if lines.any(|l| !l.trim().is_empty()) {
            return Err(Error::Precondition(
                "unexpected text after the negative-edge line".into(),
            ));
        }
        SignedGraph::new(graph, negatives)
    }
}

pub fn signature_from_partition(g: &Graph, p: &ParityPartition) -> Result<SignedGraph> {
    SignedGraph::from_partition(g, p)
}

pub fn recognize_parity_signature(s: &SignedGraph) -> Result<Option<ParityPartition>> {
    s.recognize_parity_partition()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family, FamilySpec};

    fn fam(f: Family, n: usize) -> Graph {
        generate(FamilySpec::new(f, n).unwrap())
    }

    fn part(n: usize, v1: &[usize], v2: &[usize]) -> ParityPartition {
        ParityPartition::new(n, v1, v2).unwrap()
    }

    fn negatives(s: &SignedGraph) -> Vec<(usize, usize)> {
        s.negative_edges().collect()
    }

    #[test]
    fn partition_validation() {
        assert!(ParityPartition::new(4, &[0], &[1, 2, 3]).is_err());
        assert!(ParityPartition::new(3, &[0, 1], &[1, 2]).is_err());
        assert!(ParityPartition::new(3, &[0], &[1]).is_err());
        assert!(ParityPartition::new(3, &[0, 0], &[1, 2]).is_err());
        assert!(ParityPartition::new(3, &[5], &[1, 2]).is_err());
        assert!(ParityPartition::new(1, &[0], &[]).is_ok());
        assert!(ParityPartition::new(1, &[], &[0]).is_ok());
    }

    #[test]
    fn partition_text() {
        let p = part(3, &[0, 2], &[1]);
        assert_eq!(p.to_string(), "v1=0,2;v2=1");
        assert_eq!("v1=0,2;v2=1".parse::<ParityPartition>().unwrap(), p);
        assert_eq!(
            " v1=0 ; v2= ".parse::<ParityPartition>().unwrap(),
            part(1, &[0], &[])
        );
        assert!("v1=0,1".parse::<ParityPartition>().is_err());
        assert!("v1=0,1;v2=3".parse::<ParityPartition>().is_err());
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, "\"v1=0,2;v2=1\"");
        assert_eq!(serde_json::from_str::<ParityPartition>(&json).unwrap(), p);
    }

    #[test]
    fn canonical_orientation() {
        let p = part(3, &[0, 2], &[1]);
        assert_eq!(p.canonical(), part(3, &[1], &[0, 2]));
        assert!(p.same_partition(&p.canonical()));
        let q = part(4, &[2, 3], &[0, 1]);
        assert_eq!(q.canonical(), part(4, &[0, 1], &[2, 3]));
        assert!(!q.same_partition(&part(4, &[0, 2], &[1, 3])));
    }

    #[test]
    fn signature_from_partition_examples() {
        let k4 = fam(Family::Complete, 4);
        let s = signature_from_partition(&k4, &part(4, &[0, 1], &[2, 3])).unwrap();
        assert_eq!(negatives(&s), vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
        assert_eq!(s.sign(0, 1), Some(Sign::Positive));
        assert_eq!(s.sign(2, 3), Some(Sign::Positive));

        let p3 = fam(Family::Path, 3);
        let s = signature_from_partition(&p3, &part(3, &[0, 2], &[1])).unwrap();
        assert_eq!(negatives(&s), vec![(0, 1), (1, 2)]);

        let star = fam(Family::Star, 4);
        let s = signature_from_partition(&star, &part(4, &[0, 1], &[2, 3])).unwrap();
        assert_eq!(negatives(&s), vec![(0, 2), (0, 3)]);
        assert_eq!(s.sign(0, 1), Some(Sign::Positive));
        assert_eq!(s.sign(1, 2), None);

        assert!(matches!(
            signature_from_partition(&star, &part(3, &[0], &[1, 2])),
            Err(Error::PartitionOrderMismatch { .. })
        ));
    }

    #[test]
    fn labeling_examples() {
        let f = ParityLabeling::new(vec![1, 2, 3]).unwrap();
        assert!(partition_from_labeling(&f).same_partition(&part(3, &[0, 2], &[1])));
        assert_eq!(partition_from_labeling(&f), part(3, &[0, 2], &[1]));
        let f = ParityLabeling::new(vec![1, 3, 2, 4]).unwrap();
        assert_eq!(partition_from_labeling(&f), part(4, &[0, 1], &[2, 3]));
        let f = ParityLabeling::new(vec![1]).unwrap();
        assert_eq!(partition_from_labeling(&f), part(1, &[0], &[]));

        assert!(ParityLabeling::new(vec![1, 1, 2]).is_err());
        assert!(ParityLabeling::new(vec![0, 1, 2]).is_err());
        assert!(ParityLabeling::new(vec![1, 2, 4]).is_err());
        assert!(ParityLabeling::new(vec![]).is_err());
    }

    #[test]
    fn labeling_from_partition_round_trips() {
        for p in [part(5, &[1, 3], &[0, 2, 4]), part(4, &[0, 3], &[1, 2])] {
            let f = ParityLabeling::from_partition(&p);
            assert!(partition_from_labeling(&f).same_partition(&p));
        }
    }

    #[test]
    fn recognize_examples() {
        let p3 = fam(Family::Path, 3);
        let s = SignedGraph::new(p3.clone(), [(0, 1), (1, 2)]).unwrap();
        let p = s.recognize_parity_partition().unwrap().unwrap();
        assert!(p.same_partition(&part(3, &[0, 2], &[1])));

        let s = SignedGraph::all_positive(p3);
        assert_eq!(s.recognize_parity_partition().unwrap(), None);

        let k3 = fam(Family::Complete, 3);
        let s = SignedGraph::new(k3, [(0, 1)]).unwrap();
        assert_eq!(s.recognize_parity_partition().unwrap(), None);

        let disconnected = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(matches!(
            SignedGraph::all_positive(disconnected).recognize_parity_partition(),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn switch_examples() {
        let k3 = SignedGraph::all_positive(fam(Family::Complete, 3));
        let s = k3.switch(0).unwrap();
        assert_eq!(negatives(&s), vec![(0, 1), (0, 2)]);
        assert_eq!(s.switch(0).unwrap(), k3);

        let p3 = SignedGraph::new(fam(Family::Path, 3), [(0, 1), (1, 2)]).unwrap();
        assert_eq!(p3.switch(1).unwrap().negative_edge_count(), 0);
        assert!(matches!(p3.switch(3), Err(Error::InvalidVertex { .. })));
    }

    #[test]
    fn switch_at_set_examples() {
        let k4 = SignedGraph::all_positive(fam(Family::Complete, 4));
        let s = k4.switch_at_set([2, 3]).unwrap();
        assert_eq!(negatives(&s), vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
        let mixed = s.switch(0).unwrap();
        assert_eq!(mixed.switch_at_set([]).unwrap(), mixed);
        assert_eq!(mixed.switch_at_set(0..4).unwrap(), mixed);
        let seq = mixed.switch(1).unwrap().switch(3).unwrap();
        assert_eq!(mixed.switch_at_set([1, 3]).unwrap(), seq);
    }

    #[test]
    fn parity_switch_examples() {
        let p3 = fam(Family::Path, 3);
        let p = part(3, &[0, 2], &[1]);
        let s = SignedGraph::from_partition(&p3, &p).unwrap();
        assert_eq!(s.negative_edge_count(), 2);
        let (s2, p2) = s.parity_switch(&p, 0, 1).unwrap();
        assert_eq!(p2, part(3, &[1, 2], &[0]));
        assert_eq!(s2.sign(0, 1), Some(Sign::Negative));
        assert_eq!(s2.sign(1, 2), Some(Sign::Positive));
        assert_eq!(s2.negative_edge_count(), 1);
        assert!(s2.matches_partition(&p2));
        let (back, pb) = s2.parity_switch(&p2, 1, 0).unwrap();
        assert_eq!((back, pb), (s.clone(), p));

        let k4 = fam(Family::Complete, 4);
        let p = part(4, &[0, 1], &[2, 3]);
        let s = SignedGraph::from_partition(&k4, &p).unwrap();
        let (s2, p2) = s.parity_switch(&p, 0, 2).unwrap();
        assert_eq!(p2, part(4, &[1, 2], &[0, 3]));
        assert_eq!(s2.negative_edge_count(), 4);

        assert!(matches!(
            s.parity_switch(&p, 2, 0),
            Err(Error::NotOppositeSides { u: 2, v: 0 })
        ));
        let other = part(4, &[0, 2], &[1, 3]);
        assert!(matches!(
            s.parity_switch(&other, 0, 1),
            Err(Error::SignatureMismatch)
        ));
    }

    #[test]
    fn sign_stats_examples() {
        let k4 = fam(Family::Complete, 4);
        let s = SignedGraph::from_partition(&k4, &part(4, &[0, 1], &[2, 3])).unwrap();
        let st = s.sign_stats(0).unwrap();
        assert_eq!((st.d_neg, st.d_pos, st.d_delta), (2, 1, 1));

        let star = fam(Family::Star, 4);
        let s = SignedGraph::from_partition(&star, &part(4, &[0, 1], &[2, 3])).unwrap();
        let st = s.sign_stats(0).unwrap();
        assert_eq!((st.d_neg, st.d_pos, st.d_delta), (2, 1, 1));

        let p3 = fam(Family::Path, 3);
        let s = SignedGraph::from_partition(&p3, &part(3, &[0, 2], &[1])).unwrap();
        let st = s.sign_stats(2).unwrap();
        assert_eq!((st.d_neg, st.d_pos, st.d_delta), (1, 0, 1));
        assert!(s.sign_stats(3).is_err());
    }

    #[test]
    fn negative_counts() {
        let k4 = fam(Family::Complete, 4);
        let s = SignedGraph::from_partition(&k4, &part(4, &[0, 1], &[2, 3])).unwrap();
        assert_eq!(s.negative_edge_count(), 4);
        assert_eq!(
            SignedGraph::all_positive(fam(Family::Path, 3)).negative_edge_count(),
            0
        );
        let join = fam(Family::JoinP2Independent, 5);
        let s = SignedGraph::from_partition(&join, &part(5, &[3, 4], &[0, 1, 2])).unwrap();
        assert_eq!(s.negative_edge_count(), 4);
        assert_eq!(s.positive_edge_count(), 3);
    }

    #[test]
    fn text_format() {
        let k4 = fam(Family::Complete, 4);
        let s = SignedGraph::from_partition(&k4, &part(4, &[0, 1], &[2, 3])).unwrap();
        let text = s.to_text().unwrap();
        assert_eq!(text, "C~\n0-2,0-3,1-2,1-3");
        assert_eq!(SignedGraph::parse_text(&text).unwrap(), s);
        let plus = SignedGraph::all_positive(k4);
        assert_eq!(plus.to_text().unwrap(), "C~\n");
        assert_eq!(SignedGraph::parse_text("C~").unwrap(), plus);
        assert!(matches!(
            SignedGraph::parse_text("Bg\n0-2"),
            Err(Error::NotAnEdge { u: 0, v: 2 })
        ));
    }
}
