//! Simple undirected labeled graphs on vertices `0..n`.
//!
//! Adjacency is stored as one `u64` neighbor set per vertex, which bounds the
//! order at [`MAX_ORDER`]. Graphs are immutable once built; disconnected
//! graphs are representable (complements need them) and operations that
//! assume connectivity check it themselves.

mod enumerate;
mod family;
mod graph6;

use std::fmt;

use crate::bits::{self, bit, count, low_bits};
use crate::{Error, Result};

pub use enumerate::{enumerate_connected_labeled, ConnectedLabeled, MAX_ENUMERATION_ORDER};
pub use family::{generate, Family, FamilySpec};
pub use graph6::{parse_graph6, read_graph6, write_graph6, Graph6Error, GRAPH6_MAX_ORDER};

pub const MAX_ORDER: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph `I_n`.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::InvalidOrder { n, max: MAX_ORDER });
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from unordered vertex pairs. Repeated pairs collapse to
    /// one edge; loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from neighbor bitsets, checking symmetry and loops.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        let g = Graph { n, adj };
        Graph::empty(n)?;
        let mask = g.vertex_mask();
        for v in 0..n {
            let row = g.adj[v];
            if row & !mask != 0 {
                return Err(Error::InvalidVertex {
                    vertex: (row & !mask).trailing_zeros() as usize,
                    n,
                });
            }
            if row & bit(v) != 0 {
                return Err(Error::SelfLoop(v));
            }
            for u in bits::ones(row) {
                if g.adj[u] & bit(v) == 0 {
                    return Err(Error::Precondition(format!(
                        "adjacency is not symmetric at ({v},{u})"
                    )));
                }
            }
        }
        Ok(g)
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|&row| count(row)).sum::<usize>() / 2
    }

    /// Bitset of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_bits(self.n)
    }

    /// Neighbor set of `v` as a bitset. Panics if `v` is out of range.
    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        bits::ones(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        count(self.adj[v])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n)
            .flat_map(move |u| bits::ones(self.adj[u] & !low_bits(u + 1)).map(move |v| (u, v)))
    }

    /// Number of edges with one endpoint in `a` and the other in `b`, for
    /// disjoint vertex sets.
    pub fn edges_between(&self, a: u64, b: u64) -> usize {
        bits::ones(a).map(|u| count(self.adj[u] & b)).sum()
    }

    /// True iff the graph has a single connected component.
    pub fn is_connected(&self) -> bool {
        let all = self.vertex_mask();
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits::ones(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == all
    }

    /// Same vertex set; `uv` is an edge iff it is not an edge of `self`.
    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let adj = (0..self.n).map(|v| all & !self.adj[v] & !bit(v)).collect();
        Graph { n: self.n, adj }
    }

    /// Compact edge-list text: `n: u-v,u-v,...`.
    pub fn to_edge_list(&self) -> String {
        let edges: Vec<String> = self.edges().map(|(u, v)| format!("{u}-{v}")).collect();
        format!("{}: {}", self.n, edges.join(","))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", self.to_edge_list())
    }
}

/// Parses `u-v` edge tokens separated by commas. Whitespace is ignored and an
/// empty string is the empty list.
pub fn parse_edge_tokens(text: &str) -> Result<Vec<(usize, usize)>> {
    text.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|tok| {
            let (a, b) = tok
                .split_once('-')
                .ok_or_else(|| Error::Precondition(format!("bad edge token `{tok}`")))?;
            let parse = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Precondition(format!("bad edge token `{tok}`")))
            };
            Ok((parse(a)?, parse(b)?))
        })
        .collect()
}
