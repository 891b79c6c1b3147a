#![allow(dead_code)]

use std::fs;
use std::path::PathBuf;

use parity_rna::graph::{parse_graph6, Graph};
use rand::Rng;

pub const CORPUS_MAX_N: usize = 8;

pub fn corpus_path(n: usize) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(format!("connected{n}.g6"))
}

/// Raw lines and parsed graphs of the non-isomorphic connected corpus at
/// order `n`.
pub fn corpus(n: usize) -> Vec<(String, Graph)> {
    let text = fs::read_to_string(corpus_path(n)).expect("corpus file");
    text.lines()
        .filter(|l| !l.is_empty())
        .map(|l| {
            (
                l.to_string(),
                parse_graph6(l.as_bytes()).expect("corpus line"),
            )
        })
        .collect()
}

pub fn full_corpus() -> Vec<(String, Graph)> {
    (1..=CORPUS_MAX_N).flat_map(corpus).collect()
}

/// Connected G(n, p) sample with `p` drawn per graph, by rejection.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize) -> Graph {
    loop {
        let p: f64 = rng.random_range(0.15..0.9);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.random_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges).expect("valid edges");
        if g.is_connected() {
            return g;
        }
    }
}
