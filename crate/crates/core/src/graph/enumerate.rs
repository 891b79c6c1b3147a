//! Labeled enumeration of connected graphs for small orders.

use super::Graph;
use crate::{Error, Result};

/// `2^(n(n-1)/2)` labeled graphs are scanned; n = 7 is 2^21.
pub const MAX_ENUMERATION_ORDER: usize = 7;

/// Every connected labeled simple graph on `n` vertices, each exactly once.
///
/// Graphs are produced in increasing order of their edge bitmask, where edge
/// `k` follows the graph6 upper-triangle order (01, 02, 12, 03, 13, 23, ...).
pub fn enumerate_connected_labeled(n: usize) -> Result<ConnectedLabeled> {
    if n == 0 {
        return Err(Error::InvalidOrder {
            n,
            max: MAX_ENUMERATION_ORDER,
        });
    }
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::EnumerationTooLarge {
            n,
            max: MAX_ENUMERATION_ORDER,
        });
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    Ok(ConnectedLabeled {
        n,
        end: 1u64 << pairs.len(),
        pairs,
        next: 0,
    })
}

#[derive(Debug, Clone)]
pub struct ConnectedLabeled {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
}

impl Iterator for ConnectedLabeled {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            // A connected graph needs at least n - 1 edges.
            if (mask.count_ones() as usize) + 1 < self.n {
                continue;
            }
            let mut adj = vec![0u64; self.n];
            for (k, &(i, j)) in self.pairs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    adj[i] |= 1 << j;
                    adj[j] |= 1 << i;
                }
            }
            let g = Graph { n: self.n, adj };
            if g.is_connected() {
                return Some(g);
            }
        }
        None
    }
}
