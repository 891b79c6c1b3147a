//! Named graph families with fixed canonical labelings.
//!
//! - `star`: center 0.
//! - `join_p2_independent`: hubs 0 and 1.
//! - complete-minus families remove edges among the lowest vertices:
//!   `e` = {01}, `2e` = {01, 23}, `P2` = {01, 02}, `triangle` = {01, 02, 12}.
//! - `path`: 0-1-...-(n-1); `cycle` closes it with {0, n-1}.

use std::fmt;
use std::str::FromStr;

use super::{Graph, MAX_ORDER};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Complete,
    CompleteMinusE,
    CompleteMinus2E,
    CompleteMinusP2,
    CompleteMinusTriangle,
    Star,
    Path,
    Cycle,
    JoinP2Independent,
    Independent,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::Complete,
        Family::CompleteMinusE,
        Family::CompleteMinus2E,
        Family::CompleteMinusP2,
        Family::CompleteMinusTriangle,
        Family::Star,
        Family::Path,
        Family::Cycle,
        Family::JoinP2Independent,
        Family::Independent,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Complete => "complete",
            Family::CompleteMinusE => "complete_minus_e",
            Family::CompleteMinus2E => "complete_minus_2e",
            Family::CompleteMinusP2 => "complete_minus_P2",
            Family::CompleteMinusTriangle => "complete_minus_triangle",
            Family::Star => "star",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::JoinP2Independent => "join_p2_independent",
            Family::Independent => "independent",
        }
    }

    /// Smallest order at which the family is defined.
    pub fn min_order(self) -> usize {
        match self {
            Family::Complete | Family::Path | Family::Independent => 1,
            Family::CompleteMinusE | Family::Star | Family::JoinP2Independent => 2,
            Family::CompleteMinusP2 | Family::CompleteMinusTriangle | Family::Cycle => 3,
            Family::CompleteMinus2E => 4,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// A family together with an order that the family supports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilySpec {
    family: Family,
    n: usize,
}

impl FamilySpec {
    pub fn new(family: Family, n: usize) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::InvalidOrder { n, max: MAX_ORDER });
        }
        let min = family.min_order();
        if n < min {
            return Err(Error::FamilyTooSmall { family, n, min });
        }
        Ok(FamilySpec { family, n })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn order(&self) -> usize {
        self.n
    }
}

pub fn generate(spec: FamilySpec) -> Graph {
    let n = spec.n;
    let complete_minus = |removed: &[(usize, usize)]| {
        let mut g = Graph::empty(n).expect("validated order").complement();
        for &(u, v) in removed {
            g.remove_edge(u, v);
        }
        g
    };
    let from = |edges: Vec<(usize, usize)>| Graph::from_edges(n, edges).expect("valid edges");
    match spec.family {
        Family::Complete => complete_minus(&[]),
        Family::CompleteMinusE => complete_minus(&[(0, 1)]),
        Family::CompleteMinus2E => complete_minus(&[(0, 1), (2, 3)]),
        Family::CompleteMinusP2 => complete_minus(&[(0, 1), (0, 2)]),
        Family::CompleteMinusTriangle => complete_minus(&[(0, 1), (0, 2), (1, 2)]),
        Family::Star => from((1..n).map(|v| (0, v)).collect()),
        Family::Path => from((1..n).map(|v| (v - 1, v)).collect()),
        Family::Cycle => from((1..n).map(|v| (v - 1, v)).chain([(0, n - 1)]).collect()),
        Family::JoinP2Independent => from(
            std::iter::once((0, 1))
                .chain((2..n).flat_map(|v| [(0, v), (1, v)]))
                .collect(),
        ),
        Family::Independent => Graph::empty(n).expect("validated order"),
    }
}
