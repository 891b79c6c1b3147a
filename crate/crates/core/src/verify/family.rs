//! Family recognition from the complement's shape and the degree multiset.
//! No isomorphism testing is involved.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{Family, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyTag {
    Complete,
    CompleteMinusE,
    CompleteMinus2E,
    #[serde(rename = "complete_minus_P2")]
    CompleteMinusP2,
    CompleteMinusTriangle,
    Star,
    JoinP2Independent,
    Other,
}

impl FamilyTag {
    /// Recognition order used by [`classify_family`]; `Other` last.
    pub const ORDER: [FamilyTag; 8] = [
        FamilyTag::Complete,
        FamilyTag::CompleteMinusE,
        FamilyTag::CompleteMinus2E,
        FamilyTag::CompleteMinusP2,
        FamilyTag::CompleteMinusTriangle,
        FamilyTag::Star,
        FamilyTag::JoinP2Independent,
        FamilyTag::Other,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyTag::Complete => "complete",
            FamilyTag::CompleteMinusE => "complete_minus_e",
            FamilyTag::CompleteMinus2E => "complete_minus_2e",
            FamilyTag::CompleteMinusP2 => "complete_minus_P2",
            FamilyTag::CompleteMinusTriangle => "complete_minus_triangle",
            FamilyTag::Star => "star",
            FamilyTag::JoinP2Independent => "join_p2_independent",
            FamilyTag::Other => "other",
        }
    }

    /// The generator family with the same name, if any.
    pub fn family(self) -> Option<Family> {
        Some(match self {
            FamilyTag::Complete => Family::Complete,
            FamilyTag::CompleteMinusE => Family::CompleteMinusE,
            FamilyTag::CompleteMinus2E => Family::CompleteMinus2E,
            FamilyTag::CompleteMinusP2 => Family::CompleteMinusP2,
            FamilyTag::CompleteMinusTriangle => Family::CompleteMinusTriangle,
            FamilyTag::Star => Family::Star,
            FamilyTag::JoinP2Independent => Family::JoinP2Independent,
            FamilyTag::Other => return None,
        })
    }

    pub fn from_family(f: Family) -> Option<FamilyTag> {
        FamilyTag::ORDER.into_iter().find(|t| t.family() == Some(f))
    }
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Whether `g` belongs to the family named by `tag`, tested on its own.
/// The families overlap at small orders (`K_{1,3}` is `K_4` minus a
/// triangle, `P_2 v I_3` is `K_5` minus a triangle), so a graph can belong
/// to several. `Other` holds iff no named family does.
pub fn is_member(g: &Graph, tag: FamilyTag) -> bool {
    let n = g.order();
    let m = g.size();
    let missing = || g.complement().edges().collect::<Vec<_>>();
    match tag {
        FamilyTag::Complete => m == n * (n - 1) / 2,
        FamilyTag::CompleteMinusE => m + 1 == n * (n - 1) / 2,
        FamilyTag::CompleteMinus2E | FamilyTag::CompleteMinusP2 => {
            if m + 2 != n * (n - 1) / 2 {
                return false;
            }
            let e = missing();
            let (a, b) = (e[0], e[1]);
            let share = a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1;
            share == (tag == FamilyTag::CompleteMinusP2)
        }
        FamilyTag::CompleteMinusTriangle => {
            if m + 3 != n * (n - 1) / 2 {
                return false;
            }
            let e = missing();
            let mut touched: Vec<usize> = e.iter().flat_map(|&(u, v)| [u, v]).collect();
            touched.sort_unstable();
            touched.dedup();
            touched.len() == 3
        }
        FamilyTag::Star => n >= 2 && m == n - 1 && (0..n).any(|v| g.degree(v) == n - 1),
        FamilyTag::JoinP2Independent => {
            n >= 2 && m == 2 * n - 3 && (0..n).filter(|&v| g.degree(v) == n - 1).count() >= 2
        }
        FamilyTag::Other => FamilyTag::ORDER[..7].iter().all(|&t| !is_member(g, t)),
    }
}

/// All named families `g` belongs to, in recognition order; `[Other]` if
/// none.
pub fn family_memberships(g: &Graph) -> Vec<FamilyTag> {
    let tags: Vec<FamilyTag> = FamilyTag::ORDER[..7]
        .iter()
        .copied()
        .filter(|&t| is_member(g, t))
        .collect();
    if tags.is_empty() {
        vec![FamilyTag::Other]
    } else {
        tags
    }
}

/// First matching tag in [`FamilyTag::ORDER`].
pub fn classify_family(g: &Graph) -> FamilyTag {
    family_memberships(g)[0]
}
