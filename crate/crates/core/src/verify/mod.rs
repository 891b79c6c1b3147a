//! Per-graph theorem checks and the corpus runner.
//!
//! Each check evaluates one statement about the rna number or the spectrum
//! on a single connected graph and reports what it expected, what it
//! computed and, where useful, a witness partition. Family conditions such
//! as "G is K_n or K_n - e" are tested by membership, so a graph that is
//! both an even star and `K_4` minus a triangle satisfies either reading.

mod corpus;
mod family;

use std::cell::OnceCell;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::parity::{parity_partitions, partition_is_degree_balanced, Spectrum};
use crate::signed::ParityPartition;
use crate::solver::{rna_exact_bruteforce, upper_bound_main, upper_bound_trivial};
use crate::{Error, Result};

pub use corpus::{
    run_corpus, CorpusReport, CorpusSource, Failure, GraphRecord, JsonRecord, VerificationReport,
};
pub use family::{classify_family, family_memberships, is_member, FamilyTag};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// Singleton spectrum iff even star or complete.
    Conjecture2,
    /// `sigma <= ceil(n/2) floor(n/2)` and the three near-equality cases.
    TrivialBound,
    /// `sigma <= floor((2m + n) / 4)` with equality iff `K_n`, `K_n - e`,
    /// `K_n - triangle` (n >= 4; smaller orders are informational).
    MainBound,
    /// Degree-balanced parity signatures only on the listed families.
    DegreeBalance,
    /// `sigma(G) + sigma(complement) <= ceil(n/2) floor(n/2)` with equality
    /// iff even star or complete.
    Complement,
    /// Harness self-test: asserts `sigma = ceil(n/2) floor(n/2)`, which is
    /// false for every non-complete graph. Not part of `all`.
    SelfTest,
}

impl Check {
    pub const ALL: [Check; 5] = [
        Check::Conjecture2,
        Check::TrivialBound,
        Check::MainBound,
        Check::DegreeBalance,
        Check::Complement,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Conjecture2 => "conjecture2",
            Check::TrivialBound => "trivial_bound",
            Check::MainBound => "main_bound",
            Check::DegreeBalance => "degree_balance",
            Check::Complement => "complement",
            Check::SelfTest => "selftest",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .chain([Check::SelfTest])
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

/// Parses `all` or a comma-separated list of check names. Duplicates are
/// dropped; order is preserved.
pub fn parse_checks(spec: &str) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for tok in spec.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let batch = if tok == "all" {
            Check::ALL.to_vec()
        } else {
            vec![tok.parse()?]
        };
        for c in batch {
            if !out.contains(&c) {
                out.push(c);
            }
        }
    }
    if out.is_empty() {
        return Err(Error::UnknownCheck(spec.to_string()));
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// Computed and reported without a verdict.
    Info,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub check: Check,
    pub status: Status,
    pub expected: String,
    pub actual: String,
    pub witness: Option<ParityPartition>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }
}

/// Everything the checks need about one graph, computed once.
pub struct GraphAnalysis {
    graph: Graph,
    spectrum: Spectrum,
    sigma: usize,
    witness: ParityPartition,
    memberships: Vec<FamilyTag>,
    complement_sigma: OnceCell<usize>,
}

impl GraphAnalysis {
    pub fn new(graph: &Graph) -> Result<Self> {
        if !graph.is_connected() {
            return Err(Error::Disconnected);
        }
        let mut best: Option<(usize, ParityPartition)> = None;
        let spectrum: Spectrum = parity_partitions(graph.order())
            .map(|p| {
                let cut = p.cut_size(graph);
                if best.is_none_or(|(b, _)| cut < b) {
                    best = Some((cut, p));
                }
                cut
            })
            .collect();
        let (sigma, witness) = best.expect("non-empty");
        Ok(GraphAnalysis {
            graph: graph.clone(),
            spectrum,
            sigma,
            witness,
            memberships: family_memberships(graph),
            complement_sigma: OnceCell::new(),
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }

    pub fn sigma(&self) -> usize {
        self.sigma
    }

    pub fn complement_sigma(&self) -> usize {
        *self
            .complement_sigma
            .get_or_init(|| rna_exact_bruteforce(&self.graph.complement()).value)
    }

    fn member_of(&self, tags: &[FamilyTag]) -> bool {
        self.memberships.iter().any(|t| tags.contains(t))
    }

    fn even_star_or_complete(&self) -> bool {
        self.member_of(&[FamilyTag::Complete])
            || (self.graph.order().is_multiple_of(2) && self.member_of(&[FamilyTag::Star]))
    }

    fn outcome(&self, check: Check, ok: bool, expected: String, actual: String) -> CheckOutcome {
        CheckOutcome {
            check,
            status: if ok { Status::Pass } else { Status::Fail },
            expected,
            actual,
            witness: Some(self.witness),
        }
    }

    pub fn run(&self, check: Check) -> CheckOutcome {
        match check {
            Check::Conjecture2 => self.conjecture2(),
            Check::TrivialBound => self.trivial_bound(),
            Check::MainBound => self.main_bound(),
            Check::DegreeBalance => self.degree_balance(),
            Check::Complement => self.complement(),
            Check::SelfTest => {
                let b = upper_bound_trivial(self.graph.order());
                self.outcome(
                    check,
                    self.sigma == b,
                    format!("sigma={b}"),
                    format!("sigma={}", self.sigma),
                )
            }
        }
    }

    fn conjecture2(&self) -> CheckOutcome {
        let predicted = self.even_star_or_complete();
        let singleton = self.spectrum.is_singleton();
        self.outcome(
            Check::Conjecture2,
            predicted == singleton,
            format!("singleton={predicted}"),
            format!("singleton={singleton} spectrum={}", self.spectrum),
        )
    }

    fn trivial_bound(&self) -> CheckOutcome {
        let b = upper_bound_trivial(self.graph.order()) as i64;
        let s = self.sigma as i64;
        let near_two = [
            FamilyTag::CompleteMinusTriangle,
            FamilyTag::CompleteMinus2E,
            FamilyTag::CompleteMinusP2,
        ];
        let clauses = [
            s <= b,
            (s == b) == self.member_of(&[FamilyTag::Complete]),
            (s == b - 1) == self.member_of(&[FamilyTag::CompleteMinusE]),
            (s == b - 2) == self.member_of(&near_two),
        ];
        let ok = clauses.iter().all(|&c| c);
        let expected = match b - s {
            0 => "complete".to_string(),
            1 => "complete_minus_e".to_string(),
            2 => "complete_minus_{triangle,2e,P2}".to_string(),
            d if d < 0 => "sigma<=bound".to_string(),
            _ => "no near-equality family".to_string(),
        };
        self.outcome(
            Check::TrivialBound,
            ok,
            expected,
            format!("sigma={s} bound={b} families={}", self.family_list()),
        )
    }

    fn main_bound(&self) -> CheckOutcome {
        let n = self.graph.order();
        let u = upper_bound_main(self.graph.size(), n);
        let actual = format!(
            "sigma={} bound={u} families={}",
            self.sigma,
            self.family_list()
        );
        if n < 4 {
            return CheckOutcome {
                check: Check::MainBound,
                status: Status::Info,
                expected: "informational (n < 4)".into(),
                actual,
                witness: Some(self.witness),
            };
        }
        let equality_family = self.member_of(&[
            FamilyTag::Complete,
            FamilyTag::CompleteMinusE,
            FamilyTag::CompleteMinusTriangle,
        ]);
        let ok = self.sigma <= u && (self.sigma == u) == equality_family;
        self.outcome(
            Check::MainBound,
            ok,
            format!("sigma{}bound", if equality_family { "==" } else { "<" }),
            actual,
        )
    }

    fn degree_balance(&self) -> CheckOutcome {
        let n = self.graph.order();
        let allowed: &[FamilyTag] = if n.is_multiple_of(2) {
            &[FamilyTag::Star, FamilyTag::Complete]
        } else {
            &[FamilyTag::JoinP2Independent, FamilyTag::Complete]
        };
        let member = self.member_of(allowed);
        let mut balanced = 0usize;
        let mut offending = None;
        for p in parity_partitions(n) {
            if partition_is_degree_balanced(&self.graph, &p) {
                balanced += 1;
                if !member && offending.is_none() {
                    offending = Some(p);
                }
            }
        }
        let names: Vec<&str> = allowed.iter().map(|t| t.name()).collect();
        CheckOutcome {
            check: Check::DegreeBalance,
            status: if offending.is_none() {
                Status::Pass
            } else {
                Status::Fail
            },
            expected: format!("balanced => {}", names.join("|")),
            actual: format!(
                "balanced_partitions={balanced} families={}",
                self.family_list()
            ),
            witness: offending.or(Some(self.witness)),
        }
    }

    fn complement(&self) -> CheckOutcome {
        let b = upper_bound_trivial(self.graph.order());
        let total = self.sigma + self.complement_sigma();
        let predicted = self.even_star_or_complete();
        let ok = total <= b && (total == b) == predicted;
        self.outcome(
            Check::Complement,
            ok,
            format!("sum{}{b}", if predicted { "==" } else { "<" }),
            format!(
                "sigma={} complement_sigma={} sum={total}",
                self.sigma,
                self.complement_sigma()
            ),
        )
    }

    fn family_list(&self) -> String {
        let names: Vec<&str> = self.memberships.iter().map(|t| t.name()).collect();
        names.join("|")
    }
}

pub fn verify_conjecture2(g: &Graph) -> Result<CheckOutcome> {
    Ok(GraphAnalysis::new(g)?.run(Check::Conjecture2))
}

pub fn verify_trivial_bound(g: &Graph) -> Result<CheckOutcome> {
    Ok(GraphAnalysis::new(g)?.run(Check::TrivialBound))
}

/// For `n < 4` the outcome is [`Status::Info`].
pub fn verify_main_bound(g: &Graph) -> Result<CheckOutcome> {
    Ok(GraphAnalysis::new(g)?.run(Check::MainBound))
}

pub fn verify_degree_balance_lemma(g: &Graph) -> Result<CheckOutcome> {
    Ok(GraphAnalysis::new(g)?.run(Check::DegreeBalance))
}

pub fn verify_complement_theorem(g: &Graph) -> Result<CheckOutcome> {
    Ok(GraphAnalysis::new(g)?.run(Check::Complement))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family, FamilySpec};

    fn fam(f: Family, n: usize) -> Graph {
        generate(FamilySpec::new(f, n).unwrap())
    }

    fn without(g: Graph, removed: &[(usize, usize)]) -> Graph {
        let mut h = g;
        for &(u, v) in removed {
            h.remove_edge(u, v);
        }
        h
    }

    fn pass(o: CheckOutcome) {
        assert_eq!(o.status, Status::Pass, "{o:?}");
    }

    #[test]
    fn conjecture2_examples() {
        let o = verify_conjecture2(&fam(Family::Complete, 4)).unwrap();
        assert!(o.actual.contains("singleton=true"));
        pass(o);
        let o = verify_conjecture2(&fam(Family::Star, 5)).unwrap();
        assert!(o.actual.contains("{2,3}"));
        pass(o);
        let o = verify_conjecture2(&fam(Family::JoinP2Independent, 5)).unwrap();
        assert!(o.actual.contains("{4,6}"));
        pass(o);
        pass(verify_conjecture2(&fam(Family::Star, 4)).unwrap());
        assert!(matches!(
            verify_conjecture2(&Graph::empty(3).unwrap()),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn trivial_bound_examples() {
        let o = verify_trivial_bound(&fam(Family::Complete, 6)).unwrap();
        assert!(o.actual.starts_with("sigma=9 bound=9"));
        pass(o);
        let o = verify_trivial_bound(&fam(Family::CompleteMinusE, 6)).unwrap();
        assert!(o.actual.starts_with("sigma=8 bound=9"));
        pass(o);
        let o = verify_trivial_bound(&fam(Family::Cycle, 5)).unwrap();
        assert!(o.actual.starts_with("sigma=2 bound=6"));
        pass(o);
    }

    #[test]
    fn main_bound_examples() {
        let o = verify_main_bound(&fam(Family::Complete, 5)).unwrap();
        assert!(o.actual.starts_with("sigma=6 bound=6"));
        pass(o);
        let k5_2e = without(fam(Family::Complete, 5), &[(0, 1), (2, 3)]);
        let o = verify_main_bound(&k5_2e).unwrap();
        assert!(o.actual.starts_with("sigma=4 bound=5"));
        pass(o);
        let o = verify_main_bound(&fam(Family::Star, 4)).unwrap();
        assert!(o.actual.starts_with("sigma=2 bound=2"));
        pass(o);
    }

    #[test]
    fn main_bound_is_informational_below_four() {
        for (g, text) in [
            (fam(Family::Complete, 2), "sigma=1 bound=1"),
            (fam(Family::Complete, 3), "sigma=2 bound=2"),
            (fam(Family::Path, 3), "sigma=1 bound=1"),
        ] {
            let o = verify_main_bound(&g).unwrap();
            assert_eq!(o.status, Status::Info);
            assert!(o.actual.starts_with(text), "{o:?}");
        }
    }

    #[test]
    fn degree_balance_examples() {
        let o = verify_degree_balance_lemma(&fam(Family::Complete, 5)).unwrap();
        assert!(o.actual.contains("balanced_partitions=10"));
        pass(o);
        let o = verify_degree_balance_lemma(&fam(Family::Path, 4)).unwrap();
        assert!(o.actual.contains("balanced_partitions=0"));
        pass(o);
        let o = verify_degree_balance_lemma(&fam(Family::JoinP2Independent, 5)).unwrap();
        assert!(!o.actual.contains("balanced_partitions=0"));
        pass(o);
    }

    #[test]
    fn complement_examples() {
        let o = verify_complement_theorem(&fam(Family::Complete, 4)).unwrap();
        assert!(o.actual.contains("sum=4"));
        pass(o);
        let o = verify_complement_theorem(&fam(Family::Star, 4)).unwrap();
        assert!(o.actual.contains("sigma=2 complement_sigma=2 sum=4"));
        pass(o);
        let o = verify_complement_theorem(&fam(Family::Path, 4)).unwrap();
        assert!(o.actual.contains("sigma=1 complement_sigma=1 sum=2"));
        pass(o);
    }

    #[test]
    fn selftest_fails_on_non_complete() {
        let a = GraphAnalysis::new(&fam(Family::Path, 4)).unwrap();
        assert_eq!(a.run(Check::SelfTest).status, Status::Fail);
        let a = GraphAnalysis::new(&fam(Family::Complete, 4)).unwrap();
        assert_eq!(a.run(Check::SelfTest).status, Status::Pass);
    }

    #[test]
    fn check_names() {
        assert_eq!(parse_checks("all").unwrap(), Check::ALL.to_vec());
        assert_eq!(
            parse_checks("main_bound, conjecture2,main_bound").unwrap(),
            vec![Check::MainBound, Check::Conjecture2]
        );
        assert_eq!(parse_checks("selftest").unwrap(), vec![Check::SelfTest]);
        assert!(matches!(parse_checks("bogus"), Err(Error::UnknownCheck(_))));
        assert!(parse_checks("").is_err());
    }
}
