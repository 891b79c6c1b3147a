use std::fmt::Write as _;
use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use super::{Check, GraphAnalysis, Status};
use crate::graph::{enumerate_connected_labeled, read_graph6, write_graph6, Graph};
use crate::signed::ParityPartition;
use crate::{Error, Result};

/// Where the corpus comes from.
#[derive(Debug, Clone)]
pub enum CorpusSource {
    /// A graph6 file, one graph per line.
    File(PathBuf),
    /// Every connected labeled graph on `1..=max_n` vertices.
    Enumerate { max_n: usize },
    /// An in-memory list.
    Graphs(Vec<Graph>),
}

/// One graph's result for one check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphRecord {
    /// 0-based position in the corpus (after nothing is skipped).
    pub index: usize,
    pub graph6: String,
    pub expected: String,
    pub actual: String,
    pub witness: Option<ParityPartition>,
}

pub type Failure = GraphRecord;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: Check,
    pub graphs_tested: usize,
    pub failures: Vec<Failure>,
    /// Results reported without a verdict (main bound below n = 4).
    pub informational: Vec<GraphRecord>,
    #[serde(with = "secs")]
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// One line of the JSON-lines report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonRecord {
    pub graph6: String,
    pub check: Check,
    /// `None` for informational results.
    pub pass: Option<bool>,
    pub expected: String,
    pub actual: String,
    pub witness: Option<ParityPartition>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusReport {
    pub reports: Vec<VerificationReport>,
    pub skipped_too_large: usize,
    pub skipped_disconnected: usize,
    #[serde(with = "secs")]
    pub elapsed: Duration,
}

impl CorpusReport {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(VerificationReport::passed)
    }

    pub fn report(&self, check: Check) -> Option<&VerificationReport> {
        self.reports.iter().find(|r| r.check == check)
    }

    /// Human-readable summary. Contains no timings, so identical inputs give
    /// identical text.
    pub fn render_table(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{:<16} {:>10} {:>9} {:>6}  result",
            "check", "graphs", "failures", "info"
        );
        for r in &self.reports {
            let _ = writeln!(
                s,
                "{:<16} {:>10} {:>9} {:>6}  {}",
                r.check.name(),
                r.graphs_tested,
                r.failures.len(),
                r.informational.len(),
                if r.passed() { "PASS" } else { "FAIL" }
            );
        }
        let _ = writeln!(
            s,
            "skipped: {} above max n, {} disconnected",
            self.skipped_too_large, self.skipped_disconnected
        );
        for r in &self.reports {
            for f in &r.failures {
                let _ = writeln!(
                    s,
                    "FAIL {} #{} {}: expected {}; got {}{}",
                    r.check.name(),
                    f.index,
                    f.graph6,
                    f.expected,
                    f.actual,
                    witness_suffix(&f.witness)
                );
            }
            for f in &r.informational {
                let _ = writeln!(
                    s,
                    "INFO {} #{} {}: {}{}",
                    r.check.name(),
                    f.index,
                    f.graph6,
                    f.actual,
                    witness_suffix(&f.witness)
                );
            }
        }
        s
    }
}

fn witness_suffix(w: &Option<ParityPartition>) -> String {
    w.map(|p| format!(" witness {p}")).unwrap_or_default()
}

fn encode(g: &Graph) -> String {
    write_graph6(g).unwrap_or_else(|_| g.to_edge_list())
}

/// Runs `checks` over every graph in `source`, in input order.
///
/// A file is parsed completely before any check runs, so a malformed line is
/// reported by number without partial results. Graphs above `max_n` and
/// disconnected graphs are skipped and counted. If `sink` is given it
/// receives one record per graph per check.
pub fn run_corpus(
    source: &CorpusSource,
    checks: &[Check],
    max_n: Option<usize>,
    mut sink: Option<&mut dyn FnMut(&JsonRecord)>,
) -> Result<CorpusReport> {
    let start = Instant::now();
    let mut reports: Vec<VerificationReport> = checks
        .iter()
        .map(|&check| VerificationReport {
            check,
            graphs_tested: 0,
            failures: Vec::new(),
            informational: Vec::new(),
            elapsed: Duration::ZERO,
        })
        .collect();
    let mut skipped_too_large = 0;
    let mut skipped_disconnected = 0;

    let mut visit = |index: usize, g: &Graph| {
        if max_n.is_some_and(|m| g.order() > m) {
            skipped_too_large += 1;
            return;
        }
        let Ok(analysis) = GraphAnalysis::new(g) else {
            skipped_disconnected += 1;
            return;
        };
        let mut g6 = None;
        for report in reports.iter_mut() {
            let t = Instant::now();
            let outcome = analysis.run(report.check);
            report.elapsed += t.elapsed();
            report.graphs_tested += 1;
            if outcome.status == Status::Pass && sink.is_none() {
                continue;
            }
            let g6 = g6.get_or_insert_with(|| encode(g)).clone();
            if let Some(sink) = sink.as_mut() {
                sink(&JsonRecord {
                    graph6: g6.clone(),
                    check: report.check,
                    pass: match outcome.status {
                        Status::Pass => Some(true),
                        Status::Fail => Some(false),
                        Status::Info => None,
                    },
                    expected: outcome.expected.clone(),
                    actual: outcome.actual.clone(),
                    witness: outcome.witness,
                });
            }
            let record = GraphRecord {
                index,
                graph6: g6,
                expected: outcome.expected,
                actual: outcome.actual,
                witness: outcome.witness,
            };
            match outcome.status {
                Status::Pass => {}
                Status::Fail => report.failures.push(record),
                Status::Info => report.informational.push(record),
            }
        }
    };

    match source {
        CorpusSource::File(path) => {
            let file = File::open(path).map_err(|source| Error::File {
                path: path.clone(),
                source,
            })?;
            let graphs = read_graph6(BufReader::new(file))
                .map(|r| r.map(|(_, g)| g))
                .collect::<Result<Vec<_>>>()?;
            for (i, g) in graphs.iter().enumerate() {
                visit(i, g);
            }
        }
        CorpusSource::Enumerate { max_n } => {
            let mut index = 0;
            for n in 1..=*max_n {
                for g in enumerate_connected_labeled(n)? {
                    visit(index, &g);
                    index += 1;
                }
            }
        }
        CorpusSource::Graphs(graphs) => {
            for (i, g) in graphs.iter().enumerate() {
                visit(i, g);
            }
        }
    }

    Ok(CorpusReport {
        reports,
        skipped_too_large,
        skipped_disconnected,
        elapsed: start.elapsed(),
    })
}

mod secs {
    use std::time::Duration;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(d.as_secs_f64())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        let v = f64::deserialize(d)?;
        Duration::try_from_secs_f64(v).map_err(serde::de::Error::custom)
    }
}
