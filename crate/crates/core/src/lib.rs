//! Exact solvers and an exhaustive verifier for parity signed graphs.
//!
//! A parity-partition of a graph splits its vertices into two sides whose
//! sizes differ by at most one; edges across the split are negative and edges
//! inside a side are positive. The rna number of a graph is the smallest
//! number of negative edges over all such signatures, i.e. the minimum cut
//! over nearly-balanced bipartitions, and the spectrum is the set of all
//! achievable negative-edge counts.
//!
//! - [`graph`]: simple graphs on at most 64 vertices, graph6 I/O, named
//!   families and labeled enumeration.
//! - [`signed`]: signatures, parity-partitions, parity-labelings and the
//!   switch calculus.
//! - [`parity`]: partition enumeration, spectra, degree-balance and the
//!   per-partition counting identities.
//! - [`solver`]: brute-force and branch-and-bound rna solvers, parity-switch
//!   descent and the upper bounds.
//! - [`verify`]: family recognition and the per-graph theorem checks, plus a
//!   corpus runner.
//! - [`cli`]: the `parity-rna` command-line front end.

mod bits;
pub mod cli;
mod error;
pub mod graph;
pub mod parity;
pub mod signed;
pub mod solver;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Family, FamilySpec, Graph, Graph6Error};
pub use parity::{PartitionStats, Spectrum};
pub use signed::{ParityLabeling, ParityPartition, Sign, SignStats, SignedGraph};
pub use solver::{Method, RnaResult};
pub use verify::{Check, CheckOutcome, FamilyTag, VerificationReport};
