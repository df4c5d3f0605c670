//! Exact sparing numbers of k-sieve graphs.
//!
//! The crate builds graphs and their k-sieves (the graph plus an edge
//! between every pair of vertices at distance exactly `k`), validates
//! integer-additive set-indexers, computes sparing numbers exactly through a
//! degree-weighted independent-set search, and sweeps published closed
//! forms against the solver.

pub mod bitset;
pub mod error;
pub mod formulas;
pub mod generate;
pub mod graph;
pub mod harness;
pub mod iasi;
pub mod iso;
pub mod metrics;
pub mod oracle;
pub mod sieve;
pub mod sparing;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use formulas::{Candidate, FormulaResult, FormulaStatus, PathDecomposition};
pub use graph::{Edge, Graph};
pub use harness::{Plan, SweepReport, TheoremReport, Verdict};
pub use iasi::{Labeling, MonoCount, SetLabel};
pub use metrics::DistanceMatrix;
pub use sieve::RingletCensus;
pub use sparing::{SolveStatus, SparingResult, DEFAULT_BUDGET};

/// Version of the JSON graph, labeling and report formats.
pub const FORMAT_VERSION: u32 = 1;
