//! Rainbow matchings in edge-colored uniform multi-hypergraphs.
//!
//! An *(f, t)-colored r-graph* is an r-uniform multi-hypergraph whose edges
//! are colored with `f` colors so that every color class is a matching of
//! exactly `t` edges. A *rainbow t-matching* is a set of `t` pairwise
//! disjoint edges using `t` distinct colors. This crate provides:
//!
//! - [`graph`]: the colored-hypergraph model, validation, degree/link/restrict;
//! - [`solve`]: exact covering number, matching number, and rainbow search;
//! - [`rch`]: a plain-text instance format with a parser and writer;
//! - [`constructs`]: rainbow-free constructions, zero-sum sequence solvers,
//!   seeded random instances, and closed-form bound evaluation;
//! - [`proof`]: constructive finder pipelines (cover partitions, cores,
//!   part contraction, multiplicity pigeonhole, recursive vertex splitting);
//! - [`extremal`]: exhaustive search for extremal color counts over bounded
//!   vertex budgets, with canonical-form duplicate rejection;
//! - [`acceptance`]: the end-to-end self-check suite driven by both
//!   `cargo test` and the CLI `selftest` verb.

pub mod acceptance;
pub mod constructs;
pub mod extremal;
pub mod graph;
pub mod naive;
pub mod proof;
pub mod rch;
pub mod solve;

pub use graph::{
    ColorId, ColoredEdge, ColoredHypergraph, EdgeId, Hypergraph, Matching, Mode, VertexCover,
    VertexId, Violation,
};
pub use solve::{NonexistenceCertificate, RainbowCertificate, RainbowSearch, SolveError};
