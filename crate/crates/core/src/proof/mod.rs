//! Executable proof machinery: every rainbow-matching finder in this module
//! mirrors one argument chain — cover partitions and core decompositions, a
//! greedy extension from disjoint cores, contraction-based part reduction
//! followed by a pigeonhole extraction, and a randomized split recursion.
//!
//! Finders are honest: each either returns a certificate that independently
//! validates, or a structured [`ProofFailure`] naming the stage that could
//! not be completed. Failing below a guarantee threshold is an expected
//! result, not an error; operational problems (caller misuse, solver guards)
//! are separated into [`ProofError`].

pub mod cover;
pub mod cores;
pub mod reduce;
pub mod split;

use crate::graph::{ColoredHypergraph, VertexId};
use crate::solve::{RainbowCertificate, SolveError};
use std::collections::BTreeMap;

/// Caller misuse: the operation was invoked outside its contract.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum UsageError {
    #[error("operation requires a partite instance")]
    NeedsPartite,
    #[error("contraction endpoints must be two distinct vertices of the same part")]
    BadContractionPair,
    #[error("an edge contains both contraction endpoints")]
    PairSharesEdge,
    #[error("target size {s} must be at least the class size {t}")]
    CapTooSmall { s: usize, t: usize },
    #[error("expected exactly {expected} cores, got {got}")]
    WrongCoreCount { expected: usize, got: usize },
}

/// Operational failure: not a mathematical outcome.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProofError {
    #[error(transparent)]
    Usage(#[from] UsageError),
    #[error(transparent)]
    Solver(#[from] SolveError),
}

/// A finder stage that could not be completed, with the data showing why.
/// This is a result, not an error: below their guarantee thresholds the
/// finders promise nothing.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
#[serde(tag = "stage", rename_all = "snake_case")]
pub enum ProofFailure {
    /// The covering number exceeded the bound required by the partition step.
    CoverPrecondition {
        tau: usize,
        bound: usize,
        cover: Vec<VertexId>,
    },
    /// No color class avoided the top-level spill, or every candidate class
    /// carried a set failing the core test.
    DisjointCores {
        classes_with_spill: usize,
        classes_with_weak_cores: usize,
        total_classes: usize,
    },
    /// A claimed core failed verification on entry to the greedy extension.
    CoreCheck { index: usize },
    /// The greedy extension found no usable edge at some step.
    Extend { step: usize, candidates: usize },
    /// No color class consists entirely of edges with multiplicity at least
    /// t; every class contains a bad r-set.
    Pigeonhole {
        bad_rsets: Vec<Vec<VertexId>>,
        total_classes: usize,
    },
    /// The randomized split exhausted its attempt budget.
    SplitBudget { attempts: u64, max_survivors: usize },
}

/// Mathematical outcome of a finder stage.
pub type MathResult<T> = Result<T, ProofFailure>;

/// What a finder produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FinderOutcome {
    Found(RainbowCertificate),
    Failed(ProofFailure),
}

impl FinderOutcome {
    pub fn certificate(&self) -> Option<&RainbowCertificate> {
        match self {
            FinderOutcome::Found(c) => Some(c),
            FinderOutcome::Failed(_) => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, FinderOutcome::Found(_))
    }
}

/// One pipeline stage: name, short outcome, and counters.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct StageTrace {
    pub stage: String,
    pub outcome: String,
    pub counts: BTreeMap<String, u64>,
}

/// Machine-readable record of the stages a finder went through.
#[derive(Debug, Clone, Default, PartialEq, Eq, serde::Serialize)]
pub struct Trace {
    pub stages: Vec<StageTrace>,
}

impl Trace {
    pub fn push(&mut self, stage: &str, outcome: &str, counts: &[(&str, u64)]) {
        self.stages.push(StageTrace {
            stage: stage.to_string(),
            outcome: outcome.to_string(),
            counts: counts
                .iter()
                .map(|&(k, v)| (k.to_string(), v))
                .collect(),
        });
    }
}

/// A finder's outcome plus its stage trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinderRun {
    pub outcome: FinderOutcome,
    pub trace: Trace,
}

/// Outcome of a reduction-based finder. The certificate (when found) refers
/// to the *reduced* instance returned here, not to the input: contraction
/// renames vertices and renumbers the surviving color classes.
#[derive(Debug, Clone)]
pub struct ReducedFinderRun {
    pub reduced: ColoredHypergraph,
    pub reduction: reduce::ReduceReport,
    pub outcome: FinderOutcome,
    pub trace: Trace,
}
