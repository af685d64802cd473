//! Exact MaxSTC solvers and the dispatcher that picks between them.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::incompat::{LabelingError, StrongWeakLabeling};

pub mod bipartite;
pub mod cograph;
pub mod mwis;
pub mod oracle;
pub mod pig;

mod auto;

pub use auto::{solve_auto, AutoOptions};
pub use bipartite::{solve_bipartite, two_coloring};
pub use cograph::{is_trivially_perfect, solve_trivially_perfect};
pub use mwis::{brute_mwis, MwisOptions, MwisSolution, DEFAULT_CAP};
pub use oracle::solve_oracle;
pub use pig::{solve_pig_dp, solve_pig_dp_detailed, PigDpReport};

/// Which algorithm produced a [`SolveResult`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SolverKind {
    Oracle,
    PigDp,
    TriviallyPerfect,
    BipartiteMatching,
    /// Components of one graph were handled by different solvers.
    Mixed,
}

impl SolverKind {
    pub fn as_str(self) -> &'static str {
        match self {
            SolverKind::Oracle => "oracle",
            SolverKind::PigDp => "pig-dp",
            SolverKind::TriviallyPerfect => "trivially-perfect",
            SolverKind::BipartiteMatching => "bipartite-matching",
            SolverKind::Mixed => "mixed",
        }
    }
}

impl core::fmt::Display for SolverKind {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Named counters reported by a solver run.
pub type Stats = BTreeMap<String, u64>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    /// Total weight of strong edges.
    pub value: u64,
    /// Optimal labeling of the input graph.
    pub labeling: StrongWeakLabeling,
    pub solver: SolverKind,
    pub stats: Stats,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("input is not {class}: {reason}")]
    WrongClass { class: &'static str, reason: String },
    #[error("instance of size {size} exceeds the brute-force cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("no solver applies: {0}")]
    Unsupported(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub(crate) fn bump(stats: &mut Stats, key: &str, by: u64) {
    *stats.entry(key.to_string()).or_insert(0) += by;
}

/// Checks a finished result against the input before it is handed out.
pub(crate) fn checked(g: &Graph, result: SolveResult) -> Result<SolveResult, SolveError> {
    use crate::incompat::{strong_weight, validate_stc, StcCheck};
    match validate_stc(g, &result.labeling)? {
        StcCheck::Valid => {}
        StcCheck::Violation(u, v, w) => {
            return Err(SolveError::Internal(alloc::format!(
                "{} produced an open strong wedge {u} {v} {w}",
                result.solver
            )))
        }
    }
    let recomputed = strong_weight(g, &result.labeling)?;
    if recomputed != result.value || result.labeling.value != result.value {
        return Err(SolveError::Internal(alloc::format!(
            "{} reported value {} but its labeling weighs {recomputed}",
            result.solver, result.value
        )));
    }
    Ok(result)
}
