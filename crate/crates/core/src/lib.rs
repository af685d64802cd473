//! Exact solvers for maximum strong triadic closure.
//!
//! A labeling marks every edge strong or weak; it is valid when no vertex has
//! two strong edges to non-adjacent neighbors. The goal is to maximize the
//! number (or total weight) of strong edges.

#![no_std]

extern crate alloc;

mod bits;
pub mod graph;
pub mod incompat;
pub mod ordering;
pub mod reductions;
pub mod solvers;

pub use graph::{Graph, GraphBuilder, GraphError, TwinContraction, TwinPartition};
pub use incompat::{
    build_incompat, edge_key, validate_stc, EdgeKey, IncompatGraph, LabelingError, StcCheck,
    StrongWeakLabeling,
};
pub use ordering::{recognize, verify_umbrella, ProperIntervalOrdering, UmbrellaCheck};
pub use solvers::{SolveError, SolveResult, SolverKind};
