//! Brute-force MaxSTC: exact MWIS of the line-incompatibility graph.

use crate::graph::Graph;
use crate::incompat::{build_incompat, labeling_from_independent_set};

use super::mwis::{brute_mwis, MwisOptions};
use super::{bump, checked, SolveError, SolveResult, SolverKind, Stats};

/// Solves any graph whose edge count is within `opts.cap` (or any graph when
/// forced). Handles vertex weights: edge `uv` weighs `w(u) * w(v)`.
pub fn solve_oracle(g: &Graph, opts: MwisOptions) -> Result<SolveResult, SolveError> {
    opts.admit(g.edge_count())?;
    let h = build_incompat(g);
    let sol = brute_mwis(&h, MwisOptions { force: true, ..opts })?;
    let labeling = labeling_from_independent_set(g, &h, &sol.nodes)?;
    let mut stats = Stats::new();
    bump(&mut stats, "incompat_nodes", h.node_count() as u64);
    bump(&mut stats, "incompat_conflicts", h.conflict_count() as u64);
    bump(&mut stats, "search_nodes", sol.explored);
    checked(g, SolveResult { value: sol.value, labeling, solver: SolverKind::Oracle, stats })
}
