use alloc::collections::BTreeSet;
use alloc::format;

use crate::graph::Graph;
use crate::incompat::{EdgeKey, StrongWeakLabeling};
use crate::ordering::is_proper_interval;

use super::bipartite::{solve_bipartite, two_coloring};
use super::cograph::{is_trivially_perfect, solve_trivially_perfect};
use super::mwis::MwisOptions;
use super::oracle::solve_oracle;
use super::pig::solve_pig_dp;
use super::{bump, checked, SolveError, SolveResult, SolverKind, Stats};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AutoOptions {
    /// Limits for components no polynomial solver accepts.
    pub oracle: MwisOptions,
}

/// Solves each connected component with the first applicable exact solver:
/// trivially perfect, proper interval, bipartite, then brute force within
/// the oracle cap. Weighted inputs always go to brute force.
pub fn solve_auto(g: &Graph, opts: AutoOptions) -> Result<SolveResult, SolveError> {
    if !g.is_unit_weight() {
        return solve_oracle(g, opts.oracle);
    }
    if is_trivially_perfect(g) {
        return solve_trivially_perfect(g);
    }
    let mut strong: BTreeSet<EdgeKey> = BTreeSet::new();
    let mut stats = Stats::new();
    let mut kinds: BTreeSet<SolverKind> = BTreeSet::new();
    for comp in g.connected_components() {
        let r = solve_component(&comp, opts)?;
        for (k, v) in &r.stats {
            bump(&mut stats, k, *v);
        }
        bump(&mut stats, &format!("components_{}", r.solver.as_str()), 1);
        kinds.insert(r.solver);
        strong.extend(r.labeling.strong);
    }
    let solver = match kinds.len() {
        1 => *kinds.iter().next().expect("one kind"),
        _ => SolverKind::Mixed,
    };
    let labeling = StrongWeakLabeling::from_strong(g, strong)?;
    checked(g, SolveResult { value: labeling.value, labeling, solver, stats })
}

fn solve_component(comp: &Graph, opts: AutoOptions) -> Result<SolveResult, SolveError> {
    if is_trivially_perfect(comp) {
        return solve_trivially_perfect(comp);
    }
    if is_proper_interval(comp) {
        return solve_pig_dp(comp);
    }
    if two_coloring(comp).is_ok() {
        return solve_bipartite(comp);
    }
    match solve_oracle(comp, opts.oracle) {
        Err(SolveError::CapExceeded { size, cap }) => Err(SolveError::Unsupported(format!(
            "component with {} vertices and {size} edges is not trivially perfect, \
             proper interval or bipartite, and exceeds the brute-force cap {cap}",
            comp.vertex_count()
        ))),
        other => other,
    }
}
