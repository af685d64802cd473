//! MaxSTC on trivially-perfect ((P4, C4)-free) graphs. Their
//! line-incompatibility graphs are cographs, so the independent set is found
//! by splitting along components and co-components.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::incompat::{build_incompat, expand_labeling, labeling_from_independent_set, IncompatGraph};

use super::{bump, checked, SolveError, SolveResult, SolverKind, Stats};

/// Kind of a forbidden four-vertex induced subgraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuartetKind {
    P4,
    C4,
}

/// An induced `P4` or `C4`, vertices listed along the path or cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quartet {
    pub kind: QuartetKind,
    pub vertices: [String; 4],
}

/// Classifies the subgraph induced by four vertices, returning them in path
/// or cycle order when it is a `P4` or `C4`.
pub(crate) fn classify_quartet(adj: impl Fn(usize, usize) -> bool, q: [usize; 4]) -> Option<(QuartetKind, [usize; 4])> {
    let mut deg = [0usize; 4];
    let mut edges = 0;
    for i in 0..4 {
        for j in i + 1..4 {
            if adj(q[i], q[j]) {
                deg[i] += 1;
                deg[j] += 1;
                edges += 1;
            }
        }
    }
    let kind = match edges {
        3 if deg.iter().all(|&d| d == 1 || d == 2) => QuartetKind::P4,
        4 if deg.iter().all(|&d| d == 2) => QuartetKind::C4,
        _ => return None,
    };
    let start = match kind {
        QuartetKind::P4 => (0..4).find(|&i| deg[i] == 1).expect("P4 has an end"),
        QuartetKind::C4 => 0,
    };
    let mut walk = [start; 4];
    let mut used = [false; 4];
    used[start] = true;
    for step in 1..4 {
        let prev = walk[step - 1];
        let next = (0..4).find(|&i| !used[i] && adj(q[prev], q[i])).expect("walk continues");
        used[next] = true;
        walk[step] = next;
    }
    Some((kind, walk.map(|i| q[i])))
}

/// Scans all four-vertex subsets of `vertices` for an induced `P4` or `C4`.
fn quartet_scan_in(g: &Graph, vertices: &[usize], want_c4: bool) -> Option<Quartet> {
    let n = vertices.len();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let q = [vertices[a], vertices[b], vertices[c], vertices[d]];
                    if let Some((kind, walk)) = classify_quartet(|x, y| g.has_edge(x, y), q) {
                        if kind == QuartetKind::P4 || want_c4 {
                            return Some(Quartet { kind, vertices: walk.map(|v| g.label(v).to_string()) });
                        }
                    }
                }
            }
        }
    }
    None
}

/// First induced `P4` or `C4` of `g` by exhaustive quartet scan.
pub fn find_p4_or_c4(g: &Graph) -> Option<Quartet> {
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    quartet_scan_in(g, &all, true)
}

/// First induced `P4` of `g` by exhaustive quartet scan.
pub fn find_p4(g: &Graph) -> Option<Quartet> {
    let all: Vec<usize> = (0..g.vertex_count()).collect();
    quartet_scan_in(g, &all, false)
}

/// Returns the vertex set of a connected induced subgraph without a universal
/// vertex, which exists iff `g` is not trivially perfect.
fn non_tp_core(g: &Graph) -> Option<Vec<usize>> {
    let mut stack: Vec<Vec<usize>> = g.component_indices();
    let mut member = vec![false; g.vertex_count()];
    while let Some(set) = stack.pop() {
        if set.len() <= 1 {
            continue;
        }
        for &v in &set {
            member[v] = true;
        }
        let universal = set
            .iter()
            .copied()
            .find(|&v| g.neighbor_indices(v).iter().filter(|&&u| member[u]).count() == set.len() - 1);
        let Some(u) = universal else {
            for &v in &set {
                member[v] = false;
            }
            return Some(set);
        };
        let rest: Vec<usize> = set.iter().copied().filter(|&v| v != u).collect();
        for &v in &set {
            member[v] = false;
        }
        stack.extend(components_within(g, &rest));
    }
    None
}

fn components_within(g: &Graph, set: &[usize]) -> Vec<Vec<usize>> {
    let mut inside = vec![false; g.vertex_count()];
    for &v in set {
        inside[v] = true;
    }
    let mut out = Vec::new();
    for &s in set {
        if !inside[s] {
            continue;
        }
        inside[s] = false;
        let mut comp = vec![s];
        let mut head = 0;
        while head < comp.len() {
            let v = comp[head];
            head += 1;
            for &u in g.neighbor_indices(v) {
                if inside[u] {
                    inside[u] = false;
                    comp.push(u);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Trivially-perfect test: every connected induced subgraph has a universal
/// vertex. Agrees with the absence of induced `P4` and `C4`.
pub fn is_trivially_perfect(g: &Graph) -> bool {
    non_tp_core(g).is_none()
}

/// An induced `P4` or `C4` when `g` is not trivially perfect.
pub fn trivially_perfect_obstruction(g: &Graph) -> Option<Quartet> {
    let core = non_tp_core(g)?;
    let found = quartet_scan_in(g, &core, true);
    debug_assert!(found.is_some(), "a connected graph without universal vertex contains P4 or C4");
    found
}

/// Exact MWIS of a cograph by component / co-component decomposition.
/// Returns `None` when some induced subgraph is connected with a connected
/// complement, i.e. the input is not a cograph.
pub fn cograph_mwis(h: &IncompatGraph) -> Option<(u64, Vec<usize>, u64)> {
    let all: Vec<usize> = (0..h.node_count()).collect();
    let mut decompositions = 0u64;
    let (value, mut set) = cograph_rec(h, &all, &mut decompositions)?;
    set.sort_unstable();
    Some((value, set, decompositions))
}

fn cograph_rec(h: &IncompatGraph, nodes: &[usize], steps: &mut u64) -> Option<(u64, Vec<usize>)> {
    *steps += 1;
    match nodes {
        [] => return Some((0, Vec::new())),
        [v] => return Some((h.weight(*v), vec![*v])),
        _ => {}
    }
    let comps = split(nodes, |a, b| h.in_conflict(a, b));
    if comps.len() > 1 {
        let mut total = 0;
        let mut set = Vec::new();
        for c in comps {
            let (v, s) = cograph_rec(h, &c, steps)?;
            total += v;
            set.extend(s);
        }
        return Some((total, set));
    }
    let co = split(nodes, |a, b| !h.in_conflict(a, b));
    if co.len() > 1 {
        let mut best: Option<(u64, Vec<usize>)> = None;
        for c in co {
            let cand = cograph_rec(h, &c, steps)?;
            if best.as_ref().is_none_or(|b| cand.0 > b.0) {
                best = Some(cand);
            }
        }
        return best;
    }
    None
}

/// Connected components of `nodes` under the relation `linked`.
fn split(nodes: &[usize], linked: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    let mut rest: Vec<usize> = nodes.to_vec();
    let mut out = Vec::new();
    while let Some(s) = rest.pop() {
        let mut comp = vec![s];
        let mut head = 0;
        while head < comp.len() {
            let v = comp[head];
            head += 1;
            let mut i = 0;
            while i < rest.len() {
                if linked(v, rest[i]) {
                    comp.push(rest.swap_remove(i));
                } else {
                    i += 1;
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out.sort();
    out
}

/// Exact MaxSTC of a unit-weight trivially-perfect graph.
pub fn solve_trivially_perfect(g: &Graph) -> Result<SolveResult, SolveError> {
    if let Some(core) = non_tp_core(g) {
        let reason = match quartet_scan_in(g, &core, true) {
            Some(q) => alloc::format!("induced {:?} on {}", q.kind, q.vertices.join(" ")),
            None => "a connected induced subgraph has no universal vertex".to_string(),
        };
        return Err(SolveError::WrongClass { class: "trivially perfect", reason });
    }
    let tc = g.contract_twins()?;
    let h = build_incompat(&tc.graph);
    let (value, set, steps) = cograph_mwis(&h).ok_or_else(|| {
        SolveError::Internal(
            "line-incompatibility graph of a trivially-perfect input is not a cograph".to_string(),
        )
    })?;
    let contracted = labeling_from_independent_set(&tc.graph, &h, &set)?;
    if contracted.value != value {
        return Err(SolveError::Internal("cograph decomposition value mismatch".to_string()));
    }
    let labeling = expand_labeling(g, &tc.partition, &contracted, tc.intra_twin_value)?;
    let mut stats = Stats::new();
    bump(&mut stats, "incompat_nodes", h.node_count() as u64);
    bump(&mut stats, "cotree_nodes", steps);
    bump(&mut stats, "twin_classes", tc.partition.len() as u64);
    bump(&mut stats, "intra_twin_value", tc.intra_twin_value);
    checked(g, SolveResult { value: labeling.value, labeling, solver: SolverKind::TriviallyPerfect, stats })
}
