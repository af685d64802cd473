//! MaxSTC on bipartite graphs. Without triangles no two strong edges may
//! share an endpoint, so an optimal labeling is a maximum matching.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;
use crate::incompat::{edge_key, StrongWeakLabeling};

use super::{bump, checked, SolveError, SolveResult, SolverKind, Stats};

/// Two-coloring of `g` (`false` / `true` per vertex index), or an odd cycle
/// given as a closed walk of labels.
pub fn two_coloring(g: &Graph) -> Result<Vec<bool>, Vec<String>> {
    let n = g.vertex_count();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        let mut queue = vec![s];
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            let cv = color[v].expect("queued vertices are colored");
            for &u in g.neighbor_indices(v) {
                match color[u] {
                    None => {
                        color[u] = Some(!cv);
                        parent[u] = v;
                        queue.push(u);
                    }
                    Some(cu) if cu == cv => return Err(odd_cycle(g, &parent, v, u)),
                    _ => {}
                }
            }
        }
    }
    Ok(color.into_iter().map(|c| c.expect("all colored")).collect())
}

fn odd_cycle(g: &Graph, parent: &[usize], a: usize, b: usize) -> Vec<String> {
    let path_to_root = |mut v: usize| {
        let mut p = vec![v];
        while parent[v] != usize::MAX {
            v = parent[v];
            p.push(v);
        }
        p
    };
    let pa = path_to_root(a);
    let pb = path_to_root(b);
    // strip the common tail above the lowest common ancestor
    let mut i = pa.len();
    let mut j = pb.len();
    while i > 1 && j > 1 && pa[i - 2] == pb[j - 2] {
        i -= 1;
        j -= 1;
    }
    let mut cycle: Vec<usize> = pa[..i].to_vec();
    cycle.extend(pb[..j - 1].iter().rev());
    cycle.into_iter().map(|v| g.label(v).to_string()).collect()
}

/// Maximum matching by augmenting paths from the `false` side.
pub fn maximum_matching(g: &Graph, side: &[bool]) -> Vec<(usize, usize)> {
    let n = g.vertex_count();
    let mut mate = vec![usize::MAX; n];
    for s in (0..n).filter(|&v| !side[v]) {
        let mut visited = vec![false; n];
        augment(g, s, &mut mate, &mut visited);
    }
    (0..n).filter(|&v| !side[v] && mate[v] != usize::MAX).map(|v| (v, mate[v])).collect()
}

fn augment(g: &Graph, v: usize, mate: &mut [usize], visited: &mut [bool]) -> bool {
    for &u in g.neighbor_indices(v) {
        if visited[u] {
            continue;
        }
        visited[u] = true;
        if mate[u] == usize::MAX || augment(g, mate[u], mate, visited) {
            mate[u] = v;
            mate[v] = u;
            return true;
        }
    }
    false
}

/// Exact MaxSTC of a unit-weight bipartite graph.
pub fn solve_bipartite(g: &Graph) -> Result<SolveResult, SolveError> {
    g.require_unit_weight()?;
    let side = two_coloring(g).map_err(|cycle| SolveError::WrongClass {
        class: "bipartite",
        reason: alloc::format!("odd cycle {}", cycle.join(" ")),
    })?;
    let matching = maximum_matching(g, &side);
    let strong = matching.iter().map(|&(u, v)| edge_key(g.label(u), g.label(v)));
    let labeling = StrongWeakLabeling::from_strong(g, strong)?;
    let mut stats = Stats::new();
    bump(&mut stats, "matching_size", matching.len() as u64);
    checked(g, SolveResult { value: labeling.value, labeling, solver: SolverKind::BipartiteMatching, stats })
}
