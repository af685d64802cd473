//! Proper interval orderings: recognition by repeated LexBFS sweeps and the
//! umbrella check every accepted ordering must pass.
//!
//! Positions are zero-based throughout.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderingError {
    #[error("ordering is not a permutation of the vertex set: {0}")]
    NotAPermutation(String),
}

/// Vertex ordering with the umbrella property together with the positions of
/// each vertex's leftmost and rightmost neighbors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProperIntervalOrdering {
    order: Vec<String>,
    left_reach: Vec<usize>,
    right_reach: Vec<usize>,
}

impl ProperIntervalOrdering {
    pub fn order(&self) -> &[String] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Position of the leftmost neighbor of the vertex at `pos` (`pos` if none).
    pub fn left_reach(&self, pos: usize) -> usize {
        self.left_reach[pos]
    }

    /// Position of the rightmost neighbor of the vertex at `pos` (`pos` if none).
    pub fn right_reach(&self, pos: usize) -> usize {
        self.right_reach[pos]
    }

    pub fn left_reaches(&self) -> &[usize] {
        &self.left_reach
    }

    pub fn right_reaches(&self) -> &[usize] {
        &self.right_reach
    }

    /// The mirrored ordering. Reaches are mirrored, not recomputed from a graph.
    pub fn reverse(&self) -> ProperIntervalOrdering {
        let n = self.order.len();
        let order = self.order.iter().rev().cloned().collect();
        let left_reach = (0..n).map(|i| n - 1 - self.right_reach[n - 1 - i]).collect();
        let right_reach = (0..n).map(|i| n - 1 - self.left_reach[n - 1 - i]).collect();
        ProperIntervalOrdering { order, left_reach, right_reach }
    }

    /// Vertex indices of `g` in ordering position order.
    pub fn vertex_indices(&self, g: &Graph) -> Vec<usize> {
        self.order.iter().map(|l| g.index_of(l).expect("ordering belongs to graph")).collect()
    }
}

/// Outcome of an umbrella check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UmbrellaCheck {
    Valid,
    /// Positions `x < y < z` with `xz` an edge but `xy` or `yz` missing.
    Violation(String, String, String),
}

impl UmbrellaCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, UmbrellaCheck::Valid)
    }
}

fn positions_of(g: &Graph, order: &[&str]) -> Result<Vec<usize>, OrderingError> {
    let n = g.vertex_count();
    if order.len() != n {
        return Err(OrderingError::NotAPermutation(alloc::format!(
            "expected {n} vertices, got {}",
            order.len()
        )));
    }
    let mut seen = vec![false; n];
    let mut idx = Vec::with_capacity(n);
    for l in order {
        let v = g
            .index_of(l)
            .ok_or_else(|| OrderingError::NotAPermutation(alloc::format!("unknown vertex `{l}`")))?;
        if seen[v] {
            return Err(OrderingError::NotAPermutation(alloc::format!("repeated vertex `{l}`")));
        }
        seen[v] = true;
        idx.push(v);
    }
    Ok(idx)
}

/// Checks the umbrella property of `order` against `g`.
///
/// The property is equivalent to every closed neighborhood occupying a
/// contiguous block of positions, which is what gets checked; a gap yields the
/// witness triple.
pub fn verify_umbrella(g: &Graph, order: &[&str]) -> Result<UmbrellaCheck, OrderingError> {
    let idx = positions_of(g, order)?;
    Ok(match umbrella_violation(g, &idx) {
        None => UmbrellaCheck::Valid,
        Some((x, y, z)) => UmbrellaCheck::Violation(
            g.label(idx[x]).to_string(),
            g.label(idx[y]).to_string(),
            g.label(idx[z]).to_string(),
        ),
    })
}

/// Returns positions `(x, y, z)` of an umbrella violation for an ordering
/// given as vertex indices.
pub(crate) fn umbrella_violation(g: &Graph, idx: &[usize]) -> Option<(usize, usize, usize)> {
    let n = idx.len();
    let mut pos = vec![0usize; g.vertex_count()];
    for (p, &v) in idx.iter().enumerate() {
        pos[v] = p;
    }
    for x in 0..n {
        let v = idx[x];
        let mut ps: Vec<usize> = g.neighbor_indices(v).iter().map(|&u| pos[u]).collect();
        ps.push(x);
        ps.sort_unstable();
        // closed neighborhood must be exactly ps[0]..=ps[last]
        for w in ps.windows(2) {
            if w[1] != w[0] + 1 {
                let gap = w[0] + 1;
                return Some(if gap > x {
                    // neighbor to the right of the gap
                    (x, gap, *ps.last().unwrap())
                } else {
                    (ps[0], gap, x)
                });
            }
        }
    }
    None
}

fn reaches(g: &Graph, idx: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let mut pos = vec![0usize; g.vertex_count()];
    for (p, &v) in idx.iter().enumerate() {
        pos[v] = p;
    }
    let mut left = Vec::with_capacity(idx.len());
    let mut right = Vec::with_capacity(idx.len());
    for (p, &v) in idx.iter().enumerate() {
        let nb = g.neighbor_indices(v).iter().map(|&u| pos[u]);
        left.push(nb.clone().min().unwrap_or(p).min(p));
        right.push(nb.max().unwrap_or(p).max(p));
    }
    (left, right)
}

/// Builds an ordering object from vertex indices without checking it.
pub(crate) fn ordering_from_indices(g: &Graph, idx: &[usize]) -> ProperIntervalOrdering {
    let (left_reach, right_reach) = reaches(g, idx);
    ProperIntervalOrdering {
        order: idx.iter().map(|&v| g.label(v).to_string()).collect(),
        left_reach,
        right_reach,
    }
}

/// LexBFS restricted to `vertices`. Ties inside a slice go to the vertex with
/// the largest `priority`.
fn lexbfs(g: &Graph, vertices: &[usize], priority: &[usize]) -> Vec<usize> {
    let mut slices: Vec<Vec<usize>> = vec![vertices.to_vec()];
    let mut out = Vec::with_capacity(vertices.len());
    while let Some(first) = slices.first_mut() {
        let (k, _) = first
            .iter()
            .enumerate()
            .max_by_key(|&(_, &v)| priority[v])
            .expect("slices are never empty");
        let pivot = first.remove(k);
        if first.is_empty() {
            slices.remove(0);
        }
        out.push(pivot);
        let mut refined = Vec::with_capacity(slices.len() + 4);
        for slice in slices.drain(..) {
            let (hit, miss): (Vec<usize>, Vec<usize>) =
                slice.into_iter().partition(|&u| g.has_edge(pivot, u));
            if !hit.is_empty() {
                refined.push(hit);
            }
            if !miss.is_empty() {
                refined.push(miss);
            }
        }
        slices = refined;
    }
    out
}

/// Candidate ordering of one connected component by three LexBFS sweeps, the
/// second and third breaking ties toward the end of the previous sweep.
fn sweep_component(g: &Graph, comp: &[usize]) -> Vec<usize> {
    let n = g.vertex_count();
    // first sweep: smallest label first
    let mut priority: Vec<usize> = (0..n).map(|v| n - v).collect();
    let mut order = lexbfs(g, comp, &priority);
    for _ in 0..2 {
        for (p, &v) in order.iter().enumerate() {
            priority[v] = p;
        }
        order = lexbfs(g, comp, &priority);
    }
    order
}

/// Finds a proper interval ordering of `g`, or `Err` with the rejected
/// candidate and the umbrella violation it contains.
///
/// Components are ordered one after another. Every returned ordering has
/// passed [`verify_umbrella`].
pub fn recognize(g: &Graph) -> Result<ProperIntervalOrdering, Rejection> {
    let mut idx = Vec::with_capacity(g.vertex_count());
    for comp in g.component_indices() {
        idx.extend(sweep_component(g, &comp));
    }
    match umbrella_violation(g, &idx) {
        None => Ok(ordering_from_indices(g, &idx)),
        Some((x, y, z)) => Err(Rejection {
            candidate: idx.iter().map(|&v| g.label(v).to_string()).collect(),
            witness: (g.label(idx[x]).into(), g.label(idx[y]).into(), g.label(idx[z]).into()),
        }),
    }
}

pub fn is_proper_interval(g: &Graph) -> bool {
    recognize(g).is_ok()
}

/// A failed recognition: the last sweep's ordering and one umbrella violation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rejection {
    pub candidate: Vec<String>,
    pub witness: (String, String, String),
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let names: Vec<String> = (0..n).map(|i| alloc::format!("p{i}")).collect();
        let edges: Vec<(&str, &str)> =
            (1..n).map(|i| (names[i - 1].as_str(), names[i].as_str())).collect();
        Graph::from_edges(&edges).unwrap()
    }

    fn check_valid(g: &Graph, o: &ProperIntervalOrdering) {
        let ord: Vec<&str> = o.order().iter().map(|s| s.as_str()).collect();
        assert_eq!(verify_umbrella(g, &ord).unwrap(), UmbrellaCheck::Valid);
    }

    #[test]
    fn path_is_recognized_in_path_order() {
        let g = path(4);
        let o = recognize(&g).unwrap();
        check_valid(&g, &o);
        let fwd: Vec<&str> = o.order().iter().map(|s| s.as_str()).collect();
        assert!(fwd == ["p0", "p1", "p2", "p3"] || fwd == ["p3", "p2", "p1", "p0"]);
    }

    #[test]
    fn claw_and_c4_are_rejected() {
        let claw = Graph::from_edges(&[("c", "a"), ("c", "b"), ("c", "d")]).unwrap();
        assert!(recognize(&claw).is_err());
        let c4 = Graph::from_edges(&[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")]).unwrap();
        let rej = recognize(&c4).unwrap_err();
        let cand: Vec<&str> = rej.candidate.iter().map(|s| s.as_str()).collect();
        let (x, y, z) = rej.witness.clone();
        assert_eq!(verify_umbrella(&c4, &cand).unwrap(), UmbrellaCheck::Violation(x, y, z));
    }

    #[test]
    fn umbrella_examples() {
        let p3 = Graph::from_edges(&[("a", "b"), ("b", "c")]).unwrap();
        assert!(verify_umbrella(&p3, &["a", "b", "c"]).unwrap().is_valid());
        assert_eq!(
            verify_umbrella(&p3, &["a", "c", "b"]).unwrap(),
            UmbrellaCheck::Violation("a".into(), "c".into(), "b".into())
        );
        let k4 = Graph::from_edges(&[("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")])
            .unwrap();
        assert!(verify_umbrella(&k4, &["d", "b", "a", "c"]).unwrap().is_valid());
    }

    #[test]
    fn umbrella_rejects_non_permutations() {
        let p3 = Graph::from_edges(&[("a", "b"), ("b", "c")]).unwrap();
        assert!(verify_umbrella(&p3, &["a", "b"]).is_err());
        assert!(verify_umbrella(&p3, &["a", "b", "b"]).is_err());
        assert!(verify_umbrella(&p3, &["a", "b", "x"]).is_err());
    }

    #[test]
    fn reverse_examples() {
        let p3 = Graph::from_edges(&[("a", "b"), ("b", "c")]).unwrap();
        let o = ordering_from_indices(&p3, &[0, 1, 2]);
        let r = o.reverse();
        assert_eq!(r.order(), ["c", "b", "a"]);
        check_valid(&p3, &r);

        let single = Graph::from_parts(&["s"], &[]).unwrap();
        let o = recognize(&single).unwrap();
        assert_eq!(o.reverse(), o);

        let g = path(4);
        let o = recognize(&g).unwrap();
        let r = o.reverse();
        assert_eq!(r, ordering_from_indices(&g, &r.vertex_indices(&g)));
        for i in 0..4 {
            assert_eq!(r.left_reach(i), 3 - o.right_reach(3 - i));
        }
    }

    #[test]
    fn disconnected_input_orders_components_consecutively() {
        let g = Graph::from_edges(&[("a", "b"), ("b", "c"), ("x", "y")]).unwrap();
        let o = recognize(&g).unwrap();
        check_valid(&g, &o);
        assert_eq!(o.right_reach(2), 2);
    }

    #[test]
    fn empty_graph() {
        let o = recognize(&Graph::default()).unwrap();
        assert!(o.is_empty());
    }
}
