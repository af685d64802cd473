//! MaxSTC on proper interval graphs by dynamic programming over a proper
//! interval ordering of the twin-contracted graph.
//!
//! A state `(a, b, r)` describes the suffix of the ordering starting at
//! position `a`, whose first vertices `a..=b` form a prefix that must be
//! pairwise strong and may not reach past position `r` with strong edges.
//! Peeling vertex `a` either chooses its rightmost strong neighbor `j` in
//! `b..=r`, or, when `b == r`, closes the prefix as a strong clique and
//! restarts at `b + 1`. An empty prefix is normalized to `(a, a, right(a))`.

use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, TwinContraction};
use crate::incompat::{edge_key, expand_labeling, EdgeKey, StrongWeakLabeling};
use crate::ordering::{recognize, umbrella_violation, ProperIntervalOrdering};

use super::{bump, checked, SolveError, SolveResult, SolverKind, Stats};

/// Optimum of the recurrence on one ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DpOutcome {
    pub value: u64,
    /// Strong edges of the reconstructed solution.
    pub strong: BTreeSet<EdgeKey>,
    /// Number of evaluated states.
    pub states: u64,
}

/// Runs the recurrence on `g` along `ordering`, which must be a proper
/// interval ordering of `g`. Vertex weights are honored; no twin contraction
/// happens here.
pub fn dp_on_ordering(g: &Graph, ordering: &ProperIntervalOrdering) -> Result<DpOutcome, SolveError> {
    if ordering.len() != g.vertex_count() {
        return Err(SolveError::Internal("ordering does not cover the graph".to_string()));
    }
    let idx = ordering.vertex_indices(g);
    if let Some((x, y, z)) = umbrella_violation(g, &idx) {
        return Err(SolveError::WrongClass {
            class: "proper interval",
            reason: alloc::format!(
                "ordering violates the umbrella property at {} {} {}",
                g.label(idx[x]),
                g.label(idx[y]),
                g.label(idx[z])
            ),
        });
    }
    let n = idx.len();
    if n == 0 {
        return Ok(DpOutcome { value: 0, strong: BTreeSet::new(), states: 0 });
    }
    let table = Table::build(g, &idx, ordering.right_reaches());
    let value = table.start_value(0);
    let strong = table
        .reconstruct()
        .into_iter()
        .map(|(x, y)| edge_key(g.label(idx[x]), g.label(idx[y])))
        .collect();
    Ok(DpOutcome { value, strong, states: table.states })
}

struct Table {
    n: usize,
    right: Vec<usize>,
    /// `row[a][k]`: weight of edges from `a` to `a+1..=a+k`.
    row: Vec<Vec<u64>>,
    /// `clique[a][k]`: weight of all edges among `a..=a+k`.
    clique: Vec<Vec<u64>>,
    /// `best[a][(b-a) * width + (r-a)]` with `width = right[a] - a + 1`.
    best: Vec<Vec<u64>>,
    states: u64,
}

impl Table {
    fn build(g: &Graph, idx: &[usize], right: &[usize]) -> Self {
        let n = idx.len();
        let mut row = Vec::with_capacity(n);
        for a in 0..n {
            let mut acc = 0;
            let mut r = vec![0u64];
            for t in a + 1..=right[a] {
                // contiguous neighborhoods: every t in range is adjacent
                acc += g.edge_weight(idx[a], idx[t]);
                r.push(acc);
            }
            row.push(r);
        }
        let mut clique: Vec<Vec<u64>> = vec![Vec::new(); n];
        for a in (0..n).rev() {
            let width = right[a] - a + 1;
            let mut c = Vec::with_capacity(width);
            for k in 0..width {
                let b = a + k;
                let inner = if k == 0 { 0 } else { clique[a + 1][b - a - 1] };
                c.push(inner + row[a][k]);
            }
            clique[a] = c;
        }
        let mut t = Table {
            n,
            right: right.to_vec(),
            row,
            clique,
            best: vec![Vec::new(); n],
            states: 0,
        };
        for a in (0..n).rev() {
            let width = t.right[a] - a + 1;
            let mut cells = vec![0u64; width * width];
            for r in a..=t.right[a] {
                for b in a..=r {
                    cells[(b - a) * width + (r - a)] = t.eval(a, b, r).0;
                    t.states += 1;
                }
            }
            t.best[a] = cells;
        }
        t
    }

    fn get(&self, a: usize, b: usize, r: usize) -> u64 {
        let width = self.right[a] - a + 1;
        self.best[a][(b - a) * width + (r - a)]
    }

    /// Optimum of the suffix starting at `a` with an empty prefix.
    fn start_value(&self, a: usize) -> u64 {
        if a < self.n {
            self.get(a, a, self.right[a])
        } else {
            0
        }
    }

    fn b_weight(&self, a: usize, j: usize) -> u64 {
        self.row[a][j - a]
    }

    fn c_weight(&self, a: usize, b: usize) -> u64 {
        self.clique[a][b - a]
    }

    /// Value of state `(a, b, r)` from already computed states of larger `a`,
    /// with the chosen `j` in the peeling case.
    fn eval(&self, a: usize, b: usize, r: usize) -> (u64, Option<usize>) {
        if b < r {
            let mut best = (0, None);
            for j in b..=r {
                let rest = if j == a { self.start_value(a + 1) } else { self.get(a + 1, j, r) };
                let v = rest + self.b_weight(a, j);
                if best.1.is_none() || v > best.0 {
                    best = (v, Some(j));
                }
            }
            best
        } else if b + 1 < self.n {
            (self.start_value(b + 1) + self.c_weight(a, b), None)
        } else {
            (self.c_weight(a, b), None)
        }
    }

    /// Strong edges (as ordering positions) of the solution, smallest `j` on ties.
    fn reconstruct(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut state = Some((0, 0, self.right[0]));
        while let Some((a, b, r)) = state {
            match self.eval(a, b, r) {
                (_, Some(j)) => {
                    out.extend((a + 1..=j).map(|t| (a, t)));
                    state = if j == a {
                        (a + 1 < self.n).then(|| (a + 1, a + 1, self.right[a + 1]))
                    } else {
                        Some((a + 1, j, r))
                    };
                }
                (_, None) => {
                    for x in a..=b {
                        out.extend((x + 1..=b).map(|y| (x, y)));
                    }
                    state = (b + 1 < self.n).then(|| (b + 1, b + 1, self.right[b + 1]));
                }
            }
        }
        out
    }
}

/// DP data for one connected component of the contracted graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentDp {
    pub graph: Graph,
    pub ordering: ProperIntervalOrdering,
    pub outcome: DpOutcome,
}

/// Full record of a proper interval solve, kept for inspection and tests.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PigDpReport {
    pub result: SolveResult,
    pub contraction: TwinContraction,
    pub components: Vec<ComponentDp>,
}

/// Exact MaxSTC of a unit-weight proper interval graph.
pub fn solve_pig_dp(g: &Graph) -> Result<SolveResult, SolveError> {
    solve_pig_dp_detailed(g).map(|r| r.result)
}

pub fn solve_pig_dp_detailed(g: &Graph) -> Result<PigDpReport, SolveError> {
    let contraction = g.contract_twins()?;
    let mut components = Vec::new();
    let mut strong: Vec<EdgeKey> = Vec::new();
    let mut stats = Stats::new();
    for comp in contraction.graph.connected_components() {
        let ordering = recognize(&comp).map_err(|rej| SolveError::WrongClass {
            class: "proper interval",
            reason: alloc::format!(
                "no proper interval ordering; candidate fails at {} {} {}",
                rej.witness.0,
                rej.witness.1,
                rej.witness.2
            ),
        })?;
        let outcome = dp_on_ordering(&comp, &ordering)?;
        bump(&mut stats, "dp_states", outcome.states);
        strong.extend(outcome.strong.iter().cloned());
        components.push(ComponentDp { graph: comp, ordering, outcome });
    }
    let contracted_value: u64 = components.iter().map(|c| c.outcome.value).sum();
    let contracted_lab = StrongWeakLabeling::from_strong(&contraction.graph, strong)?;
    if contracted_lab.value != contracted_value {
        return Err(SolveError::Internal(alloc::format!(
            "dp value {contracted_value} disagrees with its reconstruction {}",
            contracted_lab.value
        )));
    }
    let labeling =
        expand_labeling(g, &contraction.partition, &contracted_lab, contraction.intra_twin_value)?;
    bump(&mut stats, "components", components.len() as u64);
    bump(&mut stats, "twin_classes", contraction.partition.len() as u64);
    bump(&mut stats, "intra_twin_value", contraction.intra_twin_value);
    let result = checked(
        g,
        SolveResult { value: labeling.value, labeling, solver: SolverKind::PigDp, stats },
    )?;
    Ok(PigDpReport { result, contraction, components })
}

/// A triple `x < y < z` in `ordering` with `xz` strong but `xy` or `yz` not
/// strong, if one exists.
pub fn consecutive_strong_violation(
    ordering: &ProperIntervalOrdering,
    strong: &BTreeSet<EdgeKey>,
) -> Option<(String, String, String)> {
    let order = ordering.order();
    let pos = |l: &str| order.iter().position(|o| o == l).expect("edge inside ordering");
    for (u, v) in strong {
        let (i, k) = {
            let (p, q) = (pos(u), pos(v));
            (p.min(q), p.max(q))
        };
        for y in &order[i + 1..k] {
            let (x, z) = (&order[i], &order[k]);
            if !strong.contains(&edge_key(x, y)) || !strong.contains(&edge_key(y, z)) {
                return Some((x.clone(), y.clone(), z.clone()));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize) -> Graph {
        let names: Vec<String> = (0..n).map(|i| alloc::format!("p{i}")).collect();
        let edges: Vec<(&str, &str)> =
            (1..n).map(|i| (names[i - 1].as_str(), names[i].as_str())).collect();
        Graph::from_edges(&edges).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(solve_pig_dp(&p(4)).unwrap().value, 2);
        let k3 = Graph::from_edges(&[("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
        let rep = solve_pig_dp_detailed(&k3).unwrap();
        assert_eq!(rep.result.value, 3);
        assert_eq!(rep.contraction.graph.vertex_count(), 1);
        assert_eq!(rep.contraction.intra_twin_value, 3);
        let bowtie =
            Graph::from_edges(&[("a", "b"), ("a", "c"), ("b", "c"), ("c", "d"), ("c", "e"), ("d", "e")])
                .unwrap();
        assert_eq!(solve_pig_dp(&bowtie).unwrap().value, 4);
    }

    #[test]
    fn wrong_class() {
        let claw = Graph::from_edges(&[("c", "a"), ("c", "b"), ("c", "d")]).unwrap();
        assert!(matches!(solve_pig_dp(&claw), Err(SolveError::WrongClass { .. })));
    }

    #[test]
    fn degenerate_inputs() {
        assert_eq!(solve_pig_dp(&Graph::default()).unwrap().value, 0);
        let g = Graph::from_parts(&["a", "b"], &[]).unwrap();
        let r = solve_pig_dp(&g).unwrap();
        assert_eq!(r.value, 0);
        assert!(r.labeling.strong.is_empty());
    }

    #[test]
    fn reversal_gives_same_value() {
        let g = p(6);
        let o = recognize(&g).unwrap();
        let f = dp_on_ordering(&g, &o).unwrap();
        let r = dp_on_ordering(&g, &o.reverse()).unwrap();
        assert_eq!(f.value, 3);
        assert_eq!(r.value, 3);
    }

    #[test]
    fn rejects_non_umbrella_ordering() {
        let g = p(3);
        let bad = crate::ordering::ordering_from_indices(&g, &[0, 2, 1]);
        assert!(matches!(dp_on_ordering(&g, &bad), Err(SolveError::WrongClass { .. })));
    }

    #[test]
    fn consecutive_property_detector() {
        let g = p(3);
        let o = crate::ordering::ordering_from_indices(&g, &[0, 1, 2]);
        let mut strong = BTreeSet::new();
        strong.insert(edge_key("p0", "p1"));
        assert_eq!(consecutive_strong_violation(&o, &strong), None);
        let k3 = Graph::from_edges(&[("a", "b"), ("b", "c"), ("a", "c")]).unwrap();
        let o = crate::ordering::ordering_from_indices(&k3, &[0, 1, 2]);
        let mut strong = BTreeSet::new();
        strong.insert(edge_key("a", "c"));
        strong.insert(edge_key("a", "b"));
        assert_eq!(
            consecutive_strong_violation(&o, &strong),
            Some(("a".into(), "b".into(), "c".into()))
        );
    }
}
