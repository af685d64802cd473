//! Hardness-reduction instance generators, their brute-force certification,
//! and seeded generators for random in-class test graphs.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, GraphBuilder, GraphError};
use crate::incompat::build_incompat;
use crate::solvers::mwis::{mwis_value, MwisOptions};
use crate::solvers::SolveError;

/// Largest independent side accepted by [`brute_disjointnn`].
pub const DISJOINTNN_CAP: usize = 20;

/// Node cap used when certifying reductions. The generated graphs reach
/// 159 edges for a universe of six elements and three triplets.
pub const CERTIFY_CAP: usize = 200;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("triplet {index} is not three distinct elements of 1..={universe}")]
    InvalidTriplet { index: usize, universe: usize },
    #[error("split partition violated: {0}")]
    NotSplit(String),
    #[error("independent vertex `{vertex}` misses {missing} clique vertices, expected 3")]
    MissCount { vertex: String, missing: usize },
    #[error("independent side has {size} vertices, cap is {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solve(#[from] SolveError),
}

/// Triplets over the universe `1..=universe` and a target packing size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetPackingInstance {
    universe: usize,
    triplets: Vec<[usize; 3]>,
    k: usize,
}

impl SetPackingInstance {
    pub fn new(universe: usize, triplets: Vec<[usize; 3]>, k: usize) -> Result<Self, ReductionError> {
        for (index, t) in triplets.iter().enumerate() {
            let in_range = t.iter().all(|&e| (1..=universe).contains(&e));
            if !in_range || t[0] == t[1] || t[0] == t[2] || t[1] == t[2] {
                return Err(ReductionError::InvalidTriplet { index, universe });
            }
        }
        Ok(SetPackingInstance { universe, triplets, k })
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn triplets(&self) -> &[[usize; 3]] {
        &self.triplets
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

/// Largest number of pairwise disjoint triplets, with the lexicographically
/// first witness (triplet indices, ascending) among maximum packings.
pub fn max_set_packing(sp: &SetPackingInstance) -> (usize, Vec<usize>) {
    let masks: Vec<u64> =
        sp.triplets.iter().map(|t| t.iter().fold(0u64, |m, &e| m | 1 << (e - 1))).collect();
    let mut best = Vec::new();
    let mut cur = Vec::new();
    pack(&masks, 0, 0, &mut cur, &mut best);
    (best.len(), best)
}

fn pack(masks: &[u64], i: usize, used: u64, cur: &mut Vec<usize>, best: &mut Vec<usize>) {
    if cur.len() > best.len() {
        *best = cur.clone();
    }
    if i == masks.len() || cur.len() + (masks.len() - i) <= best.len() {
        return;
    }
    if masks[i] & used == 0 {
        cur.push(i);
        pack(masks, i + 1, used | masks[i], cur, best);
        cur.pop();
    }
    pack(masks, i + 1, used, cur, best);
}

/// A graph together with a split partition: `clique` induces a clique,
/// `independent` an independent set, and together they cover the vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitInstance {
    pub graph: Graph,
    pub clique: Vec<String>,
    pub independent: Vec<String>,
}

impl SplitInstance {
    pub fn new(graph: Graph, clique: Vec<String>, independent: Vec<String>) -> Result<Self, ReductionError> {
        let si = SplitInstance { graph, clique, independent };
        si.verify()?;
        Ok(si)
    }

    /// Re-checks the split-partition invariant.
    pub fn verify(&self) -> Result<(), ReductionError> {
        let g = &self.graph;
        let mut seen = BTreeSet::new();
        for l in self.clique.iter().chain(&self.independent) {
            if g.index_of(l).is_none() {
                return Err(GraphError::UnknownVertex(l.clone()).into());
            }
            if !seen.insert(l.as_str()) {
                return Err(ReductionError::NotSplit(format!("`{l}` is listed twice")));
            }
        }
        if seen.len() != g.vertex_count() {
            return Err(ReductionError::NotSplit("partition does not cover every vertex".to_string()));
        }
        for (i, a) in self.clique.iter().enumerate() {
            for b in &self.clique[i + 1..] {
                if !g.adjacent(a, b)? {
                    return Err(ReductionError::NotSplit(format!("clique side misses edge {a} {b}")));
                }
            }
        }
        for (i, a) in self.independent.iter().enumerate() {
            for b in &self.independent[i + 1..] {
                if g.adjacent(a, b)? {
                    return Err(ReductionError::NotSplit(format!("independent side has edge {a} {b}")));
                }
            }
        }
        Ok(())
    }

    /// Clique vertices not adjacent to `v`, in clique-side order.
    pub fn non_neighbors(&self, v: &str) -> Result<Vec<&str>, ReductionError> {
        let mut out = Vec::new();
        for c in &self.clique {
            if !self.graph.adjacent(v, c)? {
                out.push(c.as_str());
            }
        }
        Ok(out)
    }

    fn require_three_misses(&self) -> Result<(), ReductionError> {
        for v in &self.independent {
            let missing = self.non_neighbors(v)?.len();
            if missing != 3 {
                return Err(ReductionError::MissCount { vertex: v.clone(), missing });
            }
        }
        Ok(())
    }
}

fn clique_label(i: usize) -> String {
    format!("c{i}")
}

/// Split graph with clique `c1..cn` and one vertex `wi` per triplet, adjacent
/// to every clique vertex outside its triplet.
pub fn gen_disjointnn_from_3sp(sp: &SetPackingInstance) -> SplitInstance {
    let n = sp.universe;
    let clique: Vec<String> = (1..=n).map(clique_label).collect();
    let independent: Vec<String> = (1..=sp.triplets.len()).map(|i| format!("w{i}")).collect();
    let mut b = GraphBuilder::new();
    for c in &clique {
        b.add_vertex(c).expect("nonempty label");
    }
    for (i, a) in clique.iter().enumerate() {
        for c in &clique[i + 1..] {
            b.add_edge(a, c).expect("fresh edge");
        }
    }
    for (w, t) in independent.iter().zip(&sp.triplets) {
        b.add_vertex(w).expect("nonempty label");
        for e in (1..=n).filter(|e| !t.contains(e)) {
            b.add_edge(w, &clique[e - 1]).expect("fresh edge");
        }
    }
    SplitInstance { graph: b.build(), clique, independent }
}

/// Largest subset of the independent side whose clique non-neighborhoods are
/// pairwise disjoint. The witness is the first maximum subset in
/// independent-side order, preferring to include earlier vertices.
pub fn brute_disjointnn(si: &SplitInstance) -> Result<(usize, Vec<String>), ReductionError> {
    if si.independent.len() > DISJOINTNN_CAP {
        return Err(ReductionError::TooLarge { size: si.independent.len(), cap: DISJOINTNN_CAP });
    }
    if si.clique.len() > 128 {
        return Err(ReductionError::TooLarge { size: si.clique.len(), cap: 128 });
    }
    si.require_three_misses()?;
    let mut masks = Vec::with_capacity(si.independent.len());
    for v in &si.independent {
        let mut m = 0u128;
        for miss in si.non_neighbors(v)? {
            let pos = si.clique.iter().position(|c| c == miss).expect("clique member");
            m |= 1 << pos;
        }
        masks.push(m);
    }
    let mut best = Vec::new();
    let mut cur = Vec::new();
    disjoint(&masks, 0, 0, &mut cur, &mut best);
    let witness = best.iter().map(|&i| si.independent[i].clone()).collect();
    Ok((best.len(), witness))
}

fn disjoint(masks: &[u128], i: usize, used: u128, cur: &mut Vec<usize>, best: &mut Vec<usize>) {
    if cur.len() > best.len() {
        *best = cur.clone();
    }
    if i == masks.len() || cur.len() + (masks.len() - i) <= best.len() {
        return;
    }
    if masks[i] & used == 0 {
        cur.push(i);
        disjoint(masks, i + 1, used | masks[i], cur, best);
        cur.pop();
    }
    disjoint(masks, i + 1, used, cur, best);
}

/// Value threshold attached to a generated MaxSTC instance with clique
/// side of size `2n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Threshold {
    pub n: usize,
}

impl Threshold {
    /// `n(2n-1) + floor(n/2) + ceil(k/2)`.
    pub fn at(&self, k: usize) -> u64 {
        let n = self.n as u64;
        let k = k as u64;
        n * (2 * n).saturating_sub(1) + n / 2 + k.div_ceil(2)
    }

    /// Rows `(k, threshold)` for `k = 0..=max_k`.
    pub fn table(&self, max_k: usize) -> Vec<(usize, u64)> {
        (0..=max_k).map(|k| (k, self.at(k))).collect()
    }
}

/// Extends a split instance whose independent vertices each miss exactly
/// three clique vertices: adds clique vertices `y1..yn` and independent
/// vertices `x1..xn`, where `yi` is adjacent to everything except `xi` and
/// `xi` is adjacent to the whole clique side except `yi`.
pub fn gen_maxstc_from_disjointnn(si: &SplitInstance) -> Result<(SplitInstance, Threshold), ReductionError> {
    si.verify()?;
    si.require_three_misses()?;
    let n = si.clique.len();
    let ys: Vec<String> = (1..=n).map(|i| format!("y{i}")).collect();
    let xs: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    let mut b = GraphBuilder::new();
    for v in si.graph.labels() {
        b.add_vertex(v)?;
    }
    for (u, v) in si.graph.edge_labels() {
        b.add_edge(&u, &v)?;
    }
    for (i, y) in ys.iter().enumerate() {
        for c in &si.clique {
            b.add_edge(y, c)?;
        }
        for y2 in &ys[i + 1..] {
            b.add_edge(y, y2)?;
        }
        for w in &si.independent {
            b.add_edge(y, w)?;
        }
        for (j, x) in xs.iter().enumerate() {
            if i != j {
                b.add_edge(y, x)?;
            }
        }
    }
    for x in &xs {
        for c in &si.clique {
            b.add_edge(x, c)?;
        }
    }
    let mut clique = si.clique.clone();
    clique.extend(ys);
    let mut independent = si.independent.clone();
    independent.extend(xs);
    let out = SplitInstance::new(b.build(), clique, independent)?;
    Ok((out, Threshold { n }))
}

/// One `k` of a reduction certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertificateRow {
    pub k: usize,
    pub threshold: u64,
    /// MaxSTC optimum of the generated graph reaches the threshold.
    pub optimum_reaches: bool,
    /// A disjoint-non-neighborhood set of size `k` exists.
    pub packing_reaches: bool,
}

impl CertificateRow {
    pub fn holds(&self) -> bool {
        self.optimum_reaches == self.packing_reaches
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionCertificate {
    pub universe: usize,
    pub triplets: usize,
    pub packing: usize,
    pub disjointnn: usize,
    pub optimum: u64,
    pub vertices: usize,
    pub edges: usize,
    pub rows: Vec<CertificateRow>,
}

impl ReductionCertificate {
    pub fn all_hold(&self) -> bool {
        self.rows.iter().all(CertificateRow::holds)
    }

    pub fn failing(&self) -> impl Iterator<Item = &CertificateRow> {
        self.rows.iter().filter(|r| !r.holds())
    }
}

/// Builds both reductions for `sp`, solves everything by brute force and
/// compares optimum-vs-threshold with packing-size-vs-k for every `k` from
/// 0 to the number of triplets.
pub fn certify_reduction(sp: &SetPackingInstance, cap: usize) -> Result<ReductionCertificate, ReductionError> {
    let si = gen_disjointnn_from_3sp(sp);
    si.verify()?;
    let (disjointnn, _) = brute_disjointnn(&si)?;
    let (packing, _) = max_set_packing(sp);
    let (gp, threshold) = gen_maxstc_from_disjointnn(&si)?;
    let h = build_incompat(&gp.graph);
    let (optimum, _) = mwis_value(&h, MwisOptions::with_cap(cap))?;
    let rows = (0..=sp.triplets.len())
        .map(|k| CertificateRow {
            k,
            threshold: threshold.at(k),
            optimum_reaches: optimum >= threshold.at(k),
            packing_reaches: disjointnn >= k,
        })
        .collect();
    Ok(ReductionCertificate {
        universe: sp.universe,
        triplets: sp.triplets.len(),
        packing,
        disjointnn,
        optimum,
        vertices: gp.graph.vertex_count(),
        edges: gp.graph.edge_count(),
        rows,
    })
}

/// A split partition of `g` if one exists. The clique side is a maximum
/// clique chosen by the degree-sequence test, re-verified before returning.
pub fn split_partition(g: &Graph) -> Option<(Vec<String>, Vec<String>)> {
    let n = g.vertex_count();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    let m = (0..n).take_while(|&i| g.degree(by_degree[i]) >= i).count();
    let head: usize = by_degree[..m].iter().map(|&v| g.degree(v)).sum();
    let tail: usize = by_degree[m..].iter().map(|&v| g.degree(v)).sum();
    if head != m * m.saturating_sub(1) + tail {
        return None;
    }
    let mut clique: Vec<usize> = by_degree[..m].to_vec();
    let mut independent: Vec<usize> = by_degree[m..].to_vec();
    clique.sort_unstable();
    independent.sort_unstable();
    let ok_clique = clique.iter().enumerate().all(|(i, &a)| clique[i + 1..].iter().all(|&b| g.has_edge(a, b)));
    let ok_indep =
        independent.iter().enumerate().all(|(i, &a)| independent[i + 1..].iter().all(|&b| !g.has_edge(a, b)));
    if !(ok_clique && ok_indep) {
        return None;
    }
    let names = |s: Vec<usize>| s.into_iter().map(|v| g.label(v).to_string()).collect();
    Some((names(clique), names(independent)))
}

/// An induced `2K2`, `C4` or `C5` (vertex labels in cyclic / matching order),
/// whose absence characterizes split graphs.
pub fn split_obstruction(g: &Graph) -> Option<Vec<String>> {
    let n = g.vertex_count();
    let e = |a: usize, b: usize| g.has_edge(a, b);
    let names = |s: &[usize]| s.iter().map(|&v| g.label(v).to_string()).collect::<Vec<_>>();
    for (a, b) in g.edges() {
        for (c, d) in g.edges() {
            if c <= a || [a, b].contains(&c) || [a, b].contains(&d) {
                continue;
            }
            let cross = [e(a, c), e(a, d), e(b, c), e(b, d)];
            match cross {
                [false, false, false, false] => return Some(names(&[a, b, c, d])),
                // a-b-d-c-a or a-b-c-d-a with the diagonals missing
                [false, true, true, false] => return Some(names(&[a, b, c, d])),
                [true, false, false, true] => return Some(names(&[a, b, d, c])),
                _ => {}
            }
        }
    }
    // induced C5 as a path a-b-c-d plus a vertex closing it
    for (x, y) in g.edges() {
        for (p, q) in [(x, y), (y, x)] {
            for &r in g.neighbor_indices(q) {
                if r == p || e(p, r) {
                    continue;
                }
                for &s in g.neighbor_indices(r) {
                    if s == q || e(s, p) || e(s, q) {
                        continue;
                    }
                    for t in 0..n {
                        if [p, q, r, s].contains(&t) {
                            continue;
                        }
                        if e(t, p) && e(t, s) && !e(t, q) && !e(t, r) {
                            return Some(names(&[p, q, r, s, t]));
                        }
                    }
                }
            }
        }
    }
    None
}

fn numbered(prefix: &str, n: usize) -> Vec<String> {
    let width = n.saturating_sub(1).to_string().len();
    (0..n).map(|i| format!("{prefix}{i:0width$}")).collect()
}

/// Intersection graph of closed intervals `[l, l + len]`.
pub fn unit_interval_graph(lefts: &[i64], len: i64) -> Graph {
    let labels = numbered("v", lefts.len());
    let mut b = GraphBuilder::new();
    for l in &labels {
        b.add_vertex(l).expect("nonempty label");
    }
    for i in 0..lefts.len() {
        for j in i + 1..lefts.len() {
            if (lefts[i] - lefts[j]).abs() <= len {
                b.add_edge(&labels[i], &labels[j]).expect("fresh edge");
            }
        }
    }
    b.build()
}

/// Random unit interval graph on `n` vertices. The seed also picks how
/// spread out the left endpoints are, and hence the density.
pub fn gen_random_proper_interval(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let len = 10i64;
    let spread = rng.gen_range(1..=4i64) * (n as i64).max(1) * len / 4;
    let lefts: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=spread)).collect();
    unit_interval_graph(&lefts, len)
}

/// Random trivially-perfect graph built from single vertices by disjoint
/// union and by adding a universal vertex.
pub fn gen_random_trivially_perfect(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let labels = numbered("t", n);
    let mut b = GraphBuilder::new();
    for l in &labels {
        b.add_vertex(l).expect("nonempty label");
    }
    let ids: Vec<usize> = (0..n).collect();
    tp_rec(&ids, &labels, &mut rng, &mut b);
    b.build()
}

fn tp_rec(ids: &[usize], labels: &[String], rng: &mut ChaCha8Rng, b: &mut GraphBuilder) {
    match ids {
        [] | [_] => {}
        [top, rest @ ..] if rng.gen_bool(0.5) => {
            for &v in rest {
                b.add_edge(&labels[*top], &labels[v]).expect("fresh edge");
            }
            tp_rec(rest, labels, rng, b);
        }
        _ => {
            let cut = rng.gen_range(1..ids.len());
            tp_rec(&ids[..cut], labels, rng, b);
            tp_rec(&ids[cut..], labels, rng, b);
        }
    }
}

/// Random bipartite graph: a random side per vertex, then each cross pair
/// is an edge with probability `p`.
pub fn gen_random_bipartite(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let labels = numbered("b", n);
    let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let mut b = GraphBuilder::new();
    for l in &labels {
        b.add_vertex(l).expect("nonempty label");
    }
    for i in 0..n {
        for j in i + 1..n {
            if side[i] != side[j] && rng.gen_bool(p) {
                b.add_edge(&labels[i], &labels[j]).expect("fresh edge");
            }
        }
    }
    b.build()
}

/// Erdős–Rényi graph `G(n, p)`.
pub fn gen_random_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let labels = numbered("g", n);
    let mut b = GraphBuilder::new();
    for l in &labels {
        b.add_vertex(l).expect("nonempty label");
    }
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                b.add_edge(&labels[i], &labels[j]).expect("fresh edge");
            }
        }
    }
    b.build()
}

/// Copy of `g` where vertex `v` gains `count` true twins labelled
/// `{label}_0..`, for each `(v, count)` in `copies`.
pub fn with_true_twins(g: &Graph, copies: &[(usize, usize)]) -> Graph {
    let mut b = GraphBuilder::new();
    for l in g.labels() {
        b.add_vertex(l).expect("nonempty label");
    }
    for (u, v) in g.edge_labels() {
        b.add_edge(&u, &v).expect("fresh edge");
    }
    for &(v, count) in copies {
        let base = g.label(v);
        for c in 0..count {
            let twin = format!("{base}_{c}");
            b.add_edge(base, &twin).expect("fresh edge");
            for &u in g.neighbor_indices(v) {
                b.add_edge(g.label(u), &twin).expect("fresh edge");
            }
            for prev in 0..c {
                b.add_edge(&format!("{base}_{prev}"), &twin).expect("fresh edge");
            }
        }
    }
    b.build()
}
