//! Line-incompatibility graphs, strong/weak labelings and the strong triadic
//! closure check.
//!
//! A set of edges can all be labeled strong exactly when it is independent in
//! the line-incompatibility graph, whose nodes are the edges of the source
//! graph and whose conflicts are the induced `P3`s.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::graph::{Graph, TwinPartition};

/// Canonical edge identifier: `(min label, max label)`.
pub type EdgeKey = (String, String);

pub fn edge_key(u: &str, v: &str) -> EdgeKey {
    if u <= v {
        (u.to_string(), v.to_string())
    } else {
        (v.to_string(), u.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabelingError {
    #[error("edge `{0}` - `{1}` is not an edge of the graph")]
    UnknownEdge(String, String),
    #[error("edge `{0}` - `{1}` is labeled both strong and weak")]
    DoubleLabel(String, String),
    #[error("edge `{0}` - `{1}` carries no label")]
    Unlabeled(String, String),
    #[error("nodes {0} and {1} of the incompatibility graph are in conflict")]
    NotIndependent(usize, usize),
    #[error("node index {0} out of range")]
    UnknownNode(usize),
    #[error("labeling does not match the twin partition: {0}")]
    PartitionMismatch(String),
}

/// The line-incompatibility graph of a source graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncompatGraph {
    nodes: Vec<EdgeKey>,
    endpoints: Vec<(usize, usize)>,
    weights: Vec<u64>,
    adj: Vec<Vec<usize>>,
}

impl IncompatGraph {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[EdgeKey] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> &EdgeKey {
        &self.nodes[i]
    }

    /// Source-graph vertex indices of node `i`.
    pub fn endpoints(&self, i: usize) -> (usize, usize) {
        self.endpoints[i]
    }

    pub fn weight(&self, i: usize) -> u64 {
        self.weights[i]
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.adj[i]
    }

    pub fn in_conflict(&self, i: usize, j: usize) -> bool {
        self.adj[i].binary_search(&j).is_ok()
    }

    pub fn conflict_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Conflicting node pairs `(i, j)` with `i < j`.
    pub fn conflicts(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(i, l)| l.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
    }

    pub fn node_index(&self, key: &EdgeKey) -> Option<usize> {
        self.nodes.binary_search(key).ok()
    }

    /// First conflicting pair inside `set`, if any.
    pub fn find_conflict(&self, set: &[usize]) -> Option<(usize, usize)> {
        let mut member = vec![false; self.node_count()];
        for &i in set {
            member[i] = true;
        }
        for &i in set {
            if let Some(&j) = self.adj[i].iter().find(|&&j| member[j]) {
                return Some((i.min(j), i.max(j)));
            }
        }
        None
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        self.find_conflict(set).is_none()
    }

    /// A plain graph view whose vertices are labeled `u-v`. Node weights are
    /// carried over.
    pub fn to_graph(&self) -> Graph {
        let mut b = crate::graph::GraphBuilder::new();
        let names: Vec<String> = self.nodes.iter().map(|(u, v)| alloc::format!("{u}-{v}")).collect();
        for (i, name) in names.iter().enumerate() {
            b.add_weighted_vertex(name, self.weights[i]).expect("positive weight");
        }
        for (i, j) in self.conflicts() {
            b.add_edge(&names[i], &names[j]).expect("distinct nodes");
        }
        b.build()
    }
}

/// Builds the line-incompatibility graph of `g`. Node `uv` weighs
/// `weight(u) * weight(v)`; nodes are in lexicographic edge order.
pub fn build_incompat(g: &Graph) -> IncompatGraph {
    let endpoints: Vec<(usize, usize)> = g.edges().collect();
    let nodes: Vec<EdgeKey> =
        endpoints.iter().map(|&(u, v)| (g.label(u).to_string(), g.label(v).to_string())).collect();
    let weights = endpoints.iter().map(|&(u, v)| g.edge_weight(u, v)).collect();
    let id: BTreeMap<(usize, usize), usize> =
        endpoints.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let edge_id = |a: usize, b: usize| id[&(a.min(b), a.max(b))];

    let mut adj = vec![Vec::new(); endpoints.len()];
    for center in 0..g.vertex_count() {
        let nb = g.neighbor_indices(center);
        for (x, &a) in nb.iter().enumerate() {
            for &b in &nb[x + 1..] {
                if !g.has_edge(a, b) {
                    let (p, q) = (edge_id(center, a), edge_id(center, b));
                    adj[p].push(q);
                    adj[q].push(p);
                }
            }
        }
    }
    for l in &mut adj {
        l.sort_unstable();
    }
    IncompatGraph { nodes, endpoints, weights, adj }
}

/// A total strong/weak assignment on the edges of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct StrongWeakLabeling {
    pub strong: BTreeSet<EdgeKey>,
    pub weak: BTreeSet<EdgeKey>,
    /// Total weight of the strong edges.
    pub value: u64,
}

impl StrongWeakLabeling {
    /// Labels `strong` strong and every other edge of `g` weak, computing the value.
    pub fn from_strong<I>(g: &Graph, strong: I) -> Result<Self, LabelingError>
    where
        I: IntoIterator<Item = EdgeKey>,
    {
        let mut set = BTreeSet::new();
        let mut value = 0;
        for (u, v) in strong {
            let key = edge_key(&u, &v);
            let (a, b) = match (g.index_of(&key.0), g.index_of(&key.1)) {
                (Some(a), Some(b)) if g.has_edge(a, b) => (a, b),
                _ => return Err(LabelingError::UnknownEdge(key.0, key.1)),
            };
            if set.insert(key) {
                value += g.edge_weight(a, b);
            }
        }
        let weak = g.edge_labels().into_iter().filter(|e| !set.contains(e)).collect();
        Ok(StrongWeakLabeling { strong: set, weak, value })
    }

    pub fn all_weak(g: &Graph) -> Self {
        Self::from_strong(g, core::iter::empty()).expect("no edges given")
    }

    pub fn is_strong(&self, u: &str, v: &str) -> bool {
        self.strong.contains(&edge_key(u, v))
    }
}

/// Outcome of [`validate_stc`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StcCheck {
    Valid,
    /// Strong edges `uv` and `vw` with `uw` missing from the graph.
    Violation(String, String, String),
}

impl StcCheck {
    pub fn is_valid(&self) -> bool {
        matches!(self, StcCheck::Valid)
    }
}

/// Checks that `lab` partitions the edges of `g` and returns the strong
/// adjacency lists (vertex indices).
fn strong_adjacency(g: &Graph, lab: &StrongWeakLabeling) -> Result<Vec<Vec<usize>>, LabelingError> {
    let mut strong_adj = vec![Vec::new(); g.vertex_count()];
    let lookup = |(u, v): &EdgeKey| -> Result<(usize, usize), LabelingError> {
        match (g.index_of(u), g.index_of(v)) {
            (Some(a), Some(b)) if g.has_edge(a, b) => Ok((a, b)),
            _ => Err(LabelingError::UnknownEdge(u.clone(), v.clone())),
        }
    };
    for e in &lab.strong {
        if lab.weak.contains(e) {
            return Err(LabelingError::DoubleLabel(e.0.clone(), e.1.clone()));
        }
        let (a, b) = lookup(e)?;
        strong_adj[a].push(b);
        strong_adj[b].push(a);
    }
    for e in &lab.weak {
        lookup(e)?;
    }
    if lab.strong.len() + lab.weak.len() != g.edge_count() {
        let missing = g
            .edge_labels()
            .into_iter()
            .find(|e| !lab.strong.contains(e) && !lab.weak.contains(e))
            .expect("a missing edge exists");
        return Err(LabelingError::Unlabeled(missing.0, missing.1));
    }
    for l in &mut strong_adj {
        l.sort_unstable();
    }
    Ok(strong_adj)
}

/// Checks the strong triadic closure: for every vertex, its strong
/// neighbors must be pairwise adjacent.
pub fn validate_stc(g: &Graph, lab: &StrongWeakLabeling) -> Result<StcCheck, LabelingError> {
    let strong_adj = strong_adjacency(g, lab)?;
    for (v, nb) in strong_adj.iter().enumerate() {
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                if !g.has_edge(a, b) {
                    return Ok(StcCheck::Violation(
                        g.label(a).to_string(),
                        g.label(v).to_string(),
                        g.label(b).to_string(),
                    ));
                }
            }
        }
    }
    Ok(StcCheck::Valid)
}

/// Value of a labeling recomputed from the graph's edge weights.
pub fn strong_weight(g: &Graph, lab: &StrongWeakLabeling) -> Result<u64, LabelingError> {
    let mut total = 0;
    for (u, v) in &lab.strong {
        let (a, b) = match (g.index_of(u), g.index_of(v)) {
            (Some(a), Some(b)) if g.has_edge(a, b) => (a, b),
            _ => return Err(LabelingError::UnknownEdge(u.clone(), v.clone())),
        };
        total += g.edge_weight(a, b);
    }
    Ok(total)
}

/// Labels the edges of node set `set` strong. Fails unless `set` is
/// independent in `h`.
pub fn labeling_from_independent_set(
    g: &Graph,
    h: &IncompatGraph,
    set: &[usize],
) -> Result<StrongWeakLabeling, LabelingError> {
    if let Some(&bad) = set.iter().find(|&&i| i >= h.node_count()) {
        return Err(LabelingError::UnknownNode(bad));
    }
    if let Some((i, j)) = h.find_conflict(set) {
        return Err(LabelingError::NotIndependent(i, j));
    }
    StrongWeakLabeling::from_strong(g, set.iter().map(|&i| h.node(i).clone()))
}

/// Lifts a labeling of a twin-contracted graph back to the original graph.
///
/// Edges inside a twin class become strong; an edge between two classes is
/// strong iff the edge between their representatives is.
pub fn expand_labeling(
    original: &Graph,
    partition: &TwinPartition,
    contracted: &StrongWeakLabeling,
    intra_twin_value: u64,
) -> Result<StrongWeakLabeling, LabelingError> {
    if partition.covered_vertices() != original.vertex_count() {
        return Err(LabelingError::PartitionMismatch(alloc::format!(
            "partition covers {} vertices, graph has {}",
            partition.covered_vertices(),
            original.vertex_count()
        )));
    }
    let reps: BTreeSet<&str> = (0..partition.len()).map(|c| partition.representative(c)).collect();
    for (u, v) in contracted.strong.iter().chain(contracted.weak.iter()) {
        if !reps.contains(u.as_str()) || !reps.contains(v.as_str()) {
            return Err(LabelingError::PartitionMismatch(alloc::format!(
                "edge `{u}` - `{v}` is not between class representatives"
            )));
        }
    }
    let mut strong = Vec::new();
    for (u, v) in original.edge_labels() {
        let cu = partition.class_of(&u);
        let cv = partition.class_of(&v);
        let (cu, cv) = match (cu, cv) {
            (Some(a), Some(b)) => (a, b),
            _ => {
                return Err(LabelingError::PartitionMismatch(alloc::format!(
                    "edge `{u}` - `{v}` leaves the partition"
                )))
            }
        };
        let keep = cu == cv
            || contracted.is_strong(partition.representative(cu), partition.representative(cv));
        if keep {
            strong.push((u, v));
        }
    }
    let lab = StrongWeakLabeling::from_strong(original, strong)?;
    let expected = contracted.value + intra_twin_value;
    if original.is_unit_weight() && lab.value != expected {
        return Err(LabelingError::PartitionMismatch(alloc::format!(
            "expanded value {} differs from contracted value plus intra-class value {expected}",
            lab.value
        )));
    }
    Ok(lab)
}
