//! Simple undirected graphs with string labels and positive vertex weights.
//!
//! Vertices are stored in lexicographic label order, so vertex index order and
//! label order coincide. Every deterministic traversal in the crate relies on
//! that.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge `{0}` - `{1}`")]
    DuplicateEdge(String, String),
    #[error("vertex `{0}` has weight zero")]
    ZeroWeight(String),
    #[error("vertex `{0}` has conflicting weight declarations")]
    ConflictingWeight(String),
    #[error("vertex `{0}` has weight {1}, expected a unit-weight graph")]
    NonUnitWeight(String, u64),
    #[error("empty vertex label")]
    EmptyLabel,
}

/// Incremental construction of a [`Graph`]. Rejects self-loops and repeated
/// edges instead of silently normalizing them.
#[derive(Debug, Default, Clone)]
pub struct GraphBuilder {
    weights: BTreeMap<String, u64>,
    edges: BTreeMap<(String, String), ()>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Declares a unit-weight vertex. Declaring an existing vertex is a no-op.
    pub fn add_vertex(&mut self, label: &str) -> Result<&mut Self, GraphError> {
        if label.is_empty() {
            return Err(GraphError::EmptyLabel);
        }
        self.weights.entry(label.to_string()).or_insert(1);
        Ok(self)
    }

    pub fn add_weighted_vertex(&mut self, label: &str, weight: u64) -> Result<&mut Self, GraphError> {
        if label.is_empty() {
            return Err(GraphError::EmptyLabel);
        }
        if weight == 0 {
            return Err(GraphError::ZeroWeight(label.to_string()));
        }
        match self.weights.get(label) {
            Some(&w) if w != weight => return Err(GraphError::ConflictingWeight(label.to_string())),
            _ => {
                self.weights.insert(label.to_string(), weight);
            }
        }
        Ok(self)
    }

    /// Adds an edge, declaring missing endpoints with unit weight.
    pub fn add_edge(&mut self, u: &str, v: &str) -> Result<&mut Self, GraphError> {
        if u.is_empty() || v.is_empty() {
            return Err(GraphError::EmptyLabel);
        }
        if u == v {
            return Err(GraphError::SelfLoop(u.to_string()));
        }
        let key = canonical_pair(u, v);
        if self.edges.contains_key(&key) {
            return Err(GraphError::DuplicateEdge(key.0, key.1));
        }
        self.add_vertex(u)?;
        self.add_vertex(v)?;
        self.edges.insert(key, ());
        Ok(self)
    }

    pub fn build(&self) -> Graph {
        let labels: Vec<String> = self.weights.keys().cloned().collect();
        let weights: Vec<u64> = self.weights.values().copied().collect();
        let index: BTreeMap<String, usize> =
            labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        let mut adj = vec![Vec::new(); labels.len()];
        for (u, v) in self.edges.keys() {
            let (a, b) = (index[u], index[v]);
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { labels, index, adj, weights, edge_count: self.edges.len() }
    }
}

fn canonical_pair(u: &str, v: &str) -> (String, String) {
    if u <= v {
        (u.to_string(), v.to_string())
    } else {
        (v.to_string(), u.to_string())
    }
}

/// A simple undirected graph. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    labels: Vec<String>,
    index: BTreeMap<String, usize>,
    adj: Vec<Vec<usize>>,
    weights: Vec<u64>,
    edge_count: usize,
}

impl Default for Graph {
    fn default() -> Self {
        GraphBuilder::new().build()
    }
}

impl Graph {
    /// Unit-weight graph from an edge list.
    pub fn from_edges(edges: &[(&str, &str)]) -> Result<Self, GraphError> {
        let mut b = GraphBuilder::new();
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    /// Unit-weight graph from explicit vertices (isolated ones included) and edges.
    pub fn from_parts(vertices: &[&str], edges: &[(&str, &str)]) -> Result<Self, GraphError> {
        let mut b = GraphBuilder::new();
        for v in vertices {
            b.add_vertex(v)?;
        }
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    fn require(&self, label: &str) -> Result<usize, GraphError> {
        self.index_of(label).ok_or_else(|| GraphError::UnknownVertex(label.to_string()))
    }

    pub fn weight(&self, v: usize) -> u64 {
        self.weights[v]
    }

    pub fn weight_of(&self, label: &str) -> Result<u64, GraphError> {
        Ok(self.weights[self.require(label)?])
    }

    pub fn is_unit_weight(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    pub(crate) fn require_unit_weight(&self) -> Result<(), GraphError> {
        match self.weights.iter().position(|&w| w != 1) {
            None => Ok(()),
            Some(v) => Err(GraphError::NonUnitWeight(self.labels[v].clone(), self.weights[v])),
        }
    }

    /// Sorted neighbor indices of `v`.
    pub fn neighbor_indices(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn adjacent(&self, u: &str, v: &str) -> Result<bool, GraphError> {
        Ok(self.has_edge(self.require(u)?, self.require(v)?))
    }

    /// Open neighborhood of `label`, in label order.
    pub fn neighbors(&self, label: &str) -> Result<Vec<&str>, GraphError> {
        let v = self.require(label)?;
        Ok(self.adj[v].iter().map(|&u| self.labels[u].as_str()).collect())
    }

    /// Weight of edge `uv`, the product of its endpoint weights.
    pub fn edge_weight(&self, u: usize, v: usize) -> u64 {
        self.weights[u] * self.weights[v]
    }

    /// All edges as index pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// All edges as canonical label pairs, in lexicographic order.
    pub fn edge_labels(&self) -> Vec<(String, String)> {
        self.edges().map(|(u, v)| (self.labels[u].clone(), self.labels[v].clone())).collect()
    }

    pub fn total_edge_weight(&self) -> u64 {
        self.edges().map(|(u, v)| self.edge_weight(u, v)).sum()
    }

    /// Vertex index sets of the connected components, ordered by smallest index.
    pub fn component_indices(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for &u in &self.adj[v] {
                    if !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn connected_components(&self) -> Vec<Graph> {
        self.component_indices().iter().map(|c| self.induced_by_indices(c)).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.component_indices().len() <= 1
    }

    pub fn induced_subgraph(&self, labels: &[&str]) -> Result<Graph, GraphError> {
        let mut idx = Vec::with_capacity(labels.len());
        for l in labels {
            idx.push(self.require(l)?);
        }
        Ok(self.induced_by_indices(&idx))
    }

    /// Induced subgraph on the given vertex indices (duplicates ignored).
    pub fn induced_by_indices(&self, vertices: &[usize]) -> Graph {
        let mut keep = vec![false; self.vertex_count()];
        for &v in vertices {
            keep[v] = true;
        }
        let mut b = GraphBuilder::new();
        for v in (0..self.vertex_count()).filter(|&v| keep[v]) {
            // weights are already validated
            b.add_weighted_vertex(&self.labels[v], self.weights[v]).expect("valid weight");
        }
        for (u, v) in self.edges() {
            if keep[u] && keep[v] {
                b.add_edge(&self.labels[u], &self.labels[v]).expect("simple subgraph");
            }
        }
        b.build()
    }

    /// Closed neighborhood of `v` as a sorted index list.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut out = self.adj[v].clone();
        let pos = out.binary_search(&v).unwrap_err();
        out.insert(pos, v);
        out
    }

    /// Partition into true-twin classes (equal closed neighborhoods).
    pub fn twin_classes(&self) -> TwinPartition {
        let mut groups: BTreeMap<Vec<usize>, Vec<usize>> = BTreeMap::new();
        for v in 0..self.vertex_count() {
            groups.entry(self.closed_neighborhood(v)).or_default().push(v);
        }
        let mut classes: Vec<Vec<String>> = groups
            .into_values()
            .map(|c| c.into_iter().map(|v| self.labels[v].clone()).collect())
            .collect();
        classes.sort();
        TwinPartition::from_classes(classes)
    }

    /// Keeps one representative per twin class, weighted by class size.
    ///
    /// Requires a unit-weight graph: a weighted vertex already stands for a
    /// contracted class.
    pub fn contract_twins(&self) -> Result<TwinContraction, GraphError> {
        self.require_unit_weight()?;
        let partition = self.twin_classes();
        let mut b = GraphBuilder::new();
        let mut intra_twin_value = 0u64;
        for class in partition.classes() {
            let size = class.len() as u64;
            b.add_weighted_vertex(&class[0], size)?;
            intra_twin_value += size * (size - 1) / 2;
        }
        for (u, v) in self.edges() {
            let (cu, cv) = (partition.class_of(&self.labels[u]), partition.class_of(&self.labels[v]));
            let (cu, cv) = (cu.expect("covered"), cv.expect("covered"));
            if cu < cv {
                let (ru, rv) = (partition.representative(cu), partition.representative(cv));
                if !b.edges.contains_key(&canonical_pair(ru, rv)) {
                    b.add_edge(ru, rv)?;
                }
            }
        }
        Ok(TwinContraction { graph: b.build(), partition, intra_twin_value })
    }
}

/// Partition of the vertex set into true-twin classes. The representative of a
/// class is its lexicographically smallest label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinPartition {
    classes: Vec<Vec<String>>,
    membership: BTreeMap<String, usize>,
}

impl TwinPartition {
    /// Builds a partition from explicit classes; each class is sorted and the
    /// class list is ordered by representative.
    pub fn from_classes(mut classes: Vec<Vec<String>>) -> Self {
        for c in &mut classes {
            c.sort();
        }
        classes.retain(|c| !c.is_empty());
        classes.sort();
        let mut membership = BTreeMap::new();
        for (i, c) in classes.iter().enumerate() {
            for l in c {
                membership.insert(l.clone(), i);
            }
        }
        TwinPartition { classes, membership }
    }

    pub fn classes(&self) -> &[Vec<String>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn representative(&self, class: usize) -> &str {
        &self.classes[class][0]
    }

    pub fn class_of(&self, label: &str) -> Option<usize> {
        self.membership.get(label).copied()
    }

    pub fn representative_of(&self, label: &str) -> Option<&str> {
        self.class_of(label).map(|c| self.representative(c))
    }

    pub fn covered_vertices(&self) -> usize {
        self.membership.len()
    }
}

/// Result of [`Graph::contract_twins`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwinContraction {
    pub graph: Graph,
    pub partition: TwinPartition,
    /// Number of edges inside twin classes, `sum |W| (|W| - 1) / 2`.
    pub intra_twin_value: u64,
}
