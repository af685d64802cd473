//! Edge-list documents, result documents and labeling files.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use maxstc_core::solvers::SolveResult;
use maxstc_core::{edge_key, EdgeKey, Graph, GraphBuilder, GraphError, StrongWeakLabeling};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Graph { line: usize, source: GraphError },
    #[error("result document: {0}")]
    Json(#[from] serde_json::Error),
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, msg: msg.into() }
}

/// Parses `u v` edge lines, `vertex u` declarations and `#` comments.
pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut b = GraphBuilder::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = body.split_whitespace().collect();
        let res = match tokens.as_slice() {
            ["vertex", u] => b.add_vertex(u).map(|_| ()),
            [u, v] => b.add_edge(u, v).map(|_| ()),
            _ => return Err(syntax(line, format!("expected `u v` or `vertex u`, got `{body}`"))),
        };
        res.map_err(|source| ParseError::Graph { line, source })?;
    }
    Ok(b.build())
}

/// Writes `g` as an edge list: comment lines, then `vertex` lines for
/// isolated vertices, then edges in label order.
pub fn write_edge_list(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        writeln!(out, "# {c}").unwrap();
    }
    for v in (0..g.vertex_count()).filter(|&v| g.degree(v) == 0) {
        writeln!(out, "vertex {}", g.label(v)).unwrap();
    }
    for (u, v) in g.edge_labels() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultDocument {
    pub value: u64,
    pub solver: String,
    pub strong: Vec<[String; 2]>,
    pub weak: Vec<[String; 2]>,
    pub stats: BTreeMap<String, u64>,
}

fn pairs(set: &BTreeSet<EdgeKey>) -> Vec<[String; 2]> {
    set.iter().map(|(u, v)| [u.clone(), v.clone()]).collect()
}

impl ResultDocument {
    pub fn from_result(r: &SolveResult) -> Self {
        ResultDocument {
            value: r.value,
            solver: r.solver.as_str().to_string(),
            strong: pairs(&r.labeling.strong),
            weak: pairs(&r.labeling.weak),
            stats: r.stats.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("plain data serializes");
        s.push('\n');
        s
    }

    pub fn labeling(&self) -> StrongWeakLabeling {
        let keys = |v: &[[String; 2]]| v.iter().map(|[a, b]| edge_key(a, b)).collect();
        StrongWeakLabeling { strong: keys(&self.strong), weak: keys(&self.weak), value: self.value }
    }
}

/// Reads a labeling either as a result document (JSON) or as text lines
/// `strong u v` / `weak u v`. Edges listed twice are a parse error; whether
/// the labeling covers the graph is left to the validator.
pub fn parse_labeling(text: &str) -> Result<StrongWeakLabeling, ParseError> {
    if text.trim_start().starts_with('{') {
        let doc: ResultDocument = serde_json::from_str(text)?;
        let lab = doc.labeling();
        if lab.strong.len() != doc.strong.len() || lab.weak.len() != doc.weak.len() {
            return Err(syntax(0, "result document lists an edge twice"));
        }
        return Ok(lab);
    }
    let mut lab = StrongWeakLabeling::default();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = body.split_whitespace().collect();
        let (target, u, v) = match tokens.as_slice() {
            ["strong", u, v] => (&mut lab.strong, *u, *v),
            ["weak", u, v] => (&mut lab.weak, *u, *v),
            _ => return Err(syntax(line, format!("expected `strong u v` or `weak u v`, got `{body}`"))),
        };
        if !target.insert(edge_key(u, v)) {
            return Err(syntax(line, format!("edge {u} {v} listed twice")));
        }
    }
    Ok(lab)
}

/// Two-column `k threshold` table.
pub fn threshold_table(rows: &[(usize, u64)]) -> String {
    let mut out = String::from("k threshold\n");
    for (k, t) in rows {
        writeln!(out, "{k} {t}").unwrap();
    }
    out
}
