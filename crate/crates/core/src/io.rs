//! Edge-list text format: one edge per line as two whitespace-separated
//! non-negative integer vertex labels; lines starting with `#` are ignored.
//! Duplicate edges and self-loops are rejected with the offending line number.

use std::collections::HashMap;
use std::collections::HashSet;
use std::fs;
use std::path::Path;

use thiserror::Error;

use crate::graph::{DynGraph, VertexId};

#[derive(Error, Debug, PartialEq, Eq)]
pub enum LoadError {
    #[error("line {line}: expected two vertex ids, got {got}")]
    TokenCount { line: usize, got: usize },
    #[error("line {line}: '{token}' is not a non-negative integer")]
    BadToken { line: usize, token: String },
    #[error("line {line}: self-loop on vertex {label}")]
    SelfLoop { line: usize, label: u64 },
    #[error("line {line}: duplicate edge {a} {b}")]
    DuplicateEdge { line: usize, a: u64, b: u64 },
    #[error("cannot read {path}: {reason}")]
    Io { path: String, reason: String },
}

/// A parsed graph plus the mapping from dense internal vertex ids back to the
/// labels that appeared in the input. Internal ids are assigned in order of
/// first appearance; edge ids follow edge-line order.
pub struct LoadedGraph {
    pub graph: DynGraph,
    pub labels: Vec<u64>,
}

impl std::fmt::Debug for LoadedGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("LoadedGraph")
            .field("n", &self.graph.n_live())
            .field("m", &self.graph.m_live())
            .finish()
    }
}

impl LoadedGraph {
    pub fn label_of(&self, v: VertexId) -> u64 {
        self.labels[v.index()]
    }
}

pub fn parse_edge_list(text: &str) -> Result<LoadedGraph, LoadError> {
    let mut labels: Vec<u64> = Vec::new();
    let mut index_of: HashMap<u64, u32> = HashMap::new();
    let mut seen: HashSet<(u32, u32)> = HashSet::new();
    let mut pairs: Vec<(u32, u32)> = Vec::new();

    let mut intern = |label: u64, labels: &mut Vec<u64>| -> u32 {
        *index_of.entry(label).or_insert_with(|| {
            labels.push(label);
            (labels.len() - 1) as u32
        })
    };

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(LoadError::TokenCount {
                line,
                got: tokens.len(),
            });
        }
        let mut ends = [0u64; 2];
        for (slot, tok) in ends.iter_mut().zip(&tokens) {
            *slot = tok.parse().map_err(|_| LoadError::BadToken {
                line,
                token: tok.to_string(),
            })?;
        }
        if ends[0] == ends[1] {
            return Err(LoadError::SelfLoop {
                line,
                label: ends[0],
            });
        }
        let a = intern(ends[0], &mut labels);
        let b = intern(ends[1], &mut labels);
        if !seen.insert((a.min(b), a.max(b))) {
            return Err(LoadError::DuplicateEdge {
                line,
                a: ends[0],
                b: ends[1],
            });
        }
        pairs.push((a, b));
    }

    let graph = DynGraph::from_edges(labels.len(), &pairs)
        .expect("parser pre-validates loops and duplicates");
    Ok(LoadedGraph { graph, labels })
}

pub fn load_path(path: &Path) -> Result<LoadedGraph, LoadError> {
    let text = fs::read_to_string(path).map_err(|e| LoadError::Io {
        path: path.display().to_string(),
        reason: e.to_string(),
    })?;
    parse_edge_list(&text)
}
