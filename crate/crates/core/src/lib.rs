//! Enumeration of connected induced k-subgraphs (k-graphlets), connected
//! edge-induced k-subgraphs (edge k-graphlets), and acyclic edge k-subgraphs
//! (k-subtrees) of an undirected graph, with amortized per-solution cost
//! independent of graph size and maximum degree.
//!
//! The crate is organized around a single mutable [`graph::DynGraph`] that
//! every recursion edits and rolls back while backtracking. Exhaustive
//! reference implementations live in [`oracle`], synthetic families in
//! [`gen`].

pub mod decompose;
pub mod edge_enum;
pub mod gen;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod sink;
pub mod spdag;
pub mod vertex_enum;

pub use edge_enum::{CheckStats, EdgeMode, EdgeSearch, EdgeSearchOptions};
pub use vertex_enum::VertexSearch;
pub use graph::{Checkpoint, DynGraph, EdgeId, VertexId};
pub use sink::{CapSink, CollectSink, CountSink, FnSink, OutputQueue, Sink};

/// Enumeration mode selector used by the CLI and high-level helpers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Vertex,
    Edge,
    Subtree,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Vertex => "vertex",
            Mode::Edge => "edge",
            Mode::Subtree => "subtree",
        }
    }
}

/// Enumerates all solutions of `g` for the given mode into `sink`, restoring
/// the graph before returning. Panics if the post-run state differs from the
/// pre-run state under canonical serialization.
pub fn enumerate_all(g: &mut graph::DynGraph, k: usize, mode: Mode, sink: &mut dyn Sink) {
    let before = g.canonical_form();
    match mode {
        Mode::Vertex => vertex_enum::enumerate_all(g, k, sink),
        Mode::Edge => {
            edge_enum::enumerate_all(g, k, EdgeSearchOptions::new(EdgeMode::Graphlet), sink);
        }
        Mode::Subtree => {
            edge_enum::enumerate_all(g, k, EdgeSearchOptions::new(EdgeMode::Subtree), sink);
        }
    }
    sink.finish();
    assert!(
        before == g.canonical_form(),
        "enumeration did not restore the graph"
    );
}

/// Reference solution set for the given mode (exhaustive; small graphs only).
pub fn oracle_all(g: &graph::DynGraph, k: usize, mode: Mode) -> oracle::SolutionSet {
    match mode {
        Mode::Vertex => oracle::brute_vertex(g, k),
        Mode::Edge => oracle::brute_edge(g, k),
        Mode::Subtree => oracle::brute_subtree(g, k),
    }
}
