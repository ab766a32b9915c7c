//! Exhaustive reference enumerators. These scan raw id combinations with no
//! pruning and share no traversal code with the production enumerators, so
//! they stay independent of the logic they validate. Intended for graphs with
//! roughly n <= 16 / m <= 20.

use std::collections::HashSet;

use itertools::Itertools;

use crate::graph::{DynGraph, EdgeId};

/// Canonical solutions (sorted id lists) with set semantics.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct SolutionSet {
    pub set: HashSet<Vec<u32>>,
}

impl SolutionSet {
    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn contains(&self, ids: &[u32]) -> bool {
        self.set.contains(ids)
    }

    pub fn from_solutions<I: IntoIterator<Item = Vec<u32>>>(iter: I) -> Self {
        SolutionSet {
            set: iter.into_iter().collect(),
        }
    }

    /// Sorted listing, for stable diffs.
    pub fn sorted(&self) -> Vec<Vec<u32>> {
        let mut v: Vec<Vec<u32>> = self.set.iter().cloned().collect();
        v.sort();
        v
    }
}

struct MiniUf {
    parent: Vec<usize>,
}

impl MiniUf {
    fn new(n: usize) -> Self {
        MiniUf {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        true
    }
}

/// All k-subsets of alive vertices whose induced subgraph is connected.
pub fn brute_vertex(g: &DynGraph, k: usize) -> SolutionSet {
    assert!(k >= 1);
    let verts: Vec<u32> = g.vertices().map(|v| v.0).collect();
    let edges: Vec<(u32, u32)> = g
        .edge_ids()
        .map(|e| {
            let (a, b) = g.endpoints(e);
            (a.0, b.0)
        })
        .collect();
    let mut out = HashSet::new();
    for combo in verts.iter().copied().combinations(k) {
        let pos = |x: u32| combo.iter().position(|&c| c == x);
        let mut uf = MiniUf::new(k);
        let mut merged = 1;
        for &(a, b) in &edges {
            if let (Some(i), Some(j)) = (pos(a), pos(b)) {
                if uf.union(i, j) {
                    merged += 1;
                }
            }
        }
        if merged == k {
            let mut ids = combo.clone();
            ids.sort_unstable();
            out.insert(ids);
        }
    }
    SolutionSet { set: out }
}

fn brute_edge_subsets(g: &DynGraph, k: usize, require_acyclic: bool) -> SolutionSet {
    assert!(k >= 1);
    let edges: Vec<(u32, u32, u32)> = g
        .edge_ids()
        .map(|e| {
            let (a, b) = g.endpoints(e);
            (e.0, a.0, b.0)
        })
        .collect();
    let mut out = HashSet::new();
    for combo in edges.iter().copied().combinations(k) {
        // Vertices of the edge-induced subgraph, locally indexed.
        let mut vids: Vec<u32> = combo.iter().flat_map(|&(_, a, b)| [a, b]).collect();
        vids.sort_unstable();
        vids.dedup();
        let mut uf = MiniUf::new(vids.len());
        let mut components = vids.len();
        for &(_, a, b) in &combo {
            let i = vids.binary_search(&a).unwrap();
            let j = vids.binary_search(&b).unwrap();
            if uf.union(i, j) {
                components -= 1;
            }
        }
        let connected = components == 1;
        // A connected subgraph with k edges is acyclic iff it spans k+1
        // vertices.
        let acyclic = vids.len() == k + 1;
        if connected && (!require_acyclic || acyclic) {
            let mut ids: Vec<u32> = combo.iter().map(|&(e, _, _)| e).collect();
            ids.sort_unstable();
            out.insert(ids);
        }
    }
    SolutionSet { set: out }
}

/// All k-subsets of alive edges whose edge-induced subgraph is connected.
pub fn brute_edge(g: &DynGraph, k: usize) -> SolutionSet {
    brute_edge_subsets(g, k, false)
}

/// Connected and acyclic k-edge subsets (trees with k edges).
pub fn brute_subtree(g: &DynGraph, k: usize) -> SolutionSet {
    brute_edge_subsets(g, k, true)
}

/// Line graph of `g`: one vertex per alive edge, adjacency iff the edges
/// share an endpoint. Returns the mapping from line-graph vertex id to the
/// originating edge id (positional).
pub fn line_graph(g: &DynGraph) -> (DynGraph, Vec<EdgeId>) {
    let edge_ids: Vec<EdgeId> = g.edge_ids().collect();
    let line_index: std::collections::HashMap<u32, u32> = edge_ids
        .iter()
        .enumerate()
        .map(|(i, e)| (e.0, i as u32))
        .collect();
    let mut pairs = Vec::new();
    for v in g.vertices() {
        let incident: Vec<u32> = g.incident_edges(v).map(|(e, _)| line_index[&e.0]).collect();
        for i in 0..incident.len() {
            for j in i + 1..incident.len() {
                // Two simple-graph edges share at most one endpoint, so each
                // line-graph edge is generated exactly once.
                pairs.push((incident[i].min(incident[j]), incident[i].max(incident[j])));
            }
        }
    }
    let lg = DynGraph::from_edges(edge_ids.len(), &pairs).expect("line graph is simple");
    (lg, edge_ids)
}
