//! BFS-layered DAG over a distance ball, with exhaustive shortest-path
//! enumeration by backward walks.
//!
//! Every vertex at layer `i >= 1` keeps at least one predecessor at layer
//! `i - 1`, so every backward branch completes to a layer-0 vertex and each
//! path costs O(depth) after the build. The structure is immutable once
//! built.

use std::collections::HashMap;
use std::ops::ControlFlow;

use crate::graph::{DynGraph, EdgeId, VertexId};

pub struct LayeredDag {
    depth: u32,
    layer: HashMap<u32, u32>,
    /// Ball vertices in BFS order with their layers.
    verts: Vec<(VertexId, u32)>,
    /// Incoming `(edge, predecessor)` lists, populated for layers >= 1.
    preds: HashMap<u32, Vec<(EdgeId, VertexId)>>,
}

impl LayeredDag {
    /// Multi-source BFS truncated at `depth`; the sources form layer 0.
    /// Touches only the ball of radius `depth`.
    pub fn build(g: &mut DynGraph, sources: &[VertexId], depth: u32) -> LayeredDag {
        let mut edges = Vec::new();
        let mut verts = Vec::new();
        g.bfs_edges_within_into(sources, depth, &mut edges, &mut verts);
        let layer: HashMap<u32, u32> = verts.iter().map(|&(v, d)| (v.0, d)).collect();
        let mut preds: HashMap<u32, Vec<(EdgeId, VertexId)>> = HashMap::new();
        for &(e, _) in &edges {
            let (a, b) = g.endpoints(e);
            let (la, lb) = match (layer.get(&a.0), layer.get(&b.0)) {
                (Some(&la), Some(&lb)) => (la, lb),
                _ => continue, // dangles out of the ball; not a forward edge
            };
            if la + 1 == lb {
                preds.entry(b.0).or_default().push((e, a));
            } else if lb + 1 == la {
                preds.entry(a.0).or_default().push((e, b));
            }
        }
        LayeredDag {
            depth,
            layer,
            verts,
            preds,
        }
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn layer_of(&self, v: VertexId) -> Option<u32> {
        self.layer.get(&v.0).copied()
    }

    pub fn vertices(&self) -> &[(VertexId, u32)] {
        &self.verts
    }

    pub(crate) fn preds_of(&self, v: VertexId) -> &[(EdgeId, VertexId)] {
        self.preds.get(&v.0).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Emits every shortest path from a layer-0 vertex to `target`, each as an
    /// edge list of length `depth` ordered source to target, and returns how
    /// many were emitted. The target must sit at the final layer.
    pub fn shortest_paths_to<F>(&self, target: VertexId, mut emit: F) -> (u64, ControlFlow<()>)
    where
        F: FnMut(&[EdgeId]) -> ControlFlow<()>,
    {
        let tl = self.layer_of(target);
        assert_eq!(
            tl,
            Some(self.depth),
            "shortest-path target must lie on the final layer"
        );
        let mut count = 0u64;
        if self.depth == 0 {
            // The empty path: target is itself a source.
            count += 1;
            let flow = emit(&[]);
            return (count, flow);
        }
        // Backward DFS; frames hold the vertex and its predecessor cursor.
        let mut frames: Vec<(VertexId, usize)> = vec![(target, 0)];
        let mut path_rev: Vec<EdgeId> = Vec::with_capacity(self.depth as usize);
        let mut path_fwd: Vec<EdgeId> = Vec::with_capacity(self.depth as usize);
        while let Some(&mut (v, ref mut cursor)) = frames.last_mut() {
            if self.layer_of(v) == Some(0) {
                debug_assert_eq!(path_rev.len(), self.depth as usize);
                count += 1;
                path_fwd.clear();
                path_fwd.extend(path_rev.iter().rev());
                if emit(&path_fwd).is_break() {
                    return (count, ControlFlow::Break(()));
                }
                frames.pop();
                path_rev.pop();
                continue;
            }
            let preds = self.preds_of(v);
            if *cursor < preds.len() {
                let (e, u) = preds[*cursor];
                *cursor += 1;
                path_rev.push(e);
                frames.push((u, 0));
            } else {
                frames.pop();
                path_rev.pop();
            }
        }
        (count, ControlFlow::Continue(()))
    }
}
