//! Naive binary-partition baseline for edge k-graphlets, used by the
//! benchmark harness as the contrast case: it branches on the first boundary
//! edge and guards emptiness with a full reachability sweep, so its cost per
//! solution grows with the component size instead of staying O(k).

use std::ops::ControlFlow;

use graphlets::graph::{DynGraph, EdgeId, VertexId};
use graphlets::sink::Sink;

struct Naive<'g> {
    g: &'g mut DynGraph,
    k: usize,
    in_edges: Vec<EdgeId>,
    in_member: Vec<bool>,
    vin_count: Vec<u32>,
    vin_verts: Vec<VertexId>,
    emit_buf: Vec<u32>,
    ball_edges: Vec<(EdgeId, u32)>,
    ball_verts: Vec<(VertexId, u32)>,
}

impl<'g> Naive<'g> {
    fn new(g: &'g mut DynGraph, k: usize) -> Self {
        let n = g.n_total();
        let m = g.m_total();
        Naive {
            g,
            k,
            in_edges: Vec::new(),
            in_member: vec![false; m],
            vin_count: vec![0; n],
            vin_verts: Vec::new(),
            emit_buf: Vec::new(),
            ball_edges: Vec::new(),
            ball_verts: Vec::new(),
        }
    }

    fn push_in(&mut self, e: EdgeId) {
        self.in_member[e.index()] = true;
        self.in_edges.push(e);
        let (a, b) = self.g.endpoints(e);
        for v in [a, b] {
            let c = &mut self.vin_count[v.index()];
            if *c == 0 {
                self.vin_verts.push(v);
            }
            *c += 1;
        }
    }

    fn pop_in_to(&mut self, mark: usize) {
        while self.in_edges.len() > mark {
            let e = self.in_edges.pop().unwrap();
            self.in_member[e.index()] = false;
            let (a, b) = self.g.endpoints(e);
            for v in [b, a] {
                let c = &mut self.vin_count[v.index()];
                *c -= 1;
                if *c == 0 {
                    self.vin_verts.pop();
                }
            }
        }
    }

    /// Full component sweep; deliberately not truncated.
    fn component_edge_count(&mut self) -> usize {
        let mut edges = std::mem::take(&mut self.ball_edges);
        let mut verts = std::mem::take(&mut self.ball_verts);
        self.g
            .bfs_edges_within_into(&self.vin_verts, u32::MAX, &mut edges, &mut verts);
        let count = edges.len();
        self.ball_edges = edges;
        self.ball_verts = verts;
        count
    }

    fn first_boundary_edge(&self) -> Option<EdgeId> {
        for &v in &self.vin_verts {
            for (e, _) in self.g.incident_edges(v) {
                if !self.in_member[e.index()] {
                    return Some(e);
                }
            }
        }
        None
    }

    fn rec(&mut self, sink: &mut dyn Sink) -> ControlFlow<()> {
        if self.in_edges.len() == self.k {
            self.emit_buf.clear();
            self.emit_buf.extend(self.in_edges.iter().map(|e| e.0));
            self.emit_buf.sort_unstable();
            return sink.emit(&self.emit_buf);
        }
        let e = match self.first_boundary_edge() {
            Some(e) => e,
            None => return ControlFlow::Continue(()),
        };
        let mark = self.in_edges.len();
        self.push_in(e);
        self.rec(sink)?;
        self.pop_in_to(mark);
        let cp = self.g.checkpoint();
        self.g.delete_edge(e);
        if self.component_edge_count() >= self.k {
            self.rec(sink)?;
        }
        self.g.rollback(cp);
        ControlFlow::Continue(())
    }
}

/// Enumerates all edge k-graphlets by plain binary partition. Output agrees
/// with the main enumerator; only the per-solution cost differs.
pub fn enumerate_all_naive(g: &mut DynGraph, k: usize, sink: &mut dyn Sink) {
    assert!(k >= 1);
    let cp_all = g.checkpoint();
    let edges: Vec<EdgeId> = g.edge_ids().collect();
    let mut search = Naive::new(g, k);
    for seed in edges {
        search.push_in(seed);
        if search.component_edge_count() >= search.k {
            let flow = search.rec(sink);
            if flow.is_break() {
                search.g.rollback(cp_all);
                return;
            }
        }
        search.pop_in_to(0);
        search.g.delete_edge(seed);
    }
    g.rollback(cp_all);
}
