//! Enumeration of k-graphlets: connected subgraphs induced by exactly k
//! vertices.
//!
//! The main routine binary-partitions on a non-mandatory boundary vertex,
//! probing at most two candidates per node with truncated BFS. When both
//! probes are mandatory the component has fewer than 2k vertices and the
//! search falls back to a linear-time variant that absorbs mandatory
//! vertices through a block-cut decomposition.

use std::ops::ControlFlow;

use crate::decompose;
use crate::graph::{DynGraph, VertexId};
use crate::sink::Sink;

enum Boundary {
    None,
    One(VertexId),
    Two(VertexId, VertexId),
}

/// One enumeration instance: the shared graph, the partial solution (the
/// must-include set), and the target order k. Excluded vertices are realized
/// by deletion from the graph.
pub struct VertexSearch<'g> {
    g: &'g mut DynGraph,
    k: usize,
    in_set: Vec<VertexId>,
    in_member: Vec<bool>,
    reach: Vec<VertexId>,
    cand_buf: Vec<VertexId>,
    seen: Vec<u64>,
    seen_epoch: u64,
    emit_buf: Vec<u32>,
}

impl<'g> VertexSearch<'g> {
    pub fn new(g: &'g mut DynGraph, k: usize) -> Self {
        assert!(k >= 1);
        let n = g.n_total();
        VertexSearch {
            g,
            k,
            in_set: Vec::new(),
            in_member: vec![false; n],
            reach: Vec::new(),
            cand_buf: Vec::new(),
            seen: vec![0; n],
            seen_epoch: 0,
            emit_buf: Vec::new(),
        }
    }

    /// Resets the instance to the given seed vertices. The seeds must induce
    /// a connected subgraph (a single vertex always qualifies).
    pub fn start(&mut self, seeds: &[VertexId]) {
        for v in self.in_set.drain(..) {
            self.in_member[v.index()] = false;
        }
        for &v in seeds {
            assert!(self.g.vertex_alive(v));
            if !self.in_member[v.index()] {
                self.in_member[v.index()] = true;
                self.in_set.push(v);
            }
        }
        assert!(!self.in_set.is_empty());
    }

    pub fn in_set(&self) -> &[VertexId] {
        &self.in_set
    }

    pub fn graph_mut(&mut self) -> &mut DynGraph {
        self.g
    }

    /// True iff the component containing the seed set has at least k
    /// vertices; O(min{m, k^2, k * max degree}) via truncated BFS.
    pub fn has_solution(&mut self) -> bool {
        self.g
            .bfs_vertices_limited_into(&self.in_set, self.k, None, &mut self.reach);
        self.reach.len() >= self.k
    }

    /// True iff removing `v` leaves the seed component with at most k - 1
    /// vertices, i.e. every remaining solution must contain `v`.
    pub fn is_mandatory(&mut self, v: VertexId) -> bool {
        debug_assert!(self.g.vertex_alive(v) && !self.in_member[v.index()]);
        self.g
            .bfs_vertices_limited_into(&self.in_set, self.k, Some(v), &mut self.reach);
        self.reach.len() < self.k
    }

    /// All mandatory vertices adjacent to the seed set, read off one
    /// block-cut decomposition of the component.
    pub fn mandatory_adjacent(&mut self) -> Vec<VertexId> {
        let bc = decompose::articulation_points(self.g, self.in_set[0]);
        if bc.component_size < self.k {
            return Vec::new();
        }
        let need = (bc.component_size - self.k) as u32;
        self.seen_epoch += 1;
        let ep = self.seen_epoch;
        let mut out = Vec::new();
        for i in 0..self.in_set.len() {
            let v = self.in_set[i];
            for (_, w) in self.g.incident_edges(v) {
                if self.in_member[w.index()] || self.seen[w.index()] == ep {
                    continue;
                }
                self.seen[w.index()] = ep;
                if bc.cut_away(w) >= need {
                    out.push(w);
                }
            }
        }
        out
    }

    /// Enumerates every k-graphlet containing the seed set (amortized
    /// O(k^2)). The instance must have a solution; on an early stop the
    /// graph is left for the caller's checkpoint to restore.
    pub fn enumerate(&mut self, sink: &mut dyn Sink) -> ControlFlow<()> {
        debug_assert!(self.has_solution());
        self.rec(sink)
    }

    /// Linear-time variant used as the small-component fallback; exposed for
    /// tests and cross-validation.
    pub fn enumerate_linear(&mut self, sink: &mut dyn Sink) -> ControlFlow<()> {
        debug_assert!(self.has_solution());
        self.lin(sink)
    }

    fn push_in(&mut self, v: VertexId) {
        debug_assert!(!self.in_member[v.index()]);
        self.in_member[v.index()] = true;
        self.in_set.push(v);
    }

    fn pop_in_to(&mut self, mark: usize) {
        while self.in_set.len() > mark {
            let v = self.in_set.pop().unwrap();
            self.in_member[v.index()] = false;
        }
    }

    fn emit_current(&mut self, sink: &mut dyn Sink, extra: Option<VertexId>) -> ControlFlow<()> {
        self.emit_buf.clear();
        self.emit_buf.extend(self.in_set.iter().map(|v| v.0));
        if let Some(w) = extra {
            self.emit_buf.push(w.0);
        }
        self.emit_buf.sort_unstable();
        sink.emit(&self.emit_buf)
    }

    /// Emits `In ∪ {w}` for every distinct boundary vertex `w`.
    fn emit_boundary_extensions(&mut self, sink: &mut dyn Sink) -> ControlFlow<()> {
        let mut cand = std::mem::take(&mut self.cand_buf);
        cand.clear();
        self.seen_epoch += 1;
        let ep = self.seen_epoch;
        for i in 0..self.in_set.len() {
            let v = self.in_set[i];
            for (_, w) in self.g.incident_edges(v) {
                if !self.in_member[w.index()] && self.seen[w.index()] != ep {
                    self.seen[w.index()] = ep;
                    cand.push(w);
                }
            }
        }
        let mut flow = ControlFlow::Continue(());
        for &w in &cand {
            flow = self.emit_current(sink, Some(w));
            if flow.is_break() {
                break;
            }
        }
        self.cand_buf = cand;
        flow
    }

    /// First two distinct boundary vertices in incidence-list order.
    fn boundary_upto2(&self) -> Boundary {
        let mut first: Option<VertexId> = None;
        for &v in &self.in_set {
            for (_, w) in self.g.incident_edges(v) {
                if self.in_member[w.index()] {
                    continue;
                }
                match first {
                    None => first = Some(w),
                    Some(f) if f != w => return Boundary::Two(f, w),
                    _ => {}
                }
            }
        }
        match first {
            None => Boundary::None,
            Some(v) => Boundary::One(v),
        }
    }

    fn rec(&mut self, sink: &mut dyn Sink) -> ControlFlow<()> {
        let mark = self.in_set.len();
        let flow = self.rec_inner(sink);
        self.pop_in_to(mark);
        flow
    }

    fn rec_inner(&mut self, sink: &mut dyn Sink) -> ControlFlow<()> {
        if self.in_set.len() == self.k {
            return self.emit_current(sink, None);
        }
        if self.in_set.len() == self.k - 1 {
            return self.emit_boundary_extensions(sink);
        }
        // Follow forced chains: a single boundary vertex must be absorbed.
        let (x, y) = loop {
            match self.boundary_upto2() {
                Boundary::None => {
                    debug_assert!(false, "solvable instance lost its boundary");
                    return ControlFlow::Continue(());
                }
                Boundary::One(v) => {
                    self.push_in(v);
                    if self.in_set.len() == self.k - 1 {
                        return self.emit_boundary_extensions(sink);
                    }
                }
                Boundary::Two(x, y) => break (x, y),
            }
        };
        let z = if !self.is_mandatory(x) {
            x
        } else if !self.is_mandatory(y) {
            y
        } else {
            // Both probes mandatory: the component has < 2k vertices, so the
            // linear algorithm finishes this subtree within the k^2 budget.
            #[cfg(debug_assertions)]
            {
                let reach = self.g.bfs_vertices_limited(&self.in_set, 2 * self.k, None);
                debug_assert!(
                    reach.len() < 2 * self.k,
                    "two mandatory boundary vertices in a large component"
                );
            }
            return self.lin(sink);
        };
        // Solutions containing z.
        let mark_z = self.in_set.len();
        self.push_in(z);
        debug_assert!(self.has_solution());
        self.rec(sink)?;
        self.pop_in_to(mark_z);
        // Solutions avoiding z; z is non-mandatory so this branch is fruitful.
        let cp = self.g.checkpoint();
        self.g.delete_vertex(z);
        debug_assert!(self.has_solution());
        self.rec(sink)?;
        self.g.rollback(cp);
        ControlFlow::Continue(())
    }

    fn lin(&mut self, sink: &mut dyn Sink) -> ControlFlow<()> {
        let mark = self.in_set.len();
        let flow = self.lin_inner(sink);
        self.pop_in_to(mark);
        flow
    }

    fn lin_inner(&mut self, sink: &mut dyn Sink) -> ControlFlow<()> {
        if self.in_set.len() == self.k {
            return self.emit_current(sink, None);
        }
        let bc = decompose::articulation_points(self.g, self.in_set[0]);
        debug_assert!(bc.component_size >= self.k);
        let need = (bc.component_size - self.k) as u32;
        // Absorb mandatory vertices as they become adjacent. One block-cut
        // pass suffices: with the component and k fixed, growing In does not
        // change which vertices are mandatory.
        let mut idx = 0;
        while idx < self.in_set.len() {
            let v = self.in_set[idx];
            idx += 1;
            let mut cand = std::mem::take(&mut self.cand_buf);
            cand.clear();
            for (_, w) in self.g.incident_edges(v) {
                if !self.in_member[w.index()] && bc.cut_away(w) >= need {
                    cand.push(w);
                }
            }
            for &w in &cand {
                if self.in_member[w.index()] {
                    continue;
                }
                self.push_in(w);
                if self.in_set.len() == self.k {
                    self.cand_buf = cand;
                    return self.emit_current(sink, None);
                }
            }
            self.cand_buf = cand;
        }
        // Partition on the first remaining boundary vertex, now non-mandatory.
        let mut pick = None;
        'outer: for i in 0..self.in_set.len() {
            let v = self.in_set[i];
            for (_, w) in self.g.incident_edges(v) {
                if !self.in_member[w.index()] {
                    pick = Some(w);
                    break 'outer;
                }
            }
        }
        let v = pick.expect("solvable instance has a boundary vertex");
        debug_assert!(bc.cut_away(v) < need || need == 0);
        let mark_v = self.in_set.len();
        self.push_in(v);
        self.lin(sink)?;
        self.pop_in_to(mark_v);
        let cp = self.g.checkpoint();
        self.g.delete_vertex(v);
        debug_assert!(self.has_solution());
        self.lin(sink)?;
        self.g.rollback(cp);
        ControlFlow::Continue(())
    }
}

/// Enumerates every k-graphlet that contains the seed set; the caller's
/// graph is left as found. Seeds must induce a connected subgraph.
pub fn enumerate_containing(
    g: &mut DynGraph,
    seeds: &[VertexId],
    k: usize,
    sink: &mut dyn Sink,
) {
    let cp = g.checkpoint();
    let mut search = VertexSearch::new(g, k);
    search.start(seeds);
    if search.in_set().len() > k || !search.has_solution() {
        return;
    }
    if search.enumerate(sink).is_break() {
        search.graph_mut().rollback(cp);
    }
}

/// Enumerates all k-graphlets of the graph, every one exactly once, by
/// seeding instances along a reversed BFS order per connected component and
/// deleting the seed after each instance. The graph is restored on return.
pub fn enumerate_all(g: &mut DynGraph, k: usize, sink: &mut dyn Sink) {
    assert!(k >= 1);
    if k == 1 {
        for vid in 0..g.n_total() as u32 {
            if g.vertex_alive(VertexId(vid)) && sink.emit(&[vid]).is_break() {
                return;
            }
        }
        return;
    }
    let cp_all = g.checkpoint();
    // Reversed BFS order per component: every suffix of the reversed order
    // induces a connected subgraph, so each instance keeps a solution until
    // fewer than k vertices remain.
    let mut assigned = vec![false; g.n_total()];
    let mut orders: Vec<Vec<VertexId>> = Vec::new();
    for vid in 0..g.n_total() as u32 {
        let v = VertexId(vid);
        if !g.vertex_alive(v) || assigned[v.index()] {
            continue;
        }
        let mut comp = g.component_vertices(v);
        for &w in &comp {
            assigned[w.index()] = true;
        }
        comp.reverse();
        orders.push(comp);
    }
    let mut search = VertexSearch::new(g, k);
    for order in &orders {
        if order.len() < k {
            continue;
        }
        for &v in &order[..=order.len() - k] {
            search.start(&[v]);
            debug_assert!(search.has_solution());
            if search.enumerate(sink).is_break() {
                search.graph_mut().rollback(cp_all);
                return;
            }
            search.graph_mut().delete_vertex(v);
        }
    }
    g.rollback(cp_all);
}
