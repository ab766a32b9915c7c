//! Enumeration of edge k-graphlets (connected subgraphs induced by exactly k
//! edges) and k-subtrees (the acyclic ones).
//!
//! The recursion keeps each instance trimmed: edges unreachable within the
//! remaining budget are deleted and mandatory edges adjacent to the partial
//! solution are absorbed (a bridge is mandatory when its loss exceeds
//! `|E| - k`). Solutions through an edge at the exact budget horizon are
//! split off as shortest-path enumerations, the far edges are deleted, and
//! the remainder is binary-partitioned on a non-heavy boundary edge, so that
//! child instances keep at least half the edges of the parent.
//!
//! In subtree mode, any edge whose endpoints both touch the partial solution
//! would close a cycle and is deleted up front; far candidates are filtered
//! for acyclicity before emission.

use std::ops::ControlFlow;

use crate::decompose;
use crate::graph::{Checkpoint, DynGraph, EdgeId, VertexId};
use crate::sink::Sink;
use crate::spdag::LayeredDag;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeMode {
    Graphlet,
    Subtree,
}

#[derive(Clone, Copy, Debug)]
pub struct EdgeSearchOptions {
    pub mode: EdgeMode,
    /// Re-derive and record the trimming and heavy-edge invariants at
    /// every step. Slow; meant for instrumented test runs.
    pub verify: bool,
}

impl EdgeSearchOptions {
    pub fn new(mode: EdgeMode) -> Self {
        EdgeSearchOptions {
            mode,
            verify: false,
        }
    }

    pub fn verified(mode: EdgeMode) -> Self {
        EdgeSearchOptions { mode, verify: true }
    }
}

/// Counters and violation log from an instrumented run. A violation entry
/// means one of the trimming or heavy-edge invariants failed to hold; tests
/// assert the list stays empty.
#[derive(Clone, Debug, Default)]
pub struct CheckStats {
    pub far_retrim_checks: u64,
    pub include_trim_checks: u64,
    pub exclude_trim_checks: u64,
    pub absorb_stability_checks: u64,
    pub heavy_scans: u64,
    pub violations: Vec<String>,
}

impl CheckStats {
    fn violate(&mut self, msg: String) {
        if self.violations.len() < 32 {
            self.violations.push(msg);
        }
    }
}

/// Result of one trimming pass.
#[derive(Clone, Copy, Debug)]
pub struct TrimOutcome {
    /// Marker taken before the pass; rolling back to it undoes the removals.
    pub checkpoint: Checkpoint,
    /// Edges absorbed into the partial solution.
    pub absorbed: usize,
    /// Edges deleted (budget-unreachable, plus cycle closers in subtree mode).
    pub removed: usize,
    /// Live edges of the instance component after the pass.
    pub surviving: usize,
    /// False when the instance provably has no solution.
    pub solvable: bool,
}

/// One enumeration instance over the shared graph: the partial solution (a
/// connected edge set), its vertex support, the target k, and the mode.
/// Excluded edges are realized by deletion.
pub struct EdgeSearch<'g> {
    g: &'g mut DynGraph,
    k: usize,
    mode: EdgeMode,
    verify: bool,
    in_edges: Vec<EdgeId>,
    in_member: Vec<bool>,
    vin_count: Vec<u32>,
    vin_verts: Vec<VertexId>,
    m_inst: usize,
    pub stats: CheckStats,
    ball_edges: Vec<(EdgeId, u32)>,
    ball_verts: Vec<(VertexId, u32)>,
    scratch_edges: Vec<EdgeId>,
    gamma_buf: Vec<EdgeId>,
    far_buf: Vec<EdgeId>,
    emit_buf: Vec<u32>,
    vtmp: Vec<u32>,
    eseen: Vec<u64>,
    eseen_epoch: u64,
}

impl<'g> EdgeSearch<'g> {
    pub fn new(g: &'g mut DynGraph, k: usize, opts: EdgeSearchOptions) -> Self {
        assert!(k >= 1);
        let n = g.n_total();
        let m = g.m_total();
        EdgeSearch {
            g,
            k,
            mode: opts.mode,
            verify: opts.verify,
            in_edges: Vec::new(),
            in_member: vec![false; m],
            vin_count: vec![0; n],
            vin_verts: Vec::new(),
            m_inst: 0,
            stats: CheckStats::default(),
            ball_edges: Vec::new(),
            ball_verts: Vec::new(),
            scratch_edges: Vec::new(),
            gamma_buf: Vec::new(),
            far_buf: Vec::new(),
            emit_buf: Vec::new(),
            vtmp: Vec::new(),
            eseen: vec![0; m],
            eseen_epoch: 0,
        }
    }

    pub fn start(&mut self, seed: EdgeId) {
        self.start_with(&[seed]);
    }

    /// Resets the instance to the given seed edges, which must induce a
    /// connected subgraph (acyclic in subtree mode).
    pub fn start_with(&mut self, seeds: &[EdgeId]) {
        self.pop_in_to(0);
        for &e in seeds {
            assert!(self.g.edge_alive(e));
            if !self.in_member[e.index()] {
                self.push_in(e);
            }
        }
        assert!(!self.in_edges.is_empty());
        self.m_inst = 0;
    }

    pub fn in_edges(&self) -> &[EdgeId] {
        &self.in_edges
    }

    pub fn solution_vertices(&self) -> &[VertexId] {
        &self.vin_verts
    }

    /// Component edge count as of the last trim.
    pub fn instance_edges(&self) -> usize {
        self.m_inst
    }

    pub fn graph_mut(&mut self) -> &mut DynGraph {
        self.g
    }

    fn push_in(&mut self, e: EdgeId) {
        debug_assert!(!self.in_member[e.index()] && self.g.edge_alive(e));
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
                    let popped = self.vin_verts.pop().unwrap();
                    debug_assert_eq!(popped, v);
                }
            }
        }
    }

    /// Trimming pass: delete budget-unreachable edges, then absorb mandatory
    /// edges adjacent to the solution's vertices until none remain. Subtree
    /// mode interleaves cycle-closer deletion and iterates to a fixpoint.
    pub fn trim(&mut self) -> TrimOutcome {
        let cp = self.g.checkpoint();
        let in_before = self.in_edges.len();
        let mut removed_total = 0usize;
        let mut expect_stable = false;
        loop {
            debug_assert!(self.in_edges.len() <= self.k);
            if self.in_edges.len() == self.k {
                self.m_inst = self.k;
                return self.outcome(cp, in_before, removed_total, true);
            }
            if self.mode == EdgeMode::Subtree {
                removed_total += self.delete_cycle_closers();
            }
            let budget = (self.k - self.in_edges.len()) as u32;
            let removed = self.remove_unnecessary(budget);
            removed_total += removed;
            if expect_stable && removed > 0 {
                self.stats.violate(format!(
                    "absorption produced {removed} newly unreachable edges"
                ));
            }
            if self.m_inst < self.k {
                return self.outcome(cp, in_before, removed_total, false);
            }
            if self.m_inst == self.k {
                let ok = self.absorb_entire_component();
                return self.outcome(cp, in_before, removed_total, ok);
            }
            let absorbed = self.absorb_mandatory();
            if absorbed == 0 || self.in_edges.len() == self.k {
                return self.outcome(cp, in_before, removed_total, true);
            }
            if self.mode == EdgeMode::Graphlet {
                if !self.verify {
                    // Absorbing mandatory edges cannot push other edges out
                    // of budget, so a single pass suffices.
                    return self.outcome(cp, in_before, removed_total, true);
                }
                self.stats.absorb_stability_checks += 1;
                expect_stable = true;
            }
        }
    }

    fn outcome(
        &self,
        checkpoint: Checkpoint,
        in_before: usize,
        removed: usize,
        solvable: bool,
    ) -> TrimOutcome {
        TrimOutcome {
            checkpoint,
            absorbed: self.in_edges.len() - in_before,
            removed,
            surviving: self.m_inst,
            solvable,
        }
    }

    /// BFS from the solution vertices to the budget depth. Edges whose
    /// nearer endpoint sits exactly at the horizon are deleted; deeper edges
    /// lose their last connection at the same time and drop out of the
    /// instance without being touched. Updates the component edge count.
    fn remove_unnecessary(&mut self, budget: u32) -> usize {
        let mut edges = std::mem::take(&mut self.ball_edges);
        let mut verts = std::mem::take(&mut self.ball_verts);
        self.g
            .bfs_edges_within_into(&self.vin_verts, budget, &mut edges, &mut verts);
        let mut removed = 0;
        let mut kept = 0;
        for &(e, d) in &edges {
            if d >= budget && !self.in_member[e.index()] {
                self.g.delete_edge(e);
                removed += 1;
            } else {
                kept += 1;
            }
        }
        edges.retain(|&(e, d)| d < budget || self.in_member[e.index()]);
        self.m_inst = kept;
        self.ball_edges = edges;
        self.ball_verts = verts;
        removed
    }

    /// Deletes alive non-solution edges with both endpoints inside the
    /// solution's vertex set (subtree mode only; such edges close cycles).
    fn delete_cycle_closers(&mut self) -> usize {
        let mut found = std::mem::take(&mut self.scratch_edges);
        found.clear();
        for i in 0..self.vin_verts.len() {
            let v = self.vin_verts[i];
            for (e, w) in self.g.incident_edges(v) {
                if !self.in_member[e.index()] && self.vin_count[w.index()] > 0 && v.0 < w.0 {
                    found.push(e);
                }
            }
        }
        let removed = found.len();
        for &e in &found {
            self.g.delete_edge(e);
        }
        self.scratch_edges = found;
        removed
    }

    /// The component has exactly k edges left, so all of them are mandatory.
    /// Returns false when the forced solution is invalid (cyclic, subtree
    /// mode).
    fn absorb_entire_component(&mut self) -> bool {
        let mut edges = std::mem::take(&mut self.ball_edges);
        for &(e, _) in &edges {
            if !self.in_member[e.index()] {
                self.push_in(e);
            }
        }
        edges.clear();
        self.ball_edges = edges;
        debug_assert_eq!(self.in_edges.len(), self.k);
        self.mode == EdgeMode::Graphlet || self.vin_verts.len() == self.k + 1
    }

    /// Flags bridges whose loss exceeds `|E| - k` and absorbs the flagged
    /// ones as they become adjacent to the solution's vertex set (newly
    /// absorbed edges extend the scan). Mandatory status is stable while the
    /// component and k are fixed, so one bridge scan suffices.
    fn absorb_mandatory(&mut self) -> usize {
        debug_assert!(self.m_inst > self.k);
        // Root the bridge scan at the lowest-id solution vertex; any
        // solution vertex gives the same losses for non-solution bridges.
        let root = *self.vin_verts.iter().min().unwrap();
        let scan = decompose::scan_bridges(self.g, root);
        debug_assert_eq!(scan.component_edges as usize, self.m_inst);
        let slack = (self.m_inst - self.k) as u64;
        self.eseen_epoch += 1;
        let ep = self.eseen_epoch;
        let mut any = false;
        for b in &scan.bridges {
            if b.loss > slack && !self.in_member[b.edge.index()] {
                self.eseen[b.edge.index()] = ep;
                any = true;
            }
        }
        if !any {
            return 0;
        }
        let mut absorbed = 0;
        let mut idx = 0;
        while idx < self.vin_verts.len() && self.in_edges.len() < self.k {
            let v = self.vin_verts[idx];
            idx += 1;
            let mut found = std::mem::take(&mut self.scratch_edges);
            found.clear();
            for (e, _) in self.g.incident_edges(v) {
                if self.eseen[e.index()] == ep && !self.in_member[e.index()] {
                    found.push(e);
                }
            }
            for &e in &found {
                if self.in_member[e.index()] || self.in_edges.len() == self.k {
                    continue;
                }
                self.push_in(e);
                absorbed += 1;
            }
            self.scratch_edges = found;
        }
        absorbed
    }

    /// Far edges of the current instance: alive edges whose distance from
    /// the solution vertices is exactly `k - |In| - 1`, read off a layered
    /// BFS of that depth. Requires `|In| <= k - 2`.
    pub fn far_edges(&mut self) -> Vec<EdgeId> {
        assert!(self.in_edges.len() + 2 <= self.k);
        let l = (self.k - self.in_edges.len() - 1) as u32;
        let dag = LayeredDag::build(&mut *self.g, &self.vin_verts, l);
        self.collect_far(&dag);
        self.far_buf.clone()
    }

    fn collect_far(&mut self, dag: &LayeredDag) {
        let l = dag.depth();
        self.far_buf.clear();
        for &(v, layer) in dag.vertices() {
            if layer != l {
                continue;
            }
            for (e, w) in self.g.incident_edges(v) {
                match dag.layer_of(w) {
                    None => self.far_buf.push(e),
                    Some(lw) if lw == l && v.0 < w.0 => self.far_buf.push(e),
                    _ => {}
                }
            }
        }
    }

    /// Enumerates every solution containing a far edge: the solution is the
    /// in-set plus one shortest path from the solution vertices to a far
    /// endpoint plus the far edge itself. Returns how many were emitted
    /// (subtree mode filters cyclic candidates first).
    pub fn enumerate_far_solutions(&mut self, sink: &mut dyn Sink) -> u64 {
        assert!(self.in_edges.len() + 2 <= self.k);
        let l = (self.k - self.in_edges.len() - 1) as u32;
        let dag = LayeredDag::build(&mut *self.g, &self.vin_verts, l);
        self.collect_far(&dag);
        let (count, _) = self.emit_far(&dag, sink);
        count
    }

    fn emit_far(&mut self, dag: &LayeredDag, sink: &mut dyn Sink) -> (u64, ControlFlow<()>) {
        let l = dag.depth();
        let mut emitted = 0u64;
        for fi in 0..self.far_buf.len() {
            let fe = self.far_buf[fi];
            let (a, b) = self.g.endpoints(fe);
            for w in [a, b] {
                if dag.layer_of(w) != Some(l) {
                    continue;
                }
                let (_, flow) = dag.shortest_paths_to(w, |path| {
                    let (did_emit, flow) = self.emit_far_candidate(path, fe, sink);
                    if did_emit {
                        emitted += 1;
                    }
                    flow
                });
                if flow.is_break() {
                    return (emitted, ControlFlow::Break(()));
                }
            }
        }
        (emitted, ControlFlow::Continue(()))
    }

    fn emit_far_candidate(
        &mut self,
        path: &[EdgeId],
        fe: EdgeId,
        sink: &mut dyn Sink,
    ) -> (bool, ControlFlow<()>) {
        if self.mode == EdgeMode::Subtree {
            // A tree with k edges spans exactly k + 1 vertices.
            self.vtmp.clear();
            for e in self
                .in_edges
                .iter()
                .chain(path.iter())
                .chain(std::iter::once(&fe))
            {
                let (x, y) = self.g.endpoints(*e);
                self.vtmp.push(x.0);
                self.vtmp.push(y.0);
            }
            self.vtmp.sort_unstable();
            self.vtmp.dedup();
            if self.vtmp.len() != self.k + 1 {
                return (false, ControlFlow::Continue(()));
            }
        }
        self.emit_buf.clear();
        self.emit_buf.extend(self.in_edges.iter().map(|e| e.0));
        self.emit_buf.extend(path.iter().map(|e| e.0));
        self.emit_buf.push(fe.0);
        self.emit_buf.sort_unstable();
        debug_assert_eq!(self.emit_buf.len(), self.k);
        (true, sink.emit(&self.emit_buf))
    }

    /// Distinct boundary edges (incident to a solution vertex, outside the
    /// solution) in deterministic incidence order.
    fn collect_gamma(&mut self) {
        self.gamma_buf.clear();
        self.eseen_epoch += 1;
        let ep = self.eseen_epoch;
        for i in 0..self.vin_verts.len() {
            let v = self.vin_verts[i];
            for (e, _) in self.g.incident_edges(v) {
                if !self.in_member[e.index()] && self.eseen[e.index()] != ep {
                    self.eseen[e.index()] = ep;
                    self.gamma_buf.push(e);
                }
            }
        }
    }

    /// Boundary edges; exposed for tests.
    pub fn boundary_edges(&mut self) -> Vec<EdgeId> {
        self.collect_gamma();
        self.gamma_buf.clone()
    }

    /// Deletes `e`, counts the edges still reachable within the remaining
    /// budget, restores `e`. Heavy means at least half the component's edges
    /// would drop out.
    pub fn is_heavy(&mut self, e: EdgeId) -> bool {
        debug_assert!(self.in_edges.len() + 2 <= self.k);
        debug_assert!(!self.in_member[e.index()]);
        let budget = (self.k - self.in_edges.len()) as u32;
        let cp = self.g.checkpoint();
        self.g.delete_edge(e);
        let mut edges = std::mem::take(&mut self.ball_edges);
        let mut verts = std::mem::take(&mut self.ball_verts);
        self.g
            .bfs_edges_within_into(&self.vin_verts, budget, &mut edges, &mut verts);
        let reachable = edges.iter().filter(|&&(_, d)| d < budget).count();
        self.ball_edges = edges;
        self.ball_verts = verts;
        self.g.rollback(cp);
        let unnecessary = self.m_inst - 1 - reachable;
        2 * unnecessary >= self.m_inst
    }

    fn pick_non_heavy(&mut self) -> Option<EdgeId> {
        if self.verify {
            // Probe the whole boundary to validate the at-most-one-heavy
            // property rather than stopping at the first non-heavy edge.
            self.stats.heavy_scans += 1;
            let mut heavy = 0usize;
            let mut first_non_heavy = None;
            for i in 0..self.gamma_buf.len() {
                let e = self.gamma_buf[i];
                if self.is_heavy(e) {
                    heavy += 1;
                } else if first_non_heavy.is_none() {
                    first_non_heavy = Some(e);
                }
            }
            if heavy > 1 {
                self.stats
                    .violate(format!("{heavy} heavy boundary edges in one instance"));
            }
            if first_non_heavy.is_none() {
                self.stats
                    .violate("boundary with no non-heavy edge".to_string());
            }
            first_non_heavy.or_else(|| self.gamma_buf.first().copied())
        } else {
            let mut probes = 0;
            for i in 0..self.gamma_buf.len() {
                let e = self.gamma_buf[i];
                probes += 1;
                if !self.is_heavy(e) {
                    debug_assert!(probes <= 2, "more than one heavy boundary edge");
                    return Some(e);
                }
            }
            None
        }
    }

    /// Enumerates all solutions of the current instance. The instance must
    /// have been trimmed (`trim` returned solvable). On an early stop the
    /// graph is left for the caller's checkpoint to restore.
    pub fn enumerate(&mut self, sink: &mut dyn Sink) -> ControlFlow<()> {
        debug_assert!(self.m_inst >= self.k);
        self.rec(sink)
    }

    fn rec(&mut self, sink: &mut dyn Sink) -> ControlFlow<()> {
        let mark = self.in_edges.len();
        let cp = self.g.checkpoint();
        let m_entry = self.m_inst;
        let flow = self.rec_inner(sink);
        if flow.is_continue() {
            self.g.rollback(cp);
            self.m_inst = m_entry;
        }
        self.pop_in_to(mark);
        flow
    }

    fn rec_inner(&mut self, sink: &mut dyn Sink) -> ControlFlow<()> {
        if self.in_edges.len() == self.k {
            return self.emit_in_plus(sink, None);
        }
        if self.in_edges.len() == self.k - 1 {
            return self.emit_gamma_extensions(sink);
        }
        let l = (self.k - self.in_edges.len() - 1) as u32;
        let dag = LayeredDag::build(&mut *self.g, &self.vin_verts, l);
        self.collect_far(&dag);
        if !self.far_buf.is_empty() {
            let (_, flow) = self.emit_far(&dag, sink);
            flow?;
            let far_count = self.far_buf.len();
            for i in 0..far_count {
                let e = self.far_buf[i];
                self.g.delete_edge(e);
            }
            self.m_inst -= far_count;
            if self.m_inst < self.k {
                return ControlFlow::Continue(());
            }
            let out = self.trim();
            if self.verify && self.mode == EdgeMode::Graphlet {
                self.stats.far_retrim_checks += 1;
                if out.removed > 0 {
                    self.stats.violate(format!(
                        "far-edge removal made {} more edges unreachable",
                        out.removed
                    ));
                }
            }
            if !out.solvable {
                return ControlFlow::Continue(());
            }
            // Same node, reduced instance: redo base cases and far handling
            // at the new budget. Deletions are covered by this frame's
            // checkpoint.
            return self.rec_inner(sink);
        }
        // Trimmed and far-free: binary partition on a non-heavy boundary edge.
        self.collect_gamma();
        debug_assert!(self.gamma_buf.len() >= 2);
        let e = match self.pick_non_heavy() {
            Some(e) => e,
            None => {
                debug_assert!(false, "trimmed instance with no non-heavy edge");
                return ControlFlow::Continue(());
            }
        };
        let m_here = self.m_inst;
        let mark = self.in_edges.len();

        // Solutions containing e.
        let cp_inc = self.g.checkpoint();
        self.push_in(e);
        let out = self.trim();
        if self.verify && self.mode == EdgeMode::Graphlet {
            self.stats.include_trim_checks += 1;
            if out.removed > 0 {
                self.stats.violate(format!(
                    "including a boundary edge made {} edges unreachable",
                    out.removed
                ));
            }
        }
        if out.solvable {
            self.rec(sink)?;
        }
        self.g.rollback(cp_inc);
        self.pop_in_to(mark);
        self.m_inst = m_here;

        // Solutions avoiding e.
        let cp_exc = self.g.checkpoint();
        self.g.delete_edge(e);
        self.m_inst -= 1;
        let out = self.trim();
        if self.verify && self.mode == EdgeMode::Graphlet {
            self.stats.exclude_trim_checks += 1;
            // Non-heavy: at least half the edges survive (floor for odd
            // counts, straight from the heaviness threshold).
            if 2 * out.surviving + 1 < m_here {
                self.stats.violate(format!(
                    "excluding a non-heavy edge kept only {} of {} edges",
                    out.surviving, m_here
                ));
            }
        }
        if out.solvable {
            self.rec(sink)?;
        }
        self.g.rollback(cp_exc);
        self.pop_in_to(mark);
        self.m_inst = m_here;
        ControlFlow::Continue(())
    }

    fn emit_in_plus(&mut self, sink: &mut dyn Sink, extra: Option<EdgeId>) -> ControlFlow<()> {
        debug_assert!(
            self.mode == EdgeMode::Graphlet
                || extra.is_some()
                || self.vin_verts.len() == self.k + 1,
            "subtree emission must be acyclic"
        );
        self.emit_buf.clear();
        self.emit_buf.extend(self.in_edges.iter().map(|e| e.0));
        if let Some(f) = extra {
            self.emit_buf.push(f.0);
        }
        self.emit_buf.sort_unstable();
        sink.emit(&self.emit_buf)
    }

    /// Base case `|In| = k - 1`: every boundary edge completes a solution.
    fn emit_gamma_extensions(&mut self, sink: &mut dyn Sink) -> ControlFlow<()> {
        self.collect_gamma();
        let mut flow = ControlFlow::Continue(());
        for i in 0..self.gamma_buf.len() {
            let f = self.gamma_buf[i];
            if self.mode == EdgeMode::Subtree {
                let (a, b) = self.g.endpoints(f);
                if self.vin_count[a.index()] > 0 && self.vin_count[b.index()] > 0 {
                    continue; // would close a cycle
                }
            }
            flow = self.emit_in_plus(sink, Some(f));
            if flow.is_break() {
                break;
            }
        }
        flow
    }
}

/// Enumerates every solution that contains the seed edges. Trims first; the
/// caller's graph is restored before returning.
pub fn enumerate_containing(
    g: &mut DynGraph,
    seeds: &[EdgeId],
    k: usize,
    opts: EdgeSearchOptions,
    sink: &mut dyn Sink,
) -> CheckStats {
    let cp = g.checkpoint();
    let mut search = EdgeSearch::new(g, k, opts);
    search.start_with(seeds);
    if search.in_edges().len() <= k {
        let out = search.trim();
        if out.solvable {
            let _ = search.enumerate(sink);
        }
    }
    search.graph_mut().rollback(cp);
    std::mem::take(&mut search.stats)
}

/// Enumerates all edge k-graphlets (or k-subtrees) of the graph, every one
/// exactly once: instances are seeded along a reversed BFS order of the
/// edges per connected component, trimmed, enumerated, and the seed edge is
/// deleted before moving on. The graph is restored on return.
pub fn enumerate_all(
    g: &mut DynGraph,
    k: usize,
    opts: EdgeSearchOptions,
    sink: &mut dyn Sink,
) -> CheckStats {
    assert!(k >= 1);
    let cp_all = g.checkpoint();
    let orders = reversed_bfs_edge_orders(g);
    let mut search = EdgeSearch::new(g, k, opts);
    for order in &orders {
        if order.len() < k {
            continue;
        }
        for &seed in &order[..=order.len() - k] {
            search.start(seed);
            let cp_inst = search.graph_mut().checkpoint();
            let out = search.trim();
            debug_assert!(out.solvable || opts.mode == EdgeMode::Subtree);
            if out.solvable && search.enumerate(sink).is_break() {
                search.graph_mut().rollback(cp_all);
                return std::mem::take(&mut search.stats);
            }
            search.graph_mut().rollback(cp_inst);
            search.graph_mut().delete_edge(seed);
        }
    }
    search.graph_mut().rollback(cp_all);
    std::mem::take(&mut search.stats)
}

/// Per component: edges in reversed BFS discovery order, so every suffix
/// induces a connected subgraph.
fn reversed_bfs_edge_orders(g: &mut DynGraph) -> Vec<Vec<EdgeId>> {
    let mut assigned = vec![false; g.n_total()];
    let mut orders = Vec::new();
    for vid in 0..g.n_total() as u32 {
        let root = VertexId(vid);
        if !g.vertex_alive(root) || assigned[root.index()] {
            continue;
        }
        let stamp = g.next_stamp();
        let mut verts = vec![root];
        assigned[root.index()] = true;
        let mut edge_order: Vec<EdgeId> = Vec::new();
        let mut qi = 0;
        while qi < verts.len() {
            let v = verts[qi];
            qi += 1;
            let nbrs: Vec<(EdgeId, VertexId)> = g.incident_edges(v).collect();
            for (e, w) in nbrs {
                if g.estamp[e.index()] != stamp {
                    g.estamp[e.index()] = stamp;
                    edge_order.push(e);
                }
                if !assigned[w.index()] {
                    assigned[w.index()] = true;
                    verts.push(w);
                }
            }
        }
        if !edge_order.is_empty() {
            edge_order.reverse();
            orders.push(edge_order);
        }
    }
    orders
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::oracle;
    use crate::sink::CollectSink;

    fn figure_graph() -> DynGraph {
        DynGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
    }

    fn two_triangles_with_bridge() -> DynGraph {
        DynGraph::from_edges(
            6,
            &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)],
        )
        .unwrap()
    }

    fn collect_all(g: &mut DynGraph, k: usize, mode: EdgeMode) -> CollectSink {
        let mut sink = CollectSink::new();
        let before = g.canonical_string();
        let stats = enumerate_all(g, k, EdgeSearchOptions::new(mode), &mut sink);
        assert_eq!(g.canonical_string(), before, "graph not restored");
        assert_eq!(sink.duplicates, 0, "duplicate solutions emitted");
        assert!(stats.violations.is_empty());
        sink
    }

    fn ids(edges: &[EdgeId]) -> Vec<u32> {
        let mut v: Vec<u32> = edges.iter().map(|e| e.0).collect();
        v.sort_unstable();
        v
    }

    #[test]
    fn trim_on_long_path_absorbs_forced_prefix() {
        // Path of 6 edges, seed is the first edge, k = 3: edges at distance
        // >= 2 leave the instance, and the 3-edge remainder is all mandatory.
        let mut g = gen::path(7);
        let mut s = EdgeSearch::new(&mut g, 3, EdgeSearchOptions::new(EdgeMode::Graphlet));
        s.start(EdgeId(0));
        let out = s.trim();
        assert!(out.solvable);
        assert_eq!(out.surviving, 3);
        assert_eq!(ids(s.in_edges()), vec![0, 1, 2]);
        assert!(!s.graph_mut().edge_alive(EdgeId(3)), "horizon edge stays");
    }

    #[test]
    fn trim_on_star_removes_and_absorbs_nothing() {
        let mut g = gen::star(10);
        let mut s = EdgeSearch::new(&mut g, 3, EdgeSearchOptions::new(EdgeMode::Graphlet));
        s.start(EdgeId(0));
        let out = s.trim();
        assert!(out.solvable);
        assert_eq!(out.removed, 0);
        assert_eq!(out.absorbed, 0);
        assert_eq!(out.surviving, 10);
    }

    #[test]
    fn trim_absorbs_mandatory_bridge_only_when_adjacent() {
        // Bridge e3 joins the two triangles; with k = 5 its loss (4) exceeds
        // |E| - k = 2, so it is mandatory.
        let mut g = two_triangles_with_bridge();
        let mut s = EdgeSearch::new(&mut g, 5, EdgeSearchOptions::new(EdgeMode::Graphlet));
        s.start(EdgeId(1)); // {1,2} touches the bridge endpoint 2
        let out = s.trim();
        assert!(out.solvable);
        assert!(ids(s.in_edges()).contains(&3), "adjacent bridge absorbed");

        let mut g = two_triangles_with_bridge();
        let mut s = EdgeSearch::new(&mut g, 5, EdgeSearchOptions::new(EdgeMode::Graphlet));
        s.start(EdgeId(0)); // {0,1} does not touch the bridge
        let out = s.trim();
        assert!(out.solvable);
        assert_eq!(ids(s.in_edges()), vec![0], "non-adjacent bridge stays out");
    }

    #[test]
    fn trim_postcondition_holds_on_random_instances() {
        // Re-derive both halves of the postcondition with public primitives:
        // every reachable edge is within budget, and no boundary edge is a
        // mandatory bridge.
        for seed in 0..40 {
            let mut g = gen::random_small(10, 16, seed + 1300);
            let edges: Vec<EdgeId> = g.edge_ids().collect();
            for &e0 in edges.iter().take(4) {
                for k in 2..=5usize {
                    let cp = g.checkpoint();
                    {
                        let mut s =
                            EdgeSearch::new(&mut g, k, EdgeSearchOptions::new(EdgeMode::Graphlet));
                        s.start(e0);
                        let out = s.trim();
                        if out.solvable && s.in_edges().len() < k {
                            let budget = (k - s.in_edges().len()) as u32;
                            let vin: Vec<VertexId> = s.solution_vertices().to_vec();
                            let in_ids = ids(s.in_edges());
                            let g2 = s.graph_mut();
                            let (ball, _) = g2.bfs_edges_within(&vin, budget + 2);
                            for (e, d) in &ball {
                                assert!(
                                    *d < budget || in_ids.contains(&e.0),
                                    "seed {seed} k {k}: reachable edge beyond budget"
                                );
                            }
                            let tree = decompose::bridge_decomposition(g2, vin[0]);
                            let m_comp: usize = ball.len();
                            for (e, d) in &ball {
                                if *d == 0 && !in_ids.contains(&e.0) && tree.is_bridge(*e) {
                                    let loss =
                                        tree.bridges.iter().find(|b| b.edge == *e).unwrap().loss;
                                    assert!(
                                        loss as usize <= m_comp - k,
                                        "seed {seed} k {k}: mandatory edge left on boundary"
                                    );
                                }
                            }
                        }
                    }
                    g.rollback(cp);
                }
            }
        }
    }

    /// Three length-3 arms hanging off vertex 0; edge ids 0..=2 are the arm
    /// through vertices 1,2,3 and so on.
    fn three_arms() -> DynGraph {
        DynGraph::from_edges(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (0, 4),
                (4, 5),
                (5, 6),
                (0, 7),
                (7, 8),
                (8, 9),
            ],
        )
        .unwrap()
    }

    #[test]
    fn far_edges_on_arms_star_cycle() {
        // Seeding the first arm with k = 4 leaves budget 3; the last edge of
        // each other arm sits at distance exactly 2.
        let mut g = three_arms();
        let mut s = EdgeSearch::new(&mut g, 4, EdgeSearchOptions::new(EdgeMode::Graphlet));
        s.start(EdgeId(0));
        let out = s.trim();
        assert!(out.solvable && out.absorbed == 0 && out.removed == 0);
        assert_eq!(ids(&s.far_edges()), vec![5, 8]);

        let mut g = gen::star(8);
        let mut s = EdgeSearch::new(&mut g, 3, EdgeSearchOptions::new(EdgeMode::Graphlet));
        s.start(EdgeId(0));
        assert!(s.trim().solvable);
        assert!(s.far_edges().is_empty());

        let mut g = gen::cycle(8);
        let mut s = EdgeSearch::new(&mut g, 4, EdgeSearchOptions::new(EdgeMode::Graphlet));
        s.start(EdgeId(0));
        assert!(s.trim().solvable);
        assert_eq!(ids(&s.far_edges()), vec![3, 5]);
    }

    #[test]
    fn far_solutions_on_fixtures() {
        // Mid-seeded path: trimming first absorbs the mandatory edge 3 (all
        // 4-edge supersets of edge 2 contain it); the two far edges then sit
        // one hop out on either side, each with a unique shortest path.
        let mut g = gen::path(7);
        let mut s = EdgeSearch::new(&mut g, 4, EdgeSearchOptions::new(EdgeMode::Graphlet));
        s.start(EdgeId(2));
        let out = s.trim();
        assert!(out.solvable);
        assert_eq!(ids(s.in_edges()), vec![2, 3]);
        assert_eq!(ids(&s.far_edges()), vec![0, 5]);
        let mut sink = CollectSink::new();
        assert_eq!(s.enumerate_far_solutions(&mut sink), 2);
        assert!(sink.set.contains(&vec![0, 1, 2, 3]));
        assert!(sink.set.contains(&vec![2, 3, 4, 5]));

        let mut g = three_arms();
        let mut s = EdgeSearch::new(&mut g, 4, EdgeSearchOptions::new(EdgeMode::Graphlet));
        s.start(EdgeId(0));
        assert!(s.trim().solvable);
        let mut sink = CollectSink::new();
        assert_eq!(s.enumerate_far_solutions(&mut sink), 2);
        assert!(sink.set.contains(&vec![0, 3, 4, 5]));
        assert!(sink.set.contains(&vec![0, 6, 7, 8]));

        let mut g = gen::cycle(8);
        let mut s = EdgeSearch::new(&mut g, 4, EdgeSearchOptions::new(EdgeMode::Graphlet));
        s.start(EdgeId(0));
        assert!(s.trim().solvable);
        let mut sink = CollectSink::new();
        assert_eq!(s.enumerate_far_solutions(&mut sink), 2);
        assert!(sink.set.contains(&vec![0, 1, 2, 3]));
        assert!(sink.set.contains(&vec![0, 5, 6, 7]));
    }

    #[test]
    fn far_edges_sit_exactly_at_the_horizon() {
        // Cross-check the far set against an independent distance recount.
        for seed in 0..40 {
            let mut g = gen::random_small(10, 16, seed + 12_000);
            let edges: Vec<EdgeId> = g.edge_ids().collect();
            for &e0 in edges.iter().take(3) {
                for k in 3..=5usize {
                    let cp = g.checkpoint();
                    {
                        let mut s =
                            EdgeSearch::new(&mut g, k, EdgeSearchOptions::new(EdgeMode::Graphlet));
                        s.start(e0);
                        let out = s.trim();
                        if out.solvable && s.in_edges().len() + 2 <= k {
                            let l = (k - s.in_edges().len() - 1) as u32;
                            let far = s.far_edges();
                            let vin: Vec<VertexId> = s.solution_vertices().to_vec();
                            let (ball, _) = s.graph_mut().bfs_edges_within(&vin, l + 1);
                            let mut expected: Vec<u32> = ball
                                .iter()
                                .filter(|&&(_, d)| d == l)
                                .map(|&(e, _)| e.0)
                                .collect();
                            expected.sort_unstable();
                            assert_eq!(ids(&far), expected, "seed {seed} k {k}");
                        }
                    }
                    g.rollback(cp);
                }
            }
        }
    }

    #[test]
    fn far_solutions_follow_parallel_shortest_routes() {
        // Two length-2 routes from the seed to the far edge's endpoint.
        let mut g =
            DynGraph::from_edges(6, &[(0, 1), (1, 2), (1, 3), (2, 4), (3, 4), (4, 5)]).unwrap();
        let mut s = EdgeSearch::new(&mut g, 4, EdgeSearchOptions::new(EdgeMode::Graphlet));
        s.start(EdgeId(0));
        assert!(s.trim().solvable);
        assert_eq!(ids(&s.far_edges()), vec![5]);
        let mut sink = CollectSink::new();
        assert_eq!(s.enumerate_far_solutions(&mut sink), 2);
        assert!(sink.set.contains(&vec![0, 1, 3, 5]));
        assert!(sink.set.contains(&vec![0, 2, 4, 5]));
        drop(s);
        let want = oracle::brute_edge(&g, 4);
        for sol in &sink.set {
            assert!(want.contains(sol));
        }
    }

    /// Theta-with-tails: the seed {0,1} reaches a junction (vertex 2) either
    /// through the shortcut edge 1 or around a 4-edge detour, and six
    /// 3-edge tails hang off the junction. Deleting the shortcut pushes the
    /// outer two thirds of every tail beyond the budget, which is exactly
    /// half the 24 edges, so the shortcut is heavy while the detour edge is
    /// not (and neither is mandatory).
    fn theta_with_tails() -> DynGraph {
        let mut pairs = vec![(0, 1), (1, 2), (0, 7), (7, 8), (8, 9), (9, 2)];
        for t in 0..6u32 {
            let a = 10 + 3 * t;
            pairs.extend([(2, a), (a, a + 1), (a + 1, a + 2)]);
        }
        DynGraph::from_edges(28, &pairs).unwrap()
    }

    #[test]
    fn heavy_edge_detection() {
        let mut g = theta_with_tails();
        let mut s = EdgeSearch::new(&mut g, 6, EdgeSearchOptions::new(EdgeMode::Graphlet));
        s.start(EdgeId(0));
        let out = s.trim();
        assert!(out.solvable && out.removed == 0 && out.absorbed == 0);
        assert_eq!(out.surviving, 24);
        assert!(s.far_edges().is_empty());
        assert!(s.is_heavy(EdgeId(1)), "shortcut strands half the edges");
        assert!(!s.is_heavy(EdgeId(2)), "detour edge is light");
        let gamma = s.boundary_edges();
        assert_eq!(ids(&gamma), vec![1, 2]);

        // On a trimmed cycle instance neither boundary edge is heavy.
        let mut g = gen::cycle(8);
        let mut s = EdgeSearch::new(&mut g, 4, EdgeSearchOptions::new(EdgeMode::Graphlet));
        s.start(EdgeId(0));
        assert!(s.trim().solvable);
        for e in [EdgeId(1), EdgeId(7)] {
            assert!(!s.is_heavy(e), "cycle edges are never heavy here");
        }
    }

    #[test]
    fn is_heavy_matches_reachability_formula() {
        // Independent check of the heaviness predicate: delete the probe,
        // recount the edges within budget by a fresh BFS, restore.
        for seed in 0..30 {
            let mut g = gen::random_small(10, 16, seed + 9100);
            let edges: Vec<EdgeId> = g.edge_ids().collect();
            for &e0 in edges.iter().take(3) {
                let k = 5;
                let cp = g.checkpoint();
                {
                    let mut s =
                        EdgeSearch::new(&mut g, k, EdgeSearchOptions::new(EdgeMode::Graphlet));
                    s.start(e0);
                    let out = s.trim();
                    if !out.solvable || s.in_edges().len() + 2 > k {
                        // nothing to probe at this seed
                    } else {
                        let m_inst = s.instance_edges();
                        let budget = (k - s.in_edges().len()) as u32;
                        let vin: Vec<VertexId> = s.solution_vertices().to_vec();
                        for e in s.boundary_edges() {
                            let got = s.is_heavy(e);
                            let g2 = s.graph_mut();
                            let cp2 = g2.checkpoint();
                            g2.delete_edge(e);
                            let (ball, _) = g2.bfs_edges_within(&vin, budget);
                            let reach = ball.iter().filter(|&&(_, d)| d < budget).count();
                            g2.rollback(cp2);
                            let unnecessary = m_inst - 1 - reach;
                            assert_eq!(
                                got,
                                2 * unnecessary >= m_inst,
                                "seed {seed} probe {e:?}"
                            );
                        }
                    }
                }
                g.rollback(cp);
            }
        }
    }

    #[test]
    fn at_most_one_heavy_boundary_edge() {
        for seed in 0..50 {
            let mut g = gen::random_small(10, 15, seed + 2100);
            let edges: Vec<EdgeId> = g.edge_ids().collect();
            for &e0 in edges.iter().take(3) {
                for k in 3..=5usize {
                    let cp = g.checkpoint();
                    {
                        let mut s =
                            EdgeSearch::new(&mut g, k, EdgeSearchOptions::new(EdgeMode::Graphlet));
                        s.start(e0);
                        let out = s.trim();
                        if out.solvable && s.in_edges().len() + 2 <= k && s.far_edges().is_empty()
                        {
                            let gamma = s.boundary_edges();
                            let heavy: Vec<EdgeId> =
                                gamma.iter().copied().filter(|&e| s.is_heavy(e)).collect();
                            assert!(
                                heavy.len() <= 1,
                                "seed {seed} k {k}: {} heavy edges",
                                heavy.len()
                            );
                            assert!(
                                heavy.len() < gamma.len(),
                                "seed {seed} k {k}: no non-heavy edge"
                            );
                        }
                    }
                    g.rollback(cp);
                }
            }
        }
    }

    #[test]
    fn enumerate_all_star_and_figure_counts() {
        assert_eq!(
            collect_all(&mut gen::star(5), 3, EdgeMode::Graphlet).set.len(),
            10
        );
        assert_eq!(
            collect_all(&mut figure_graph(), 3, EdgeMode::Graphlet).set.len(),
            10
        );
        assert_eq!(
            collect_all(&mut gen::cycle(6), 3, EdgeMode::Graphlet).set.len(),
            6
        );
    }

    #[test]
    fn enumerate_all_k2_counts_wedges() {
        assert_eq!(
            collect_all(&mut gen::complete(4), 2, EdgeMode::Graphlet).set.len(),
            12
        );
    }

    #[test]
    fn enumerate_all_whole_path() {
        assert_eq!(
            collect_all(&mut gen::path(5), 4, EdgeMode::Graphlet).set.len(),
            1
        );
    }

    #[test]
    fn subtree_counts_on_fixtures() {
        assert_eq!(
            collect_all(&mut figure_graph(), 3, EdgeMode::Subtree).set.len(),
            8
        );
        assert_eq!(
            collect_all(&mut gen::cycle(6), 3, EdgeMode::Subtree).set.len(),
            6
        );
        // On a tree the two modes coincide.
        let mut t = gen::path(7);
        let a = collect_all(&mut t, 3, EdgeMode::Graphlet);
        let b = collect_all(&mut t, 3, EdgeMode::Subtree);
        assert_eq!(a.set, b.set);
    }

    #[test]
    fn enumerate_all_matches_oracle_on_random_graphs() {
        for seed in 0..40 {
            let mut g = gen::random_small(8, 11, seed + 4000);
            let m = g.m_live();
            for k in 1..=m {
                let got = collect_all(&mut g, k, EdgeMode::Graphlet);
                let want = oracle::brute_edge(&g, k);
                assert_eq!(got.set, want.set, "graphlet seed {seed} k {k}");
                let got = collect_all(&mut g, k, EdgeMode::Subtree);
                let want = oracle::brute_subtree(&g, k);
                assert_eq!(got.set, want.set, "subtree seed {seed} k {k}");
            }
        }
    }

    #[test]
    fn containing_matches_oracle_filter() {
        for seed in 0..30 {
            let mut g = gen::random_small(8, 11, seed + 5000);
            let edges: Vec<EdgeId> = g.edge_ids().collect();
            for &e0 in edges.iter().take(3) {
                for k in 2..=4usize {
                    let mut sink = CollectSink::new();
                    let stats = enumerate_containing(
                        &mut g,
                        &[e0],
                        k,
                        EdgeSearchOptions::new(EdgeMode::Graphlet),
                        &mut sink,
                    );
                    assert!(stats.violations.is_empty());
                    assert_eq!(sink.duplicates, 0);
                    let want: std::collections::HashSet<Vec<u32>> = oracle::brute_edge(&g, k)
                        .set
                        .into_iter()
                        .filter(|sol| sol.contains(&e0.0))
                        .collect();
                    assert_eq!(sink.set, want, "seed {seed} e {e0:?} k {k}");
                }
            }
        }
    }

    #[test]
    fn line_graph_cross_check() {
        // Edge solutions of g map one-to-one onto vertex solutions of the
        // line graph through the edge-id <-> line-vertex mapping.
        for seed in 0..25 {
            let mut g = gen::random_small(7, 10, seed + 6000);
            let (mut lg, edge_of_line_vertex) = oracle::line_graph(&g);
            let m = g.m_live();
            for k in 1..=m.min(5) {
                let edge_solutions = collect_all(&mut g, k, EdgeMode::Graphlet).set;
                let mut sink = CollectSink::new();
                crate::vertex_enum::enumerate_all(&mut lg, k, &mut sink);
                let mapped: std::collections::HashSet<Vec<u32>> = sink
                    .set
                    .iter()
                    .map(|sol| {
                        let mut ids: Vec<u32> = sol
                            .iter()
                            .map(|&lv| edge_of_line_vertex[lv as usize].0)
                            .collect();
                        ids.sort_unstable();
                        ids
                    })
                    .collect();
                assert_eq!(mapped.len(), sink.set.len(), "mapping must be injective");
                assert_eq!(edge_solutions, mapped, "seed {seed} k {k}");
            }
        }
    }

    #[test]
    fn instrumented_run_reports_no_violations() {
        for seed in 0..12 {
            let mut g = gen::random_small(9, 14, seed + 7000);
            let m = g.m_live();
            for k in 2..=m.min(6) {
                let mut sink = CollectSink::new();
                let stats = enumerate_all(
                    &mut g,
                    k,
                    EdgeSearchOptions::verified(EdgeMode::Graphlet),
                    &mut sink,
                );
                assert!(
                    stats.violations.is_empty(),
                    "seed {seed} k {k}: {:?}",
                    stats.violations
                );
            }
        }
        // A denser medium instance to exercise the far/heavy machinery.
        let mut g = gen::gnm(60, 140, 99).unwrap();
        let mut sink = CollectSink::new();
        let stats = enumerate_all(
            &mut g,
            5,
            EdgeSearchOptions::verified(EdgeMode::Graphlet),
            &mut sink,
        );
        assert!(stats.violations.is_empty(), "{:?}", stats.violations);
        assert!(stats.heavy_scans > 0);
        assert!(stats.include_trim_checks > 0);
        assert!(sink.duplicates == 0);
    }
}
