//! Mutable undirected graph with constant-time edge deletion and
//! checkpoint/rollback, plus the bounded traversals the enumerators rely on.
//!
//! Incidence lists are intrusive doubly-linked lists over half-edges, so
//! unlinking an edge is O(1) and rolling a deletion back relinks it in O(1)
//! at its original position. The undo log records micro-ops, not snapshots.
//!
//! A `DynGraph` is confined to one thread of control at a time; there is no
//! internal synchronization.

use std::fmt;

use thiserror::Error;

const NIL: u32 = u32::MAX;

/// Dense vertex index. Ids are assigned at load time in input order and are
/// never reused within a run, even across deletions.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}", self.0)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Dense edge index, stable across deletions.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(pub u32);

impl EdgeId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Opaque marker into the undo log. Rolling back to a checkpoint restores the
/// graph to a state canonically equal to its state when the checkpoint was
/// taken.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Checkpoint(usize);

#[derive(Error, Debug, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge {index} is a self-loop")]
    SelfLoop { index: usize },
    #[error("edge {index} duplicates an earlier edge")]
    DuplicateEdge { index: usize },
    #[error("edge {index} references vertex {vertex} outside 0..{n}")]
    VertexOutOfRange { index: usize, vertex: u32, n: usize },
}

#[derive(Clone, Copy)]
struct VertexRec {
    head: u32,
    degree: u32,
    alive: bool,
}

#[derive(Clone, Copy)]
struct EdgeRec {
    u: u32,
    v: u32,
    alive: bool,
}

#[derive(Clone, Copy)]
struct Link {
    prev: u32,
    next: u32,
}

enum UndoOp {
    EdgeDeleted(u32),
    VertexHidden(u32),
}

/// Canonical description of the live graph: sorted alive vertex ids plus
/// sorted `(min endpoint, max endpoint, edge id)` triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub vertices: Vec<u32>,
    pub edges: Vec<(u32, u32, u32)>,
}

impl fmt::Debug for DynGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DynGraph")
            .field("n_live", &self.n_live)
            .field("m_live", &self.m_live)
            .finish()
    }
}

pub struct DynGraph {
    verts: Vec<VertexRec>,
    edges: Vec<EdgeRec>,
    links: Vec<Link>,
    n_live: usize,
    m_live: usize,
    undo: Vec<UndoOp>,
    // Epoch-stamped scratch. Bounded searches must not pay O(n) per call to
    // reset visitation state, so marks are compared against `stamp` instead
    // of being cleared.
    pub(crate) vstamp: Vec<u64>,
    pub(crate) estamp: Vec<u64>,
    pub(crate) stamp: u64,
    pub(crate) vdist: Vec<u32>,
    pub(crate) vaux: Vec<u32>,
    pub(crate) vaux2: Vec<u32>,
    queue: Vec<u32>,
}

impl DynGraph {
    /// Builds a graph on vertices `0..n` from an edge list. Edge ids follow
    /// list order. Self-loops and duplicate edges are rejected.
    pub fn from_edges(n: usize, pairs: &[(u32, u32)]) -> Result<Self, GraphError> {
        let mut g = DynGraph {
            verts: vec![
                VertexRec {
                    head: NIL,
                    degree: 0,
                    alive: true,
                };
                n
            ],
            edges: Vec::with_capacity(pairs.len()),
            links: Vec::with_capacity(2 * pairs.len()),
            n_live: n,
            m_live: 0,
            undo: Vec::new(),
            vstamp: vec![0; n],
            estamp: vec![0; pairs.len()],
            stamp: 0,
            vdist: vec![0; n],
            vaux: vec![0; n],
            vaux2: vec![0; n],
            queue: Vec::new(),
        };
        let mut seen = std::collections::HashSet::with_capacity(pairs.len());
        for (index, &(a, b)) in pairs.iter().enumerate() {
            if a == b {
                return Err(GraphError::SelfLoop { index });
            }
            for &x in &[a, b] {
                if x as usize >= n {
                    return Err(GraphError::VertexOutOfRange {
                        index,
                        vertex: x,
                        n,
                    });
                }
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(GraphError::DuplicateEdge { index });
            }
            let e = g.edges.len() as u32;
            g.edges.push(EdgeRec { u: a, v: b, alive: true });
            g.links.push(Link { prev: NIL, next: NIL });
            g.links.push(Link { prev: NIL, next: NIL });
            g.link_front(2 * e, a);
            g.link_front(2 * e + 1, b);
            g.m_live += 1;
        }
        Ok(g)
    }

    fn link_front(&mut self, h: u32, v: u32) {
        let old = self.verts[v as usize].head;
        self.links[h as usize] = Link { prev: NIL, next: old };
        if old != NIL {
            self.links[old as usize].prev = h;
        }
        self.verts[v as usize].head = h;
        self.verts[v as usize].degree += 1;
    }

    #[inline]
    fn half_vertex(&self, h: u32) -> u32 {
        let e = &self.edges[(h >> 1) as usize];
        if h & 1 == 0 {
            e.u
        } else {
            e.v
        }
    }

    fn unlink(&mut self, h: u32) {
        let Link { prev, next } = self.links[h as usize];
        let v = self.half_vertex(h);
        if prev == NIL {
            self.verts[v as usize].head = next;
        } else {
            self.links[prev as usize].next = next;
        }
        if next != NIL {
            self.links[next as usize].prev = prev;
        }
        self.verts[v as usize].degree -= 1;
    }

    // Valid only when undone in exact LIFO order: the dead half still holds
    // its former prev/next, so splicing it back restores the original list.
    fn relink(&mut self, h: u32) {
        let Link { prev, next } = self.links[h as usize];
        let v = self.half_vertex(h);
        if prev == NIL {
            self.verts[v as usize].head = h;
        } else {
            self.links[prev as usize].next = h;
        }
        if next != NIL {
            self.links[next as usize].prev = h;
        }
        self.verts[v as usize].degree += 1;
    }

    pub fn n_total(&self) -> usize {
        self.verts.len()
    }

    pub fn m_total(&self) -> usize {
        self.edges.len()
    }

    pub fn n_live(&self) -> usize {
        self.n_live
    }

    pub fn m_live(&self) -> usize {
        self.m_live
    }

    #[inline]
    pub fn vertex_alive(&self, v: VertexId) -> bool {
        self.verts[v.index()].alive
    }

    #[inline]
    pub fn edge_alive(&self, e: EdgeId) -> bool {
        self.edges[e.index()].alive
    }

    #[inline]
    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        let rec = &self.edges[e.index()];
        (VertexId(rec.u), VertexId(rec.v))
    }

    #[inline]
    pub fn other_endpoint(&self, e: EdgeId, v: VertexId) -> VertexId {
        let rec = &self.edges[e.index()];
        if rec.u == v.0 {
            VertexId(rec.v)
        } else {
            debug_assert_eq!(rec.v, v.0);
            VertexId(rec.u)
        }
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.verts[v.index()].degree as usize
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.verts
            .iter()
            .enumerate()
            .filter(|(_, r)| r.alive)
            .map(|(i, _)| VertexId(i as u32))
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, r)| r.alive)
            .map(|(i, _)| EdgeId(i as u32))
    }

    /// Iterates the alive edges incident to `v` as `(edge, other endpoint)`.
    pub fn incident_edges(&self, v: VertexId) -> IncidentEdges<'_> {
        IncidentEdges {
            g: self,
            h: self.verts[v.index()].head,
        }
    }

    pub(crate) fn incidence_head(&self, v: VertexId) -> u32 {
        self.verts[v.index()].head
    }

    /// `(edge, other endpoint, next half)` for a half-edge handle.
    pub(crate) fn half_info(&self, h: u32) -> (EdgeId, VertexId, u32) {
        let e = h >> 1;
        let rec = &self.edges[e as usize];
        let other = if h & 1 == 0 { rec.v } else { rec.u };
        (EdgeId(e), VertexId(other), self.links[h as usize].next)
    }

    /// Deletes an alive edge in O(1). Panics if `e` is already dead.
    pub fn delete_edge(&mut self, e: EdgeId) {
        assert!(self.edges[e.index()].alive, "delete_edge on dead {e:?}");
        self.unlink(2 * e.0);
        self.unlink(2 * e.0 + 1);
        self.edges[e.index()].alive = false;
        self.m_live -= 1;
        self.undo.push(UndoOp::EdgeDeleted(e.0));
    }

    /// Deletes an alive vertex and all incident edges in O(degree).
    pub fn delete_vertex(&mut self, v: VertexId) {
        assert!(self.verts[v.index()].alive, "delete_vertex on dead {v:?}");
        while self.verts[v.index()].head != NIL {
            let e = EdgeId(self.verts[v.index()].head >> 1);
            self.delete_edge(e);
        }
        self.verts[v.index()].alive = false;
        self.n_live -= 1;
        self.undo.push(UndoOp::VertexHidden(v.0));
    }

    pub fn checkpoint(&self) -> Checkpoint {
        Checkpoint(self.undo.len())
    }

    /// Undoes every mutation after `cp`. Panics if `cp` was already rolled
    /// past; that is a programming error, not a recoverable condition.
    pub fn rollback(&mut self, cp: Checkpoint) {
        assert!(
            cp.0 <= self.undo.len(),
            "rollback past a consumed checkpoint"
        );
        while self.undo.len() > cp.0 {
            match self.undo.pop().unwrap() {
                UndoOp::EdgeDeleted(e) => {
                    self.relink(2 * e);
                    self.relink(2 * e + 1);
                    self.edges[e as usize].alive = true;
                    self.m_live += 1;
                }
                UndoOp::VertexHidden(v) => {
                    self.verts[v as usize].alive = true;
                    self.n_live += 1;
                }
            }
        }
    }

    pub(crate) fn next_stamp(&mut self) -> u64 {
        self.stamp += 1;
        self.stamp
    }

    /// Truncated multi-source BFS: collects up to `limit` vertices reachable
    /// from `sources` while never stepping on `excluded`. Sources count
    /// toward the limit. Cost O(min{m, limit^2, limit * max degree}).
    pub fn bfs_vertices_limited(
        &mut self,
        sources: &[VertexId],
        limit: usize,
        excluded: Option<VertexId>,
    ) -> Vec<VertexId> {
        let mut out = Vec::new();
        self.bfs_vertices_limited_into(sources, limit, excluded, &mut out);
        out
    }

    pub fn bfs_vertices_limited_into(
        &mut self,
        sources: &[VertexId],
        limit: usize,
        excluded: Option<VertexId>,
        out: &mut Vec<VertexId>,
    ) {
        out.clear();
        if limit == 0 {
            return;
        }
        let stamp = self.next_stamp();
        let skip = excluded.map(|v| v.0).unwrap_or(NIL);
        for &s in sources {
            debug_assert!(self.vertex_alive(s));
            if s.0 == skip || self.vstamp[s.index()] == stamp {
                continue;
            }
            self.vstamp[s.index()] = stamp;
            out.push(s);
            if out.len() == limit {
                return;
            }
        }
        let mut qi = 0;
        while qi < out.len() {
            let v = out[qi].0;
            qi += 1;
            let mut h = self.verts[v as usize].head;
            while h != NIL {
                let e = (h >> 1) as usize;
                let rec = self.edges[e];
                let w = if rec.u == v { rec.v } else { rec.u };
                h = self.links[h as usize].next;
                if w == skip || self.vstamp[w as usize] == stamp {
                    continue;
                }
                self.vstamp[w as usize] = stamp;
                out.push(VertexId(w));
                if out.len() == limit {
                    return;
                }
            }
        }
    }

    /// Distance-limited multi-source BFS over edges. Returns every alive edge
    /// `e` with `dist(sources, e) <= max_dist` (distance of an edge is the
    /// BFS distance of its nearer endpoint) plus the vertex layering of the
    /// explored ball. Touches only the ball, never farther edges.
    pub fn bfs_edges_within(&mut self, sources: &[VertexId], max_dist: u32) -> EdgeBall {
        let mut out_e = Vec::new();
        let mut out_v = Vec::new();
        self.bfs_edges_within_into(sources, max_dist, &mut out_e, &mut out_v);
        (out_e, out_v)
    }

    pub fn bfs_edges_within_into(
        &mut self,
        sources: &[VertexId],
        max_dist: u32,
        out_edges: &mut Vec<(EdgeId, u32)>,
        out_verts: &mut Vec<(VertexId, u32)>,
    ) {
        out_edges.clear();
        out_verts.clear();
        let stamp = self.next_stamp();
        let mut queue = std::mem::take(&mut self.queue);
        queue.clear();
        for &s in sources {
            debug_assert!(self.vertex_alive(s));
            if self.vstamp[s.index()] == stamp {
                continue;
            }
            self.vstamp[s.index()] = stamp;
            self.vdist[s.index()] = 0;
            queue.push(s.0);
            out_verts.push((s, 0));
        }
        let mut qi = 0;
        while qi < queue.len() {
            let v = queue[qi] as usize;
            qi += 1;
            let d = self.vdist[v];
            let mut h = self.verts[v].head;
            while h != NIL {
                let e = (h >> 1) as usize;
                h = self.links[h as usize].next;
                let rec = self.edges[e];
                let w = if rec.u == v as u32 { rec.v } else { rec.u };
                if self.estamp[e] != stamp {
                    // Vertices are scanned in nondecreasing distance, so the
                    // first endpoint to see this edge is the nearer one.
                    self.estamp[e] = stamp;
                    out_edges.push((EdgeId(e as u32), d));
                }
                if d < max_dist && self.vstamp[w as usize] != stamp {
                    self.vstamp[w as usize] = stamp;
                    self.vdist[w as usize] = d + 1;
                    queue.push(w);
                    out_verts.push((VertexId(w), d + 1));
                }
            }
        }
        self.queue = queue;
    }

    /// All vertices of the connected component containing `start`.
    pub fn component_vertices(&mut self, start: VertexId) -> Vec<VertexId> {
        self.bfs_vertices_limited(&[start], usize::MAX, None)
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        let mut vertices: Vec<u32> = self.vertices().map(|v| v.0).collect();
        vertices.sort_unstable();
        let mut edges: Vec<(u32, u32, u32)> = self
            .edge_ids()
            .map(|e| {
                let (a, b) = self.endpoints(e);
                (a.0.min(b.0), a.0.max(b.0), e.0)
            })
            .collect();
        edges.sort_unstable();
        CanonicalForm { vertices, edges }
    }

    pub fn canonical_string(&self) -> String {
        use std::fmt::Write;
        let form = self.canonical_form();
        let mut s = String::new();
        write!(s, "v:").unwrap();
        for v in &form.vertices {
            write!(s, "{v},").unwrap();
        }
        write!(s, " e:").unwrap();
        for (a, b, id) in &form.edges {
            write!(s, "{a}-{b}#{id},").unwrap();
        }
        s
    }

    /// Largest alive degree; 0 on an edgeless graph.
    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }
}

/// Edges with their distances plus the vertex layering of an explored ball.
pub type EdgeBall = (Vec<(EdgeId, u32)>, Vec<(VertexId, u32)>);

pub struct IncidentEdges<'a> {
    g: &'a DynGraph,
    h: u32,
}

impl Iterator for IncidentEdges<'_> {
    type Item = (EdgeId, VertexId);

    fn next(&mut self) -> Option<Self::Item> {
        if self.h == NIL {
            return None;
        }
        let h = self.h;
        let e = h >> 1;
        self.h = self.g.links[h as usize].next;
        let rec = &self.g.edges[e as usize];
        let other = if h & 1 == 0 { rec.v } else { rec.u };
        Some((EdgeId(e), VertexId(other)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degrees(g: &DynGraph) -> Vec<usize> {
        (0..g.n_total())
            .map(|i| g.degree(VertexId(i as u32)))
            .collect()
    }

    fn k4_minus_one_edge() -> DynGraph {
        // Vertices a=0 b=1 c=2 d=3; the missing edge is {c, d}.
        DynGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            DynGraph::from_edges(3, &[(1, 1)]).unwrap_err(),
            GraphError::SelfLoop { index: 0 }
        );
        assert_eq!(
            DynGraph::from_edges(3, &[(0, 1), (1, 0)]).unwrap_err(),
            GraphError::DuplicateEdge { index: 1 }
        );
        assert!(matches!(
            DynGraph::from_edges(2, &[(0, 5)]),
            Err(GraphError::VertexOutOfRange { .. })
        ));
    }

    #[test]
    fn delete_edge_triangle() {
        let mut g = DynGraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        g.delete_edge(EdgeId(0)); // ab
        assert_eq!(degrees(&g), vec![1, 1, 2]);
        assert_eq!(g.m_live(), 2);
    }

    #[test]
    fn delete_edge_isolates_path_endpoint() {
        let mut g = DynGraph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        g.delete_edge(EdgeId(0));
        assert_eq!(g.degree(VertexId(0)), 0);
    }

    #[test]
    fn figure_graph_has_five_edges() {
        let g = k4_minus_one_edge();
        assert_eq!(g.m_live(), 5);
        let mut k4 = DynGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            .unwrap();
        k4.delete_edge(EdgeId(5));
        assert_eq!(k4.m_live(), 5);
    }

    #[test]
    fn delete_vertex_star_center() {
        let d = 6;
        let pairs: Vec<(u32, u32)> = (1..=d).map(|i| (0, i)).collect();
        let mut g = DynGraph::from_edges(d as usize + 1, &pairs).unwrap();
        g.delete_vertex(VertexId(0));
        assert_eq!(g.m_live(), 0);
        assert!((1..=d).all(|i| g.degree(VertexId(i)) == 0));
    }

    #[test]
    fn delete_vertex_k4_leaves_triangle() {
        let mut g = DynGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
            .unwrap();
        g.delete_vertex(VertexId(0));
        assert_eq!(g.n_live(), 3);
        assert_eq!(g.m_live(), 3);
    }

    #[test]
    fn delete_vertex_splits_path() {
        let mut g = DynGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        g.delete_vertex(VertexId(1));
        let comp0 = g.component_vertices(VertexId(0));
        assert_eq!(comp0, vec![VertexId(0)]);
        let mut comp2 = g.component_vertices(VertexId(2));
        comp2.sort();
        assert_eq!(comp2, vec![VertexId(2), VertexId(3)]);
    }

    #[test]
    fn checkpoint_roundtrip() {
        let mut g = k4_minus_one_edge();
        let before = g.canonical_string();
        let cp = g.checkpoint();
        g.delete_edge(EdgeId(3));
        g.rollback(cp);
        assert_eq!(g.canonical_string(), before);
    }

    #[test]
    fn nested_checkpoints() {
        let mut g = k4_minus_one_edge();
        let cp1 = g.checkpoint();
        g.delete_vertex(VertexId(2));
        let after_v = g.canonical_string();
        let cp2 = g.checkpoint();
        g.delete_edge(EdgeId(2));
        g.rollback(cp2);
        assert_eq!(g.canonical_string(), after_v);
        g.rollback(cp1);
        assert_eq!(g.canonical_string(), k4_minus_one_edge().canonical_string());
    }

    #[test]
    #[should_panic(expected = "consumed checkpoint")]
    fn rollback_past_consumed_checkpoint_panics() {
        let mut g = k4_minus_one_edge();
        let cp1 = g.checkpoint();
        g.delete_edge(EdgeId(0));
        let cp2 = g.checkpoint();
        g.rollback(cp1);
        g.rollback(cp2);
    }

    #[test]
    fn random_mutation_rollback_roundtrip() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
        let g0 = crate::gen::gnm(100, 300, 7).unwrap();
        let mut g = crate::gen::gnm(100, 300, 7).unwrap();
        let baseline = g.canonical_string();
        for _ in 0..10_000 {
            let cp = g.checkpoint();
            let ops = rng.gen_range(1..4);
            for _ in 0..ops {
                if rng.gen_bool(0.5) {
                    let alive: Vec<EdgeId> = g.edge_ids().collect();
                    if !alive.is_empty() {
                        g.delete_edge(alive[rng.gen_range(0..alive.len())]);
                    }
                } else {
                    let alive: Vec<VertexId> = g.vertices().collect();
                    if !alive.is_empty() {
                        g.delete_vertex(alive[rng.gen_range(0..alive.len())]);
                    }
                }
            }
            g.rollback(cp);
            assert_eq!(g.m_live(), g0.m_live());
        }
        assert_eq!(g.canonical_string(), baseline);
    }

    #[test]
    fn degree_sum_matches_live_edges_under_mutation() {
        let mut g = crate::gen::gnm(40, 90, 3).unwrap();
        let sum = |g: &DynGraph| -> usize { g.vertices().map(|v| g.degree(v)).sum() };
        assert_eq!(sum(&g), 2 * g.m_live());
        let cp = g.checkpoint();
        g.delete_vertex(VertexId(5));
        let first_edge = g.edge_ids().next().unwrap();
        g.delete_edge(first_edge);
        assert_eq!(sum(&g), 2 * g.m_live());
        g.rollback(cp);
        assert_eq!(sum(&g), 2 * g.m_live());
    }

    #[test]
    fn bfs_vertices_limited_path() {
        let pairs: Vec<(u32, u32)> = (0..9).map(|i| (i, i + 1)).collect();
        let mut g = DynGraph::from_edges(10, &pairs).unwrap();
        let got = g.bfs_vertices_limited(&[VertexId(0)], 4, None);
        assert_eq!(got, vec![VertexId(0), VertexId(1), VertexId(2), VertexId(3)]);
        let got = g.bfs_vertices_limited(&[VertexId(0)], 4, Some(VertexId(1)));
        assert_eq!(got, vec![VertexId(0)]);
    }

    #[test]
    fn bfs_vertices_limited_figure_graph() {
        let mut g = k4_minus_one_edge();
        let got = g.bfs_vertices_limited(&[VertexId(2)], 3, None);
        assert_eq!(got.len(), 3);
    }

    #[test]
    fn bfs_edges_within_path_distances() {
        // e0=ab e1=bc e2=cd from a.
        let mut g = DynGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let (edges, _) = g.bfs_edges_within(&[VertexId(0)], 1);
        let mut got: Vec<(u32, u32)> = edges.iter().map(|(e, d)| (e.0, *d)).collect();
        got.sort_unstable();
        assert_eq!(got, vec![(0, 0), (1, 1)]);
        let (edges, _) = g.bfs_edges_within(&[VertexId(0)], 2);
        let mut got: Vec<(u32, u32)> = edges.iter().map(|(e, d)| (e.0, *d)).collect();
        got.sort_unstable();
        assert_eq!(got, vec![(0, 0), (1, 1), (2, 2)]);
    }

    #[test]
    fn bfs_edges_within_matches_full_bfs_oracle() {
        let mut g = crate::gen::gnm(20, 40, 11).unwrap();
        // Reference: plain BFS vertex distances, edge distance = min endpoint.
        let dist_from = |g: &DynGraph, s: VertexId| -> Vec<u32> {
            let mut dist = vec![u32::MAX; g.n_total()];
            dist[s.index()] = 0;
            let mut queue = vec![s];
            let mut qi = 0;
            while qi < queue.len() {
                let v = queue[qi];
                qi += 1;
                for (_, w) in g.incident_edges(v) {
                    if dist[w.index()] == u32::MAX {
                        dist[w.index()] = dist[v.index()] + 1;
                        queue.push(w);
                    }
                }
            }
            dist
        };
        for s in 0..20u32 {
            let dist = dist_from(&g, VertexId(s));
            let (edges, verts) = g.bfs_edges_within(&[VertexId(s)], 3);
            for (v, d) in verts {
                assert_eq!(dist[v.index()], d);
            }
            let mut expected: Vec<(u32, u32)> = g
                .edge_ids()
                .map(|e| {
                    let (a, b) = g.endpoints(e);
                    (e.0, dist[a.index()].min(dist[b.index()]))
                })
                .filter(|&(_, d)| d <= 3)
                .collect();
            expected.sort_unstable();
            let mut got: Vec<(u32, u32)> = edges.iter().map(|(e, d)| (e.0, *d)).collect();
            got.sort_unstable();
            assert_eq!(got, expected);
        }
    }

    #[test]
    fn incidence_iteration_skips_dead_edges() {
        let mut g = DynGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        g.delete_edge(EdgeId(1));
        let live: Vec<u32> = g.incident_edges(VertexId(0)).map(|(e, _)| e.0).collect();
        assert_eq!(live.len(), 2);
        assert!(!live.contains(&1));
    }
}
