//! Bridge and articulation-point decompositions of one connected component.
//!
//! Both run a single iterative low-link DFS. The bridge scan additionally
//! computes, per bridge, the number of edges the root side loses when the
//! bridge is deleted (the edges of the far subtree plus the bridge itself);
//! that count is what drives mandatory-edge detection during trimming.

use std::collections::{HashMap, HashSet};

use crate::graph::{DynGraph, EdgeId, VertexId};

const NIL: u32 = u32::MAX;

/// One bridge, oriented away from the scan root.
#[derive(Clone, Copy, Debug)]
pub struct Bridge {
    pub edge: EdgeId,
    pub rootward: VertexId,
    pub leafward: VertexId,
    /// Edges unreachable from the root side after deleting this bridge,
    /// counting the bridge itself.
    pub loss: u64,
}

pub(crate) struct BridgeScan {
    pub bridges: Vec<Bridge>,
    pub component_vertices: Vec<VertexId>,
    pub component_edges: u64,
}

/// Low-link DFS over the component of `root`, yielding all bridges with
/// their root-relative losses. Linear in the component size.
pub(crate) fn scan_bridges(g: &mut DynGraph, root: VertexId) -> BridgeScan {
    assert!(g.vertex_alive(root));
    let stamp = g.next_stamp();
    let mut timer: u32 = 0;
    let mut bridges = Vec::new();
    let mut order = Vec::new();

    // vdist = discovery time, vaux = low, vaux2 = subtree edge charges.
    let visit = |g: &mut DynGraph, v: VertexId, timer: &mut u32| {
        g.vstamp[v.index()] = stamp;
        g.vdist[v.index()] = *timer;
        g.vaux[v.index()] = *timer;
        g.vaux2[v.index()] = 0;
        *timer += 1;
    };
    visit(g, root, &mut timer);
    order.push(root);

    // Frame: (vertex, edge to parent, incidence cursor).
    let mut stack: Vec<(u32, u32, IncCursor)> = vec![(root.0, NIL, IncCursor::start(g, root))];
    while let Some(frame) = stack.last_mut() {
        let (v, parent_edge, cursor) = (frame.0, frame.1, &mut frame.2);
        if let Some((e, w)) = cursor.next(g) {
            if e.0 == parent_edge {
                continue;
            }
            if g.vstamp[w.index()] != stamp {
                visit(g, w, &mut timer);
                order.push(w);
                let cur = IncCursor::start(g, w);
                stack.push((w.0, e.0, cur));
            } else if g.vdist[w.index()] < g.vdist[v as usize] {
                // Upward back edge; charged here, at the deeper endpoint.
                g.vaux[v as usize] = g.vaux[v as usize].min(g.vdist[w.index()]);
                g.vaux2[v as usize] += 1;
            }
        } else {
            let (v, parent_edge, _) = stack.pop().unwrap();
            if let Some(pframe) = stack.last() {
                let p = pframe.0 as usize;
                let low_v = g.vaux[v as usize];
                let sub_v = g.vaux2[v as usize];
                g.vaux[p] = g.vaux[p].min(low_v);
                g.vaux2[p] += sub_v + 1;
                if low_v > g.vdist[p] {
                    bridges.push(Bridge {
                        edge: EdgeId(parent_edge),
                        rootward: VertexId(p as u32),
                        leafward: VertexId(v),
                        loss: sub_v as u64 + 1,
                    });
                }
            }
        }
    }

    BridgeScan {
        bridges,
        component_edges: g.vaux2[root.index()] as u64,
        component_vertices: order,
    }
}

/// Bridge tree of one connected component: 2-edge-connected components as
/// nodes, bridges as tree edges, with per-bridge losses relative to the
/// component containing `root`.
pub struct BridgeTree {
    pub components: Vec<Vec<VertexId>>,
    pub bridges: Vec<BridgeLink>,
    /// Per component: adjacent `(component, bridge index)` pairs.
    pub adjacency: Vec<Vec<(usize, usize)>>,
    pub root_component: usize,
    component_of: HashMap<u32, usize>,
}

#[derive(Clone, Copy, Debug)]
pub struct BridgeLink {
    pub edge: EdgeId,
    pub rootward_component: usize,
    pub leafward_component: usize,
    pub loss: u64,
}

impl BridgeTree {
    pub fn component_of(&self, v: VertexId) -> Option<usize> {
        self.component_of.get(&v.0).copied()
    }

    pub fn is_bridge(&self, e: EdgeId) -> bool {
        self.bridges.iter().any(|b| b.edge == e)
    }
}

pub fn bridge_decomposition(g: &mut DynGraph, component_of: VertexId) -> BridgeTree {
    let scan = scan_bridges(g, component_of);
    let bridge_edges: HashSet<u32> = scan.bridges.iter().map(|b| b.edge.0).collect();

    // Label 2ECCs by traversals that refuse to cross bridges.
    let mut comp_of: HashMap<u32, usize> = HashMap::new();
    let mut components: Vec<Vec<VertexId>> = Vec::new();
    for &v in &scan.component_vertices {
        if comp_of.contains_key(&v.0) {
            continue;
        }
        let id = components.len();
        let mut members = vec![v];
        comp_of.insert(v.0, id);
        let mut qi = 0;
        while qi < members.len() {
            let u = members[qi];
            qi += 1;
            let nbrs: Vec<VertexId> = g
                .incident_edges(u)
                .filter(|(e, _)| !bridge_edges.contains(&e.0))
                .map(|(_, w)| w)
                .collect();
            for w in nbrs {
                if let std::collections::hash_map::Entry::Vacant(slot) = comp_of.entry(w.0) {
                    slot.insert(id);
                    members.push(w);
                }
            }
        }
        components.push(members);
    }

    let mut adjacency = vec![Vec::new(); components.len()];
    let bridges: Vec<BridgeLink> = scan
        .bridges
        .iter()
        .enumerate()
        .map(|(i, b)| {
            let rc = comp_of[&b.rootward.0];
            let lc = comp_of[&b.leafward.0];
            adjacency[rc].push((lc, i));
            adjacency[lc].push((rc, i));
            BridgeLink {
                edge: b.edge,
                rootward_component: rc,
                leafward_component: lc,
                loss: b.loss,
            }
        })
        .collect();

    BridgeTree {
        root_component: comp_of[&component_of.0],
        components,
        bridges,
        adjacency,
        component_of: comp_of,
    }
}

/// Articulation points and biconnected blocks of one component, with
/// per-vertex counts of how many vertices each cut vertex separates from the
/// scan root (the root itself reports 0).
pub struct BlockCut {
    pub root: VertexId,
    pub component_size: usize,
    pub articulation_points: Vec<VertexId>,
    pub blocks: Vec<Vec<VertexId>>,
    cut_away: HashMap<u32, u32>,
}

impl BlockCut {
    /// Vertices disconnected from the root if `v` is removed; 0 for
    /// non-articulation vertices and for the root.
    pub fn cut_away(&self, v: VertexId) -> u32 {
        self.cut_away.get(&v.0).copied().unwrap_or(0)
    }

    pub fn is_articulation(&self, v: VertexId) -> bool {
        self.articulation_points.contains(&v)
    }
}

pub fn articulation_points(g: &mut DynGraph, component_of: VertexId) -> BlockCut {
    let root = component_of;
    assert!(g.vertex_alive(root));
    let stamp = g.next_stamp();
    let mut timer: u32 = 0;

    // vdist = discovery time, vaux = low, vaux2 = subtree vertex count.
    let visit = |g: &mut DynGraph, v: VertexId, timer: &mut u32| {
        g.vstamp[v.index()] = stamp;
        g.vdist[v.index()] = *timer;
        g.vaux[v.index()] = *timer;
        g.vaux2[v.index()] = 1;
        *timer += 1;
    };
    visit(g, root, &mut timer);

    let mut cut_away: HashMap<u32, u32> = HashMap::new();
    let mut artics: Vec<VertexId> = Vec::new();
    let mut artic_seen: HashSet<u32> = HashSet::new();
    let mut blocks: Vec<Vec<VertexId>> = Vec::new();
    let mut edge_stack: Vec<(u32, u32)> = Vec::new();
    let mut component_size = 1usize;
    let mut root_children = 0usize;

    let mut stack: Vec<(u32, u32, IncCursor)> = vec![(root.0, NIL, IncCursor::start(g, root))];
    while let Some(frame) = stack.last_mut() {
        let (v, parent_edge, cursor) = (frame.0, frame.1, &mut frame.2);
        if let Some((e, w)) = cursor.next(g) {
            if e.0 == parent_edge {
                continue;
            }
            if g.vstamp[w.index()] != stamp {
                visit(g, w, &mut timer);
                component_size += 1;
                edge_stack.push((v, w.0));
                let cur = IncCursor::start(g, w);
                stack.push((w.0, e.0, cur));
            } else if g.vdist[w.index()] < g.vdist[v as usize] {
                edge_stack.push((v, w.0));
                g.vaux[v as usize] = g.vaux[v as usize].min(g.vdist[w.index()]);
            }
        } else {
            let (v, _, _) = stack.pop().unwrap();
            if let Some(pframe) = stack.last() {
                let p = pframe.0;
                let low_v = g.vaux[v as usize];
                let size_v = g.vaux2[v as usize];
                g.vaux[p as usize] = g.vaux[p as usize].min(low_v);
                g.vaux2[p as usize] += size_v;
                if p == root.0 {
                    root_children += 1;
                }
                if low_v >= g.vdist[p as usize] {
                    // Close off one biconnected block.
                    let mut members: HashSet<u32> = HashSet::new();
                    while let Some(&(a, b)) = edge_stack.last() {
                        if g.vdist[a as usize] >= g.vdist[v as usize] {
                            members.insert(a);
                            members.insert(b);
                            edge_stack.pop();
                        } else {
                            break;
                        }
                    }
                    if let Some(pos) = edge_stack.iter().rposition(|&(a, b)| a == p && b == v) {
                        edge_stack.remove(pos);
                    }
                    members.insert(p);
                    members.insert(v);
                    let mut block: Vec<VertexId> = members.into_iter().map(VertexId).collect();
                    block.sort_unstable();
                    blocks.push(block);

                    if p != root.0 {
                        *cut_away.entry(p).or_insert(0) += size_v;
                        if artic_seen.insert(p) {
                            artics.push(VertexId(p));
                        }
                    }
                }
            }
        }
    }

    if root_children >= 2 && artic_seen.insert(root.0) {
        artics.push(root);
    }
    if component_size == 1 {
        blocks.push(vec![root]);
    }
    artics.sort_unstable();

    BlockCut {
        root,
        component_size,
        articulation_points: artics,
        blocks,
        cut_away,
    }
}

/// Resumable incidence-list cursor so the DFS can hold its position in a
/// vertex's list across stack operations without borrowing the graph.
pub(crate) struct IncCursor {
    h: u32,
}

impl IncCursor {
    pub(crate) fn start(g: &DynGraph, v: VertexId) -> Self {
        IncCursor {
            h: g.incidence_head(v),
        }
    }

    pub(crate) fn next(&mut self, g: &DynGraph) -> Option<(EdgeId, VertexId)> {
        if self.h == NIL {
            return None;
        }
        let h = self.h;
        let (e, other, next) = g.half_info(h);
        self.h = next;
        Some((e, other))
    }
}
