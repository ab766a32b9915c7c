//! Synthetic graph families for tests and benchmarks.
//!
//! The random family is sampled with ChaCha8 seeded from the caller's seed,
//! so instances are reproducible run to run.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::DynGraph;

/// Path on `n` vertices (`n - 1` edges).
pub fn path(n: usize) -> DynGraph {
    let pairs: Vec<(u32, u32)> = (0..n.saturating_sub(1) as u32).map(|i| (i, i + 1)).collect();
    DynGraph::from_edges(n, &pairs).unwrap()
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> DynGraph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut pairs: Vec<(u32, u32)> = (0..n as u32 - 1).map(|i| (i, i + 1)).collect();
    pairs.push((n as u32 - 1, 0));
    DynGraph::from_edges(n, &pairs).unwrap()
}

/// Star with hub 0 and `leaves` leaves; the hub degree equals `leaves`.
pub fn star(leaves: usize) -> DynGraph {
    let pairs: Vec<(u32, u32)> = (1..=leaves as u32).map(|i| (0, i)).collect();
    DynGraph::from_edges(leaves + 1, &pairs).unwrap()
}

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> DynGraph {
    let mut pairs = Vec::with_capacity(n * (n - 1) / 2);
    for a in 0..n as u32 {
        for b in a + 1..n as u32 {
            pairs.push((a, b));
        }
    }
    DynGraph::from_edges(n, &pairs).unwrap()
}

/// `w x h` grid with 4-neighbor lattice edges.
pub fn grid(w: usize, h: usize) -> DynGraph {
    let id = |x: usize, y: usize| (y * w + x) as u32;
    let mut pairs = Vec::new();
    for y in 0..h {
        for x in 0..w {
            if x + 1 < w {
                pairs.push((id(x, y), id(x + 1, y)));
            }
            if y + 1 < h {
                pairs.push((id(x, y), id(x, y + 1)));
            }
        }
    }
    DynGraph::from_edges(w * h, &pairs).unwrap()
}

/// Uniform random simple graph with `n` vertices and exactly `m` edges
/// (rejection-sampled distinct pairs). Fails if `m` exceeds C(n, 2).
pub fn gnm(n: usize, m: usize, seed: u64) -> Result<DynGraph, String> {
    let max = n.saturating_mul(n.saturating_sub(1)) / 2;
    if m > max {
        return Err(format!("gnm: m={m} exceeds C({n},2)={max}"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = HashSet::with_capacity(m);
    let mut pairs = Vec::with_capacity(m);
    while pairs.len() < m {
        let a = rng.gen_range(0..n as u32);
        let b = rng.gen_range(0..n as u32);
        if a == b {
            continue;
        }
        let key = (a.min(b), a.max(b));
        if seen.insert(key) {
            pairs.push(key);
        }
    }
    Ok(DynGraph::from_edges(n, &pairs).unwrap())
}

/// Small random graph for oracle suites: `n` vertices, edge count drawn from
/// `0..=max_m` capped by C(n, 2).
pub fn random_small(n: usize, max_m: usize, seed: u64) -> DynGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cap = (n * n.saturating_sub(1) / 2).min(max_m);
    let m = if cap == 0 { 0 } else { rng.gen_range(0..=cap) };
    gnm(n, m, rng.gen()).unwrap()
}
