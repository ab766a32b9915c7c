//! Heavier randomized sweeps against the oracle. Ignored by default; run
//! with `cargo test -p graphlets --test stress -- --ignored`.

use graphlets::graph::DynGraph;
use graphlets::sink::CollectSink;
use graphlets::{enumerate_all, gen, oracle_all, Mode};

fn check_graph(g: &mut DynGraph, kmax: usize, label: &str) {
    let before = g.canonical_string();
    for mode in [Mode::Vertex, Mode::Edge, Mode::Subtree] {
        for k in 1..=kmax {
            let mut sink = CollectSink::new();
            enumerate_all(g, k, mode, &mut sink);
            assert_eq!(sink.duplicates, 0, "{label} mode {mode:?} k {k}");
            let want = oracle_all(g, k, mode);
            assert_eq!(sink.set, want.set, "{label} mode {mode:?} k {k}");
        }
    }
    assert_eq!(g.canonical_string(), before, "{label} not restored");
}

#[test]
#[ignore = "long randomized sweep"]
fn oracle_sweep_random_dense() {
    for seed in 0..1500u64 {
        let n = 4 + (seed % 8) as usize; // 4..=11
        let mut g = gen::random_small(n, 18, 0x57AE55 + seed);
        let kmax = g.m_live().min(8).max(1);
        check_graph(&mut g, kmax, &format!("random seed {seed}"));
    }
}

#[test]
#[ignore = "long structured sweep"]
fn oracle_sweep_structured() {
    let barbell = || {
        DynGraph::from_edges(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 0),
                (2, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 7),
                (7, 5),
            ],
        )
        .unwrap()
    };
    let theta = || {
        DynGraph::from_edges(
            8,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (0, 4),
                (4, 5),
                (5, 3),
                (1, 6),
                (6, 7),
            ],
        )
        .unwrap()
    };
    let mut cases: Vec<(String, DynGraph)> = vec![
        ("grid 3x3".into(), gen::grid(3, 3)),
        ("grid 2x5".into(), gen::grid(2, 5)),
        ("cycle 9".into(), gen::cycle(9)),
        ("star 9".into(), gen::star(9)),
        ("complete 5".into(), gen::complete(5)),
        ("path 10".into(), gen::path(10)),
        ("barbell".into(), barbell()),
        ("theta with tail".into(), theta()),
    ];
    for (label, g) in cases.iter_mut() {
        let kmax = g.m_live().min(7);
        check_graph(g, kmax, label);
    }
}
