//! Run configuration and the count / enum / verify entry points, shared by
//! the binary and the test suites.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::ops::ControlFlow;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use graphlets::graph::DynGraph;
use graphlets::io as graph_io;
use graphlets::sink::{CapSink, CountSink, FnSink, OutputQueue};
use graphlets::{enumerate_all, oracle_all, Mode};

use crate::family::Family;
use crate::with_big_stack;

/// Size guard for the exhaustive oracle used by `verify`.
pub const VERIFY_EDGE_LIMIT: usize = 24;

#[derive(Clone, Debug)]
pub enum GraphSource {
    File(PathBuf),
    Generated(Family),
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub source: GraphSource,
    pub mode: Mode,
    pub k: usize,
    /// Stop after this many solutions; 0 means unlimited.
    pub max_solutions: u64,
    pub seed: u64,
    /// Route emission through the bounded-queue delay regularizer.
    pub queue: bool,
    pub output: Option<PathBuf>,
}

impl RunConfig {
    pub fn new(source: GraphSource, mode: Mode, k: usize) -> Self {
        RunConfig {
            source,
            mode,
            k,
            max_solutions: 0,
            seed: 0,
            queue: false,
            output: None,
        }
    }
}

/// Loaded graph plus the external labels vertices should be printed with
/// (identity for generated graphs).
pub struct PreparedGraph {
    pub graph: DynGraph,
    pub labels: Vec<u64>,
}

pub fn prepare_graph(cfg: &RunConfig) -> Result<PreparedGraph> {
    match &cfg.source {
        GraphSource::File(path) => {
            let loaded = graph_io::load_path(path)?;
            Ok(PreparedGraph {
                labels: loaded.labels,
                graph: loaded.graph,
            })
        }
        GraphSource::Generated(family) => {
            let graph = family.build(cfg.seed)?;
            let labels = (0..graph.n_total() as u64).collect();
            Ok(PreparedGraph { graph, labels })
        }
    }
}

fn check_k(cfg: &RunConfig) -> Result<()> {
    if cfg.k < 1 {
        bail!("k must be at least 1");
    }
    Ok(())
}

/// Counts solutions without materializing them.
pub fn run_count(cfg: &RunConfig) -> Result<u64> {
    check_k(cfg)?;
    let mut prepared = prepare_graph(cfg)?;
    let g = &mut prepared.graph;
    let count = with_big_stack(|| {
        let mut sink = CapSink::new(CountSink::default(), cfg.max_solutions);
        enumerate_all(g, cfg.k, cfg.mode, &mut sink);
        sink.inner.count
    });
    Ok(count)
}

/// Streams one solution per line into `out`: space-separated sorted ids,
/// vertex labels in vertex mode, edge ids otherwise. Returns the number of
/// lines written.
pub fn run_enum(cfg: &RunConfig, out: &mut (dyn Write + Send)) -> Result<u64> {
    check_k(cfg)?;
    let mut prepared = prepare_graph(cfg)?;
    let labels = std::mem::take(&mut prepared.labels);
    let g = &mut prepared.graph;
    let mode = cfg.mode;
    let mut written = 0u64;
    let mut io_error = None;
    {
        let emit_line = FnSink(|sol: &[u32]| {
            let mut line = String::with_capacity(sol.len() * 4);
            if mode == Mode::Vertex {
                let mut mapped: Vec<u64> = sol.iter().map(|&v| labels[v as usize]).collect();
                mapped.sort_unstable();
                for (i, id) in mapped.iter().enumerate() {
                    if i > 0 {
                        line.push(' ');
                    }
                    line.push_str(&id.to_string());
                }
            } else {
                for (i, id) in sol.iter().enumerate() {
                    if i > 0 {
                        line.push(' ');
                    }
                    line.push_str(&id.to_string());
                }
            }
            line.push('\n');
            match out.write_all(line.as_bytes()) {
                Ok(()) => {
                    written += 1;
                    ControlFlow::Continue(())
                }
                Err(e) => {
                    io_error = Some(e);
                    ControlFlow::Break(())
                }
            }
        });
        // Cap outside the queue: the limit counts enumerated solutions and
        // the drain still writes exactly that many lines.
        if cfg.queue {
            let queued = OutputQueue::new(emit_line, 2 * cfg.k + 1);
            let mut sink = CapSink::new(queued, cfg.max_solutions);
            with_big_stack(|| enumerate_all(g, cfg.k, mode, &mut sink));
        } else {
            let mut sink = CapSink::new(emit_line, cfg.max_solutions);
            with_big_stack(|| enumerate_all(g, cfg.k, mode, &mut sink));
        }
    }
    if let Some(e) = io_error {
        return Err(e).context("writing enumeration output");
    }
    Ok(written)
}

pub fn open_output(path: &PathBuf) -> Result<BufWriter<File>> {
    Ok(BufWriter::new(File::create(path).with_context(|| {
        format!("cannot create output file {}", path.display())
    })?))
}

pub struct VerifyReport {
    pub matches: bool,
    pub enumerated: usize,
    pub expected: usize,
    pub missing_sample: Vec<Vec<u32>>,
    pub extra_sample: Vec<Vec<u32>>,
}

/// Runs the main enumerator and the exhaustive oracle and compares the
/// solution sets exactly. `corrupt` drops one enumerated solution first (a
/// negative control for the pipeline itself).
pub fn run_verify(cfg: &RunConfig, corrupt: bool) -> Result<VerifyReport> {
    check_k(cfg)?;
    let mut prepared = prepare_graph(cfg)?;
    let g = &mut prepared.graph;
    if g.m_live() > VERIFY_EDGE_LIMIT {
        bail!(
            "verify refuses graphs with more than {VERIFY_EDGE_LIMIT} edges (got {}); \
             the oracle is exhaustive",
            g.m_live()
        );
    }
    let mut sink = graphlets::CollectSink::new();
    with_big_stack(|| enumerate_all(g, cfg.k, cfg.mode, &mut sink));
    if sink.duplicates > 0 {
        bail!("enumerator emitted {} duplicate solutions", sink.duplicates);
    }
    let mut got = sink.set;
    if corrupt {
        if let Some(first) = got.iter().next().cloned() {
            got.remove(&first);
        }
    }
    let want = oracle_all(g, cfg.k, cfg.mode).set;
    let mut missing: Vec<Vec<u32>> = want.difference(&got).take(3).cloned().collect();
    let mut extra: Vec<Vec<u32>> = got.difference(&want).take(3).cloned().collect();
    missing.sort();
    extra.sort();
    Ok(VerifyReport {
        matches: got == want,
        enumerated: got.len(),
        expected: want.len(),
        missing_sample: missing,
        extra_sample: extra,
    })
}
