//! Benchmark harness: builds synthetic instances, runs an enumerator in
//! counting mode (no solution materialization, no I/O in the timed region),
//! and reports one CSV row per instance.

use std::io::Write;
use std::time::Instant;

use anyhow::Result;
use graphlets::sink::{CapSink, CountSink};
use graphlets::{edge_enum, vertex_enum, EdgeMode, EdgeSearchOptions, Mode};

use crate::family::Family;
use crate::naive::enumerate_all_naive;
use crate::with_big_stack;

pub const CSV_HEADER: &str = "family,n,m,max_deg,k,mode,solutions,prep_ns,total_ns,ns_per_solution";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algo {
    /// The amortized enumerators of this crate.
    Main,
    /// Plain binary partition with full reachability sweeps (edge mode only).
    Baseline,
}

/// One measurement row.
#[derive(Clone, Debug)]
pub struct BenchRecord {
    pub family: String,
    pub n: usize,
    pub m: usize,
    pub max_deg: usize,
    pub k: usize,
    pub mode: Mode,
    pub solutions: u64,
    pub prep_ns: u128,
    pub total_ns: u128,
}

impl BenchRecord {
    pub fn ns_per_solution(&self) -> f64 {
        if self.solutions == 0 {
            return 0.0;
        }
        (self.total_ns - self.prep_ns) as f64 / self.solutions as f64
    }

    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{:.2}",
            self.family,
            self.n,
            self.m,
            self.max_deg,
            self.k,
            self.mode.as_str(),
            self.solutions,
            self.prep_ns,
            self.total_ns,
            self.ns_per_solution()
        )
    }
}

/// Builds the instance, counts up to `cap` solutions (0 = all), and times
/// construction (reported as preprocessing) separately from enumeration.
pub fn bench_instance(
    family: &Family,
    k: usize,
    mode: Mode,
    seed: u64,
    cap: u64,
    algo: Algo,
) -> Result<BenchRecord> {
    let t0 = Instant::now();
    let mut g = family.build(seed)?;
    let prep_ns = t0.elapsed().as_nanos();
    let n = g.n_live();
    let m = g.m_live();
    let max_deg = g.max_degree();
    let solutions = with_big_stack(|| {
        let mut sink = CapSink::new(CountSink::default(), cap);
        match algo {
            Algo::Main => match mode {
                Mode::Vertex => vertex_enum::enumerate_all(&mut g, k, &mut sink),
                Mode::Edge => {
                    edge_enum::enumerate_all(
                        &mut g,
                        k,
                        EdgeSearchOptions::new(EdgeMode::Graphlet),
                        &mut sink,
                    );
                }
                Mode::Subtree => {
                    edge_enum::enumerate_all(
                        &mut g,
                        k,
                        EdgeSearchOptions::new(EdgeMode::Subtree),
                        &mut sink,
                    );
                }
            },
            Algo::Baseline => {
                assert_eq!(mode, Mode::Edge, "the baseline only covers edge mode");
                enumerate_all_naive(&mut g, k, &mut sink);
            }
        }
        sink.inner.count
    });
    let total_ns = t0.elapsed().as_nanos();
    let label = match algo {
        Algo::Main => family.label(),
        Algo::Baseline => format!("{}-naive", family.label()),
    };
    Ok(BenchRecord {
        family: label,
        n,
        m,
        max_deg,
        k,
        mode,
        solutions,
        prep_ns,
        total_ns,
    })
}

pub fn write_csv(out: &mut dyn Write, records: &[BenchRecord]) -> std::io::Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in records {
        writeln!(out, "{}", r.csv_row())?;
    }
    Ok(())
}
