use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use graphlets::Mode;
use graphlets_cli::bench::{self, Algo, BenchRecord};
use graphlets_cli::family::Family;
use graphlets_cli::run::{self, GraphSource, RunConfig};

/// Enumerate k-graphlets, edge k-graphlets, and k-subtrees of an undirected
/// graph, with amortized per-solution cost independent of the graph size.
#[derive(Parser)]
#[command(name = "graphlets", version, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Vertex,
    Edge,
    Subtree,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Vertex => Mode::Vertex,
            ModeArg::Edge => Mode::Edge,
            ModeArg::Subtree => Mode::Subtree,
        }
    }
}

#[derive(Args)]
struct CommonArgs {
    /// What to enumerate.
    #[arg(long, value_enum)]
    mode: ModeArg,

    /// Solution order (number of vertices or edges per solution).
    #[arg(short)]
    k: usize,

    /// Edge-list file: one `u v` pair per line, `#` comments allowed.
    #[arg(long, conflicts_with = "gen")]
    input: Option<PathBuf>,

    /// Synthetic instance instead of a file: path:N, cycle:N, star:D,
    /// gnm:N,M, grid:W,H.
    #[arg(long)]
    gen: Option<String>,

    /// Stop after this many solutions (0 = unlimited).
    #[arg(long, default_value_t = 0)]
    max: u64,

    /// Seed for the random generator families.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

impl CommonArgs {
    fn config(&self) -> Result<RunConfig> {
        let source = match (&self.input, &self.gen) {
            (Some(path), None) => GraphSource::File(path.clone()),
            (None, Some(spec)) => GraphSource::Generated(Family::parse(spec)?),
            (None, None) => bail!("either --input or --gen is required"),
            (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
        };
        if self.k < 1 {
            bail!("k must be at least 1");
        }
        let mut cfg = RunConfig::new(source, Mode::from(self.mode), self.k);
        cfg.max_solutions = self.max;
        cfg.seed = self.seed;
        Ok(cfg)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Count all solutions and print the count.
    Count {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Print solutions, one per line, as sorted ids.
    Enum {
        #[command(flatten)]
        common: CommonArgs,

        /// Write solutions to a file instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,

        /// Route emission through the bounded-queue delay regularizer.
        #[arg(long)]
        queue: bool,
    },
    /// Compare the enumerator against the exhaustive oracle (small graphs).
    Verify {
        #[command(flatten)]
        common: CommonArgs,

        /// Drop one enumerated solution before comparing (negative control).
        #[arg(long, hide = true)]
        corrupt: bool,
    },
    /// Time enumeration over synthetic instances and emit CSV rows.
    Bench {
        /// Instance specs, repeatable: e.g. --gen gnm:1000,3000 --gen star:100.
        #[arg(long, required = true)]
        gen: Vec<String>,

        #[arg(long, value_enum)]
        mode: ModeArg,

        #[arg(short)]
        k: usize,

        /// Cap on counted solutions per instance (0 = all).
        #[arg(long, default_value_t = 0)]
        max: u64,

        #[arg(long, default_value_t = 0)]
        seed: u64,

        /// Also run the naive binary-partition baseline on each instance.
        #[arg(long)]
        baseline: bool,

        /// Write the CSV here instead of stdout.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Count { common } => {
            let cfg = common.config()?;
            let count = run::run_count(&cfg)?;
            println!("{count}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Enum {
            common,
            output,
            queue,
        } => {
            let mut cfg = common.config()?;
            cfg.queue = queue;
            cfg.output = output;
            match &cfg.output {
                Some(path) => {
                    let mut file = run::open_output(path)?;
                    run::run_enum(&cfg, &mut file)?;
                    file.flush()?;
                }
                None => {
                    let mut out = std::io::BufWriter::new(std::io::stdout());
                    run::run_enum(&cfg, &mut out)?;
                    out.flush()?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { common, corrupt } => {
            let cfg = common.config()?;
            let report = run::run_verify(&cfg, corrupt)?;
            if report.matches {
                println!(
                    "verified: {} solutions match the oracle exactly",
                    report.expected
                );
                Ok(ExitCode::SUCCESS)
            } else {
                println!(
                    "MISMATCH: enumerator produced {} solutions, oracle {}",
                    report.enumerated, report.expected
                );
                for sol in &report.missing_sample {
                    println!("missing: {}", join_ids(sol));
                }
                for sol in &report.extra_sample {
                    println!("extra:   {}", join_ids(sol));
                }
                Ok(ExitCode::from(1))
            }
        }
        Command::Bench {
            gen,
            mode,
            k,
            max,
            seed,
            baseline,
            csv,
        } => {
            if k < 1 {
                bail!("k must be at least 1");
            }
            let mode = Mode::from(mode);
            let mut records: Vec<BenchRecord> = Vec::new();
            for spec in &gen {
                let family = Family::parse(spec)?;
                records.push(bench::bench_instance(&family, k, mode, seed, max, Algo::Main)?);
                if baseline {
                    records.push(bench::bench_instance(
                        &family,
                        k,
                        mode,
                        seed,
                        max,
                        Algo::Baseline,
                    )?);
                }
            }
            match csv {
                Some(path) => {
                    let mut file = run::open_output(&path)?;
                    bench::write_csv(&mut file, &records)?;
                    file.flush()?;
                }
                None => {
                    let mut out = std::io::BufWriter::new(std::io::stdout());
                    bench::write_csv(&mut out, &records)?;
                    out.flush()?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn join_ids(ids: &[u32]) -> String {
    ids.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
