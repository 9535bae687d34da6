use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};

use regmax_cli::config::ExperimentConfig;
use regmax_cli::{gen, inspect, run_experiment, verify_bounds, write_results, VerifyConfig};
use regmax_core::synth::CoverageSpec;

#[derive(Parser)]
#[command(
    name = "regmax",
    version,
    about = "Maximize f - c for weakly submodular f"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run an experiment sweep from a TOML manifest.
    Run {
        config: PathBuf,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        output: Option<PathBuf>,
        /// Brute-force bound annotations for small instances.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        save_traces: bool,
        #[arg(long)]
        record_timings: bool,
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Check approximation guarantees against brute force on seeded instances.
    Verify {
        /// TOML file with verification settings; defaults apply otherwise.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        instances: Option<usize>,
        /// Write the per-check report here.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Write a seeded synthetic instance.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
        #[arg(long, global = true, default_value_t = 0)]
        seed: u64,
        /// Output file; stdout when absent.
        #[arg(long, short, global = true)]
        out: Option<PathBuf>,
    },
    /// Pretty-print a trace file.
    Inspect { trace: PathBuf },
}

#[derive(Subcommand)]
enum GenKind {
    /// Uniform random directed graph as an edge list.
    Graph {
        #[arg(long, default_value_t = 200)]
        nodes: usize,
        #[arg(long, default_value_t = 1000)]
        edges: usize,
        #[arg(long)]
        probability: Option<f64>,
    },
    /// Weighted coverage instance as JSON.
    Coverage {
        #[arg(long, default_value_t = 12)]
        elements: usize,
        #[arg(long, default_value_t = 20)]
        items: usize,
        #[arg(long, default_value_t = 0.2)]
        density: f64,
    },
    /// Standardized Gaussian features as CSV.
    Design {
        #[arg(long, default_value_t = 8)]
        n: usize,
        #[arg(long, default_value_t = 3)]
        dim: usize,
    },
}

fn emit(text: &str, out: Option<&PathBuf>) -> anyhow::Result<()> {
    match out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Run {
            config,
            seed,
            output,
            verify,
            save_traces,
            record_timings,
            threads,
        } => {
            let mut cfg = ExperimentConfig::load(&config)?;
            if let Some(s) = seed {
                cfg.seed = s;
            }
            if let Some(o) = output {
                cfg.output = o;
            }
            cfg.verify |= verify;
            cfg.save_traces |= save_traces;
            cfg.record_timings |= record_timings;
            if let Some(t) = threads.or(cfg.threads) {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(t)
                    .build_global()?;
            }
            let result = run_experiment(&cfg)?;
            write_results(&result, &cfg, &cfg.output)?;
            for s in &result.summary {
                println!(
                    "{}={} {:<20} best {:>12.6}  calls {:>10}  runs {}{}",
                    s.parameter,
                    s.value,
                    s.algorithm,
                    s.best_value,
                    s.oracle_calls,
                    s.runs,
                    match s.bound_ok {
                        Some(true) => "  bound ok",
                        Some(false) => "  BOUND VIOLATED",
                        None => "",
                    }
                );
            }
            println!("results written to {}", cfg.output.display());
            Ok(result.rows.iter().all(|r| r.bound_ok != Some(false)))
        }
        Command::Verify {
            config,
            seed,
            instances,
            output,
        } => {
            let mut cfg = match config {
                Some(p) => VerifyConfig::load(&p)?,
                None => VerifyConfig::default(),
            };
            if let Some(s) = seed {
                cfg.seed = s;
            }
            if let Some(n) = instances {
                cfg.instances = n;
            }
            let report = verify_bounds(&cfg)?;
            for s in report.summaries() {
                println!("{s}");
            }
            if let Some(p) = output {
                report.write_csv(&p)?;
            }
            Ok(report.all_passed())
        }
        Command::Gen { kind, seed, out } => {
            let text = match kind {
                GenKind::Graph {
                    nodes,
                    edges,
                    probability,
                } => gen::graph_text(nodes, edges, probability, seed),
                GenKind::Coverage {
                    elements,
                    items,
                    density,
                } => gen::coverage_json(
                    &CoverageSpec {
                        elements,
                        items,
                        density,
                        ..CoverageSpec::default()
                    },
                    seed,
                )?,
                GenKind::Design { n, dim } => gen::design_csv(n, dim, seed)?,
            };
            emit(&text, out.as_ref())?;
            Ok(true)
        }
        Command::Inspect { trace } => {
            let text = fs::read_to_string(&trace)
                .with_context(|| format!("reading {}", trace.display()))?;
            print!("{}", inspect::render_json(&text)?);
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
