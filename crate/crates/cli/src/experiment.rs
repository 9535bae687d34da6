//! Sweeps: build an instance per sweep point, run every configured
//! algorithm (with repetitions) on it and collect one row per run.

use std::fs;
use std::path::Path;
use std::time::Instant;

use anyhow::{bail, ensure, Context};
use log::{info, warn};
use rayon::prelude::*;
use serde::Serialize;

use regmax_core::algorithms::{candidate_ratios, gamma_guess_runs, merge_guess_runs};
use regmax_core::bounds::{additive_loss, roi_bound, up_bound};
use regmax_core::brute::{brute_force_opt, empirical_submodularity_ratio, OPT_CAP, RATIO_CAP};
use regmax_core::influence::{pm_maximize, DegreeCost, PmConfig, PmOutcome};
use regmax_core::synth::{random_coverage, random_design, random_digraph, CoverageSpec};
use regmax_core::{
    Algorithm, CostVector, Counted, CoverInstance, DesignInstance, DiffusionGraph, RunTrace,
    ValueOracle, WeightedCoverage,
};

use crate::config::{AlgorithmName, AlgorithmSpec, Application, ExperimentConfig, SweepParameter};
use crate::io::{load_edge_list, load_features, load_weights, EdgeList};
use crate::{derive_seed, median, streams};

/// One run of one algorithm at one sweep point.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResultRow {
    pub point: usize,
    pub parameter: &'static str,
    pub value: f64,
    pub algorithm: String,
    pub repetition: usize,
    pub seed: Option<u64>,
    pub best_value: f64,
    pub best_size: usize,
    pub oracle_calls: u64,
    pub inner_runs: usize,
    pub opt_value: Option<f64>,
    pub bound: Option<f64>,
    pub slack: Option<f64>,
    pub bound_ok: Option<bool>,
    pub note: Option<String>,
    #[serde(skip)]
    pub wall_time: f64,
}

/// One line per (sweep point, algorithm); randomized algorithms report the
/// median over their repetitions.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SummaryRow {
    pub point: usize,
    pub parameter: &'static str,
    pub value: f64,
    pub algorithm: String,
    pub runs: usize,
    pub best_value: f64,
    pub oracle_calls: f64,
    pub bound_ok: Option<bool>,
}

/// One inner run of γ-Guess.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InnerRunRow {
    pub point: usize,
    pub value: f64,
    pub algorithm: String,
    pub repetition: usize,
    pub round: usize,
    pub gamma: f64,
    pub best_value: f64,
    pub oracle_calls: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct TraceRecord {
    pub point: usize,
    pub algorithm: String,
    pub repetition: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<RunTrace>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pm: Option<PmOutcome>,
}

#[derive(Debug, Clone, Default)]
pub struct ExperimentResult {
    pub rows: Vec<ResultRow>,
    pub summary: Vec<SummaryRow>,
    pub inner_runs: Vec<InnerRunRow>,
    pub traces: Vec<TraceRecord>,
}

enum Instance {
    Coverage(WeightedCoverage, CostVector),
    Cover(CoverInstance, CostVector),
    Design(DesignInstance, CostVector),
    Influence(DiffusionGraph, DegreeCost),
}

/// Optimum of a brute-forced point.
#[derive(Debug, Clone, Copy)]
struct Opt {
    value: f64,
    f: f64,
    c: f64,
}

struct Point {
    index: usize,
    value: f64,
    instance: Instance,
    opt: Option<Opt>,
}

/// Data loaded once and shared by all points.
enum Base {
    None,
    Graph(EdgeList, Option<Vec<f64>>),
    Features(Vec<Vec<f64>>),
}

fn load_base(cfg: &ExperimentConfig) -> anyhow::Result<Base> {
    let synth = cfg.dataset.synthetic.clone().unwrap_or_default();
    Ok(match cfg.application {
        Application::Vertexcover | Application::Influence => {
            let edges = match &cfg.dataset.edges {
                Some(p) => load_edge_list(p)?,
                None => EdgeList {
                    nodes: synth.nodes,
                    edges: random_digraph(
                        synth.nodes,
                        synth.edges,
                        derive_seed(cfg.seed, streams::GRAPH, 0),
                    )
                    .into_iter()
                    .map(|(u, v)| (u, v, None))
                    .collect(),
                },
            };
            let weights = match &cfg.dataset.weights {
                Some(p) => Some(load_weights(p, edges.nodes)?),
                None => None,
            };
            info!(
                "graph with {} nodes and {} edges",
                edges.nodes,
                edges.edge_count()
            );
            Base::Graph(edges, weights)
        }
        Application::Aoptimal => match &cfg.dataset.features {
            Some(p) => {
                let mut table = load_features(p)?;
                if let Some(target) = &cfg.dataset.target {
                    let name = table
                        .drop_column(target)
                        .with_context(|| format!("{}: no column {target:?}", p.display()))?;
                    info!("dropped target column {name}");
                }
                if cfg.dataset.standardize {
                    for name in table.standardize() {
                        warn!("dropped constant column {name}");
                    }
                }
                ensure!(
                    table.width() > 0,
                    "{}: no usable feature columns",
                    p.display()
                );
                info!(
                    "{} measurements with {} features",
                    table.rows.len(),
                    table.width()
                );
                Base::Features(table.rows)
            }
            None => Base::None,
        },
        Application::SyntheticCoverage => Base::None,
    })
}

fn sweep_values(cfg: &ExperimentConfig) -> (&'static str, Vec<f64>) {
    match &cfg.sweep {
        Some(s) => (s.parameter.name(), s.values.clone()),
        None => match cfg.application {
            Application::Vertexcover => ("q", vec![cfg.cost.q as f64]),
            Application::Influence => ("lambda1", vec![cfg.cost.lambda1]),
            Application::Aoptimal => ("p", vec![cfg.cost.p]),
            Application::SyntheticCoverage => ("instance", vec![0.0]),
        },
    }
}

fn prior_matrix(cfg: &ExperimentConfig) -> anyhow::Result<Option<nalgebra::DMatrix<f64>>> {
    let Some(rows) = &cfg.dataset.prior else {
        return Ok(None);
    };
    let d = rows.len();
    ensure!(
        rows.iter().all(|r| r.len() == d),
        "prior covariance must be square"
    );
    Ok(Some(nalgebra::DMatrix::from_fn(d, d, |i, j| rows[i][j])))
}

fn build_point(cfg: &ExperimentConfig, base: &Base, value: f64) -> anyhow::Result<Instance> {
    let param = cfg.sweep.as_ref().map(|s| s.parameter);
    let synth = cfg.dataset.synthetic.clone().unwrap_or_default();
    let instance_seed = |stream| {
        let k = if param == Some(SweepParameter::Instance) {
            value as u64
        } else {
            0
        };
        derive_seed(cfg.seed, stream, k)
    };
    Ok(match (cfg.application, base) {
        (Application::Vertexcover, Base::Graph(edges, weights)) => {
            let q = if param == Some(SweepParameter::Q) {
                value as u32
            } else {
                cfg.cost.q
            };
            let inst = edges.cover_instance(weights.clone(), q)?;
            let c = inst.costs();
            Instance::Cover(inst, c)
        }
        (Application::Influence, Base::Graph(edges, _)) => {
            let (mut l1, mut l2) = (cfg.cost.lambda1, cfg.cost.lambda2);
            match param {
                Some(SweepParameter::Lambda1) => l1 = value,
                Some(SweepParameter::Lambda2) => l2 = value,
                _ => {}
            }
            Instance::Influence(edges.diffusion_graph()?, DegreeCost::new(l1, l2)?)
        }
        (Application::Aoptimal, base) => {
            let p = if param == Some(SweepParameter::P) {
                value
            } else {
                cfg.cost.p
            };
            let inst = match base {
                Base::Features(rows) => {
                    DesignInstance::from_rows(rows, prior_matrix(cfg)?, cfg.dataset.sigma, p)?
                }
                _ => random_design(synth.nodes, synth.dim, p, instance_seed(streams::DESIGN))?,
            };
            let c = inst.ao_cost()?;
            Instance::Design(inst, c)
        }
        (Application::SyntheticCoverage, _) => {
            let spec = CoverageSpec {
                elements: synth.nodes,
                items: synth.items,
                density: synth.density,
                cost_range: cfg.cost.range,
            };
            let (f, c) = random_coverage(&spec, instance_seed(streams::COVERAGE))?;
            Instance::Coverage(f, c)
        }
        _ => bail!("dataset does not match the application"),
    })
}

fn brute_opt<O: ValueOracle>(f: &O, c: &CostVector) -> anyhow::Result<Opt> {
    let (set, value) = brute_force_opt(f, c)?;
    Ok(Opt {
        value,
        f: f.value(&set),
        c: c.of_set(&set),
    })
}

fn point_opt(cfg: &ExperimentConfig, point: &Instance) -> anyhow::Result<Option<Opt>> {
    if !cfg.verify {
        return Ok(None);
    }
    let n = match point {
        Instance::Coverage(f, _) => f.ground_size(),
        Instance::Cover(f, _) => f.ground_size(),
        Instance::Design(f, _) => f.ground_size(),
        Instance::Influence(..) => {
            warn!("bound checks do not apply to influence estimates");
            return Ok(None);
        }
    };
    if n > OPT_CAP {
        warn!("instance with {n} elements is too large to brute-force; bounds skipped");
        return Ok(None);
    }
    Ok(Some(match point {
        Instance::Coverage(f, c) => brute_opt(f, c)?,
        Instance::Cover(f, c) => brute_opt(f, c)?,
        Instance::Design(f, c) => {
            if n <= RATIO_CAP {
                let ratio = empirical_submodularity_ratio(f)?;
                for spec in &cfg.algorithms {
                    if spec.gamma > ratio {
                        warn!(
                            "{}: gamma {} exceeds the empirical submodularity ratio {ratio:.4}",
                            spec.label(),
                            spec.gamma
                        );
                    }
                }
            }
            brute_opt(f, c)?
        }
        Instance::Influence(..) => unreachable!(),
    }))
}

/// Guarantee for a deterministic algorithm's output, or why there is none.
fn bound_for(spec: &AlgorithmSpec, opt: Opt) -> Result<f64, &'static str> {
    let (g, e) = (spec.gamma, spec.epsilon);
    if additive_loss(opt.f, opt.c).is_none() {
        return Err("empty optimum");
    }
    let b = match (spec.name, spec.runner) {
        (AlgorithmName::Up | AlgorithmName::ThresholdRoi, _) => up_bound(g, e, opt.f, opt.c),
        (AlgorithmName::GammaRoi, _) => roi_bound(g, opt.f, opt.c),
        (AlgorithmName::GammaGuess, AlgorithmName::Up) => {
            // the sweep contains a run at the largest candidate below γ
            let g_r = candidate_ratios(spec.decay)
                .map_err(|_| "invalid decay")?
                .find(|&r| r <= g)
                .ok_or("gamma below the guessed range")?;
            up_bound(g_r, e, opt.f, opt.c)
        }
        _ => return Err("guarantee holds in expectation only"),
    };
    b.ok_or("empty optimum")
}

struct Job<'a> {
    point: &'a Point,
    spec_index: usize,
    spec: &'a AlgorithmSpec,
    repetition: usize,
}

struct JobOutput {
    row: ResultRow,
    inner: Vec<InnerRunRow>,
    trace: TraceRecord,
}

fn run_counted<O: ValueOracle>(
    f: &O,
    c: &CostVector,
    algorithm: Algorithm,
) -> anyhow::Result<(RunTrace, Vec<RunTrace>)> {
    let counted = Counted::new(f);
    let (trace, inner) = match algorithm {
        Algorithm::GammaGuess {
            runner,
            decay,
            epsilon,
        } => {
            let runs = gamma_guess_runs(runner, &counted, c, decay, epsilon)?;
            let (trace, _) = merge_guess_runs(runs.clone(), decay, epsilon);
            (trace, runs)
        }
        other => (other.run(&counted, c)?, Vec::new()),
    };
    ensure!(
        counted.calls() == trace.oracle_calls,
        "oracle call count mismatch: counted {} vs trace {}",
        counted.calls(),
        trace.oracle_calls
    );
    Ok((trace, inner))
}

fn run_job(cfg: &ExperimentConfig, job: &Job) -> anyhow::Result<JobOutput> {
    let seed = match job.spec.seed {
        Some(s) => s.wrapping_add(job.repetition as u64),
        None => derive_seed(
            cfg.seed,
            streams::ALGORITHM + job.spec_index as u64,
            job.repetition as u64,
        ),
    };
    let algorithm = job.spec.algorithm(seed)?;
    let randomized = job.spec.randomized();
    let label = job.spec.label();
    let point = job.point;
    let start = Instant::now();

    let (best_value, best_size, calls, inner_runs, traces, inner) = match &point.instance {
        Instance::Influence(g, cost) => {
            let pm = PmConfig {
                eps_prime: cfg.influence.eps_prime,
                failure_prob: cfg.influence.failure_prob,
                initial_theta: cfg.influence.initial_theta,
                inner: algorithm,
                seed,
                max_iterations: cfg.influence.max_iterations,
            };
            let out = pm_maximize(g, cost, &pm)?;
            let record = (None, Some(out.clone()));
            (
                out.validated_profit(),
                out.solution.len(),
                out.oracle_calls,
                out.iterations.len(),
                record,
                Vec::new(),
            )
        }
        inst => {
            let (trace, runs) = match inst {
                Instance::Coverage(f, c) => run_counted(f, c, algorithm)?,
                Instance::Cover(f, c) => run_counted(f, c, algorithm)?,
                Instance::Design(f, c) => run_counted(f, c, algorithm)?,
                Instance::Influence(..) => unreachable!(),
            };
            let gammas: Vec<f64> = candidate_ratios(job.spec.decay)
                .map(|it| it.collect())
                .unwrap_or_default();
            let inner: Vec<InnerRunRow> = runs
                .iter()
                .enumerate()
                .map(|(r, t)| InnerRunRow {
                    point: point.index,
                    value: point.value,
                    algorithm: label.clone(),
                    repetition: job.repetition,
                    round: r,
                    gamma: gammas[r],
                    best_value: t.best_value,
                    oracle_calls: t.oracle_calls,
                })
                .collect();
            (
                trace.best_value,
                trace.best.len(),
                trace.oracle_calls,
                runs.len().max(1),
                (Some(trace), None),
                inner,
            )
        }
    };
    let wall_time = start.elapsed().as_secs_f64();

    let (bound, note) = match point.opt {
        None => (None, None),
        Some(opt) => match bound_for(job.spec, opt) {
            Ok(b) => (Some(b), None),
            Err(why) => (None, Some(why.to_owned())),
        },
    };
    let row = ResultRow {
        point: point.index,
        parameter: "",
        value: point.value,
        algorithm: label.clone(),
        repetition: job.repetition,
        seed: randomized.then_some(seed),
        best_value,
        best_size,
        oracle_calls: calls,
        inner_runs,
        opt_value: point.opt.map(|o| o.value),
        bound,
        slack: bound.map(|b| best_value - b),
        bound_ok: bound.map(|b| best_value >= b),
        note,
        wall_time,
    };
    Ok(JobOutput {
        row,
        inner,
        trace: TraceRecord {
            point: point.index,
            algorithm: label,
            repetition: job.repetition,
            trace: traces.0,
            pm: traces.1,
        },
    })
}

pub fn run_experiment(cfg: &ExperimentConfig) -> anyhow::Result<ExperimentResult> {
    cfg.validate()?;
    let base = load_base(cfg)?;
    let (parameter, values) = sweep_values(cfg);
    let points = values
        .par_iter()
        .enumerate()
        .map(|(index, &value)| {
            let instance = build_point(cfg, &base, value)?;
            let opt = point_opt(cfg, &instance)?;
            Ok(Point {
                index,
                value,
                instance,
                opt,
            })
        })
        .collect::<anyhow::Result<Vec<_>>>()?;

    let jobs: Vec<Job> = points
        .iter()
        .flat_map(|point| {
            cfg.algorithms
                .iter()
                .enumerate()
                .flat_map(move |(spec_index, spec)| {
                    (0..spec.repetitions()).map(move |repetition| Job {
                        point,
                        spec_index,
                        spec,
                        repetition,
                    })
                })
        })
        .collect();
    info!("{} runs over {} sweep points", jobs.len(), points.len());
    // collect() keeps job order, whatever the completion order
    let outputs = jobs
        .par_iter()
        .map(|job| run_job(cfg, job))
        .collect::<anyhow::Result<Vec<_>>>()?;

    let mut result = ExperimentResult::default();
    for out in outputs {
        let mut row = out.row;
        row.parameter = parameter;
        result.rows.push(row);
        result.inner_runs.extend(out.inner);
        if cfg.save_traces {
            result.traces.push(out.trace);
        }
    }
    result.summary = summarize(&result.rows, cfg);
    Ok(result)
}

fn summarize(rows: &[ResultRow], cfg: &ExperimentConfig) -> Vec<SummaryRow> {
    let mut out = Vec::new();
    let mut start = 0;
    while start < rows.len() {
        let head = &rows[start];
        let end = start
            + rows[start..]
                .iter()
                .take_while(|r| r.point == head.point && r.algorithm == head.algorithm)
                .count();
        let group = &rows[start..end];
        let randomized = cfg
            .algorithms
            .iter()
            .find(|s| s.label() == head.algorithm)
            .is_some_and(|s| s.randomized());
        let bound_ok = if randomized {
            None
        } else {
            group
                .iter()
                .map(|r| r.bound_ok)
                .collect::<Option<Vec<_>>>()
                .map(|v| v.into_iter().all(|b| b))
        };
        out.push(SummaryRow {
            point: head.point,
            parameter: head.parameter,
            value: head.value,
            algorithm: head.algorithm.clone(),
            runs: group.len(),
            best_value: median(group.iter().map(|r| r.best_value).collect()),
            oracle_calls: median(group.iter().map(|r| r.oracle_calls as f64).collect()),
            bound_ok,
        });
        start = end;
    }
    out
}

fn write_csv<T: Serialize>(path: &Path, rows: &[T]) -> anyhow::Result<()> {
    let mut w =
        csv::Writer::from_path(path).with_context(|| format!("writing {}", path.display()))?;
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct Timing<'a> {
    point: usize,
    algorithm: &'a str,
    repetition: usize,
    wall_time: f64,
}

/// Writes `rows.csv`, `summary.csv`, and when applicable `inner_runs.csv`,
/// `traces.json` and `timings.csv` into `dir`.
pub fn write_results(
    result: &ExperimentResult,
    cfg: &ExperimentConfig,
    dir: &Path,
) -> anyhow::Result<()> {
    fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    write_csv(&dir.join("rows.csv"), &result.rows)?;
    write_csv(&dir.join("summary.csv"), &result.summary)?;
    if !result.inner_runs.is_empty() {
        write_csv(&dir.join("inner_runs.csv"), &result.inner_runs)?;
    }
    if cfg.save_traces {
        let json = serde_json::to_string_pretty(&result.traces)?;
        fs::write(dir.join("traces.json"), json + "\n")?;
    }
    if cfg.record_timings {
        let timings: Vec<_> = result
            .rows
            .iter()
            .map(|r| Timing {
                point: r.point,
                algorithm: &r.algorithm,
                repetition: r.repetition,
                wall_time: r.wall_time,
            })
            .collect();
        write_csv(&dir.join("timings.csv"), &timings)?;
    }
    Ok(())
}
