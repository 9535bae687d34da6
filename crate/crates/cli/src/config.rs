//! Experiment manifests (TOML).
//!
//! ```toml
//! application = "vertexcover"     # influence | vertexcover | aoptimal | synthetic-coverage
//! seed = 7
//! output = "results/vc"
//! verify = false                  # annotate rows with brute-force bound checks
//!
//! [dataset]
//! edges = "graph.txt"
//! synthetic = { nodes = 200, edges = 1000 }
//!
//! [cost]
//! q = 1
//!
//! [sweep]
//! parameter = "q"
//! values = [1, 2, 3]
//!
//! [[algorithms]]
//! name = "up"
//! epsilon = 0.1
//!
//! [[algorithms]]
//! name = "udg"
//! repetitions = 10
//! ```
//!
//! Relative paths are resolved against the directory of the manifest.

use std::path::{Path, PathBuf};

use anyhow::{bail, ensure, Context};
use serde::{Deserialize, Serialize};

use regmax_core::{Algorithm, GuessRunner};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Application {
    Influence,
    Vertexcover,
    Aoptimal,
    SyntheticCoverage,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlgorithmName {
    Up,
    GammaRoi,
    ThresholdRoi,
    Udg,
    GammaGuess,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgorithmSpec {
    pub name: AlgorithmName,
    /// Column label in the outputs; defaults to the algorithm name.
    pub label: Option<String>,
    #[serde(default = "one")]
    pub gamma: f64,
    #[serde(default = "default_epsilon")]
    pub epsilon: f64,
    /// γ-Guess decay `δ`.
    #[serde(default = "default_decay")]
    pub decay: f64,
    /// Inner algorithm of γ-Guess: `up` or `udg`.
    #[serde(default = "default_runner")]
    pub runner: AlgorithmName,
    /// Defaults to 10 for randomized algorithms and 1 otherwise.
    pub repetitions: Option<usize>,
    /// Base seed for randomized runs; repetition `r` uses `seed + r`.
    pub seed: Option<u64>,
}

fn one() -> f64 {
    1.0
}
fn default_epsilon() -> f64 {
    0.1
}
fn default_decay() -> f64 {
    0.2
}
fn default_runner() -> AlgorithmName {
    AlgorithmName::Up
}

/// UDG repetition count.
pub const DEFAULT_REPETITIONS: usize = 10;

impl AlgorithmSpec {
    pub fn new(name: AlgorithmName) -> Self {
        Self {
            name,
            label: None,
            gamma: 1.0,
            epsilon: default_epsilon(),
            decay: default_decay(),
            runner: default_runner(),
            repetitions: None,
            seed: None,
        }
    }

    pub fn label(&self) -> String {
        self.label.clone().unwrap_or_else(|| match self.name {
            AlgorithmName::GammaGuess => format!("gamma-guess-{}", kebab(self.runner)),
            n => kebab(n).to_owned(),
        })
    }

    pub fn randomized(&self) -> bool {
        self.name == AlgorithmName::Udg
            || (self.name == AlgorithmName::GammaGuess && self.runner == AlgorithmName::Udg)
    }

    pub fn repetitions(&self) -> usize {
        self.repetitions.unwrap_or(if self.randomized() {
            DEFAULT_REPETITIONS
        } else {
            1
        })
    }

    /// The concrete selector for one run.
    pub fn algorithm(&self, seed: u64) -> anyhow::Result<Algorithm> {
        Ok(match self.name {
            AlgorithmName::Up => Algorithm::Up {
                gamma: self.gamma,
                epsilon: self.epsilon,
            },
            AlgorithmName::GammaRoi => Algorithm::GammaRoi { gamma: self.gamma },
            AlgorithmName::ThresholdRoi => Algorithm::ThresholdRoi {
                gamma: self.gamma,
                epsilon: self.epsilon,
            },
            AlgorithmName::Udg => Algorithm::Udg {
                gamma: self.gamma,
                seed,
            },
            AlgorithmName::GammaGuess => Algorithm::GammaGuess {
                runner: match self.runner {
                    AlgorithmName::Up => GuessRunner::Up,
                    AlgorithmName::Udg => GuessRunner::Udg { seed },
                    other => bail!("gamma-guess runner must be up or udg, not {}", kebab(other)),
                },
                decay: self.decay,
                epsilon: self.epsilon,
            },
        })
    }
}

pub fn kebab(name: AlgorithmName) -> &'static str {
    match name {
        AlgorithmName::Up => "up",
        AlgorithmName::GammaRoi => "gamma-roi",
        AlgorithmName::ThresholdRoi => "threshold-roi",
        AlgorithmName::Udg => "udg",
        AlgorithmName::GammaGuess => "gamma-guess",
    }
}

/// Generated data used when no file is given.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SyntheticSpec {
    /// Nodes, measurements or coverage elements.
    #[serde(default = "default_nodes")]
    pub nodes: usize,
    /// Directed edges for graph applications.
    #[serde(default = "default_edges")]
    pub edges: usize,
    /// Coverage items.
    #[serde(default = "default_items")]
    pub items: usize,
    /// Coverage density.
    #[serde(default = "default_density")]
    pub density: f64,
    /// Feature dimension for A-optimal design.
    #[serde(default = "default_dim")]
    pub dim: usize,
}

fn default_nodes() -> usize {
    12
}
fn default_edges() -> usize {
    60
}
fn default_items() -> usize {
    20
}
fn default_density() -> f64 {
    0.2
}
fn default_dim() -> usize {
    3
}

impl Default for SyntheticSpec {
    fn default() -> Self {
        Self {
            nodes: default_nodes(),
            edges: default_edges(),
            items: default_items(),
            density: default_density(),
            dim: default_dim(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DatasetConfig {
    /// Edge list for influence and vertex cover.
    pub edges: Option<PathBuf>,
    /// Optional `v w` node weights for vertex cover.
    pub weights: Option<PathBuf>,
    /// Feature CSV for A-optimal design.
    pub features: Option<PathBuf>,
    /// Column removed from the features (header name, index or `last`).
    pub target: Option<String>,
    /// Set to false to use features as they are.
    #[serde(default = "yes")]
    pub standardize: bool,
    /// Prior covariance; identity when absent.
    pub prior: Option<Vec<Vec<f64>>>,
    /// Noise level; `1/√d` when absent.
    pub sigma: Option<f64>,
    pub synthetic: Option<SyntheticSpec>,
}

fn yes() -> bool {
    true
}

impl Default for DatasetConfig {
    fn default() -> Self {
        Self {
            edges: None,
            weights: None,
            features: None,
            target: None,
            standardize: true,
            prior: None,
            sigma: None,
            synthetic: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CostConfig {
    /// Vertex-cover degree penalty.
    #[serde(default = "default_q")]
    pub q: u32,
    /// Influence degree cost `λ₁ d^λ₂`.
    #[serde(default = "one")]
    pub lambda1: f64,
    #[serde(default = "one")]
    pub lambda2: f64,
    /// A-optimal proportional cost factor.
    #[serde(default = "default_p")]
    pub p: f64,
    /// Uniform cost range of synthetic coverage.
    #[serde(default = "default_cost_range")]
    pub range: (f64, f64),
}

fn default_q() -> u32 {
    1
}
fn default_p() -> f64 {
    0.5
}
fn default_cost_range() -> (f64, f64) {
    (0.1, 2.0)
}

impl Default for CostConfig {
    fn default() -> Self {
        Self {
            q: default_q(),
            lambda1: 1.0,
            lambda2: 1.0,
            p: default_p(),
            range: default_cost_range(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SweepParameter {
    Q,
    Lambda1,
    Lambda2,
    P,
    /// Index of a generated instance (synthetic data only).
    Instance,
}

impl SweepParameter {
    pub fn name(self) -> &'static str {
        match self {
            SweepParameter::Q => "q",
            SweepParameter::Lambda1 => "lambda1",
            SweepParameter::Lambda2 => "lambda2",
            SweepParameter::P => "p",
            SweepParameter::Instance => "instance",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Sweep {
    pub parameter: SweepParameter,
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InfluenceConfig {
    #[serde(default = "default_eps_prime")]
    pub eps_prime: f64,
    pub failure_prob: Option<f64>,
    pub initial_theta: Option<usize>,
    #[serde(default = "default_max_iterations")]
    pub max_iterations: usize,
}

fn default_eps_prime() -> f64 {
    0.1
}
fn default_max_iterations() -> usize {
    20
}

impl Default for InfluenceConfig {
    fn default() -> Self {
        Self {
            eps_prime: default_eps_prime(),
            failure_prob: None,
            initial_theta: None,
            max_iterations: default_max_iterations(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub application: Application,
    #[serde(default)]
    pub seed: u64,
    #[serde(default = "default_output")]
    pub output: PathBuf,
    #[serde(default)]
    pub verify: bool,
    /// Write every trace to `traces.json`.
    #[serde(default)]
    pub save_traces: bool,
    /// Write per-run wall times to `timings.csv`. The other files never
    /// contain timings, so they stay reproducible.
    #[serde(default)]
    pub record_timings: bool,
    pub threads: Option<usize>,
    #[serde(default)]
    pub dataset: DatasetConfig,
    #[serde(default)]
    pub cost: CostConfig,
    pub sweep: Option<Sweep>,
    #[serde(default)]
    pub influence: InfluenceConfig,
    pub algorithms: Vec<AlgorithmSpec>,
}

fn default_output() -> PathBuf {
    PathBuf::from("results")
}

impl ExperimentConfig {
    pub fn from_toml(text: &str) -> anyhow::Result<Self> {
        Ok(toml::from_str(text)?)
    }

    /// Reads, resolves relative paths and validates a manifest.
    pub fn load(path: &Path) -> anyhow::Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        let mut cfg =
            Self::from_toml(&text).with_context(|| format!("parsing config {}", path.display()))?;
        let base = path.parent().unwrap_or(Path::new(""));
        cfg.resolve_paths(base);
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn resolve_paths(&mut self, base: &Path) {
        let fix = |p: &mut Option<PathBuf>| {
            if let Some(p) = p {
                if p.is_relative() {
                    *p = base.join(&*p);
                }
            }
        };
        fix(&mut self.dataset.edges);
        fix(&mut self.dataset.weights);
        fix(&mut self.dataset.features);
        if self.output.is_relative() {
            self.output = base.join(&self.output);
        }
    }

    pub fn validate(&self) -> anyhow::Result<()> {
        ensure!(!self.algorithms.is_empty(), "no algorithms configured");
        for p in [
            &self.dataset.edges,
            &self.dataset.weights,
            &self.dataset.features,
        ]
        .into_iter()
        .flatten()
        {
            ensure!(p.exists(), "dataset file {} does not exist", p.display());
        }
        if let Some(sweep) = &self.sweep {
            ensure!(
                !sweep.values.is_empty(),
                "sweep over {} has no values",
                sweep.parameter.name()
            );
            let allowed: &[SweepParameter] = match self.application {
                Application::Vertexcover => &[SweepParameter::Q],
                Application::Influence => &[SweepParameter::Lambda1, SweepParameter::Lambda2],
                Application::Aoptimal => &[SweepParameter::P, SweepParameter::Instance],
                Application::SyntheticCoverage => &[SweepParameter::Instance],
            };
            ensure!(
                allowed.contains(&sweep.parameter),
                "cannot sweep {} for this application",
                sweep.parameter.name()
            );
            if sweep.parameter == SweepParameter::Q {
                ensure!(
                    sweep.values.iter().all(|&q| q >= 0.0 && q.fract() == 0.0),
                    "q values must be non-negative integers"
                );
            }
        }
        if self.application == Application::SyntheticCoverage {
            ensure!(
                self.dataset.edges.is_none() && self.dataset.features.is_none(),
                "synthetic-coverage takes no dataset files"
            );
        }
        for spec in &self.algorithms {
            spec.algorithm(0)?;
            ensure!(
                spec.repetitions() >= 1,
                "{}: repetitions must be at least 1",
                spec.label()
            );
        }
        Ok(())
    }
}
