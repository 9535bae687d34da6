//! Brute-force bound verification on small seeded instances.
//!
//! Every check computes the optimum `OPT` by enumeration, evaluates the
//! guarantee of the algorithm under test and compares it with the objective
//! of the returned set, measured on the exact function.

use std::fmt;
use std::path::Path;

use anyhow::Context;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use regmax_core::algorithms::call_budget;
use regmax_core::bounds::{noisy_up_bound, roi_bound, up_bound};
use regmax_core::brute::{brute_force_opt, empirical_submodularity_ratio};
use regmax_core::synth::{random_coverage, random_design, CoverageSpec};
use regmax_core::{
    gamma_roi, objective, threshold_roi, up_maximize, CostVector, ElementSet, NoisyOracle,
    RunTrace, SubmodularityRatio, UpConfig, ValueOracle,
};

use crate::{derive_seed, streams};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Coverage instances per suite.
    pub instances: usize,
    pub elements: usize,
    pub cost_range: (f64, f64),
    pub up_epsilons: Vec<f64>,
    pub threshold_epsilons: Vec<f64>,
    pub roi: bool,
    pub noise_deltas: Vec<f64>,
    /// A-optimal instances, with γ set to their empirical ratio.
    pub aoptimal_instances: usize,
    pub aoptimal_elements: usize,
    pub aoptimal_dim: usize,
    pub aoptimal_penalty: f64,
    pub aoptimal_epsilon: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            instances: 200,
            elements: 12,
            cost_range: (0.1, 2.0),
            up_epsilons: vec![0.1, 0.3, 0.5],
            threshold_epsilons: vec![0.1, 0.5],
            roi: true,
            noise_deltas: vec![0.01, 0.05],
            aoptimal_instances: 50,
            aoptimal_elements: 8,
            aoptimal_dim: 3,
            aoptimal_penalty: 0.5,
            aoptimal_epsilon: 0.1,
        }
    }
}

impl VerifyConfig {
    pub fn load(path: &Path) -> anyhow::Result<Self> {
        let text =
            std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        toml::from_str(&text).with_context(|| format!("parsing {}", path.display()))
    }

    pub fn coverage_spec(&self) -> CoverageSpec {
        CoverageSpec {
            elements: self.elements,
            cost_range: self.cost_range,
            ..CoverageSpec::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundCheck {
    pub suite: &'static str,
    pub instance: usize,
    pub gamma: f64,
    pub epsilon: Option<f64>,
    pub delta: Option<f64>,
    /// `f(S̃) - c(S̃)` on the exact function.
    pub value: f64,
    pub opt_value: f64,
    pub bound: Option<f64>,
    pub slack: Option<f64>,
    pub oracle_calls: u64,
    pub call_budget: Option<u64>,
    pub status: Status,
    pub reason: Option<&'static str>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteSummary {
    pub suite: &'static str,
    pub epsilon: Option<f64>,
    pub delta: Option<f64>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub budget_violations: usize,
    pub min_slack: Option<f64>,
}

impl fmt::Display for SuiteSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.suite)?;
        if let Some(e) = self.epsilon {
            write!(f, " eps={e}")?;
        }
        if let Some(d) = self.delta {
            write!(f, " delta={d}")?;
        }
        write!(
            f,
            ": {} passed, {} failed, {} skipped",
            self.passed, self.failed, self.skipped
        )?;
        if self.budget_violations > 0 {
            write!(f, ", {} call-budget violations", self.budget_violations)?;
        }
        if let Some(s) = self.min_slack {
            write!(f, ", min slack {s:.6}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Report {
    pub checks: Vec<BoundCheck>,
}

impl Report {
    pub fn summaries(&self) -> Vec<SuiteSummary> {
        let mut out: Vec<SuiteSummary> = Vec::new();
        for c in &self.checks {
            let pos = out
                .iter()
                .position(|s| s.suite == c.suite && s.epsilon == c.epsilon && s.delta == c.delta);
            let s = match pos {
                Some(i) => &mut out[i],
                None => {
                    out.push(SuiteSummary {
                        suite: c.suite,
                        epsilon: c.epsilon,
                        delta: c.delta,
                        passed: 0,
                        failed: 0,
                        skipped: 0,
                        budget_violations: 0,
                        min_slack: None,
                    });
                    out.last_mut().unwrap()
                }
            };
            match c.status {
                Status::Pass => s.passed += 1,
                Status::Fail => s.failed += 1,
                Status::Skipped => s.skipped += 1,
            }
            if c.call_budget.is_some_and(|b| c.oracle_calls > b) {
                s.budget_violations += 1;
            }
            if let Some(slack) = c.slack {
                s.min_slack = Some(s.min_slack.map_or(slack, |m: f64| m.min(slack)));
            }
        }
        out
    }

    /// No failed bound and no call-budget violation.
    pub fn all_passed(&self) -> bool {
        self.checks
            .iter()
            .all(|c| c.status != Status::Fail && c.call_budget.is_none_or(|b| c.oracle_calls <= b))
    }

    pub fn write_csv(&self, path: &Path) -> anyhow::Result<()> {
        let mut w =
            csv::Writer::from_path(path).with_context(|| format!("writing {}", path.display()))?;
        for c in &self.checks {
            w.serialize(c)?;
        }
        w.flush()?;
        Ok(())
    }
}

struct Optimum {
    value: f64,
    f: f64,
    c: f64,
}

fn optimum<O: ValueOracle>(f: &O, c: &CostVector) -> anyhow::Result<Optimum> {
    let (set, value) = brute_force_opt(f, c)?;
    Ok(Optimum {
        value,
        f: f.value(&set),
        c: c.of_set(&set),
    })
}

/// Builds a check; `bound` is `None` when the optimum is empty.
#[allow(clippy::too_many_arguments)]
fn check<O: ValueOracle>(
    suite: &'static str,
    instance: usize,
    f: &O,
    c: &CostVector,
    opt: &Optimum,
    trace: &RunTrace,
    bound: Option<f64>,
    gamma: f64,
    epsilon: Option<f64>,
    delta: Option<f64>,
    budget: Option<u64>,
) -> BoundCheck {
    let n = f.ground_size();
    let best = ElementSet::from_members(n, &trace.best).expect("trace members are valid");
    let value = objective(f, c, &best);
    let (status, reason) = match bound {
        Some(b) if value >= b => (Status::Pass, None),
        Some(_) => (Status::Fail, None),
        None => (Status::Skipped, Some("empty optimum")),
    };
    BoundCheck {
        suite,
        instance,
        gamma,
        epsilon,
        delta,
        value,
        opt_value: opt.value,
        bound,
        slack: bound.map(|b| value - b),
        oracle_calls: trace.oracle_calls,
        call_budget: budget,
        status,
        reason,
    }
}

fn coverage_checks(cfg: &VerifyConfig, i: usize) -> anyhow::Result<Vec<BoundCheck>> {
    let (f, c) = random_coverage(
        &cfg.coverage_spec(),
        derive_seed(cfg.seed, streams::COVERAGE, i as u64),
    )?;
    let n = f.ground_size();
    let opt = optimum(&f, &c)?;
    let mut out = Vec::new();
    for &eps in &cfg.up_epsilons {
        let t = up_maximize(&f, &c, &UpConfig::new(1.0, eps)?)?;
        let b = up_bound(1.0, eps, opt.f, opt.c);
        let budget = Some(call_budget(n, 1.0, eps));
        out.push(check(
            "up",
            i,
            &f,
            &c,
            &opt,
            &t,
            b,
            1.0,
            Some(eps),
            None,
            budget,
        ));
    }
    if cfg.roi {
        let t = gamma_roi(&f, &c, SubmodularityRatio::SUBMODULAR)?;
        let b = roi_bound(1.0, opt.f, opt.c);
        out.push(check(
            "gamma-roi",
            i,
            &f,
            &c,
            &opt,
            &t,
            b,
            1.0,
            None,
            None,
            None,
        ));
    }
    for &eps in &cfg.threshold_epsilons {
        let t = threshold_roi(&f, &c, SubmodularityRatio::SUBMODULAR, eps)?;
        let b = up_bound(1.0, eps, opt.f, opt.c);
        out.push(check(
            "threshold-roi",
            i,
            &f,
            &c,
            &opt,
            &t,
            b,
            1.0,
            Some(eps),
            None,
            None,
        ));
    }
    for &delta in &cfg.noise_deltas {
        let noisy = NoisyOracle::new(&f, delta, derive_seed(cfg.seed, streams::NOISE, i as u64))?;
        for &eps in &cfg.up_epsilons {
            let t = up_maximize(&noisy, &c, &UpConfig::new(1.0, eps)?)?;
            let b = noisy_up_bound(1.0, eps, delta, n, c.min(), c.max(), opt.f, opt.c);
            let budget = Some(call_budget(n, 1.0, eps));
            out.push(check(
                "up-noisy",
                i,
                &f,
                &c,
                &opt,
                &t,
                b,
                1.0,
                Some(eps),
                Some(delta),
                budget,
            ));
        }
    }
    Ok(out)
}

fn design_check(cfg: &VerifyConfig, i: usize) -> anyhow::Result<BoundCheck> {
    let f = random_design(
        cfg.aoptimal_elements,
        cfg.aoptimal_dim,
        cfg.aoptimal_penalty,
        derive_seed(cfg.seed, streams::DESIGN, i as u64),
    )?;
    let c = f.ao_cost()?;
    let gamma = empirical_submodularity_ratio(&f)?;
    let opt = optimum(&f, &c)?;
    let eps = cfg.aoptimal_epsilon;
    let t = up_maximize(&f, &c, &UpConfig::new(gamma, eps)?)?;
    let b = up_bound(gamma, eps, opt.f, opt.c);
    let budget = Some(call_budget(f.ground_size(), gamma, eps));
    Ok(check(
        "aoptimal-up",
        i,
        &f,
        &c,
        &opt,
        &t,
        b,
        gamma,
        Some(eps),
        None,
        budget,
    ))
}

/// Runs every configured suite. Checks are ordered by suite, then by
/// instance, independent of scheduling.
pub fn verify_bounds(cfg: &VerifyConfig) -> anyhow::Result<Report> {
    let coverage = (0..cfg.instances)
        .into_par_iter()
        .map(|i| coverage_checks(cfg, i))
        .collect::<anyhow::Result<Vec<_>>>()?;
    let design = (0..cfg.aoptimal_instances)
        .into_par_iter()
        .map(|i| design_check(cfg, i))
        .collect::<anyhow::Result<Vec<_>>>()?;
    let mut checks: Vec<BoundCheck> = coverage.into_iter().flatten().collect();
    checks.extend(design);
    // group by suite and parameters, keeping instance order inside a group
    checks.sort_by(|a, b| {
        let key = |c: &BoundCheck| {
            (
                c.suite,
                c.delta.map(f64::to_bits),
                c.epsilon.map(f64::to_bits),
            )
        };
        key(a).cmp(&key(b)).then(a.instance.cmp(&b.instance))
    });
    for c in &checks {
        if c.status == Status::Skipped {
            log::info!(
                "{} instance {}: skipped ({})",
                c.suite,
                c.instance,
                c.reason.unwrap_or("")
            );
        }
    }
    Ok(Report { checks })
}
