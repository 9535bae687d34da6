//! Adaptive profit-maximization framework over RR-set estimators.
//!
//! Each iteration samples two independent collections `R₁`, `R₂` of size
//! `θ`, runs the inner algorithm on `f_{R₁}`, and validates the solution on
//! `f_{R₂}` through the error terms `ε₁` and `ε₂`. `θ` doubles until the
//! validation passes or `θ` exceeds the sample budget.

use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use super::{sample_rr_sets, DegreeCost, DiffusionGraph};
use crate::algorithms::Algorithm;
use crate::error::{Error, Result};
use crate::set::ElementSet;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PmConfig {
    /// Error threshold `ε'` in `(0, 1)`.
    pub eps_prime: f64,
    /// Failure probability; `1/n` when absent.
    pub failure_prob: Option<f64>,
    /// `θ₀`; `n` when absent.
    pub initial_theta: Option<usize>,
    /// Runs on the `f_{R₁}` oracle, normally UP with `γ = 1`, `ε = ε'`.
    pub inner: Algorithm,
    pub seed: u64,
    /// Hard stop on the number of doublings.
    pub max_iterations: usize,
}

impl PmConfig {
    pub fn new(eps_prime: f64, inner: Algorithm, seed: u64) -> Self {
        Self {
            eps_prime,
            failure_prob: None,
            initial_theta: None,
            inner,
            seed,
            max_iterations: 32,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IterationStatus {
    /// All stopping conditions held.
    Accepted,
    /// Quantities were well defined but the stopping test failed.
    Rejected,
    /// `f_{R₂}(S) - c(S) <= 0`, so `t` is undefined.
    NonPositiveDenominator,
    /// A quadratic had no positive real root.
    NoPositiveRoot,
}

/// Diagnostics of one iteration. `ε₂` is computed with `S° = S`, the
/// solution of the same iteration; `eps2_profit` is the value
/// `f_{R₂}(S) - (1+ε₁) c(S)` that went into it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PmIteration {
    pub iteration: usize,
    pub theta: usize,
    pub solution: Vec<usize>,
    pub cost: f64,
    pub estimate_r1: f64,
    pub estimate_r2: f64,
    pub t: Option<f64>,
    pub eps1: Option<f64>,
    pub eps2: Option<f64>,
    pub eps2_profit: Option<f64>,
    pub oracle_calls: u64,
    pub status: IterationStatus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum StopReason {
    Accepted,
    /// `θ` exceeded the sample budget of the while-condition.
    BudgetExceeded,
    IterationCap,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PmOutcome {
    pub solution: Vec<usize>,
    pub iterations: Vec<PmIteration>,
    pub stop: StopReason,
    pub oracle_calls: u64,
}

impl PmOutcome {
    /// `f_{R₂}(S) - c(S)` of the final iteration, or 0 if none ran.
    pub fn validated_profit(&self) -> f64 {
        self.iterations
            .last()
            .map_or(0.0, |it| it.estimate_r2 - it.cost)
    }
}

/// Greater real root of `a x² + b x + c = 0` (the only root if `a = 0`).
pub fn larger_root(a: f64, b: f64, c: f64) -> Option<f64> {
    if a == 0.0 {
        return if b == 0.0 { None } else { Some(-c / b) };
    }
    let disc = b * b - 4.0 * a * c;
    if disc < 0.0 || !disc.is_finite() {
        return None;
    }
    let sq = libm::sqrt(disc);
    let q = -0.5 * (b + if b >= 0.0 { sq } else { -sq });
    let r1 = q / a;
    let r2 = if q != 0.0 { c / q } else { r1 };
    Some(r1.max(r2))
}

/// Derives an independent 64-bit stream seed.
fn stream_seed(base: u64, stream: u64) -> u64 {
    let mut x = base ^ stream.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

pub fn pm_maximize(g: &DiffusionGraph, cost: &DegreeCost, cfg: &PmConfig) -> Result<PmOutcome> {
    let n = g.node_count();
    if n == 0 {
        return Err(Error::Empty("diffusion graph"));
    }
    let eps_prime = cfg.eps_prime;
    if !(eps_prime > 0.0 && eps_prime < 1.0) {
        return Err(Error::InvalidParameter {
            what: "eps_prime",
            range: "(0, 1)",
            value: eps_prime,
        });
    }
    let delta = cfg.failure_prob.unwrap_or(1.0 / n as f64);
    if !(delta > 0.0 && delta < 1.0) && n > 1 {
        return Err(Error::InvalidParameter {
            what: "failure probability",
            range: "(0, 1)",
            value: delta,
        });
    }
    let costs = cost.costs(g);
    let nf = n as f64;
    // log 6/δ + n log 2 in the sample budget
    let budget_log = libm::log(6.0 / delta) + nf * core::f64::consts::LN_2;

    let mut theta = cfg.initial_theta.unwrap_or(n).max(1);
    let mut eps1: f64 = 0.0;
    let mut validated: f64 = 0.0; // f_{R₂}(S) for the latest S
    let mut cost_s: f64 = 0.0;
    let mut solution: Vec<usize> = Vec::new();
    let mut iterations = Vec::new();
    let mut calls = 0;
    let mut stop = StopReason::IterationCap;

    for i in 1..=cfg.max_iterations {
        let margin = (validated - (1.0 + eps1) * cost_s).max(1.0);
        let budget = (8.0 + 2.0 * eps_prime) * (1.0 + eps1) * nf * budget_log
            / (eps_prime * eps_prime * margin);
        if theta as f64 > budget {
            stop = StopReason::BudgetExceeded;
            break;
        }

        let r1 = sample_rr_sets(g, theta, stream_seed(cfg.seed, 2 * i as u64))?;
        let r2 = sample_rr_sets(g, theta, stream_seed(cfg.seed, 2 * i as u64 + 1))?;
        let trace = cfg.inner.run(&r1, &costs)?;
        calls += trace.oracle_calls;
        let set = ElementSet::from_members(n, &trace.best)?;
        cost_s = costs.of_set(&set);
        let estimate_r1 = r1.coverage_value(&set);
        validated = r2.coverage_value(&set);
        solution = trace.best;

        let denom = validated - cost_s;
        let t = (denom > 0.0).then(|| (estimate_r1 - cost_s) / denom);
        let log_term = libm::log(6.0 * (i * i) as f64 / delta);
        let scale = theta as f64 / nf / log_term;
        // (ε₁+1)(ε₁+2)/ε₁² = K₁  <=>  (K₁-1)ε₁² - 3ε₁ - 2 = 0
        let k1 = validated * scale;
        let new_eps1 = larger_root(k1 - 1.0, -3.0, -2.0).filter(|&e| e > 0.0);
        // 2(ε₁+1)/ε₂² = K₂  <=>  K₂ε₂² - 2(ε₁+1) = 0
        let (eps2, eps2_profit) = match new_eps1 {
            Some(e1) => {
                let profit = validated - (1.0 + e1) * cost_s;
                let k2 = profit * scale;
                (
                    larger_root(k2, 0.0, -2.0 * (e1 + 1.0)).filter(|&e| e > 0.0),
                    Some(profit),
                )
            }
            None => (None, None),
        };
        if let Some(e1) = new_eps1 {
            eps1 = e1;
        }

        let status = match (t, new_eps1, eps2) {
            (None, _, _) => IterationStatus::NonPositiveDenominator,
            (_, None, _) | (_, _, None) => IterationStatus::NoPositiveRoot,
            (Some(t), Some(e1), Some(e2)) => {
                if t > 0.0 && (t - 1.0) / t + e1 + e2 <= eps_prime && e1 + e2 <= eps_prime {
                    IterationStatus::Accepted
                } else {
                    IterationStatus::Rejected
                }
            }
        };
        let accepted = status == IterationStatus::Accepted;
        iterations.push(PmIteration {
            iteration: i,
            theta,
            solution: solution.clone(),
            cost: cost_s,
            estimate_r1,
            estimate_r2: validated,
            t,
            eps1: new_eps1,
            eps2,
            eps2_profit,
            oracle_calls: trace.oracle_calls,
            status,
        });
        if accepted {
            stop = StopReason::Accepted;
            break;
        }
        theta *= 2;
    }

    Ok(PmOutcome {
        solution,
        iterations,
        stop,
        oracle_calls: calls,
    })
}
