//! γ-Guess: when the submodularity ratio is unknown, run the inner algorithm
//! for every `γ_r = (1-δ)^r`, `r = 0..=T` with `T = ⌈(1/δ) ln(1/δ)⌉`, and keep
//! the best result.

use alloc::string::ToString;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::algorithms::trace::RunTrace;
use crate::algorithms::udg::udg;
use crate::algorithms::up::{up_maximize, UpConfig};
use crate::cost::CostVector;
use crate::error::{Error, Result};
use crate::oracle::{SubmodularityRatio, ValueOracle};

/// Inner algorithm of [`gamma_guess`]. UDG round `r` uses seed `seed + r`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "kebab-case")]
pub enum GuessRunner {
    Up,
    Udg { seed: u64 },
}

/// `T = ⌈(1/δ) ln(1/δ)⌉`; the sweep makes `T + 1` inner runs.
pub fn guess_rounds(decay: f64) -> Result<u64> {
    if !(decay > 0.0 && decay < 1.0) {
        return Err(Error::InvalidParameter {
            what: "decay",
            range: "(0, 1)",
            value: decay,
        });
    }
    Ok(libm::ceil(libm::log(1.0 / decay) / decay) as u64)
}

/// The candidate ratios `γ_0 = 1, γ_1, ..., γ_T`.
pub fn candidate_ratios(decay: f64) -> Result<impl Iterator<Item = f64>> {
    let t = guess_rounds(decay)?;
    Ok((0..=t).map(move |r| libm::pow(1.0 - decay, r as f64)))
}

/// Returns the best inner trace (ties keep the larger `γ`) and the total
/// number of oracle calls over all inner runs. The returned trace carries
/// that total in `oracle_calls` and the winning `γ_r` in its params.
/// Every inner run of the sweep, in order of decreasing `γ_r`.
pub fn gamma_guess_runs<O: ValueOracle>(
    runner: GuessRunner,
    oracle: &O,
    costs: &CostVector,
    decay: f64,
    epsilon: f64,
) -> Result<Vec<RunTrace>> {
    candidate_ratios(decay)?
        .enumerate()
        .map(|(r, gamma)| match runner {
            GuessRunner::Up => up_maximize(oracle, costs, &UpConfig::new(gamma, epsilon)?),
            GuessRunner::Udg { seed } => udg(
                oracle,
                costs,
                SubmodularityRatio::new(gamma)?,
                seed.wrapping_add(r as u64),
            ),
        })
        .collect()
}

/// The best inner run, relabelled as `gamma-guess`, and the total number of
/// oracle calls over all inner runs (also stored in the returned trace).
/// Ties keep the run with the larger `γ_r`.
pub fn gamma_guess<O: ValueOracle>(
    runner: GuessRunner,
    oracle: &O,
    costs: &CostVector,
    decay: f64,
    epsilon: f64,
) -> Result<(RunTrace, u64)> {
    let runs = gamma_guess_runs(runner, oracle, costs, decay, epsilon)?;
    Ok(merge_guess_runs(runs, decay, epsilon))
}

/// Folds the inner runs of [`gamma_guess_runs`] into the `gamma-guess` trace.
pub fn merge_guess_runs(runs: Vec<RunTrace>, decay: f64, epsilon: f64) -> (RunTrace, u64) {
    let total = runs.iter().map(|t| t.oracle_calls).sum();
    let mut best: Option<RunTrace> = None;
    for trace in runs {
        if best
            .as_ref()
            .is_none_or(|b| trace.best_value > b.best_value)
        {
            best = Some(trace);
        }
    }
    let mut trace = best.expect("at least one candidate ratio");
    trace.params.runner = Some(trace.algorithm.clone());
    trace.params.decay = Some(decay);
    if trace.algorithm == "up" {
        trace.params.epsilon = Some(epsilon);
    }
    trace.algorithm = "gamma-guess".to_string();
    trace.oracle_calls = total;
    (trace, total)
}
