//! Unconstrained distorted greedy: `n` rounds, each drawing one element
//! uniformly at random and keeping it if its distorted profit
//! `(1 - γ/n)^(n-i-1) f(e|S) - c(e)` is positive. Guarantees hold only in
//! expectation.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algorithms::trace::{RunTrace, TraceBuilder, TraceParams};
use crate::cost::CostVector;
use crate::error::Result;
use crate::oracle::{Solution, SubmodularityRatio, ValueOracle};

/// Distortion factor `(1 - γ/n)^(n-i-1)` for round `i` in `0..n`.
pub fn distortion(n: usize, round: usize, gamma: f64) -> f64 {
    let exponent = (n - round - 1) as f64;
    libm::pow(1.0 - gamma / n as f64, exponent)
}

/// `(1 - γ/n)^(n-i-1) · gain - cost`.
pub fn distorted_profit(n: usize, round: usize, gamma: f64, gain: f64, cost: f64) -> f64 {
    distortion(n, round, gamma) * gain - cost
}

pub fn udg<O: ValueOracle>(
    oracle: &O,
    costs: &CostVector,
    gamma: SubmodularityRatio,
    seed: u64,
) -> Result<RunTrace> {
    let n = oracle.ground_size();
    costs.check_len(n)?;
    let gamma = gamma.get();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sol = Solution::new(oracle);
    let mut trace = TraceBuilder::new();
    let mut cost = 0.0;

    for round in 0..n {
        let e = rng.random_range(0..n);
        if sol.contains(e) {
            continue;
        }
        let gain = sol.gain(e);
        let profit = distorted_profit(n, round, gamma, gain, costs.get(e));
        if profit > 0.0 {
            sol.push(e, gain);
            cost += costs.get(e);
            trace.record(e, sol.value() - cost, profit);
        }
    }

    let params = TraceParams {
        gamma: Some(gamma),
        ..TraceParams::default()
    };
    Ok(trace.finish("udg", params, sol.calls(), Some(seed)))
}
