//! γ-ROI: plain density greedy that stops once the best density is no
//! longer above `γ`. Quadratic in oracle calls.

use crate::algorithms::trace::{RunTrace, TraceBuilder, TraceParams};
use crate::cost::CostVector;
use crate::error::Result;
use crate::oracle::{Solution, SubmodularityRatio, ValueOracle};

pub fn gamma_roi<O: ValueOracle>(
    oracle: &O,
    costs: &CostVector,
    gamma: SubmodularityRatio,
) -> Result<RunTrace> {
    let n = oracle.ground_size();
    costs.check_len(n)?;
    let gamma = gamma.get();
    let mut sol = Solution::new(oracle);
    let mut trace = TraceBuilder::new();
    let mut cost = 0.0;

    for _ in 0..n {
        // (density, element, gain); ascending scan + strict > keeps the smaller id on ties
        let mut best: Option<(f64, usize, f64)> = None;
        for u in 0..n {
            if sol.contains(u) {
                continue;
            }
            let gain = sol.gain(u);
            let density = gain / costs.get(u);
            if best.is_none_or(|(d, _, _)| density > d) {
                best = Some((density, u, gain));
            }
        }
        let Some((density, v, gain)) = best else {
            break;
        };
        if gain > gamma * costs.get(v) {
            sol.push(v, gain);
            cost += costs.get(v);
            trace.record(v, sol.value() - cost, density);
        } else {
            break;
        }
    }

    let params = TraceParams {
        gamma: Some(gamma),
        ..TraceParams::default()
    };
    Ok(trace.finish("gamma-roi", params, sol.calls(), None))
}
