//! threshold-ROI: a single global threshold starting at the largest
//! singleton density and decaying by `(1-ε)` after each pass, until it drops
//! to `γ`. Running time depends on the initial density.

use crate::algorithms::trace::{RunTrace, TraceBuilder, TraceParams};
use crate::algorithms::up::check_epsilon;
use crate::cost::CostVector;
use crate::error::Result;
use crate::oracle::{Solution, SubmodularityRatio, ValueOracle};

pub fn threshold_roi<O: ValueOracle>(
    oracle: &O,
    costs: &CostVector,
    gamma: SubmodularityRatio,
    epsilon: f64,
) -> Result<RunTrace> {
    let n = oracle.ground_size();
    costs.check_len(n)?;
    let epsilon = check_epsilon(epsilon)?;
    let gamma = gamma.get();
    let mut sol = Solution::new(oracle);
    let mut trace = TraceBuilder::new();
    let mut cost = 0.0;

    let mut tau = (0..n)
        .map(|e| sol.gain(e) / costs.get(e))
        .fold(0.0, f64::max);
    while tau > gamma {
        for e in 0..n {
            if sol.contains(e) {
                continue;
            }
            // evaluated against the current, possibly grown, solution
            let gain = sol.gain(e);
            if gain / costs.get(e) >= tau {
                sol.push(e, gain);
                cost += costs.get(e);
                trace.record(e, sol.value() - cost, tau);
            }
        }
        tau *= 1.0 - epsilon;
    }

    let params = TraceParams {
        gamma: Some(gamma),
        epsilon: Some(epsilon),
        ..TraceParams::default()
    };
    Ok(trace.finish("threshold-roi", params, sol.calls(), None))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::Modular;
    use alloc::vec;

    #[test]
    fn single_element_hand_trace() {
        let f = Modular::new(vec![2.0]).unwrap();
        let c = CostVector::new(vec![1.0]).unwrap();
        let t = threshold_roi(&f, &c, SubmodularityRatio::SUBMODULAR, 0.5).unwrap();
        assert_eq!(t.added, vec![0]);
        assert_eq!(t.accept_keys, vec![2.0]);
        assert_eq!(t.best_value, 1.0);
        // tau_0 plus one evaluation in the first pass; tau then drops to 1
        assert_eq!(t.oracle_calls, 2);
    }

    #[test]
    fn empty_and_all_zero_instances() {
        let f = Modular::new(vec![]).unwrap();
        let c = CostVector::new(vec![]).unwrap();
        let t = threshold_roi(&f, &c, SubmodularityRatio::SUBMODULAR, 0.1).unwrap();
        assert!(t.best.is_empty());
        let f = Modular::new(vec![0.0, 0.0]).unwrap();
        let c = CostVector::uniform(2, 1.0).unwrap();
        let t = threshold_roi(&f, &c, SubmodularityRatio::SUBMODULAR, 0.1).unwrap();
        assert!(t.added.is_empty());
        assert_eq!(t.oracle_calls, 2);
    }
}
