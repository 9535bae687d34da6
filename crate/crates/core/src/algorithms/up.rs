//! UP: per-element thresholds kept in a max-priority queue.
//!
//! The queue is seeded with singleton densities. Each round pops the top
//! entry `(τ, v)`, re-evaluates the density of `v` against the current
//! solution and accepts it if the fresh density is at least
//! `max{γ, (1-ε)τ}`. Otherwise `v` goes back into the queue under its fresh
//! density, unless it has used up its evaluation allowance or the fresh
//! density no longer exceeds `γ`.

use alloc::collections::BinaryHeap;
use alloc::vec;
use core::cmp::Ordering;

use crate::algorithms::trace::{RunTrace, TraceBuilder, TraceParams};
use crate::cost::CostVector;
use crate::error::{Error, Result};
use crate::oracle::{Solution, SubmodularityRatio, ValueOracle};
use crate::set::ElementId;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UpConfig {
    pub gamma: SubmodularityRatio,
    pub epsilon: f64,
}

impl UpConfig {
    pub fn new(gamma: f64, epsilon: f64) -> Result<Self> {
        Ok(Self {
            gamma: SubmodularityRatio::new(gamma)?,
            epsilon: check_epsilon(epsilon)?,
        })
    }
}

pub(crate) fn check_epsilon(epsilon: f64) -> Result<f64> {
    if epsilon > 0.0 && epsilon < 1.0 {
        Ok(epsilon)
    } else {
        Err(Error::InvalidParameter {
            what: "epsilon",
            range: "(0, 1)",
            value: epsilon,
        })
    }
}

/// Maximum number of re-evaluations of a single element:
/// `⌈ln(n / (γε)) / ε⌉` (natural log).
pub fn evaluation_cap(n: usize, gamma: f64, epsilon: f64) -> u64 {
    if n == 0 {
        return 0;
    }
    let cap = libm::ceil(libm::log(n as f64 / (gamma * epsilon)) / epsilon);
    if cap > 0.0 {
        cap as u64
    } else {
        0
    }
}

/// Upper bound on UP's oracle calls: `n` singleton evaluations plus at most
/// [`evaluation_cap`] re-evaluations per element.
pub fn call_budget(n: usize, gamma: f64, epsilon: f64) -> u64 {
    n as u64 * (1 + evaluation_cap(n, gamma, epsilon))
}

/// Queue entry keyed by the density recorded when it was pushed. Larger keys
/// come first; among equal keys the smaller element id does.
#[derive(Debug, Clone, Copy)]
pub struct PqEntry {
    pub key: f64,
    pub element: ElementId,
}

impl PartialEq for PqEntry {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for PqEntry {}

impl PartialOrd for PqEntry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PqEntry {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key
            .total_cmp(&other.key)
            .then_with(|| other.element.cmp(&self.element))
    }
}

pub fn up_maximize<O: ValueOracle>(
    oracle: &O,
    costs: &CostVector,
    cfg: &UpConfig,
) -> Result<RunTrace> {
    let n = oracle.ground_size();
    costs.check_len(n)?;
    let gamma = cfg.gamma.get();
    let epsilon = check_epsilon(cfg.epsilon)?;
    let cap = evaluation_cap(n, gamma, epsilon);

    let mut sol = Solution::new(oracle);
    let mut trace = TraceBuilder::new();
    let mut evaluations = vec![0u64; n];
    let mut queue: BinaryHeap<PqEntry> = (0..n)
        .map(|e| PqEntry {
            key: sol.gain(e) / costs.get(e),
            element: e,
        })
        .collect();
    let mut cost = 0.0;

    while let Some(PqEntry {
        key: tau,
        element: v,
    }) = queue.pop()
    {
        // Every remaining key is <= the top, so pruning keys <= γ empties
        // the queue.
        if tau <= gamma {
            break;
        }
        evaluations[v] += 1;
        let gain = sol.gain(v);
        let fresh = gain / costs.get(v);
        if fresh >= gamma.max((1.0 - epsilon) * tau) {
            sol.push(v, gain);
            cost += costs.get(v);
            trace.record(v, sol.value() - cost, tau);
            continue;
        }
        if evaluations[v] < cap && fresh > gamma {
            queue.push(PqEntry {
                key: fresh,
                element: v,
            });
        }
    }

    let params = TraceParams {
        gamma: Some(gamma),
        epsilon: Some(epsilon),
        ..TraceParams::default()
    };
    Ok(trace.finish("up", params, sol.calls(), None))
}
