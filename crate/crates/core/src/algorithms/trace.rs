use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::set::ElementId;

/// Parameters an algorithm ran with. Absent entries are not serialized.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct TraceParams {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decay: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runner: Option<String>,
}

/// Everything an algorithm run produced.
///
/// `prefix_objectives[i]` is `h(S_i) = f(S_i) - c(S_i)` for the prefix made
/// of the first `i` entries of `added`, so it has `added.len() + 1` entries
/// and starts at `h(∅) = 0`. `best` is the earliest prefix attaining the
/// maximum, hence `best_value >= 0`.
///
/// `accept_keys[i]` is the threshold `added[i]` was accepted against: the
/// popped key `τ_i` for UP, the pass threshold for threshold-ROI, the density
/// for γ-ROI and the distorted profit for UDG.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunTrace {
    pub algorithm: String,
    pub params: TraceParams,
    pub added: Vec<ElementId>,
    pub prefix_objectives: Vec<f64>,
    pub oracle_calls: u64,
    pub best: Vec<ElementId>,
    pub best_value: f64,
    pub seed: Option<u64>,
    #[serde(default)]
    pub accept_keys: Vec<f64>,
}

impl RunTrace {
    /// Number of elements in the returned prefix.
    pub fn best_len(&self) -> usize {
        self.best.len()
    }
}

pub(crate) struct TraceBuilder {
    added: Vec<ElementId>,
    prefix_objectives: Vec<f64>,
    accept_keys: Vec<f64>,
}

impl TraceBuilder {
    pub(crate) fn new() -> Self {
        Self {
            added: Vec::new(),
            prefix_objectives: alloc::vec![0.0],
            accept_keys: Vec::new(),
        }
    }

    /// Records an accepted element together with `h` of the new prefix.
    pub(crate) fn record(&mut self, e: ElementId, objective: f64, key: f64) {
        self.added.push(e);
        self.prefix_objectives.push(objective);
        self.accept_keys.push(key);
    }

    pub(crate) fn finish(
        self,
        algorithm: &str,
        params: TraceParams,
        oracle_calls: u64,
        seed: Option<u64>,
    ) -> RunTrace {
        let mut best_len = 0;
        let mut best_value = self.prefix_objectives[0];
        for (i, &v) in self.prefix_objectives.iter().enumerate().skip(1) {
            if v > best_value {
                best_value = v;
                best_len = i;
            }
        }
        RunTrace {
            algorithm: algorithm.into(),
            params,
            best: self.added[..best_len].to_vec(),
            added: self.added,
            prefix_objectives: self.prefix_objectives,
            oracle_calls,
            best_value,
            seed,
            accept_keys: self.accept_keys,
        }
    }
}
