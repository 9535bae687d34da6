//! Maximizers of `h = f - c`. Every algorithm returns a [`RunTrace`] whose
//! output is the best prefix of the elements it accepted.

mod guess;
mod roi;
mod threshold;
mod trace;
mod udg;
mod up;

pub use guess::{
    candidate_ratios, gamma_guess, gamma_guess_runs, guess_rounds, merge_guess_runs, GuessRunner,
};
pub use roi::gamma_roi;
pub use threshold::threshold_roi;
pub use trace::{RunTrace, TraceParams};
pub use udg::{distorted_profit, distortion, udg};
pub use up::{call_budget, evaluation_cap, up_maximize, PqEntry, UpConfig};

use serde::{Deserialize, Serialize};

use crate::cost::CostVector;
use crate::error::Result;
use crate::oracle::{SubmodularityRatio, ValueOracle};

/// Algorithm selector with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "name", rename_all = "kebab-case")]
pub enum Algorithm {
    Up {
        gamma: f64,
        epsilon: f64,
    },
    GammaRoi {
        gamma: f64,
    },
    ThresholdRoi {
        gamma: f64,
        epsilon: f64,
    },
    Udg {
        gamma: f64,
        seed: u64,
    },
    GammaGuess {
        runner: GuessRunner,
        decay: f64,
        epsilon: f64,
    },
}

impl Algorithm {
    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Up { .. } => "up",
            Algorithm::GammaRoi { .. } => "gamma-roi",
            Algorithm::ThresholdRoi { .. } => "threshold-roi",
            Algorithm::Udg { .. } => "udg",
            Algorithm::GammaGuess { .. } => "gamma-guess",
        }
    }

    pub fn run<O: ValueOracle>(&self, oracle: &O, costs: &CostVector) -> Result<RunTrace> {
        match *self {
            Algorithm::Up { gamma, epsilon } => {
                up_maximize(oracle, costs, &UpConfig::new(gamma, epsilon)?)
            }
            Algorithm::GammaRoi { gamma } => {
                gamma_roi(oracle, costs, SubmodularityRatio::new(gamma)?)
            }
            Algorithm::ThresholdRoi { gamma, epsilon } => {
                threshold_roi(oracle, costs, SubmodularityRatio::new(gamma)?, epsilon)
            }
            Algorithm::Udg { gamma, seed } => {
                udg(oracle, costs, SubmodularityRatio::new(gamma)?, seed)
            }
            Algorithm::GammaGuess {
                runner,
                decay,
                epsilon,
            } => gamma_guess(runner, oracle, costs, decay, epsilon).map(|(t, _)| t),
        }
    }
}
