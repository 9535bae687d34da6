//! Maximization of `h = f - c` where `f` is a monotone, normalized,
//! γ-weakly submodular set function and `c` a positive modular cost.
//!
//! The crate is `no_std` (it needs `alloc`). It provides:
//!
//! - oracle plumbing: [`ValueOracle`], [`Counted`], [`NoisyOracle`], costs
//!   and element sets;
//! - the algorithms in [`algorithms`], all returning a [`RunTrace`];
//! - application oracles: [`vertexcover`], [`influence`], [`aoptimal`];
//! - brute-force ground truth in [`brute`] and the approximation bounds in
//!   [`bounds`] used to check algorithm output on small instances.
//!
//! ```
//! use regmax_core::{up_maximize, CostVector, UpConfig, WeightedCoverage};
//!
//! let f = WeightedCoverage::new(vec![1.0, 1.0, 1.0], vec![vec![0, 1], vec![1, 2]]).unwrap();
//! let c = CostVector::new(vec![0.5, 1.5]).unwrap();
//! let trace = up_maximize(&f, &c, &UpConfig::new(1.0, 0.1).unwrap()).unwrap();
//! assert_eq!(trace.best, vec![0]);
//! assert_eq!(trace.best_value, 1.5);
//! ```

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algorithms;
pub mod aoptimal;
pub mod bounds;
pub mod brute;
pub mod cost;
pub mod coverage;
pub mod error;
pub mod influence;
pub mod noisy;
pub mod oracle;
pub mod set;
pub mod synth;
pub mod vertexcover;

pub use algorithms::{
    gamma_guess, gamma_roi, threshold_roi, udg, up_maximize, Algorithm, GuessRunner, RunTrace,
    UpConfig,
};
pub use aoptimal::{DesignInstance, PosteriorState};
pub use brute::{brute_force_opt, empirical_submodularity_ratio};
pub use cost::CostVector;
pub use coverage::WeightedCoverage;
pub use error::{Error, Result};
pub use influence::{DegreeCost, DiffusionGraph, RRSetCollection};
pub use noisy::NoisyOracle;
pub use oracle::{
    density, marginal_gain, objective, Counted, Modular, Solution, SubmodularityRatio, ValueOracle,
};
pub use set::{ElementId, ElementSet, GroundSet};
pub use vertexcover::CoverInstance;
