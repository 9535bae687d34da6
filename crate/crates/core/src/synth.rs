//! Seeded synthetic instances for tests, benchmarks and the `gen` command.

use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::aoptimal::{standardize, DesignInstance};
use crate::cost::CostVector;
use crate::coverage::WeightedCoverage;
use crate::error::Result;

/// Shape of a random weighted-coverage instance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoverageSpec {
    pub elements: usize,
    pub items: usize,
    /// Probability that an element covers a given item.
    pub density: f64,
    pub cost_range: (f64, f64),
}

impl Default for CoverageSpec {
    fn default() -> Self {
        Self {
            elements: 12,
            items: 20,
            density: 0.2,
            cost_range: (0.1, 2.0),
        }
    }
}

/// Item weights uniform in `[0, 1)`, costs uniform in `cost_range`. Every
/// element covers at least one item.
pub fn random_coverage(spec: &CoverageSpec, seed: u64) -> Result<(WeightedCoverage, CostVector)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let weights: Vec<f64> = (0..spec.items).map(|_| rng.random::<f64>()).collect();
    let covers = (0..spec.elements)
        .map(|_| {
            let mut c: Vec<usize> = (0..spec.items)
                .filter(|_| rng.random_bool(spec.density))
                .collect();
            if c.is_empty() && spec.items > 0 {
                c.push(rng.random_range(0..spec.items));
            }
            c
        })
        .collect();
    let (lo, hi) = spec.cost_range;
    let costs = (0..spec.elements)
        .map(|_| rng.random_range(lo..=hi))
        .collect();
    Ok((
        WeightedCoverage::new(weights, covers)?,
        CostVector::new(costs)?,
    ))
}

/// `m` directed edges with endpoints drawn uniformly, self-loops excluded.
/// Repeated pairs may occur.
pub fn random_digraph(n: usize, m: usize, seed: u64) -> Vec<(usize, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::with_capacity(m);
    if n < 2 {
        return edges;
    }
    while edges.len() < m {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u != v {
            edges.push((u, v));
        }
    }
    edges
}

/// `n` standard-normal measurements in `ℝᵈ`, standardized per attribute,
/// with `Σ = I` and `σ = 1/√d`.
pub fn random_design(n: usize, d: usize, penalty: f64, seed: u64) -> Result<DesignInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows: Vec<Vec<f64>> = (0..n)
        .map(|_| (0..d).map(|_| rng.sample(StandardNormal)).collect())
        .collect();
    if n > 1 {
        standardize(&mut rows);
    }
    let features = nalgebra::DMatrix::from_fn(d, n, |i, j| rows[j][i]);
    DesignInstance::new(features, None, None, penalty)
}
