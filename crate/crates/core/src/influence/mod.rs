//! Profit maximization under the independent cascade model: diffusion
//! graphs, reverse-reachable (RR) set sampling, the RR coverage estimator of
//! expected spread, the out-degree cost and the adaptive PM framework.

mod pm;
mod rrset;

pub use pm::{
    larger_root, pm_maximize, IterationStatus, PmConfig, PmIteration, PmOutcome, StopReason,
};
pub use rrset::{sample_rr_sets, RRSetCollection};

use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::cost::CostVector;
use crate::error::{Error, Result};

/// Directed graph with an activation probability on every edge, stored as
/// in-adjacency lists for reverse traversal.
#[derive(Debug, Clone, PartialEq)]
pub struct DiffusionGraph {
    in_offsets: Vec<usize>,
    in_sources: Vec<usize>,
    in_probs: Vec<f64>,
    out_degree: Vec<usize>,
}

impl DiffusionGraph {
    /// Edges are `(u, v, p)`. A missing `p` defaults to the weighted-cascade
    /// value `1 / in-degree(v)`. Parallel edges are kept as independent
    /// activation chances.
    pub fn new(n: usize, edges: &[(usize, usize, Option<f64>)]) -> Result<Self> {
        let mut in_degree = vec![0usize; n];
        let mut out_degree = vec![0usize; n];
        for (i, &(u, v, p)) in edges.iter().enumerate() {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::ElementOutOfRange { element: x, n });
                }
            }
            if let Some(p) = p {
                if !(0.0..=1.0).contains(&p) {
                    return Err(Error::InvalidCost {
                        element: i,
                        value: p,
                    });
                }
            }
            in_degree[v] += 1;
            out_degree[u] += 1;
        }
        let mut in_offsets = vec![0usize; n + 1];
        for v in 0..n {
            in_offsets[v + 1] = in_offsets[v] + in_degree[v];
        }
        let mut fill = in_offsets.clone();
        let mut in_sources = vec![0usize; edges.len()];
        let mut in_probs = vec![0.0; edges.len()];
        for &(u, v, p) in edges {
            let slot = fill[v];
            fill[v] += 1;
            in_sources[slot] = u;
            in_probs[slot] = p.unwrap_or(1.0 / in_degree[v] as f64);
        }
        Ok(Self {
            in_offsets,
            in_sources,
            in_probs,
            out_degree,
        })
    }

    pub fn node_count(&self) -> usize {
        self.out_degree.len()
    }

    pub fn edge_count(&self) -> usize {
        self.in_sources.len()
    }

    /// `(u, p(u, v))` for every edge `u -> v`.
    pub fn in_edges(&self, v: usize) -> impl Iterator<Item = (usize, f64)> + '_ {
        let range = self.in_offsets[v]..self.in_offsets[v + 1];
        self.in_sources[range.clone()]
            .iter()
            .copied()
            .zip(self.in_probs[range].iter().copied())
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.out_degree[u]
    }
}

/// `c(v) = λ₁ · d(v)^λ₂` with `d(v)` the out-degree, and `c(v) = 1` for
/// nodes without out-edges.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DegreeCost {
    pub lambda1: f64,
    pub lambda2: f64,
}

impl DegreeCost {
    pub fn new(lambda1: f64, lambda2: f64) -> Result<Self> {
        for (what, value) in [("lambda1", lambda1), ("lambda2", lambda2)] {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::InvalidParameter {
                    what,
                    range: "(0, inf)",
                    value,
                });
            }
        }
        Ok(Self { lambda1, lambda2 })
    }

    pub fn cost(&self, out_degree: usize) -> f64 {
        if out_degree == 0 {
            1.0
        } else {
            self.lambda1 * libm::pow(out_degree as f64, self.lambda2)
        }
    }

    pub fn costs(&self, g: &DiffusionGraph) -> CostVector {
        let costs = (0..g.node_count())
            .map(|v| self.cost(g.out_degree(v)))
            .collect();
        CostVector::new(costs).expect("positive parameters give positive costs")
    }
}
