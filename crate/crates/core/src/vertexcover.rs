//! Weighted directed vertex cover with the out-degree cost penalty.
//!
//! `f(S) = Σ_{u ∈ S ∪ N(S)} w(u)` where `N(S)` are the out-neighbours of `S`,
//! and `c(v) = 1 + max{d(v) - q, 0}` with `d(v)` the out-degree.

use alloc::vec;
use alloc::vec::Vec;

use crate::cost::CostVector;
use crate::error::{Error, Result};
use crate::oracle::ValueOracle;
use crate::set::{ElementId, ElementSet};

#[derive(Debug, Clone, PartialEq)]
pub struct CoverInstance {
    offsets: Vec<usize>,
    targets: Vec<usize>,
    weights: Vec<f64>,
    penalty: u32,
}

impl CoverInstance {
    /// Parallel edges are merged and self-loops dropped: neither changes
    /// `N(S) ∪ S`, and both would inflate the out-degree. `weights` defaults
    /// to 1 for every node.
    pub fn new(
        n: usize,
        edges: &[(usize, usize)],
        weights: Option<Vec<f64>>,
        penalty: u32,
    ) -> Result<Self> {
        let weights = weights.unwrap_or_else(|| vec![1.0; n]);
        if weights.len() != n {
            return Err(Error::Dimension("one weight per node"));
        }
        if let Some((element, &value)) = weights
            .iter()
            .enumerate()
            .find(|(_, w)| !(w.is_finite() && **w >= 0.0))
        {
            return Err(Error::InvalidCost { element, value });
        }
        let mut sorted: Vec<(usize, usize)> = Vec::with_capacity(edges.len());
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::ElementOutOfRange { element: x, n });
                }
            }
            if u != v {
                sorted.push((u, v));
            }
        }
        sorted.sort_unstable();
        sorted.dedup();
        let mut offsets = vec![0usize; n + 1];
        for &(u, _) in &sorted {
            offsets[u + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let targets = sorted.into_iter().map(|(_, v)| v).collect();
        Ok(Self {
            offsets,
            targets,
            weights,
            penalty,
        })
    }

    pub fn node_count(&self) -> usize {
        self.weights.len()
    }

    pub fn edge_count(&self) -> usize {
        self.targets.len()
    }

    pub fn out_neighbors(&self, u: usize) -> &[usize] {
        &self.targets[self.offsets[u]..self.offsets[u + 1]]
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.offsets[u + 1] - self.offsets[u]
    }

    pub fn penalty(&self) -> u32 {
        self.penalty
    }

    pub fn set_penalty(&mut self, q: u32) {
        self.penalty = q;
    }

    /// Fresh evaluation of `Σ w` over `S ∪ N(S)`.
    pub fn vc_value(&self, set: &ElementSet) -> f64 {
        let mut covered = vec![false; self.node_count()];
        let mut total = 0.0;
        for u in set.iter() {
            for &v in core::iter::once(&u).chain(self.out_neighbors(u)) {
                if !covered[v] {
                    covered[v] = true;
                    total += self.weights[v];
                }
            }
        }
        total
    }

    /// `c(v) = 1 + max{d(v) - q, 0}`, always at least 1.
    pub fn costs(&self) -> CostVector {
        let q = self.penalty as usize;
        let costs = (0..self.node_count())
            .map(|v| 1.0 + self.out_degree(v).saturating_sub(q) as f64)
            .collect();
        CostVector::new(costs).expect("costs are at least 1")
    }
}

impl ValueOracle for CoverInstance {
    /// Covered-node mask of `S ∪ N(S)`.
    type State = Vec<bool>;

    fn ground_size(&self) -> usize {
        self.node_count()
    }

    fn value(&self, set: &ElementSet) -> f64 {
        self.vc_value(set)
    }

    fn empty_state(&self) -> Vec<bool> {
        vec![false; self.node_count()]
    }

    fn gain(&self, covered: &Vec<bool>, _: &ElementSet, e: ElementId) -> f64 {
        core::iter::once(&e)
            .chain(self.out_neighbors(e))
            .filter(|&&v| !covered[v])
            .map(|&v| self.weights[v])
            .sum()
    }

    fn insert(&self, covered: &mut Vec<bool>, _: &ElementSet, e: ElementId) {
        covered[e] = true;
        for &v in self.out_neighbors(e) {
            covered[v] = true;
        }
    }
}
