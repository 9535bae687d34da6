//! Weighted coverage: each element covers a subset of weighted items and
//! `f(S)` is the total weight of items covered by `S`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::oracle::ValueOracle;
use crate::set::{ElementId, ElementSet};

#[derive(Debug, Clone, PartialEq)]
pub struct WeightedCoverage {
    item_weights: Vec<f64>,
    covers: Vec<Vec<usize>>,
}

impl WeightedCoverage {
    /// `covers[e]` lists the items covered by element `e`. Repeated items in
    /// a list are collapsed.
    pub fn new(item_weights: Vec<f64>, mut covers: Vec<Vec<usize>>) -> Result<Self> {
        if let Some((element, &value)) = item_weights
            .iter()
            .enumerate()
            .find(|(_, w)| !(w.is_finite() && **w >= 0.0))
        {
            return Err(Error::InvalidCost { element, value });
        }
        for list in &mut covers {
            list.sort_unstable();
            list.dedup();
            if let Some(&item) = list.last() {
                if item >= item_weights.len() {
                    return Err(Error::ElementOutOfRange {
                        element: item,
                        n: item_weights.len(),
                    });
                }
            }
        }
        Ok(Self {
            item_weights,
            covers,
        })
    }

    pub fn item_weights(&self) -> &[f64] {
        &self.item_weights
    }

    pub fn covers(&self) -> &[Vec<usize>] {
        &self.covers
    }
}

impl ValueOracle for WeightedCoverage {
    type State = Vec<bool>;

    fn ground_size(&self) -> usize {
        self.covers.len()
    }

    fn value(&self, set: &ElementSet) -> f64 {
        let mut covered = vec![false; self.item_weights.len()];
        let mut total = 0.0;
        for e in set.iter() {
            for &item in &self.covers[e] {
                if !covered[item] {
                    covered[item] = true;
                    total += self.item_weights[item];
                }
            }
        }
        total
    }

    fn empty_state(&self) -> Vec<bool> {
        vec![false; self.item_weights.len()]
    }

    fn gain(&self, covered: &Vec<bool>, _: &ElementSet, e: ElementId) -> f64 {
        self.covers[e]
            .iter()
            .filter(|&&item| !covered[item])
            .map(|&item| self.item_weights[item])
            .sum()
    }

    fn insert(&self, covered: &mut Vec<bool>, _: &ElementSet, e: ElementId) {
        for &item in &self.covers[e] {
            covered[item] = true;
        }
    }
}
