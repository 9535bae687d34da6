use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::set::{ElementId, ElementSet};

/// A positive modular cost `c(S) = Σ_{e∈S} c(e)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct CostVector {
    costs: Vec<f64>,
}

impl CostVector {
    /// Every entry must be finite and strictly positive, otherwise the
    /// density of that element is undefined.
    pub fn new(costs: Vec<f64>) -> Result<Self> {
        if let Some((element, &value)) = costs
            .iter()
            .enumerate()
            .find(|(_, c)| !(c.is_finite() && **c > 0.0))
        {
            return Err(Error::InvalidCost { element, value });
        }
        Ok(Self { costs })
    }

    pub fn uniform(n: usize, value: f64) -> Result<Self> {
        Self::new(alloc::vec![value; n])
    }

    pub fn len(&self) -> usize {
        self.costs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.costs.is_empty()
    }

    pub fn get(&self, e: ElementId) -> f64 {
        self.costs[e]
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.costs
    }

    pub fn of_set(&self, set: &ElementSet) -> f64 {
        self.of_members(set.members())
    }

    pub fn of_members(&self, members: &[ElementId]) -> f64 {
        members.iter().map(|&e| self.costs[e]).sum()
    }

    /// `c_min`; `+inf` for an empty ground set.
    pub fn min(&self) -> f64 {
        self.costs.iter().copied().fold(f64::INFINITY, f64::min)
    }

    /// `c_max`; `0` for an empty ground set.
    pub fn max(&self) -> f64 {
        self.costs.iter().copied().fold(0.0, f64::max)
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        if self.costs.len() != n {
            return Err(Error::SizeMismatch {
                costs: self.costs.len(),
                n,
            });
        }
        Ok(())
    }
}

impl TryFrom<Vec<f64>> for CostVector {
    type Error = Error;

    fn try_from(costs: Vec<f64>) -> Result<Self> {
        Self::new(costs)
    }
}

impl From<CostVector> for Vec<f64> {
    fn from(c: CostVector) -> Self {
        c.costs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn rejects_non_positive_costs() {
        assert_eq!(
            CostVector::new(vec![1.0, 0.0]),
            Err(Error::InvalidCost {
                element: 1,
                value: 0.0
            })
        );
        assert!(CostVector::new(vec![-1.0]).is_err());
        assert!(CostVector::new(vec![f64::NAN]).is_err());
    }

    #[test]
    fn extremes_and_set_cost() {
        let c = CostVector::new(vec![0.5, 2.0, 1.0]).unwrap();
        assert_eq!(c.min(), 0.5);
        assert_eq!(c.max(), 2.0);
        let s = ElementSet::from_members(3, &[0, 2]).unwrap();
        assert_eq!(c.of_set(&s), 1.5);
    }
}
