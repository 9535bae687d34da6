//! Value oracles for monotone normalized set functions.
//!
//! An oracle answers two kinds of queries: a fresh evaluation `f(S)` and an
//! incremental marginal gain `f(e | S)` against a per-solution state that the
//! oracle advances with [`ValueOracle::insert`]. Algorithms only ever grow a
//! single solution, so the incremental path is what they use; each marginal
//! query counts as one oracle call because `f(S)` is already cached.

use core::cell::Cell;

use serde::{Deserialize, Serialize};

use crate::cost::CostVector;
use crate::error::{Error, Result};
use crate::set::{ElementId, ElementSet};

/// A monotone set function with `f(∅) = 0`.
pub trait ValueOracle {
    /// Incremental state describing the current solution `S`.
    type State: Clone;

    fn ground_size(&self) -> usize;

    /// Fresh evaluation of `f(set)`.
    fn value(&self, set: &ElementSet) -> f64;

    /// State for `S = ∅`.
    fn empty_state(&self) -> Self::State;

    /// `f(e | S)` where `set` is `S` and `state` was built along `set`.
    /// `e` is never a member of `set`.
    fn gain(&self, state: &Self::State, set: &ElementSet, e: ElementId) -> f64;

    /// Advances `state` from `S` to `S ∪ {e}`. `set` is still `S`.
    fn insert(&self, state: &mut Self::State, set: &ElementSet, e: ElementId);
}

impl<O: ValueOracle + ?Sized> ValueOracle for &O {
    type State = O::State;

    fn ground_size(&self) -> usize {
        (**self).ground_size()
    }
    fn value(&self, set: &ElementSet) -> f64 {
        (**self).value(set)
    }
    fn empty_state(&self) -> Self::State {
        (**self).empty_state()
    }
    fn gain(&self, state: &Self::State, set: &ElementSet, e: ElementId) -> f64 {
        (**self).gain(state, set, e)
    }
    fn insert(&self, state: &mut Self::State, set: &ElementSet, e: ElementId) {
        (**self).insert(state, set, e)
    }
}

/// Wraps an oracle and counts every evaluation made through it: one per
/// [`ValueOracle::value`] and one per [`ValueOracle::gain`]. State updates
/// are free.
#[derive(Debug)]
pub struct Counted<O> {
    inner: O,
    calls: Cell<u64>,
}

impl<O> Counted<O> {
    pub fn new(inner: O) -> Self {
        Self {
            inner,
            calls: Cell::new(0),
        }
    }

    pub fn calls(&self) -> u64 {
        self.calls.get()
    }

    pub fn reset(&self) {
        self.calls.set(0);
    }

    pub fn inner(&self) -> &O {
        &self.inner
    }

    pub fn into_inner(self) -> O {
        self.inner
    }

    fn bump(&self) {
        self.calls.set(self.calls.get() + 1);
    }
}

impl<O: ValueOracle> ValueOracle for Counted<O> {
    type State = O::State;

    fn ground_size(&self) -> usize {
        self.inner.ground_size()
    }
    fn value(&self, set: &ElementSet) -> f64 {
        self.bump();
        self.inner.value(set)
    }
    fn empty_state(&self) -> Self::State {
        self.inner.empty_state()
    }
    fn gain(&self, state: &Self::State, set: &ElementSet, e: ElementId) -> f64 {
        self.bump();
        self.inner.gain(state, set, e)
    }
    fn insert(&self, state: &mut Self::State, set: &ElementSet, e: ElementId) {
        self.inner.insert(state, set, e)
    }
}

/// Submodularity ratio `γ ∈ (0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct SubmodularityRatio(f64);

impl SubmodularityRatio {
    /// `γ = 1`, i.e. `f` is submodular.
    pub const SUBMODULAR: Self = Self(1.0);

    pub fn new(gamma: f64) -> Result<Self> {
        if gamma > 0.0 && gamma <= 1.0 {
            Ok(Self(gamma))
        } else {
            Err(Error::InvalidParameter {
                what: "submodularity ratio",
                range: "(0, 1]",
                value: gamma,
            })
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for SubmodularityRatio {
    type Error = Error;
    fn try_from(v: f64) -> Result<Self> {
        Self::new(v)
    }
}

impl From<SubmodularityRatio> for f64 {
    fn from(g: SubmodularityRatio) -> f64 {
        g.0
    }
}

/// `f(e | S) = f(S ∪ {e}) - f(S)` by two fresh evaluations.
pub fn marginal_gain<O: ValueOracle>(oracle: &O, e: ElementId, set: &ElementSet) -> Result<f64> {
    let with = set.with(e)?;
    Ok(oracle.value(&with) - oracle.value(set))
}

/// `f(e | S) / c(e)`.
pub fn density<O: ValueOracle>(
    oracle: &O,
    e: ElementId,
    set: &ElementSet,
    costs: &CostVector,
) -> Result<f64> {
    Ok(marginal_gain(oracle, e, set)? / costs.get(e))
}

/// `h(S) = f(S) - c(S)`.
pub fn objective<O: ValueOracle>(oracle: &O, costs: &CostVector, set: &ElementSet) -> f64 {
    oracle.value(set) - costs.of_set(set)
}

/// A single growing solution with its incremental oracle state, the cached
/// `f(S)` and a running count of oracle calls.
pub struct Solution<'a, O: ValueOracle> {
    oracle: &'a O,
    set: ElementSet,
    state: O::State,
    value: f64,
    calls: u64,
}

impl<'a, O: ValueOracle> Solution<'a, O> {
    pub fn new(oracle: &'a O) -> Self {
        Self {
            oracle,
            set: ElementSet::empty(oracle.ground_size()),
            state: oracle.empty_state(),
            value: 0.0,
            calls: 0,
        }
    }

    /// `f(e | S)` for the current `S`; one oracle call.
    pub fn gain(&mut self, e: ElementId) -> f64 {
        debug_assert!(!self.set.contains(e));
        self.calls += 1;
        self.oracle.gain(&self.state, &self.set, e)
    }

    /// Adds `e`, whose gain w.r.t. the current set was `gain`.
    pub fn push(&mut self, e: ElementId, gain: f64) {
        self.oracle.insert(&mut self.state, &self.set, e);
        self.set
            .insert(e)
            .expect("element already validated by the caller");
        self.value += gain;
    }

    pub fn set(&self) -> &ElementSet {
        &self.set
    }

    pub fn contains(&self, e: ElementId) -> bool {
        self.set.contains(e)
    }

    /// Cached `f(S)`, accumulated from the accepted gains.
    pub fn value(&self) -> f64 {
        self.value
    }

    pub fn calls(&self) -> u64 {
        self.calls
    }
}

/// `f(S) = Σ_{e∈S} w(e)` with non-negative weights. Submodularity ratio 1.
#[derive(Debug, Clone, PartialEq)]
pub struct Modular {
    weights: alloc::vec::Vec<f64>,
}

impl Modular {
    pub fn new(weights: alloc::vec::Vec<f64>) -> Result<Self> {
        if let Some((element, &value)) = weights
            .iter()
            .enumerate()
            .find(|(_, w)| !(w.is_finite() && **w >= 0.0))
        {
            return Err(Error::InvalidCost { element, value });
        }
        Ok(Self { weights })
    }
}

impl ValueOracle for Modular {
    type State = ();

    fn ground_size(&self) -> usize {
        self.weights.len()
    }
    fn value(&self, set: &ElementSet) -> f64 {
        set.iter().map(|e| self.weights[e]).sum()
    }
    fn empty_state(&self) {}
    fn gain(&self, _: &(), _: &ElementSet, e: ElementId) -> f64 {
        self.weights[e]
    }
    fn insert(&self, _: &mut (), _: &ElementSet, _: ElementId) {}
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coverage::WeightedCoverage;
    use alloc::vec;

    fn three_element_coverage() -> WeightedCoverage {
        // items 0..4 with weights; element k covers the listed items
        WeightedCoverage::new(
            vec![1.0, 2.0, 0.5, 4.0],
            vec![vec![0, 1], vec![1, 2], vec![2, 3]],
        )
        .unwrap()
    }

    #[test]
    fn singleton_gain_is_singleton_value() {
        let f = Modular::new(vec![5.0, 1.0]).unwrap();
        let empty = ElementSet::empty(2);
        assert_eq!(marginal_gain(&f, 0, &empty).unwrap(), 5.0);
    }

    #[test]
    fn covered_element_has_zero_gain() {
        let f = WeightedCoverage::new(vec![1.0, 1.0], vec![vec![0, 1], vec![1]]).unwrap();
        let s = ElementSet::from_members(2, &[0]).unwrap();
        assert_eq!(marginal_gain(&f, 1, &s).unwrap(), 0.0);
    }

    #[test]
    fn gain_matches_double_evaluation() {
        let f = three_element_coverage();
        let s = ElementSet::from_members(3, &[0]).unwrap();
        let direct = f.value(&s.with(2).unwrap()) - f.value(&s);
        assert_eq!(marginal_gain(&f, 2, &s).unwrap(), direct);
        // element 2 adds items 2 and 3: 0.5 + 4
        assert_eq!(direct, 4.5);
        let mut sol = Solution::new(&f);
        let g = sol.gain(0);
        sol.push(0, g);
        assert_eq!(sol.gain(2), direct);
    }

    #[test]
    fn marginal_gain_rejects_members() {
        let f = Modular::new(vec![1.0]).unwrap();
        let s = ElementSet::full(1);
        assert_eq!(marginal_gain(&f, 0, &s), Err(Error::AlreadyMember(0)));
    }

    #[test]
    fn density_is_gain_over_cost() {
        let f = Modular::new(vec![4.0, 0.0]).unwrap();
        let c = CostVector::new(vec![2.0, 3.0]).unwrap();
        let empty = ElementSet::empty(2);
        assert_eq!(density(&f, 0, &empty, &c).unwrap(), 2.0);
        assert_eq!(density(&f, 1, &empty, &c).unwrap(), 0.0);
    }

    #[test]
    fn objective_of_empty_and_simple_sets() {
        let f = Modular::new(vec![3.0]).unwrap();
        let c = CostVector::new(vec![1.0]).unwrap();
        assert_eq!(objective(&f, &c, &ElementSet::empty(1)), 0.0);
        assert_eq!(objective(&f, &c, &ElementSet::full(1)), 2.0);
    }

    #[test]
    fn counted_wrapper_counts_each_evaluation() {
        let f = Counted::new(three_element_coverage());
        let s = ElementSet::from_members(3, &[1]).unwrap();
        marginal_gain(&f, 0, &s).unwrap();
        assert_eq!(f.calls(), 2);
        let mut sol = Solution::new(&f);
        let g = sol.gain(1);
        sol.push(1, g);
        sol.gain(0);
        assert_eq!(f.calls(), 4);
        assert_eq!(sol.calls(), 2);
    }

    #[test]
    fn ratio_validation() {
        assert!(SubmodularityRatio::new(0.0).is_err());
        assert!(SubmodularityRatio::new(1.5).is_err());
        assert_eq!(SubmodularityRatio::new(0.25).unwrap().get(), 0.25);
    }
}
