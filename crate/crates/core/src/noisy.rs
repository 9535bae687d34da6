//! δ-approximate oracle: `f̃(S) = f(S) + ξ(S)` with `|ξ(S)| ≤ δ`.
//!
//! The perturbation `ξ(S)` is a deterministic hash of the sorted member list
//! and a seed, mapped to `[-δ, δ]`, so the same set always receives the same
//! noise. `ξ(∅) = 0`, keeping the wrapped oracle normalized.

use crate::error::{Error, Result};
use crate::oracle::ValueOracle;
use crate::set::{ElementId, ElementSet};

#[derive(Debug, Clone)]
pub struct NoisyOracle<O> {
    inner: O,
    delta: f64,
    seed: u64,
}

/// Inner state plus the cached true value `f(S)` and noise `ξ(S)`.
#[derive(Debug, Clone)]
pub struct NoisyState<S> {
    inner: S,
    value: f64,
    noise: f64,
}

impl<O: ValueOracle> NoisyOracle<O> {
    pub fn new(inner: O, delta: f64, seed: u64) -> Result<Self> {
        if !(delta.is_finite() && delta >= 0.0) {
            return Err(Error::InvalidParameter {
                what: "noise bound delta",
                range: "[0, inf)",
                value: delta,
            });
        }
        Ok(Self { inner, delta, seed })
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn inner(&self) -> &O {
        &self.inner
    }

    /// `ξ(S)` for a member list in any order.
    pub fn noise(&self, members: &[ElementId]) -> f64 {
        if members.is_empty() || self.delta == 0.0 {
            return 0.0;
        }
        let mut sorted = alloc::vec::Vec::from(members);
        sorted.sort_unstable();
        let mut h = splitmix64(self.seed ^ 0x6a09_e667_f3bc_c909);
        for e in sorted {
            h = splitmix64(h ^ (e as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
        }
        // 53 random bits -> [0, 1]
        let unit = (h >> 11) as f64 / ((1u64 << 53) - 1) as f64;
        (2.0 * unit - 1.0) * self.delta
    }
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

impl<O: ValueOracle> ValueOracle for NoisyOracle<O> {
    type State = NoisyState<O::State>;

    fn ground_size(&self) -> usize {
        self.inner.ground_size()
    }

    fn value(&self, set: &ElementSet) -> f64 {
        self.inner.value(set) + self.noise(set.members())
    }

    fn empty_state(&self) -> Self::State {
        NoisyState {
            inner: self.inner.empty_state(),
            value: 0.0,
            noise: 0.0,
        }
    }

    fn gain(&self, state: &Self::State, set: &ElementSet, e: ElementId) -> f64 {
        let true_gain = self.inner.gain(&state.inner, set, e);
        let mut members = alloc::vec::Vec::from(set.members());
        members.push(e);
        (state.value + true_gain + self.noise(&members)) - (state.value + state.noise)
    }

    fn insert(&self, state: &mut Self::State, set: &ElementSet, e: ElementId) {
        let true_gain = self.inner.gain(&state.inner, set, e);
        self.inner.insert(&mut state.inner, set, e);
        let mut members = alloc::vec::Vec::from(set.members());
        members.push(e);
        state.value += true_gain;
        state.noise = self.noise(&members);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{Modular, Solution};
    use alloc::vec;
    use rand::{Rng, SeedableRng};

    #[test]
    fn noise_stays_in_envelope_and_repeats() {
        let n = 16;
        let f = Modular::new((0..n).map(|i| i as f64).collect()).unwrap();
        let noisy = NoisyOracle::new(f.clone(), 0.05, 7).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let mut max_dev: f64 = 0.0;
        for _ in 0..10_000 {
            let members: alloc::vec::Vec<_> = (0..n).filter(|_| rng.random_bool(0.5)).collect();
            let s = ElementSet::from_members(n, &members).unwrap();
            let a = noisy.value(&s);
            assert_eq!(a, noisy.value(&s));
            max_dev = max_dev.max((a - f.value(&s)).abs());
        }
        assert!(max_dev <= 0.05);
        assert!(
            max_dev > 0.04,
            "noise should span the envelope, got {max_dev}"
        );
    }

    #[test]
    fn order_of_members_does_not_matter() {
        let noisy = NoisyOracle::new(Modular::new(vec![1.0; 4]).unwrap(), 1.0, 1).unwrap();
        assert_eq!(noisy.noise(&[3, 1, 2]), noisy.noise(&[1, 2, 3]));
        assert_eq!(noisy.value(&ElementSet::empty(4)), 0.0);
    }

    #[test]
    fn incremental_gain_matches_fresh_difference() {
        let noisy = NoisyOracle::new(Modular::new(vec![1.0, 2.0, 3.0]).unwrap(), 0.3, 9).unwrap();
        let mut sol = Solution::new(&noisy);
        for e in [2, 0] {
            let g = sol.gain(e);
            let fresh = noisy.value(&sol.set().with(e).unwrap()) - noisy.value(sol.set());
            assert!((g - fresh).abs() < 1e-12);
            sol.push(e, g);
        }
        assert!((sol.value() - noisy.value(sol.set())).abs() < 1e-12);
    }
}
