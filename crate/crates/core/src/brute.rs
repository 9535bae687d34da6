//! Exhaustive ground truth for small instances.

use alloc::vec::Vec;

use crate::cost::CostVector;
use crate::error::{Error, Result};
use crate::oracle::ValueOracle;
use crate::set::{ElementId, ElementSet};

/// Default cap on `n` for [`brute_force_opt`].
pub const OPT_CAP: usize = 20;
/// Default cap on `n` for [`empirical_submodularity_ratio`].
pub const RATIO_CAP: usize = 12;

/// Joint gains `f(T) - f(S)` at or below this fraction of `max(1, |f(T)|)`
/// are rounding noise and excluded from the ratio.
const RATIO_GAIN_FLOOR: f64 = 1e-10;

fn members_of(mask: u64, n: usize) -> Vec<ElementId> {
    (0..n).filter(|&e| mask >> e & 1 == 1).collect()
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap || n >= 64 {
        return Err(Error::TooLarge { n, cap });
    }
    Ok(())
}

/// A maximizer of `f(S) - c(S)` over all `2ⁿ` subsets, with its value.
/// Ties go to the lexicographically smallest member list, so `∅` wins any
/// tie at value 0.
pub fn brute_force_opt<O: ValueOracle>(
    oracle: &O,
    costs: &CostVector,
) -> Result<(ElementSet, f64)> {
    brute_force_opt_with_cap(oracle, costs, OPT_CAP)
}

pub fn brute_force_opt_with_cap<O: ValueOracle>(
    oracle: &O,
    costs: &CostVector,
    cap: usize,
) -> Result<(ElementSet, f64)> {
    let n = oracle.ground_size();
    costs.check_len(n)?;
    check_cap(n, cap)?;
    let mut best: Vec<ElementId> = Vec::new();
    let mut best_value = 0.0;
    for mask in 1u64..(1u64 << n) {
        let members = members_of(mask, n);
        let set = ElementSet::from_members(n, &members)?;
        let value = oracle.value(&set) - costs.of_members(&members);
        if value > best_value || (value == best_value && members < best) {
            best = members;
            best_value = value;
        }
    }
    Ok((ElementSet::from_members(n, &best)?, best_value))
}

/// All `2ⁿ` values `f(S)` indexed by membership bitmask.
pub fn value_table<O: ValueOracle>(oracle: &O, cap: usize) -> Result<Vec<f64>> {
    let n = oracle.ground_size();
    check_cap(n, cap)?;
    (0u64..(1u64 << n))
        .map(|mask| {
            let set = ElementSet::from_members(n, &members_of(mask, n))?;
            Ok(oracle.value(&set))
        })
        .collect()
}

/// The largest `γ` such that `Σ_{u∈T∖S} f(u|S) ≥ γ (f(T) - f(S))` for all
/// `S ⊆ T ⊆ V` with `f(T) > f(S)`, clamped to at most 1.
pub fn empirical_submodularity_ratio<O: ValueOracle>(oracle: &O) -> Result<f64> {
    empirical_submodularity_ratio_with_cap(oracle, RATIO_CAP)
}

pub fn empirical_submodularity_ratio_with_cap<O: ValueOracle>(
    oracle: &O,
    cap: usize,
) -> Result<f64> {
    let n = oracle.ground_size();
    let table = value_table(oracle, cap)?;
    Ok(ratio_from_table(&table, n))
}

/// Same as [`empirical_submodularity_ratio`] over a precomputed value table.
pub fn ratio_from_table(table: &[f64], n: usize) -> f64 {
    let mut ratio: f64 = 1.0;
    for t in 0u64..(1u64 << n) {
        let ft = table[t as usize];
        let floor = RATIO_GAIN_FLOOR * ft.abs().max(1.0);
        // enumerate proper submasks s of t
        let mut s = t;
        loop {
            s = s.wrapping_sub(1) & t;
            let fs = table[s as usize];
            let joint = ft - fs;
            if joint > floor {
                let diff = t & !s;
                let singles: f64 = (0..n)
                    .filter(|&u| diff >> u & 1 == 1)
                    .map(|u| table[(s | 1 << u) as usize] - fs)
                    .sum();
                ratio = ratio.min(singles / joint);
            }
            if s == 0 {
                break;
            }
        }
    }
    ratio.min(1.0)
}
