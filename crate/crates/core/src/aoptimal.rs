//! Bayesian A-optimal design.
//!
//! With prior covariance `Σ`, noise `σ` and measurements `x_e ∈ ℝᵈ`,
//! `f(S) = Tr(Σ) - Tr(M_S⁻¹)` where `M_S = Σ⁻¹ + σ⁻² X_S X_Sᵀ`. Adding `e`
//! is a rank-one update of `M_S`, so `M_S⁻¹` is maintained with
//! Sherman–Morrison and re-inverted from scratch every
//! [`REINVERT_PERIOD`] updates.

use alloc::vec::Vec;

use nalgebra::{DMatrix, DVector};

use crate::cost::CostVector;
use crate::error::{Error, Result};
use crate::oracle::ValueOracle;
use crate::set::{ElementId, ElementSet};

/// Rank-one updates between direct re-inversions of `M_S`.
pub const REINVERT_PERIOD: usize = 64;

#[derive(Debug, Clone, PartialEq)]
pub struct DesignInstance {
    /// `d × n`, one column per measurement.
    features: DMatrix<f64>,
    prior: DMatrix<f64>,
    prior_inv: DMatrix<f64>,
    prior_trace: f64,
    sigma: f64,
    penalty: f64,
}

fn spd_inverse(m: DMatrix<f64>, what: &'static str) -> Result<DMatrix<f64>> {
    let inv = m
        .cholesky()
        .ok_or(Error::NotPositiveDefinite(what))?
        .inverse();
    Ok((&inv + inv.transpose()) * 0.5)
}

impl DesignInstance {
    /// `features` is `d × n`. `prior` defaults to the identity, `sigma` to
    /// `1/√d`. `penalty` is the cost factor `p ∈ (0, 1]`.
    pub fn new(
        features: DMatrix<f64>,
        prior: Option<DMatrix<f64>>,
        sigma: Option<f64>,
        penalty: f64,
    ) -> Result<Self> {
        let d = features.nrows();
        if d == 0 {
            return Err(Error::Dimension("at least one feature"));
        }
        if features.iter().any(|v| !v.is_finite()) {
            return Err(Error::Dimension("finite features"));
        }
        let prior = prior.unwrap_or_else(|| DMatrix::identity(d, d));
        if prior.shape() != (d, d) {
            return Err(Error::Dimension("prior covariance is d x d"));
        }
        if prior != prior.transpose() {
            return Err(Error::NotPositiveDefinite(
                "prior covariance is not symmetric",
            ));
        }
        let sigma = sigma.unwrap_or(1.0 / libm::sqrt(d as f64));
        if !(sigma.is_finite() && sigma > 0.0) {
            return Err(Error::InvalidParameter {
                what: "sigma",
                range: "(0, inf)",
                value: sigma,
            });
        }
        if !(penalty > 0.0 && penalty <= 1.0) {
            return Err(Error::InvalidParameter {
                what: "cost penalty p",
                range: "(0, 1]",
                value: penalty,
            });
        }
        let prior_inv = spd_inverse(prior.clone(), "prior covariance")?;
        Ok(Self {
            prior_trace: prior.trace(),
            features,
            prior,
            prior_inv,
            sigma,
            penalty,
        })
    }

    /// Builds from row-major measurements (`n` rows of `d` values).
    pub fn from_rows(
        rows: &[Vec<f64>],
        prior: Option<DMatrix<f64>>,
        sigma: Option<f64>,
        penalty: f64,
    ) -> Result<Self> {
        let d = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != d) {
            return Err(Error::Dimension("every row has the same width"));
        }
        let features = DMatrix::from_fn(d, rows.len(), |i, j| rows[j][i]);
        Self::new(features, prior, sigma, penalty)
    }

    pub fn dim(&self) -> usize {
        self.features.nrows()
    }

    pub fn len(&self) -> usize {
        self.features.ncols()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn sigma(&self) -> f64 {
        self.sigma
    }

    pub fn penalty(&self) -> f64 {
        self.penalty
    }

    pub fn prior(&self) -> &DMatrix<f64> {
        &self.prior
    }

    pub fn feature(&self, e: ElementId) -> DVector<f64> {
        self.features.column(e).into_owned()
    }

    /// `M_S = Σ⁻¹ + σ⁻² X_S X_Sᵀ`.
    pub fn precision(&self, members: &[ElementId]) -> DMatrix<f64> {
        let mut m = self.prior_inv.clone();
        let scale = 1.0 / (self.sigma * self.sigma);
        for &e in members {
            let x = self.features.column(e);
            m.ger(scale, &x, &x, 1.0);
        }
        m
    }

    /// `M_S⁻¹` by a fresh Cholesky solve.
    pub fn direct_inverse(&self, members: &[ElementId]) -> Result<DMatrix<f64>> {
        if members.is_empty() {
            return Ok(self.prior.clone());
        }
        spd_inverse(self.precision(members), "posterior precision")
    }

    /// Fresh `f(S)`.
    pub fn ao_value(&self, set: &ElementSet) -> Result<f64> {
        if set.is_empty() {
            return Ok(0.0);
        }
        Ok(self.prior_trace - self.direct_inverse(set.members())?.trace())
    }

    /// `c(e) = p · f({e})`, one fresh evaluation per element.
    pub fn ao_cost(&self) -> Result<CostVector> {
        proportional_cost(self, self.penalty)
    }

    pub fn initial_state(&self) -> PosteriorState {
        PosteriorState {
            selected: Vec::new(),
            m_inv: self.prior.clone(),
            value: 0.0,
            updates: 0,
        }
    }
}

/// `c(e) = p · f({e})` for any oracle, through fresh singleton evaluations.
/// Fails if some singleton has zero value.
pub fn proportional_cost<O: ValueOracle>(oracle: &O, p: f64) -> Result<CostVector> {
    let n = oracle.ground_size();
    let costs = (0..n)
        .map(|e| Ok(p * oracle.value(&ElementSet::from_members(n, &[e])?)))
        .collect::<Result<Vec<_>>>()?;
    CostVector::new(costs)
}

/// Posterior after selecting `selected`: the inverse of `M_S` and the cached
/// `f(S)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PosteriorState {
    selected: Vec<ElementId>,
    m_inv: DMatrix<f64>,
    value: f64,
    updates: usize,
}

impl PosteriorState {
    pub fn selected(&self) -> &[ElementId] {
        &self.selected
    }

    pub fn m_inv(&self) -> &DMatrix<f64> {
        &self.m_inv
    }

    /// Cached `f(S) = Tr(Σ) - Tr(M_S⁻¹)`.
    pub fn value(&self) -> f64 {
        self.value
    }

    /// Returns `z = M_S⁻¹ x` and the denominator `σ² + ⟨x, z⟩`.
    fn direction(&self, inst: &DesignInstance, e: ElementId) -> Result<(DVector<f64>, f64)> {
        let x = inst.features.column(e);
        let z = &self.m_inv * x;
        let denom = inst.sigma * inst.sigma + x.dot(&z);
        if denom.partial_cmp(&0.0) != Some(core::cmp::Ordering::Greater) {
            return Err(Error::NumericalBreakdown(denom));
        }
        Ok((z, denom))
    }

    /// `f(e | S) = ‖z‖² / (σ² + ⟨x, z⟩)`.
    pub fn gain(&self, inst: &DesignInstance, e: ElementId) -> Result<f64> {
        let (z, denom) = self.direction(inst, e)?;
        Ok(z.norm_squared() / denom)
    }

    /// Moves to `S ∪ {e}` and returns the gain.
    pub fn insert(&mut self, inst: &DesignInstance, e: ElementId) -> Result<f64> {
        let (z, denom) = self.direction(inst, e)?;
        let gain = z.norm_squared() / denom;
        self.selected.push(e);
        self.updates += 1;
        if self.updates.is_multiple_of(REINVERT_PERIOD) {
            self.m_inv = inst.direct_inverse(&self.selected)?;
        } else {
            self.m_inv.ger(-1.0 / denom, &z, &z, 1.0);
        }
        self.value = inst.prior_trace - self.m_inv.trace();
        Ok(gain)
    }

    /// Replaces `M_S⁻¹` with a direct inverse.
    pub fn reinvert(&mut self, inst: &DesignInstance) -> Result<()> {
        self.m_inv = inst.direct_inverse(&self.selected)?;
        self.value = inst.prior_trace - self.m_inv.trace();
        Ok(())
    }
}

/// Gain of adding `e` together with the advanced state.
pub fn ao_marginal(
    inst: &DesignInstance,
    state: &PosteriorState,
    e: ElementId,
) -> Result<(f64, PosteriorState)> {
    let mut next = state.clone();
    let gain = next.insert(inst, e)?;
    Ok((gain, next))
}

impl ValueOracle for DesignInstance {
    type State = PosteriorState;

    fn ground_size(&self) -> usize {
        self.len()
    }

    fn value(&self, set: &ElementSet) -> f64 {
        self.ao_value(set)
            .expect("posterior precision of an SPD prior stays SPD")
    }

    fn empty_state(&self) -> PosteriorState {
        self.initial_state()
    }

    fn gain(&self, state: &PosteriorState, set: &ElementSet, e: ElementId) -> f64 {
        match state.gain(self, e) {
            Ok(g) => g,
            Err(_) => {
                let mut fresh = state.clone();
                fresh
                    .reinvert(self)
                    .and_then(|()| fresh.gain(self, e))
                    .unwrap_or_else(|_| {
                        self.value(&set.with(e).expect("e is not in S")) - self.value(set)
                    })
            }
        }
    }

    fn insert(&self, state: &mut PosteriorState, _: &ElementSet, e: ElementId) {
        if state.insert(self, e).is_err() {
            state.selected.push(e);
            state
                .reinvert(self)
                .expect("posterior precision of an SPD prior stays SPD");
        }
    }
}

/// Rescales each attribute of row-major data to mean 0 and population
/// standard deviation 1. Constant attributes are removed; their original
/// column indices are returned.
pub fn standardize(rows: &mut [Vec<f64>]) -> Vec<usize> {
    let n = rows.len();
    let d = rows.first().map_or(0, Vec::len);
    if n == 0 {
        return Vec::new();
    }
    let mut dropped = Vec::new();
    let mut keep = Vec::with_capacity(d);
    for j in 0..d {
        let mean = rows.iter().map(|r| r[j]).sum::<f64>() / n as f64;
        let var = rows
            .iter()
            .map(|r| (r[j] - mean) * (r[j] - mean))
            .sum::<f64>()
            / n as f64;
        let std = libm::sqrt(var);
        if std > 0.0 && std.is_finite() {
            for r in rows.iter_mut() {
                r[j] = (r[j] - mean) / std;
            }
            keep.push(j);
        } else {
            dropped.push(j);
        }
    }
    if !dropped.is_empty() {
        for r in rows.iter_mut() {
            *r = keep.iter().map(|&j| r[j]).collect();
        }
    }
    dropped
}
