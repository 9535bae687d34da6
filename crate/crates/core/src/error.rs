use thiserror::Error;

use crate::set::ElementId;

/// Errors reported by the core library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("element {element} is outside the ground set of size {n}")]
    ElementOutOfRange { element: ElementId, n: usize },
    #[error("element {0} is already a member of the set")]
    AlreadyMember(ElementId),
    #[error("cost of element {element} must be positive and finite, got {value}")]
    InvalidCost { element: ElementId, value: f64 },
    #[error("cost vector has {costs} entries but the ground set has {n} elements")]
    SizeMismatch { costs: usize, n: usize },
    #[error("{what} must lie in {range}, got {value}")]
    InvalidParameter {
        what: &'static str,
        range: &'static str,
        value: f64,
    },
    #[error("ground set of size {n} exceeds the exhaustive-search cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("empty input: {0}")]
    Empty(&'static str),
    #[error("matrix is not symmetric positive-definite: {0}")]
    NotPositiveDefinite(&'static str),
    #[error("rank-one update broke down (denominator {0}); recompute the posterior from scratch")]
    NumericalBreakdown(f64),
    #[error("dimension mismatch: {0}")]
    Dimension(&'static str),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
