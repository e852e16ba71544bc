use thiserror::Error;

/// Errors raised by the algebraic layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    /// An operation was applied outside its domain (negative power, zero
    /// divisor, wrong degree, singular map, ...).
    #[error("domain error: {0}")]
    Domain(String),
    /// An exact division had a nonzero remainder.
    #[error("not divisible")]
    NotDivisible,
    /// The form is not square-free, so its singularity is not isolated.
    #[error("non-isolated singularity: {0}")]
    NonIsolated(String),
    /// A numeric evaluation could not separate a denominator from zero.
    #[error("indeterminate at {digits} digits: {what}")]
    Indeterminate { what: String, digits: u32 },
}

impl AlgebraError {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        AlgebraError::Domain(msg.into())
    }
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
