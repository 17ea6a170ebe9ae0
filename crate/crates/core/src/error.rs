use thiserror::Error;

/// Errors raised by constructors and operations across the crate.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("axis ({x}, {y}, {z}) has norm {norm}, expected unit norm")]
    NonUnitAxis { x: f64, y: f64, z: f64, norm: f64 },

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("{what} sums to {sum}, expected 1")]
    Unnormalized { what: &'static str, sum: f64 },

    #[error("negative weight {weight} at index {index}")]
    NegativeWeight { index: usize, weight: f64 },

    #[error("total count must be positive, got {0}")]
    NonPositiveTotal(f64),

    #[error("marginal slots must be distinct")]
    DuplicateSlots,

    #[error("table mismatch: {0}")]
    TableMismatch(String),

    #[error("value {value} outside [{lo}, {hi}]")]
    OutOfRange { value: f64, lo: f64, hi: f64 },

    #[error("trial count must be at least 1")]
    NoTrials,

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("invariant breach: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
