//! Crate-wide error type.

use thiserror::Error;

/// Errors raised by exact arithmetic, enumeration, and sampling.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Division by the zero polynomial or zero rational.
    #[error("division by zero")]
    DivisionByZero,

    /// No exact quotient exists; usually signals a formula transcription bug.
    #[error("no exact polynomial quotient exists")]
    NotDivisible,

    /// Evaluation at q = 0 met a negative q-exponent.
    #[error("pole at q = 0 (negative exponent present)")]
    PoleAtZero,

    /// Reciprocal of a series whose constant term is not a unit.
    #[error("series constant term is not invertible")]
    NonUnitReciprocal,

    /// Negative q-powers survived in a result that must be polynomial.
    #[error("result is not polynomial in q (negative exponents survived)")]
    NotPolynomial,

    /// Moment table does not cover the requested degree.
    #[error("moment table too short: need degree {needed}, have {have}")]
    TableTooShort { needed: usize, have: usize },

    /// A denominator vanished at the chosen rational sample point.
    #[error("sample point hits a pole")]
    PoleAtSample,

    /// Exhaustive enumeration request exceeds the configured cap.
    #[error("enumeration over {n} points exceeds cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    /// Permutation is outside the domain required by a bijection.
    #[error("permutation is not in the required domain")]
    NotInDomain,

    /// Block specification total does not match the permutation length.
    #[error("size mismatch: blocks total {expected}, permutation has {got}")]
    SizeMismatch { expected: usize, got: usize },

    /// A q-primitive was called with a negative principal index.
    #[error("negative index")]
    NegativeIndex,

    /// Malformed text input (rational, permutation, or polynomial).
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
