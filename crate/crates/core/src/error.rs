//! Error type shared across the crate.

use thiserror::Error;

/// Errors raised by exact-arithmetic operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Division by a zero scalar.
    #[error("division by zero scalar")]
    DivisionByZero,

    /// `log` of zero is rejected; the log map is only defined on positive integers.
    #[error("log of 0 is undefined")]
    LogOfZero,

    /// An evaluation assignment is missing a prime symbol that occurs in the value.
    #[error("no assignment for symbol L{0}")]
    MissingAssignment(u64),

    /// A denominator evaluated to zero under the given assignment.
    #[error("denominator evaluates to zero under the assignment")]
    EvaluatedDenominatorZero,

    /// A prime was expected.
    #[error("{0} is not prime")]
    NotPrime(u64),

    /// Inversion of a non-unit: the value at index 1 is zero.
    #[error("not a unit: value at index 1 is zero")]
    NonUnit,

    /// A derivation or determinant would need values beyond the truncation window.
    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),

    /// Conversion to a power series hit a support index with a prime factor
    /// outside the declared variable range.
    #[error("support index {index} is not smooth over the first {vars} primes")]
    NonSmoothSupport { index: u64, vars: usize },

    /// Conversion to a power series hit a coefficient that carries log symbols.
    #[error("coefficient at index {index} is not a plain rational")]
    NonRationalCoefficient { index: u64 },

    /// An operation required a denominator (or divisor) whose order is certified
    /// nonzero in-window, but the value is zero everywhere up to its precision.
    #[error("order not certified nonzero within precision {0}")]
    UncertifiedNonzero(usize),

    /// Text parsing failed; `pos` is a byte offset into the input.
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// Malformed or inconsistent structured input.
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
