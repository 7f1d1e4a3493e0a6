//! Exact computer algebra for truncated arithmetic functions.
//!
//! An arithmetic function maps positive integers to field elements; under
//! pointwise addition and Dirichlet convolution the truncations to a window
//! `1..=N` form an exact quotient ring. This crate implements that ring
//! together with:
//!
//! - the coefficient field `Q(L_p : p prime)` of rational functions in
//!   formal log symbols ([`Scalar`]), with exact evaluation at rational
//!   points;
//! - the order/norm ultrametric and the unit/inverse structure;
//! - derivations: per-prime maps mirroring `d/dX_p` under the power-series
//!   encoding, the log-derivation mirroring `-d/ds` on Dirichlet series, the
//!   prime-count weighting, monomial compositions, and their finite partial
//!   sums, each with an exact precision-tracking contract;
//! - the fraction field with quotient-rule derivation extension and a
//!   kernel probe for the log-derivation;
//! - generalized Wronskians over admissible index tuples, the log-Wronskian,
//!   and a linear-dependence decision procedure cross-checked against exact
//!   Gaussian elimination.
//!
//! Core types are generic over the coefficient field through [`ExactField`];
//! `ArithFn` defaults to the symbolic scalar, and [`QArithFn`] /
//! [`QFracElem`] name the plain-rational instantiations used by randomized
//! evaluation.
//!
//! ```
//! use afwron_core::{ArithFn, Scalar};
//! use afwron_core::wronskian::{test_dependence, DependenceConfig, DependenceVerdict};
//!
//! // The indicators of 1 and 2 are independent; the scan certifies it
//! // with the determinant at the index tuple (1, 2).
//! let family = [
//!     ArithFn::<Scalar>::basis(1, 64),
//!     ArithFn::<Scalar>::basis(2, 64),
//! ];
//! let report = test_dependence(&family, &DependenceConfig::default()).unwrap();
//! assert!(matches!(report.verdict, DependenceVerdict::Independent { .. }));
//! ```

pub mod arithfn;
pub mod derivations;
pub mod error;
pub mod field;
pub mod fraction;
pub mod io;
pub mod primes;
pub mod scalar;
pub mod series;
pub mod verify;
pub mod wronskian;

/// Exact rational numbers (reduced form, positive denominator).
pub type Rational = num_rational::BigRational;

pub use arithfn::{ArithFn, OrdResult};
pub use derivations::DerivationOp;
pub use error::{Error, Result};
pub use field::{ExactField, PrimeLogs};
pub use fraction::FracElem;
pub use scalar::{LogPoly, Monomial, Scalar};
pub use series::PowerSeriesPoly;
pub use wronskian::{AdmissibleTuple, DependenceVerdict, GaussianOutcome};

/// Arithmetic functions with plain rational values.
pub type QArithFn = ArithFn<Rational>;
/// Fraction-field elements with plain rational values.
pub type QFracElem = FracElem<Rational>;
