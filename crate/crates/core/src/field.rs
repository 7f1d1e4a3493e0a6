//! Traits abstracting the coefficient field.
//!
//! The convolution ring, derivations, and determinant machinery are generic
//! over any exact field; the crate instantiates them at [`Rational`] and at
//! the symbolic [`Scalar`]. The log-derivation additionally needs designated
//! log values for primes, which only the symbolic field provides.

use std::fmt;
use std::ops::{Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::primes::factorize;
use crate::scalar::Scalar;
use crate::Rational;

/// An exact field with decidable equality.
pub trait ExactField:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
{
    /// Embed an integer.
    fn from_integer(n: i64) -> Self;

    /// Embed a rational.
    fn from_rational(c: Rational) -> Self;

    /// Exact division; `None` when `rhs` is zero.
    fn checked_div(&self, rhs: &Self) -> Option<Self>;

    /// The value as a plain rational, when representable as one.
    fn to_rational(&self) -> Option<Rational>;
}

impl ExactField for Rational {
    fn from_integer(n: i64) -> Self {
        Rational::from_integer(n.into())
    }

    fn from_rational(c: Rational) -> Self {
        c
    }

    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(self / rhs)
        }
    }

    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

impl ExactField for Scalar {
    fn from_integer(n: i64) -> Self {
        Scalar::from_integer(n)
    }

    fn from_rational(c: Rational) -> Self {
        Scalar::from_rational(c)
    }

    fn checked_div(&self, rhs: &Self) -> Option<Self> {
        Scalar::checked_div(self, rhs).ok()
    }

    fn to_rational(&self) -> Option<Rational> {
        self.as_rational()
    }
}

/// A field carrying designated logarithms of primes, and hence of all
/// positive integers via complete additivity.
pub trait PrimeLogs: ExactField {
    /// The logarithm of a prime `p`.
    fn log_prime(p: u64) -> Self;

    /// `log(n) = sum_p v_p(n) * log(p)`; rejects `n = 0`.
    fn log_integer(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::LogOfZero);
        }
        let mut acc = Self::zero();
        for (p, k) in factorize(n) {
            let lp = Self::log_prime(p);
            for _ in 0..k {
                acc = acc + lp.clone();
            }
        }
        Ok(acc)
    }
}

impl PrimeLogs for Scalar {
    fn log_prime(p: u64) -> Self {
        Scalar::symbol(p)
    }

    fn log_integer(n: u64) -> Result<Self> {
        Scalar::log(n)
    }
}
