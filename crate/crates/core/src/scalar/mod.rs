//! The coefficient field `Q(L_p : p prime)`.
//!
//! Scalars are ratios of sparse polynomials in formal log symbols, one
//! symbol per prime. `log(n)` embeds as the linear form
//! `sum_p v_p(n) * L_p`, so `log(m*n) = log(m) + log(n)` holds exactly and
//! `log` is injective on the positive integers by unique factorization.
//! Values with no symbols are kept as plain rationals internally.

mod logpoly;
mod monomial;
mod parse;

pub use logpoly::LogPoly;
pub use monomial::Monomial;
pub use parse::parse_rational;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::primes::factorize;
use crate::Rational;

/// An element of `Q(L_p : p prime)`.
///
/// Canonical form: a plain rational whenever no symbol survives; otherwise a
/// quotient of polynomials with no common rational content, the denominator's
/// leading coefficient positive, and the denominator collapsed to 1 whenever
/// it divides the numerator exactly. Equality is by cross-multiplication, so
/// it does not depend on finding a common polynomial factor.
#[derive(Debug, Clone)]
pub struct Scalar(Repr);

#[derive(Debug, Clone)]
enum Repr {
    Rat(Rational),
    Quot { num: LogPoly, den: LogPoly },
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar(Repr::Rat(Rational::zero()))
    }

    pub fn one() -> Self {
        Scalar(Repr::Rat(Rational::one()))
    }

    pub fn from_rational(c: Rational) -> Self {
        Scalar(Repr::Rat(c))
    }

    pub fn from_integer(n: i64) -> Self {
        Scalar(Repr::Rat(Rational::from_integer(n.into())))
    }

    /// The symbol `L_p`. Callers pass primes; this is not re-checked here.
    pub fn symbol(p: u64) -> Self {
        Scalar(Repr::Quot {
            num: LogPoly::symbol(p),
            den: LogPoly::one(),
        })
    }

    pub fn from_poly(num: LogPoly) -> Self {
        Scalar::from_parts(num, LogPoly::one()).expect("denominator 1 is nonzero")
    }

    /// Build `num/den` in canonical form. Errors when `den` is zero.
    pub fn from_parts(num: LogPoly, den: LogPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Scalar::zero());
        }
        // Collapse to a plain rational or a polynomial when possible.
        if let (Some(cn), Some(cd)) = (num.as_constant(), den.as_constant()) {
            return Ok(Scalar(Repr::Rat(cn / cd)));
        }
        if let Some(q) = num.try_div_exact(&den) {
            return Ok(match q.as_constant() {
                Some(c) => Scalar(Repr::Rat(c)),
                None => Scalar(Repr::Quot {
                    num: q,
                    den: LogPoly::one(),
                }),
            });
        }
        // Remove common rational content, then sign-normalize the denominator.
        let content = gcd_rational(&num.content(), &den.content());
        let (mut num, mut den) = if content.is_one() {
            (num, den)
        } else {
            let inv = Rational::one() / &content;
            (num.scale(&inv), den.scale(&inv))
        };
        if den.leading_term().is_some_and(|(_, c)| c.is_negative()) {
            num = num.neg();
            den = den.neg();
        }
        Ok(Scalar(Repr::Quot { num, den }))
    }

    /// `log(n) = sum_p v_p(n) L_p`; rejects `n = 0`.
    pub fn log(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::LogOfZero);
        }
        let poly = LogPoly::from_terms(
            factorize(n)
                .into_iter()
                .map(|(p, k)| (Monomial::symbol(p), Rational::from_integer(k.into()))),
        );
        Ok(match poly.as_constant() {
            Some(c) => Scalar(Repr::Rat(c)),
            None => Scalar(Repr::Quot {
                num: poly,
                den: LogPoly::one(),
            }),
        })
    }

    /// Numerator and denominator as polynomials.
    pub fn parts(&self) -> (LogPoly, LogPoly) {
        match &self.0 {
            Repr::Rat(c) => (LogPoly::constant(c.clone()), LogPoly::one()),
            Repr::Quot { num, den } => (num.clone(), den.clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Rat(c) => c.is_zero(),
            // Canonical quotients have nonzero numerators.
            Repr::Quot { .. } => false,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Rat(c) => c.is_one(),
            Repr::Quot { .. } => false,
        }
    }

    /// The value as a plain rational, when it is one. Complete on canonical
    /// forms: a quotient that equals a rational collapses at construction.
    pub fn as_rational(&self) -> Option<Rational> {
        match &self.0 {
            Repr::Rat(c) => Some(c.clone()),
            Repr::Quot { .. } => None,
        }
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let (Repr::Rat(a), Repr::Rat(b)) = (&self.0, &rhs.0) {
            return Ok(Scalar(Repr::Rat(a / b)));
        }
        let (an, ad) = self.parts();
        let (bn, bd) = rhs.parts();
        Scalar::from_parts(an.mul(&bd), ad.mul(&bn))
    }

    /// Substitute `L_p -> assignment[p]` and evaluate exactly.
    pub fn eval(&self, assignment: &BTreeMap<u64, Rational>) -> Result<Rational> {
        match &self.0 {
            Repr::Rat(c) => Ok(c.clone()),
            Repr::Quot { num, den } => {
                let d = den.eval(assignment)?;
                if d.is_zero() {
                    return Err(Error::EvaluatedDenominatorZero);
                }
                Ok(num.eval(assignment)? / d)
            }
        }
    }

    /// Primes whose symbols occur in this value.
    pub fn symbols(&self) -> std::collections::BTreeSet<u64> {
        match &self.0 {
            Repr::Rat(_) => Default::default(),
            Repr::Quot { num, den } => {
                let mut s = num.symbols();
                s.extend(den.symbols());
                s
            }
        }
    }

    /// Parse the text form produced by `Display`.
    pub fn parse(input: &str) -> Result<Self> {
        parse::parse_scalar(input)
    }
}

fn gcd_rational(a: &Rational, b: &Rational) -> Rational {
    use num_integer::Integer;
    Rational::new(
        a.numer().gcd(b.numer()),
        a.denom().lcm(b.denom()),
    )
}

/// Equality by cross-multiplication: `a/b = c/d` iff `a*d = c*b`.
impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Rat(a), Repr::Rat(b)) => a == b,
            _ => {
                let (an, ad) = self.parts();
                let (bn, bd) = other.parts();
                an.mul(&bd) == bn.mul(&ad)
            }
        }
    }
}

impl Eq for Scalar {}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if let (Repr::Rat(a), Repr::Rat(b)) = (&self.0, &rhs.0) {
            return Scalar(Repr::Rat(a + b));
        }
        let (an, ad) = self.parts();
        let (bn, bd) = rhs.parts();
        Scalar::from_parts(an.mul(&bd).add(&bn.mul(&ad)), ad.mul(&bd))
            .expect("product of nonzero denominators is nonzero")
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if let (Repr::Rat(a), Repr::Rat(b)) = (&self.0, &rhs.0) {
            return Scalar(Repr::Rat(a * b));
        }
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        let (an, ad) = self.parts();
        let (bn, bd) = rhs.parts();
        Scalar::from_parts(an.mul(&bn), ad.mul(&bd))
            .expect("product of nonzero denominators is nonzero")
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Rat(c) => Scalar(Repr::Rat(-c)),
            Repr::Quot { num, den } => Scalar(Repr::Quot {
                num: num.neg(),
                den: den.clone(),
            }),
        }
    }
}

/// Panicking division, for contexts where the divisor is known nonzero.
impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        self.checked_div(&rhs).expect("division by zero scalar")
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero scalar")
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
    fn is_one(&self) -> bool {
        Scalar::is_one(self)
    }
}

impl From<Rational> for Scalar {
    fn from(c: Rational) -> Self {
        Scalar::from_rational(c)
    }
}

impl fmt::Display for Scalar {
    /// `Display` of the polynomial when the denominator is 1, otherwise
    /// `(num)/(den)`. Rationals print as `a/b` or `a`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Rat(c) => {
                if c.denom().is_one() {
                    write!(f, "{}", c.numer())
                } else {
                    write!(f, "{}/{}", c.numer(), c.denom())
                }
            }
            Repr::Quot { num, den } => {
                if den.is_one() {
                    write!(f, "{}", num)
                } else {
                    write!(f, "({})/({})", num, den)
                }
            }
        }
    }
}

impl FromStr for Scalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Scalar::parse(s)
    }
}
