//! Sparse polynomials in the log symbols with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::monomial::Monomial;
use crate::Rational;

/// A polynomial `sum c_m * m` over monomials in the `L_p` symbols.
///
/// Invariant: no stored coefficient is zero. The zero polynomial is the
/// empty term map.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LogPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl LogPoly {
    pub fn zero() -> Self {
        LogPoly::default()
    }

    pub fn one() -> Self {
        LogPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        LogPoly { terms }
    }

    /// The symbol `L_p` as a polynomial.
    pub fn symbol(p: u64) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial::symbol(p), Rational::one());
        LogPoly { terms }
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut out = LogPoly::zero();
        for (m, c) in pairs {
            out.add_term(m, c);
        }
        out
    }

    fn add_term(&mut self, mono: Monomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::one())
                .is_some_and(|c| c.is_one())
    }

    /// `Some(c)` if the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            if let Some(c) = self.terms.get(&Monomial::one()) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Leading term under the graded-lex order, `None` for zero.
    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn add(&self, other: &LogPoly) -> LogPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> LogPoly {
        LogPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &LogPoly) -> LogPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &LogPoly) -> LogPoly {
        let mut out = LogPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> LogPoly {
        if c.is_zero() {
            return LogPoly::zero();
        }
        LogPoly {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Positive rational content: gcd of coefficient numerators over lcm of
    /// coefficient denominators. Zero for the zero polynomial.
    pub fn content(&self) -> Rational {
        if self.terms.is_empty() {
            return Rational::zero();
        }
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            num_gcd = num_gcd.gcd(&c.numer().abs());
            den_lcm = den_lcm.lcm(c.denom());
        }
        Rational::new(num_gcd, den_lcm)
    }

    /// Exact polynomial quotient `self / divisor`, or `None` when the
    /// division leaves a remainder. Single-divisor long division by leading
    /// terms is exact-complete: if `divisor` divides `self` the quotient is
    /// found, otherwise the first non-divisible leading term aborts.
    pub fn try_div_exact(&self, divisor: &LogPoly) -> Option<LogPoly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let (lead_m, lead_c) = divisor.leading_term().expect("nonzero divisor");
        let mut remainder = self.clone();
        let mut quotient = LogPoly::zero();
        while let Some((rm, rc)) = remainder.leading_term() {
            let qm = rm.div(lead_m)?;
            let qc = rc / lead_c;
            let piece = LogPoly {
                terms: [(qm, qc)].into_iter().collect(),
            };
            remainder = remainder.sub(&piece.mul(divisor));
            quotient = quotient.add(&piece);
        }
        Some(quotient)
    }

    /// Substitute `L_p -> assignment[p]` and evaluate exactly.
    pub fn eval(&self, assignment: &BTreeMap<u64, Rational>) -> Result<Rational> {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for &(p, e) in m.factors() {
                let v = assignment.get(&p).ok_or(Error::MissingAssignment(p))?;
                for _ in 0..e {
                    term *= v;
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Primes whose symbols occur anywhere in the polynomial.
    pub fn symbols(&self) -> std::collections::BTreeSet<u64> {
        self.terms.keys().flat_map(|m| m.symbols()).collect()
    }
}

fn fmt_rational(c: &Rational) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// One term in display form, with the coefficient's absolute value.
fn fmt_term(mono: &Monomial, coeff_abs: &Rational) -> String {
    if mono.is_one() {
        fmt_rational(coeff_abs)
    } else if coeff_abs.is_one() {
        mono.to_string()
    } else {
        format!("{}*{}", fmt_rational(coeff_abs), mono)
    }
}

impl fmt::Display for LogPoly {
    /// Terms in descending graded-lex order joined by ` + ` / ` - `,
    /// e.g. `3/2*L2^2*L3 + 1`. Round-trips through the scalar parser.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = if negative { -c } else { c.clone() };
            if k == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{}", fmt_term(m, &abs))?;
        }
        Ok(())
    }
}
