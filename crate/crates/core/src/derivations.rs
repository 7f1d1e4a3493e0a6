//! Derivations of the convolution ring.
//!
//! The per-prime map sends `f` to `n -> v_p(n*p) * f(n*p)`; under the
//! power-series encoding it is exactly `d/dX_p`, and it shrinks the window
//! by a factor of `p` because it reads `f` at `n*p`. The log-derivation
//! multiplies by `log(n)` pointwise, the omega weighting by the prime-factor
//! count; both keep the window. Monomial operators compose per-prime maps
//! according to the factorization of the index.

use std::fmt;
use std::str::FromStr;

use crate::arithfn::ArithFn;
use crate::error::{Error, Result};
use crate::field::{ExactField, PrimeLogs};
use crate::primes::{big_omega, factorize, is_prime, primes_up_to};

/// A derivation (or composition of derivations) applicable to truncated
/// arithmetic functions and fraction-field elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DerivationOp {
    /// The per-prime derivation for a prime `p` (`d_p` in text form).
    Basic(u64),
    /// The log-derivation (`dlog`).
    Log,
    /// The prime-count weighting (`dOmega`).
    OmegaWeighted,
    /// The composition of basic derivations given by the factorization of
    /// `m` (`d[m]`); `d[1]` is the identity.
    Monomial(u64),
    /// Composition, applied rightmost first.
    Composition(Vec<DerivationOp>),
}

impl DerivationOp {
    /// The factor by which this operator divides the precision.
    pub fn precision_divisor(&self) -> u64 {
        match self {
            DerivationOp::Basic(p) => *p,
            DerivationOp::Log | DerivationOp::OmegaWeighted => 1,
            DerivationOp::Monomial(m) => *m,
            DerivationOp::Composition(ops) => {
                ops.iter().map(|op| op.precision_divisor()).product()
            }
        }
    }

    /// Apply to a truncated arithmetic function.
    pub fn apply<K: PrimeLogs>(&self, f: &ArithFn<K>) -> Result<ArithFn<K>> {
        match self {
            DerivationOp::Basic(p) => apply_basic(*p, f),
            DerivationOp::Log => Ok(apply_log(f)),
            DerivationOp::OmegaWeighted => Ok(apply_omega(f)),
            DerivationOp::Monomial(m) => apply_monomial(*m, f),
            DerivationOp::Composition(ops) => {
                let mut acc = f.clone();
                for op in ops.iter().rev() {
                    acc = op.apply(&acc)?;
                }
                Ok(acc)
            }
        }
    }
}

/// `(result)(n) = v_p(n*p) * f(n*p)` on the window `1..=floor(P/p)`.
pub fn apply_basic<K: ExactField>(p: u64, f: &ArithFn<K>) -> Result<ArithFn<K>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let new_prec = f.precision() / p as usize;
    if new_prec == 0 {
        return Err(Error::PrecisionExhausted(format!(
            "basic derivation at {} needs precision at least {}, have {}",
            p,
            p,
            f.precision()
        )));
    }
    Ok(ArithFn::from_fn(new_prec, |n| {
        let np = n * p;
        let v = f.value(np);
        if v.is_zero() {
            K::zero()
        } else {
            K::from_integer(vp_of(p, np) as i64) * v.clone()
        }
    }))
}

fn vp_of(p: u64, n: u64) -> u32 {
    let mut m = n;
    let mut k = 0;
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    k
}

/// `(result)(n) = log(n) * f(n)`; the window is unchanged.
pub fn apply_log<K: PrimeLogs>(f: &ArithFn<K>) -> ArithFn<K> {
    ArithFn::from_fn(f.precision(), |n| {
        let v = f.value(n);
        if v.is_zero() {
            K::zero()
        } else {
            K::log_integer(n).expect("n >= 1") * v.clone()
        }
    })
}

/// `(result)(n) = Omega(n) * f(n)`; the window is unchanged.
pub fn apply_omega<K: ExactField>(f: &ArithFn<K>) -> ArithFn<K> {
    ArithFn::from_fn(f.precision(), |n| {
        let v = f.value(n);
        if v.is_zero() {
            K::zero()
        } else {
            K::from_integer(big_omega(n) as i64) * v.clone()
        }
    })
}

/// Iterated basic derivations along the factorization of `m`, smallest
/// prime first; `m = 1` is the identity. The window shrinks to
/// `floor(P/m)`.
pub fn apply_monomial<K: ExactField>(m: u64, f: &ArithFn<K>) -> Result<ArithFn<K>> {
    assert!(m >= 1, "monomial index must be positive");
    if m as usize > f.precision() {
        return Err(Error::PrecisionExhausted(format!(
            "monomial derivation at {} exceeds precision {}",
            m,
            f.precision()
        )));
    }
    let mut acc = f.clone();
    for (p, k) in factorize(m) {
        for _ in 0..k {
            acc = apply_basic(p, &acc)?;
        }
    }
    Ok(acc)
}

/// The partial sum over primes `p <= bound` of `log(p) * (e_p * d_p f)`,
/// on the window `floor(P/2)` (the `p = 2` term is the binding one).
/// With no primes below the bound the sum is empty and the window is kept.
pub fn partial_sum_log<K: PrimeLogs>(bound: u64, f: &ArithFn<K>) -> Result<ArithFn<K>> {
    let precision = f.precision();
    if bound < 2 {
        return Ok(ArithFn::zero(precision));
    }
    let out_prec = precision / 2;
    if out_prec == 0 {
        return Err(Error::PrecisionExhausted(format!(
            "partial sum needs precision at least 2, have {}",
            precision
        )));
    }
    let mut acc = ArithFn::zero(out_prec);
    // Primes beyond the window cannot divide any in-window index, so their
    // terms vanish identically there.
    for p in primes_up_to(bound.min(out_prec as u64)) {
        let basis = ArithFn::<K>::basis(p, precision);
        let derived = apply_basic(p, f)?;
        let term = ArithFn::from_fn(out_prec, |n| {
            basis
                .convolve_at(&derived, n)
                .expect("in-window term is determined")
        });
        acc = acc.add(&term.scale(&K::log_prime(p)));
    }
    Ok(acc)
}

/// Both sides of the commutator identity for the monomial operator at `m`
/// against the log-derivation, at the common window `floor(P/m)`: the
/// bracket `d_m(dlog f) - dlog(d_m f)` and the claimed value
/// `log(m) * d_m f`. Callers assert equality.
pub fn commutator_apply<K: PrimeLogs>(
    m: u64,
    f: &ArithFn<K>,
) -> Result<(ArithFn<K>, ArithFn<K>)> {
    let m_then_log = apply_monomial(m, &apply_log(f))?;
    let log_then_m = apply_log(&apply_monomial(m, f)?);
    let bracket = m_then_log.sub(&log_then_m);
    let claimed = apply_monomial(m, f)?.scale(&K::log_integer(m)?);
    Ok((bracket, claimed))
}

impl fmt::Display for DerivationOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DerivationOp::Basic(p) => write!(f, "d_{}", p),
            DerivationOp::Log => write!(f, "dlog"),
            DerivationOp::OmegaWeighted => write!(f, "dOmega"),
            DerivationOp::Monomial(m) => write!(f, "d[{}]", m),
            DerivationOp::Composition(ops) => {
                for (i, op) in ops.iter().enumerate() {
                    if i > 0 {
                        write!(f, " ")?;
                    }
                    write!(f, "{}", op)?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for DerivationOp {
    type Err = Error;

    /// Parse the text syntax: `d_p` (basic), `dlog`, `dOmega`, `d[m]`
    /// (monomial), with juxtaposition for composition, e.g. `d[4] dlog`.
    fn from_str(s: &str) -> Result<Self> {
        let mut ops = Vec::new();
        let mut pos = 0;
        let bytes = s.as_bytes();
        while pos < bytes.len() {
            if bytes[pos].is_ascii_whitespace() {
                pos += 1;
                continue;
            }
            let start = pos;
            while pos < bytes.len() && !bytes[pos].is_ascii_whitespace() {
                pos += 1;
            }
            let token = &s[start..pos];
            let op = parse_token(token, start)?;
            ops.push(op);
        }
        match ops.len() {
            0 => Err(Error::parse(0, "empty derivation expression")),
            1 => Ok(ops.pop().expect("one element")),
            _ => Ok(DerivationOp::Composition(ops)),
        }
    }
}

fn parse_token(token: &str, offset: usize) -> Result<DerivationOp> {
    if token == "dlog" {
        return Ok(DerivationOp::Log);
    }
    if token == "dOmega" {
        return Ok(DerivationOp::OmegaWeighted);
    }
    if let Some(rest) = token.strip_prefix("d_") {
        let p: u64 = rest.parse().map_err(|_| {
            Error::parse(offset + 2, format!("expected a prime after 'd_', found '{}'", rest))
        })?;
        if !is_prime(p) {
            return Err(Error::parse(
                offset + 2,
                format!("basic derivation index {} is not prime", p),
            ));
        }
        return Ok(DerivationOp::Basic(p));
    }
    if let Some(rest) = token.strip_prefix("d[") {
        let inner = rest.strip_suffix(']').ok_or_else(|| {
            Error::parse(offset + token.len(), "expected ']' to close 'd['")
        })?;
        let m: u64 = inner.parse().map_err(|_| {
            Error::parse(offset + 2, format!("expected an integer in 'd[..]', found '{}'", inner))
        })?;
        if m == 0 {
            return Err(Error::parse(offset + 2, "monomial index must be at least 1"));
        }
        return Ok(DerivationOp::Monomial(m));
    }
    Err(Error::parse(
        offset,
        format!("unknown derivation token '{}'", token),
    ))
}
