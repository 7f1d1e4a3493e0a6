//! The fraction field of the convolution ring.
//!
//! Elements are numerator/denominator pairs of truncated arithmetic
//! functions; the denominator must have a known (in-window) order, which is
//! the only nonzero-ness a truncation can certify. Equality is by
//! cross-multiplication on the common window; fractions are never reduced
//! (the convolution ring has no usable gcd theory), which keeps every
//! operation exact. Cross-multiplication multiplies denominator orders, so
//! arithmetic fails with `UncertifiedNonzero` once the combined denominator
//! escapes the window.
//!
//! First-order derivations extend by the quotient rule; monomial and
//! composite operators extend as compositions of the extensions of their
//! prime factors, never by a single quotient-rule step (they are not
//! derivations themselves, and the index-1 operator is the identity).

use crate::arithfn::{ArithFn, OrdResult};
use crate::derivations::DerivationOp;
use crate::error::{Error, Result};
use crate::field::{ExactField, PrimeLogs};
use crate::scalar::Scalar;
use crate::Rational;

/// An element `num/den` of the fraction field, truncated to a common window.
#[derive(Debug, Clone)]
pub struct FracElem<K = Scalar> {
    num: ArithFn<K>,
    den: ArithFn<K>,
}

impl<K: ExactField> FracElem<K> {
    /// Build `num/den`, truncating both to the common window. The
    /// denominator's order must be known within that window.
    pub fn new(num: ArithFn<K>, den: ArithFn<K>) -> Result<Self> {
        let precision = num.precision().min(den.precision());
        let num = num.truncate(precision);
        let den = den.truncate(precision);
        match den.ord() {
            OrdResult::Known(_) => Ok(FracElem { num, den }),
            OrdResult::AllZeroUpTo(n) => Err(Error::UncertifiedNonzero(n as usize)),
        }
    }

    /// Embed a ring element as `f / e_1`.
    pub fn embed(f: ArithFn<K>) -> Self {
        let den = ArithFn::basis(1, f.precision());
        FracElem { num: f, den }
    }

    /// The constant `c` as `c*e_1 / e_1`.
    pub fn constant(c: K, precision: usize) -> Self {
        FracElem::embed(ArithFn::constant(c, precision))
    }

    pub fn num(&self) -> &ArithFn<K> {
        &self.num
    }

    pub fn den(&self) -> &ArithFn<K> {
        &self.den
    }

    /// The common window of numerator and denominator.
    pub fn eff_precision(&self) -> usize {
        self.num.precision()
    }

    pub fn is_zero_in_window(&self) -> bool {
        self.num.is_zero_in_window()
    }

    /// `|num|/|den| = ord(den)/ord(num)` when the numerator order is known.
    pub fn norm(&self) -> Option<Rational> {
        let nf = self.num.ord().known()?;
        let ng = self.den.ord().known().expect("certified denominator");
        Some(Rational::new(ng.into(), nf.into()))
    }

    /// Sum by cross-multiplication. Fails when the combined denominator's
    /// order escapes the window.
    pub fn add(&self, other: &Self) -> Result<Self> {
        let num = self
            .num
            .convolve(&other.den)
            .add(&other.num.convolve(&self.den));
        let den = self.den.convolve(&other.den);
        FracElem::new(num, den)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        FracElem {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        FracElem::new(
            self.num.convolve(&other.num),
            self.den.convolve(&other.den),
        )
    }

    /// Division; the divisor's numerator order must be known in-window.
    pub fn div(&self, other: &Self) -> Result<Self> {
        match other.num.ord() {
            OrdResult::Known(_) => FracElem::new(
                self.num.convolve(&other.den),
                self.den.convolve(&other.num),
            ),
            OrdResult::AllZeroUpTo(n) => Err(Error::UncertifiedNonzero(n as usize)),
        }
    }

    pub fn scale(&self, c: &K) -> Self {
        FracElem {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    /// Equality by cross-multiplication on the common window.
    pub fn eq_in_window(&self, other: &Self) -> bool {
        self.num
            .convolve(&other.den)
            .eq_in_window(&other.num.convolve(&self.den))
    }

    /// One basic derivation, extended by the quotient rule:
    /// `(D(num)*den - num*D(den)) / (den*den)`.
    pub fn derive_basic(&self, p: u64) -> Result<Self> {
        let dnum = crate::derivations::apply_basic(p, &self.num)?;
        let dden = crate::derivations::apply_basic(p, &self.den)?;
        self.quotient_rule(dnum, dden)
    }

    /// The monomial operator at `m`: the composition of extended basic
    /// derivations along the factorization of `m`; the identity for `m = 1`.
    pub fn derive_monomial(&self, m: u64) -> Result<Self> {
        assert!(m >= 1, "monomial index must be positive");
        let mut acc = self.clone();
        for (p, k) in crate::primes::factorize(m) {
            for _ in 0..k {
                acc = acc.derive_basic(p)?;
            }
        }
        Ok(acc)
    }

    fn quotient_rule(&self, dnum: ArithFn<K>, dden: ArithFn<K>) -> Result<Self> {
        let num = dnum
            .convolve(&self.den)
            .sub(&self.num.convolve(&dden));
        let den = self.den.convolve(&self.den);
        FracElem::new(num, den).map_err(|e| match e {
            // The squared denominator's order may escape the window even
            // though the denominator itself is certified.
            Error::UncertifiedNonzero(n) => Error::PrecisionExhausted(format!(
                "squared denominator order exceeds the window of {}",
                n
            )),
            other => other,
        })
    }
}

impl<K: PrimeLogs> FracElem<K> {
    /// Apply a derivation operator: first-order kinds extend by the
    /// quotient rule, composite kinds as compositions of extensions.
    pub fn derive(&self, op: &DerivationOp) -> Result<Self> {
        match op {
            DerivationOp::Basic(p) => self.derive_basic(*p),
            DerivationOp::Log => {
                let dnum = crate::derivations::apply_log(&self.num);
                let dden = crate::derivations::apply_log(&self.den);
                self.quotient_rule(dnum, dden)
            }
            DerivationOp::OmegaWeighted => {
                let dnum = crate::derivations::apply_omega(&self.num);
                let dden = crate::derivations::apply_omega(&self.den);
                self.quotient_rule(dnum, dden)
            }
            DerivationOp::Monomial(m) => self.derive_monomial(*m),
            DerivationOp::Composition(ops) => {
                let mut acc = self.clone();
                for inner in ops.iter().rev() {
                    acc = acc.derive(inner)?;
                }
                Ok(acc)
            }
        }
    }
}

impl<K: ExactField> PartialEq for FracElem<K> {
    fn eq(&self, other: &Self) -> bool {
        self.eq_in_window(other)
    }
}

/// Outcome of probing whether a fraction lies in a derivation kernel.
#[derive(Debug, Clone, PartialEq)]
pub enum KernelVerdict<K> {
    /// The element is the stated constant on the whole window.
    InKernelConstant(K),
    /// The element is provably not constant; `witness` is an index at which
    /// constancy (or kernel membership) fails.
    NotInKernel { witness: u64 },
    /// The window was too small to run the probe.
    Inconclusive { reason: String },
}

/// Kernel probe for the log-derivation: decides, within the window, whether
/// `a` is a constant.
///
/// The descent follows the order-comparison argument: a zero derivative
/// forces equal numerator/denominator orders, the candidate constant is
/// forced by the values there, and the residual `num - c*den` must vanish.
/// A nonzero residual certifies non-constancy inside the window, which for
/// the log-derivation certifies non-membership in the kernel.
pub fn kernel_probe_log<K: PrimeLogs>(a: &FracElem<K>) -> KernelVerdict<K> {
    kernel_probe_with(&DerivationOp::Log, a)
}

/// The same probe structure against an arbitrary derivation operator.
///
/// The `NotInKernel` outcome of the constancy phase is only a sound kernel
/// statement for the log-derivation, whose kernel is exactly the constants;
/// for the omega weighting the probe visibly misfires on `e_p/e_q`, which
/// is the behavior the log-injectivity contrast tests pin down.
pub fn kernel_probe_with<K: PrimeLogs>(op: &DerivationOp, a: &FracElem<K>) -> KernelVerdict<K> {
    let derived = match a.derive(op) {
        Ok(d) => d,
        Err(e) => {
            return KernelVerdict::Inconclusive {
                reason: format!("cannot form the derivative: {}", e),
            }
        }
    };
    if let OrdResult::Known(witness) = derived.num().ord() {
        return KernelVerdict::NotInKernel { witness };
    }
    // Derivative vanishes in-window; attempt to exhibit a constant.
    let nf = match a.num().ord() {
        OrdResult::Known(n) => n,
        OrdResult::AllZeroUpTo(_) => return KernelVerdict::InKernelConstant(K::zero()),
    };
    let ng = a.den().ord().known().expect("certified denominator");
    if nf != ng {
        return KernelVerdict::NotInKernel {
            witness: nf.min(ng),
        };
    }
    let c = a
        .num()
        .value(nf)
        .checked_div(a.den().value(ng))
        .expect("order value is nonzero");
    let residual = a.num().sub(&a.den().scale(&c));
    match residual.ord() {
        OrdResult::AllZeroUpTo(_) => KernelVerdict::InKernelConstant(c),
        OrdResult::Known(witness) => KernelVerdict::NotInKernel { witness },
    }
}
