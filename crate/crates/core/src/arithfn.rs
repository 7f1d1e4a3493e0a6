//! Truncated arithmetic functions under pointwise addition and Dirichlet
//! convolution.
//!
//! A value stores `f(1), ..., f(N)` exactly; `N` is the precision. Functions
//! vanishing on the whole window form an ideal (convolution only reads
//! values at divisors), so ring operations are exact on the level-`N`
//! quotient: there is no error term, only a window.

use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::ExactField;
use crate::scalar::Scalar;
use crate::Rational;

/// The least index with a nonzero value, when one exists in the window.
///
/// A function that is zero everywhere up to its precision is only ever
/// "zero so far": the window cannot certify the infinite tail, so the
/// outcome carries the level instead of pretending to be infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrdResult {
    Known(u64),
    AllZeroUpTo(u64),
}

impl OrdResult {
    pub fn known(self) -> Option<u64> {
        match self {
            OrdResult::Known(n) => Some(n),
            OrdResult::AllZeroUpTo(_) => None,
        }
    }
}

/// A truncated arithmetic function with values in `K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArithFn<K = Scalar> {
    values: Vec<K>,
}

impl<K: ExactField> ArithFn<K> {
    /// The zero function at the given precision.
    pub fn zero(precision: usize) -> Self {
        assert!(precision >= 1, "precision must be at least 1");
        ArithFn {
            values: vec![K::zero(); precision],
        }
    }

    /// The indicator `e_n`: 1 at `n`, 0 elsewhere (zero if `n` is beyond
    /// the window).
    pub fn basis(n: u64, precision: usize) -> Self {
        let mut f = ArithFn::zero(precision);
        if n >= 1 && n <= precision as u64 {
            f.values[(n - 1) as usize] = K::one();
        }
        f
    }

    /// The constant `c` embedded at index 1 (`c * e_1`).
    pub fn constant(c: K, precision: usize) -> Self {
        let mut f = ArithFn::zero(precision);
        f.values[0] = c;
        f
    }

    pub fn from_values(values: Vec<K>) -> Self {
        assert!(!values.is_empty(), "precision must be at least 1");
        ArithFn { values }
    }

    pub fn from_fn(precision: usize, mut value_at: impl FnMut(u64) -> K) -> Self {
        assert!(precision >= 1, "precision must be at least 1");
        ArithFn {
            values: (1..=precision as u64).map(&mut value_at).collect(),
        }
    }

    pub fn precision(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[K] {
        &self.values
    }

    /// `f(n)` for `1 <= n <= precision`.
    pub fn value(&self, n: u64) -> &K {
        assert!(n >= 1 && n <= self.values.len() as u64, "index {} outside window", n);
        &self.values[(n - 1) as usize]
    }

    pub fn value_in_window(&self, n: u64) -> Option<&K> {
        if n >= 1 && n <= self.values.len() as u64 {
            Some(&self.values[(n - 1) as usize])
        } else {
            None
        }
    }

    pub fn set_value(&mut self, n: u64, v: K) {
        assert!(n >= 1 && n <= self.values.len() as u64);
        self.values[(n - 1) as usize] = v;
    }

    /// Restrict to a smaller window.
    pub fn truncate(&self, precision: usize) -> Self {
        assert!(precision >= 1 && precision <= self.values.len());
        ArithFn {
            values: self.values[..precision].to_vec(),
        }
    }

    pub fn is_zero_in_window(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    /// Least index with a nonzero value, or the certified-so-far level.
    pub fn ord(&self) -> OrdResult {
        for (i, v) in self.values.iter().enumerate() {
            if !v.is_zero() {
                return OrdResult::Known(i as u64 + 1);
            }
        }
        OrdResult::AllZeroUpTo(self.values.len() as u64)
    }

    /// `1/ord(f)` when the order is known in-window. A `None` means the
    /// norm is at most `1/(N+1)`; finite precision can never certify 0.
    pub fn norm(&self) -> Option<Rational> {
        self.ord()
            .known()
            .map(|n| Rational::new(1.into(), n.into()))
    }

    /// Pointwise sum at the smaller of the two windows.
    pub fn add(&self, other: &Self) -> Self {
        let n = self.values.len().min(other.values.len());
        ArithFn {
            values: (0..n)
                .map(|i| self.values[i].clone() + other.values[i].clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.values.len().min(other.values.len());
        ArithFn {
            values: (0..n)
                .map(|i| self.values[i].clone() - other.values[i].clone())
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        ArithFn {
            values: self.values.iter().map(|v| -v.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &K) -> Self {
        ArithFn {
            values: self.values.iter().map(|v| v.clone() * c.clone()).collect(),
        }
    }

    /// Dirichlet convolution `(f*g)(n) = sum_{d|n} f(d) g(n/d)` at the
    /// smaller of the two windows.
    pub fn convolve(&self, other: &Self) -> Self {
        let n = self.values.len().min(other.values.len());
        let mut acc = vec![K::zero(); n];
        for i in 1..=n as u64 {
            let fi = &self.values[(i - 1) as usize];
            if fi.is_zero() {
                continue;
            }
            for j in 1..=(n as u64 / i) {
                let gj = &other.values[(j - 1) as usize];
                if gj.is_zero() {
                    continue;
                }
                let idx = (i * j - 1) as usize;
                acc[idx] = acc[idx].clone() + fi.clone() * gj.clone();
            }
        }
        ArithFn { values: acc }
    }

    /// The single convolution coefficient `(f*g)(n)`, when it is determined
    /// by the available windows. A divisor pair with one factor known to be
    /// zero contributes zero even if the other factor is out of window.
    pub fn convolve_at(&self, other: &Self, n: u64) -> Option<K> {
        let pf = self.values.len() as u64;
        let pg = other.values.len() as u64;
        let mut acc = K::zero();
        for a in crate::primes::divisors(n) {
            let b = n / a;
            let fa = (a <= pf).then(|| &self.values[(a - 1) as usize]);
            let gb = (b <= pg).then(|| &other.values[(b - 1) as usize]);
            match (fa, gb) {
                (Some(x), _) if x.is_zero() => {}
                (_, Some(y)) if y.is_zero() => {}
                (Some(x), Some(y)) => acc = acc + x.clone() * y.clone(),
                _ => return None,
            }
        }
        Some(acc)
    }

    /// Convolution inverse on the window, by the divisor recursion
    /// `g(1) = 1/f(1)`, `g(n) = -1/f(1) * sum_{d|n, d>1} f(d) g(n/d)`.
    ///
    /// Fails with [`Error::NonUnit`] when `f(1) = 0`.
    pub fn invert(&self) -> Result<Self> {
        let lead = &self.values[0];
        if lead.is_zero() {
            return Err(Error::NonUnit);
        }
        let inv_lead = K::one().checked_div(lead).expect("nonzero leading value");
        let n = self.values.len();
        let mut g: Vec<K> = vec![K::zero(); n];
        g[0] = inv_lead.clone();
        for m in 2..=n as u64 {
            let mut acc = K::zero();
            let mut d = 2u64;
            while d <= m {
                if m % d == 0 {
                    let fd = &self.values[(d - 1) as usize];
                    if !fd.is_zero() {
                        acc = acc + fd.clone() * g[(m / d - 1) as usize].clone();
                    }
                }
                d += 1;
            }
            g[(m - 1) as usize] = -(inv_lead.clone() * acc);
        }
        Ok(ArithFn { values: g })
    }

    /// Pointwise equality on the common window.
    pub fn eq_in_window(&self, other: &Self) -> bool {
        let n = self.values.len().min(other.values.len());
        (0..n).all(|i| self.values[i] == other.values[i])
    }

    /// Map values into another field.
    pub fn map<L: ExactField>(&self, f: impl Fn(&K) -> L) -> ArithFn<L> {
        ArithFn {
            values: self.values.iter().map(f).collect(),
        }
    }

    /// Fallible value map, preserving the window.
    pub fn try_map<L: ExactField>(
        &self,
        mut f: impl FnMut(&K) -> Result<L>,
    ) -> Result<ArithFn<L>> {
        Ok(ArithFn {
            values: self.values.iter().map(&mut f).collect::<Result<Vec<L>>>()?,
        })
    }
}

impl<K: ExactField> Add for &ArithFn<K> {
    type Output = ArithFn<K>;
    fn add(self, rhs: &ArithFn<K>) -> ArithFn<K> {
        ArithFn::add(self, rhs)
    }
}

impl<K: ExactField> Sub for &ArithFn<K> {
    type Output = ArithFn<K>;
    fn sub(self, rhs: &ArithFn<K>) -> ArithFn<K> {
        ArithFn::sub(self, rhs)
    }
}

impl<K: ExactField> Neg for &ArithFn<K> {
    type Output = ArithFn<K>;
    fn neg(self) -> ArithFn<K> {
        ArithFn::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::primes::divisors;

    type F = ArithFn<Rational>;

    fn rat(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn ones(precision: usize) -> F {
        F::from_fn(precision, |_| rat(1))
    }

    #[test]
    fn basis_examples() {
        let e1 = F::basis(1, 8);
        assert_eq!(
            e1.values(),
            [1, 0, 0, 0, 0, 0, 0, 0].map(rat)
        );
        let e3 = F::basis(3, 8);
        for n in 1..=8 {
            assert_eq!(*e3.value(n), rat(if n == 3 { 1 } else { 0 }));
        }
        assert!(F::basis(9, 8).is_zero_in_window());
    }

    #[test]
    fn add_and_min_precision() {
        let e2 = F::basis(2, 8);
        let e3 = F::basis(3, 8);
        let s = e2.add(&e3);
        assert_eq!(*s.value(2), rat(1));
        assert_eq!(*s.value(3), rat(1));
        assert!(e2.add(&e2.neg()).is_zero_in_window());

        let wide = F::basis(2, 8);
        let narrow = F::basis(2, 4);
        let sum = wide.add(&narrow);
        assert_eq!(sum.precision(), 4);
        assert_eq!(*sum.value(2), rat(2));
    }

    #[test]
    fn convolve_basis_multiplies_indices() {
        for m in 1..=4u64 {
            for k in 1..=4u64 {
                let prod = F::basis(m, 16).convolve(&F::basis(k, 16));
                assert_eq!(prod, F::basis(m * k, 16));
            }
        }
    }

    #[test]
    fn convolve_counts_divisors() {
        // Oracle: (1*1)(n) = number of divisors of n.
        let d = ones(16).convolve(&ones(16));
        for n in 1..=16u64 {
            assert_eq!(*d.value(n), rat(divisors(n).len() as i64));
        }
        assert_eq!(*d.value(6), rat(4));
    }

    #[test]
    fn ord_and_norm() {
        let e4 = F::basis(4, 8);
        assert_eq!(e4.ord(), OrdResult::Known(4));
        assert_eq!(e4.norm(), Some(Rational::new(1.into(), 4.into())));
        let z = F::zero(8);
        assert_eq!(z.ord(), OrdResult::AllZeroUpTo(8));
        assert_eq!(z.norm(), None);
    }

    #[test]
    fn ord_multiplicativity_boundary() {
        let f = F::from_fn(24, |n| if n >= 3 { rat((n % 5) as i64) } else { rat(0) });
        let g = F::from_fn(24, |n| if n >= 2 { rat(1) } else { rat(0) });
        let (of, og) = (f.ord().known().unwrap(), g.ord().known().unwrap());
        let prod = f.convolve(&g);
        assert_eq!(prod.ord(), OrdResult::Known(of * og));
        assert_eq!(
            *prod.value(of * og),
            f.value(of) * g.value(og)
        );
    }

    #[test]
    fn invert_identity_and_recursion() {
        let e1 = F::basis(1, 8);
        assert_eq!(e1.invert().unwrap(), e1);

        let f = F::basis(1, 16).add(&F::basis(2, 16));
        let g = f.invert().unwrap();
        // Checked by convolving back to the identity.
        assert_eq!(f.convolve(&g), F::basis(1, 16));
        // The inverse alternates on powers of two.
        for n in 1..=16u64 {
            let expected = if n.is_power_of_two() {
                rat(if n.trailing_zeros() % 2 == 0 { 1 } else { -1 })
            } else {
                rat(0)
            };
            assert_eq!(*g.value(n), expected);
        }

        assert_eq!(F::basis(2, 8).invert(), Err(Error::NonUnit));
    }

    #[test]
    fn convolve_at_matches_full_convolution() {
        let f = F::from_fn(20, |n| rat((n % 7) as i64 - 3));
        let g = F::from_fn(20, |n| rat((3 * n % 5) as i64));
        let full = f.convolve(&g);
        for n in 1..=20u64 {
            assert_eq!(f.convolve_at(&g, n), Some(full.value(n).clone()));
        }
    }

    #[test]
    fn convolve_at_short_circuits_zero_factors() {
        // e_2 * g at index 2n only needs g(n), even beyond g's window when
        // the complementary factor is zero.
        let e2 = F::basis(2, 40);
        let g = F::from_fn(10, |n| rat(n as i64));
        for n in 1..=20u64 {
            let expected = if n % 2 == 0 { Some(rat((n / 2) as i64)) } else { Some(rat(0)) };
            assert_eq!(e2.convolve_at(&g, n), expected, "at {}", n);
        }
        // Index 22 needs g(11): out of window and the factor e_2(2) is nonzero.
        assert_eq!(e2.convolve_at(&g, 22), None);
    }

    #[test]
    fn ultrametric_inequality_spot() {
        let f = F::basis(4, 16);
        let g = F::basis(6, 16);
        let sum = f.add(&g);
        let (nf, ng, ns) = (f.norm().unwrap(), g.norm().unwrap(), sum.norm().unwrap());
        assert!(ns <= nf.max(ng));
    }
}
