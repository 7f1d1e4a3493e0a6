//! Finite power-series polynomials and the two classical encodings of
//! arithmetic functions: monomials in `X_{p}` variables (one per prime,
//! exponents are p-adic valuations of the index) and formal Dirichlet
//! series `sum f(n)/n^s`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::arithfn::ArithFn;
use crate::error::{Error, Result};
use crate::field::ExactField;
use crate::primes::{factorize, first_primes};
use crate::Rational;

/// A polynomial in `m` variables with exact rational coefficients,
/// stored sparsely. No zero coefficients are kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSeriesPoly {
    num_vars: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl PowerSeriesPoly {
    pub fn new(num_vars: usize) -> Self {
        assert!(num_vars >= 1, "at least one variable");
        PowerSeriesPoly {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(
        num_vars: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, Rational)>,
    ) -> Result<Self> {
        let mut ps = PowerSeriesPoly::new(num_vars);
        for (exps, coeff) in terms {
            ps.add_term(exps, coeff)?;
        }
        Ok(ps)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, coeff: Rational) -> Result<()> {
        if exps.len() != self.num_vars {
            return Err(Error::InvalidInput(format!(
                "exponent vector of length {} in a {}-variable polynomial",
                exps.len(),
                self.num_vars
            )));
        }
        if coeff.is_zero() {
            return Ok(());
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
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
        Ok(())
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Formal partial derivative with respect to variable `var` (0-based).
    pub fn partial_derivative(&self, var: usize) -> PowerSeriesPoly {
        assert!(var < self.num_vars);
        let mut out = PowerSeriesPoly::new(self.num_vars);
        for (exps, coeff) in &self.terms {
            let e = exps[var];
            if e == 0 {
                continue;
            }
            let mut lowered = exps.clone();
            lowered[var] = e - 1;
            out.add_term(lowered, coeff * Rational::from_integer(e.into()))
                .expect("same variable count");
        }
        out
    }
}

impl fmt::Display for PowerSeriesPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Descending by total degree, then by the exponent vector.
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let (da, db) = (
                a.iter().sum::<u32>(),
                b.iter().sum::<u32>(),
            );
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        for (k, exps) in keys.into_iter().enumerate() {
            let c = &self.terms[exps];
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
            let mono: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("X{}", i + 1)
                    } else {
                        format!("X{}^{}", i + 1, e)
                    }
                })
                .collect();
            let coeff_str = if abs.denom().is_one() {
                abs.numer().to_string()
            } else {
                format!("{}/{}", abs.numer(), abs.denom())
            };
            if mono.is_empty() {
                write!(f, "{}", coeff_str)?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{}*{}", coeff_str, mono.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Decode a polynomial into an arithmetic function: the monomial with
/// exponents `(a_1, ..., a_m)` lands at index `prod p_i^{a_i}` over the
/// first `m` primes. Monomials beyond the window are truncated away.
pub fn from_power_series<K: ExactField>(ps: &PowerSeriesPoly, precision: usize) -> ArithFn<K> {
    let primes = first_primes(ps.num_vars);
    let mut f = ArithFn::zero(precision);
    'terms: for (exps, coeff) in ps.terms() {
        let mut index: u64 = 1;
        for (i, &e) in exps.iter().enumerate() {
            for _ in 0..e {
                index = match index.checked_mul(primes[i]) {
                    Some(v) if v <= precision as u64 => v,
                    _ => continue 'terms,
                };
            }
        }
        f.set_value(index, K::from_rational(coeff.clone()));
    }
    f
}

/// Encode an arithmetic function as a polynomial in `num_vars` variables.
///
/// Every in-window index with a nonzero value must factor over the first
/// `num_vars` primes, and every such value must be a plain rational.
pub fn to_power_series<K: ExactField>(
    f: &ArithFn<K>,
    num_vars: usize,
) -> Result<PowerSeriesPoly> {
    let primes = first_primes(num_vars);
    let mut ps = PowerSeriesPoly::new(num_vars);
    for n in 1..=f.precision() as u64 {
        let v = f.value(n);
        if v.is_zero() {
            continue;
        }
        let coeff = v
            .to_rational()
            .ok_or(Error::NonRationalCoefficient { index: n })?;
        let mut exps = vec![0u32; num_vars];
        for (p, k) in factorize(n) {
            match primes.iter().position(|&q| q == p) {
                Some(i) => exps[i] = k,
                None => {
                    return Err(Error::NonSmoothSupport {
                        index: n,
                        vars: num_vars,
                    })
                }
            }
        }
        ps.add_term(exps, coeff)?;
    }
    Ok(ps)
}

/// The smallest variable count whose primes cover the support of `f`
/// (at least 1).
pub fn minimal_vars<K: ExactField>(f: &ArithFn<K>) -> usize {
    let mut largest = 0u64;
    for n in 1..=f.precision() as u64 {
        if !f.value(n).is_zero() {
            if let Some(&(p, _)) = factorize(n).last() {
                largest = largest.max(p);
            }
        }
    }
    crate::primes::primes_up_to(largest).len().max(1)
}

impl<K: ExactField> ArithFn<K> {
    /// Render as a truncated formal Dirichlet series, omitting zero terms,
    /// e.g. `1/2^s + 3/4^s`.
    pub fn to_dirichlet_string(&self) -> String {
        let mut out = String::new();
        for n in 1..=self.precision() as u64 {
            let v = self.value(n);
            if v.is_zero() {
                continue;
            }
            let (negative, magnitude) = match v.to_rational() {
                Some(r) => {
                    let neg = r.is_negative();
                    let abs = if neg { -&r } else { r.clone() };
                    let s = if abs.denom().is_one() {
                        abs.numer().to_string()
                    } else if n == 1 {
                        format!("{}/{}", abs.numer(), abs.denom())
                    } else {
                        format!("({}/{})", abs.numer(), abs.denom())
                    };
                    (neg, s)
                }
                None => (false, format!("({})", v)),
            };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            out.push_str(&magnitude);
            if n > 1 {
                out.push_str(&format!("/{}^s", n));
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;

    type F = ArithFn<Rational>;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn monomials_map_to_prime_power_indices() {
        // X1^2 in one variable decodes at index 2^2 = 4.
        let ps = PowerSeriesPoly::from_terms(1, [(vec![2], rat(1, 1))]).unwrap();
        assert_eq!(from_power_series::<Rational>(&ps, 8), F::basis(4, 8));

        // X1*X2 decodes at index 2*3 = 6.
        let ps = PowerSeriesPoly::from_terms(2, [(vec![1, 1], rat(1, 1))]).unwrap();
        assert_eq!(from_power_series::<Rational>(&ps, 8), F::basis(6, 8));

        // The constant 1 decodes at index 1.
        let ps = PowerSeriesPoly::from_terms(2, [(vec![0, 0], rat(1, 1))]).unwrap();
        assert_eq!(from_power_series::<Rational>(&ps, 8), F::basis(1, 8));
    }

    #[test]
    fn round_trip_on_smooth_support() {
        let ps = PowerSeriesPoly::from_terms(
            2,
            [
                (vec![0, 0], rat(2, 3)),
                (vec![1, 0], rat(-1, 1)),
                (vec![2, 1], rat(5, 2)),
            ],
        )
        .unwrap();
        let f = from_power_series::<Rational>(&ps, 16);
        assert_eq!(to_power_series(&f, 2).unwrap(), ps);
    }

    #[test]
    fn truncation_drops_out_of_window_monomials() {
        let ps = PowerSeriesPoly::from_terms(1, [(vec![5], rat(1, 1))]).unwrap();
        // 2^5 = 32 > 8: decodes to the zero function.
        assert!(from_power_series::<Rational>(&ps, 8).is_zero_in_window());
    }

    #[test]
    fn non_smooth_support_is_rejected() {
        let f = F::basis(7, 8);
        assert_eq!(
            to_power_series(&f, 2),
            Err(Error::NonSmoothSupport { index: 7, vars: 2 })
        );
        assert!(to_power_series(&f, 4).is_ok());
    }

    #[test]
    fn symbolic_coefficients_are_rejected() {
        let f = ArithFn::<Scalar>::constant(Scalar::symbol(2), 4);
        assert_eq!(
            to_power_series(&f, 1),
            Err(Error::NonRationalCoefficient { index: 1 })
        );
    }

    #[test]
    fn partial_derivative_lowers_exponents() {
        // d/dX1 (X1^2*X2 + 3*X1) = 2*X1*X2 + 3
        let ps = PowerSeriesPoly::from_terms(
            2,
            [(vec![2, 1], rat(1, 1)), (vec![1, 0], rat(3, 1))],
        )
        .unwrap();
        let d = ps.partial_derivative(0);
        let expected = PowerSeriesPoly::from_terms(
            2,
            [(vec![1, 1], rat(2, 1)), (vec![0, 0], rat(3, 1))],
        )
        .unwrap();
        assert_eq!(d, expected);
    }

    #[test]
    fn minimal_vars_counts_primes() {
        assert_eq!(minimal_vars(&F::basis(1, 8)), 1);
        assert_eq!(minimal_vars(&F::basis(6, 8)), 2);
        assert_eq!(minimal_vars(&F::basis(7, 8)), 4);
    }

    #[test]
    fn dirichlet_rendering() {
        assert_eq!(F::basis(1, 4).to_dirichlet_string(), "1");
        assert_eq!(F::zero(4).to_dirichlet_string(), "0");
        let f = F::basis(2, 8).add(&F::basis(4, 8).scale(&rat(3, 1)));
        assert_eq!(f.to_dirichlet_string(), "1/2^s + 3/4^s");
        let g = F::basis(2, 8).neg().add(&F::basis(3, 8).scale(&rat(1, 2)));
        assert_eq!(g.to_dirichlet_string(), "-1/2^s + (1/2)/3^s");
        let h = ArithFn::<Scalar>::basis(6, 8)
            .scale(&Scalar::log(6).unwrap());
        assert_eq!(h.to_dirichlet_string(), "(L2 + L3)/6^s");
    }
}
