//! Monomials in the formal log symbols `L_p` (one symbol per prime).

use std::cmp::Ordering;
use std::fmt;

/// A product of symbol powers `L_{p1}^{a1} * ... * L_{pk}^{ak}`.
///
/// Factors are stored sorted by prime with strictly positive exponents;
/// the empty product is the monomial 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    factors: Vec<(u64, u32)>,
}

impl Monomial {
    /// The monomial 1.
    pub fn one() -> Self {
        Monomial::default()
    }

    /// The single symbol `L_p`.
    pub fn symbol(p: u64) -> Self {
        Monomial {
            factors: vec![(p, 1)],
        }
    }

    /// Build from (prime, exponent) pairs; zero exponents are dropped.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u64, u32)>) -> Self {
        let mut factors: Vec<(u64, u32)> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        factors.sort_unstable_by_key(|&(p, _)| p);
        factors.dedup_by(|later, earlier| {
            if later.0 == earlier.0 {
                earlier.1 += later.1;
                true
            } else {
                false
            }
        });
        Monomial { factors }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    /// Total degree.
    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|&(_, e)| e).sum()
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    /// Product of two monomials (exponents add).
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut factors = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            let (pa, ea) = self.factors[i];
            let (pb, eb) = other.factors[j];
            match pa.cmp(&pb) {
                Ordering::Less => {
                    factors.push((pa, ea));
                    i += 1;
                }
                Ordering::Greater => {
                    factors.push((pb, eb));
                    j += 1;
                }
                Ordering::Equal => {
                    factors.push((pa, ea + eb));
                    i += 1;
                    j += 1;
                }
            }
        }
        factors.extend_from_slice(&self.factors[i..]);
        factors.extend_from_slice(&other.factors[j..]);
        Monomial { factors }
    }

    /// Exact quotient `self / other`, or `None` if some exponent would go negative.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut factors = self.factors.clone();
        for &(p, e) in &other.factors {
            let slot = factors.iter_mut().find(|(q, _)| *q == p)?;
            if slot.1 < e {
                return None;
            }
            slot.1 -= e;
        }
        factors.retain(|&(_, e)| e > 0);
        Some(Monomial { factors })
    }

    /// Primes whose symbols occur in this monomial.
    pub fn symbols(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }
}

/// Graded lexicographic order: first by total degree, ties broken by
/// comparing exponents prime by prime in ascending prime order (a higher
/// exponent on the earliest differing prime wins).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut i, mut j) = (0, 0);
        loop {
            match (self.factors.get(i), other.factors.get(j)) {
                (None, None) => return Ordering::Equal,
                // The side that still has factors puts its exponents on
                // later (larger) primes, so it is lexicographically smaller.
                (None, Some(_)) => return Ordering::Greater,
                (Some(_), None) => return Ordering::Less,
                (Some(&(pa, ea)), Some(&(pb, eb))) => match pa.cmp(&pb) {
                    // Smaller prime with positive exponent ranks higher.
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => match ea.cmp(&eb) {
                        Ordering::Equal => {
                            i += 1;
                            j += 1;
                        }
                        ord => return ord,
                    },
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (k, &(p, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "L{}", p)?;
            } else {
                write!(f, "L{}^{}", p, e)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplication_merges_exponents() {
        let a = Monomial::from_pairs([(2, 1), (3, 2)]);
        let b = Monomial::from_pairs([(3, 1), (5, 1)]);
        let ab = a.mul(&b);
        assert_eq!(ab.factors(), &[(2, 1), (3, 3), (5, 1)]);
        assert_eq!(ab.degree(), 5);
    }

    #[test]
    fn graded_lex_order() {
        let one = Monomial::one();
        let l2 = Monomial::symbol(2);
        let l3 = Monomial::symbol(3);
        let l2l3 = l2.mul(&l3);
        let l2sq = l2.mul(&l2);
        let l3sq = l3.mul(&l3);
        // Degree dominates.
        assert!(l2 > one);
        assert!(l2sq > l3);
        // Same degree: the smaller prime ranks higher.
        assert!(l2 > l3);
        assert!(l2sq > l2l3);
        assert!(l2l3 > l3sq);
    }

    #[test]
    fn exact_division() {
        let a = Monomial::from_pairs([(2, 2), (3, 1)]);
        let b = Monomial::from_pairs([(2, 1)]);
        assert_eq!(a.div(&b), Some(Monomial::from_pairs([(2, 1), (3, 1)])));
        assert_eq!(b.div(&a), None);
        assert_eq!(a.div(&Monomial::symbol(5)), None);
        assert_eq!(a.div(&a), Some(Monomial::one()));
    }

    #[test]
    fn display_forms() {
        assert_eq!(Monomial::one().to_string(), "1");
        assert_eq!(Monomial::symbol(2).to_string(), "L2");
        assert_eq!(
            Monomial::from_pairs([(2, 2), (3, 1)]).to_string(),
            "L2^2*L3"
        );
    }
}
