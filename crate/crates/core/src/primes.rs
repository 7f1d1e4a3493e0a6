//! Prime utilities: sieve, primality, p-adic valuations and factor counts.
//!
//! Everything here works on `u64` indices. Truncation levels are small
//! (a few hundred at most), so trial division is plenty.

use crate::error::{Error, Result};

/// Primes up to `bound`, ascending, by Eratosthenes.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for p in 2..=n {
        if !composite[p] {
            out.push(p as u64);
            let mut k = p * p;
            while k <= n {
                composite[k] = true;
                k += p;
            }
        }
    }
    out
}

/// The first `count` primes.
pub fn first_primes(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut candidate = 2u64;
    while out.len() < count {
        if is_prime(candidate) {
            out.push(candidate);
        }
        candidate += 1;
    }
    out
}

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// The exponent of `p` in `n`: the largest `k >= 0` with `p^k | n`.
///
/// Rejects non-prime `p`.
pub fn vp(p: u64, n: u64) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    assert!(n >= 1, "vp is defined on positive integers");
    let mut m = n;
    let mut k = 0u32;
    while m % p == 0 {
        m /= p;
        k += 1;
    }
    Ok(k)
}

/// Prime factorization of `n >= 1` as (prime, exponent) pairs, primes ascending.
pub fn factorize(n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1, "factorize is defined on positive integers");
    let mut m = n;
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= m {
        if m % p == 0 {
            let mut k = 0u32;
            while m % p == 0 {
                m /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
    out
}

/// Total number of prime factors of `n` counted with multiplicity.
pub fn big_omega(n: u64) -> u32 {
    factorize(n).into_iter().map(|(_, k)| k).sum()
}

/// Divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

/// True if every prime factor of `n` is among `allowed`.
pub fn is_smooth_over(n: u64, allowed: &[u64]) -> bool {
    factorize(n).iter().all(|(p, _)| allowed.contains(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sieve_matches_trial_division() {
        let sieved = primes_up_to(200);
        let checked: Vec<u64> = (0..=200).filter(|&n| is_prime(n)).collect();
        assert_eq!(sieved, checked);
    }

    #[test]
    fn vp_by_trial_division_oracle() {
        // Oracle: count by repeated division, written out independently.
        fn oracle(p: u64, n: u64) -> u32 {
            let mut m = n;
            let mut k = 0;
            while m % p == 0 && m > 0 {
                m /= p;
                k += 1;
            }
            k
        }
        assert_eq!(vp(2, 12).unwrap(), oracle(2, 12));
        assert_eq!(vp(2, 12).unwrap(), 2);
        assert_eq!(vp(5, 12).unwrap(), oracle(5, 12));
        assert_eq!(vp(5, 12).unwrap(), 0);
        assert_eq!(vp(3, 1).unwrap(), 0);
        for p in [2u64, 3, 5, 7, 11, 13] {
            for n in 1..=120 {
                assert_eq!(vp(p, n).unwrap(), oracle(p, n));
            }
        }
    }

    #[test]
    fn vp_rejects_composite() {
        assert_eq!(vp(4, 12), Err(Error::NotPrime(4)));
        assert_eq!(vp(1, 5), Err(Error::NotPrime(1)));
    }

    #[test]
    fn big_omega_examples() {
        assert_eq!(big_omega(1), 0);
        // 12 = 2^2 * 3 and 30 = 2 * 3 * 5, both via the factorization oracle.
        assert_eq!(factorize(12), vec![(2, 2), (3, 1)]);
        assert_eq!(big_omega(12), 3);
        assert_eq!(factorize(30), vec![(2, 1), (3, 1), (5, 1)]);
        assert_eq!(big_omega(30), 3);
    }

    #[test]
    fn big_omega_is_completely_additive() {
        for m in 1..=60u64 {
            for n in 1..=60u64 {
                assert_eq!(big_omega(m * n), big_omega(m) + big_omega(n));
            }
        }
    }

    #[test]
    fn divisors_of_six() {
        assert_eq!(divisors(6), vec![1, 2, 3, 6]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(16), vec![1, 2, 4, 8, 16]);
    }

    #[test]
    fn factorize_recombines() {
        for n in 1..=500u64 {
            let product: u64 = factorize(n)
                .into_iter()
                .map(|(p, k)| p.pow(k))
                .product();
            assert_eq!(product, n);
        }
    }

    #[test]
    fn smoothness() {
        assert!(is_smooth_over(6, &[2, 3]));
        assert!(!is_smooth_over(7, &[2, 3]));
        assert!(is_smooth_over(1, &[]));
    }
}
