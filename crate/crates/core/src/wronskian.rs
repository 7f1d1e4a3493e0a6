//! Generalized Wronskians and the linear-dependence decision procedure.
//!
//! A generalized Wronskian of a family `f_1, ..., f_n` is the determinant
//! of the matrix whose row `i` applies the monomial derivation at `m_i`,
//! where the tuple of prime-factor counts `(Omega(m_1), ..., Omega(m_n))`
//! is admissible: the `i`-th entry is at most `i - 1` (forcing `m_1 = 1`).
//! Collective vanishing of these determinants characterizes linear
//! dependence of the family over the coefficient field; the engine decides
//! dependence by scanning tuples for a nonzero determinant and falling back
//! to exact Gaussian elimination, and the two routes cross-check each other.
//!
//! Independence certificates are exact (a nonzero determinant coefficient
//! or a full pivot staircase); dependence is always "up to the window",
//! since no truncation can certify an infinite tail of zeros.

use std::fmt;

use crate::arithfn::{ArithFn, OrdResult};
use crate::derivations::{apply_log, apply_monomial, DerivationOp};
use crate::error::{Error, Result};
use crate::field::{ExactField, PrimeLogs};
use crate::fraction::FracElem;
use crate::primes::{big_omega, divisors};
use crate::Rational;

/// An index tuple `(m_1, ..., m_n)` whose prime-factor counts form an
/// admissible sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AdmissibleTuple {
    entries: Vec<u64>,
}

impl AdmissibleTuple {
    /// Validate and build; the violated constraint is named on failure.
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidInput("tuple must be nonempty".into()));
        }
        if let Some(&bad) = entries.iter().find(|&&m| m == 0) {
            return Err(Error::InvalidInput(format!(
                "tuple entries must be positive, found {}",
                bad
            )));
        }
        if entries[0] != 1 {
            return Err(Error::InvalidInput("m_1 must be 1".into()));
        }
        for (i, &m) in entries.iter().enumerate() {
            let omega = big_omega(m);
            if omega as usize > i {
                return Err(Error::InvalidInput(format!(
                    "Omega({}) = {} > {} at position {}",
                    m,
                    omega,
                    i,
                    i + 1
                )));
            }
        }
        Ok(AdmissibleTuple { entries })
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_entry(&self) -> u64 {
        *self.entries.iter().max().expect("nonempty tuple")
    }

    /// The prime-factor counts `(Omega(m_1), ..., Omega(m_n))`.
    pub fn omega_vector(&self) -> Vec<u32> {
        self.entries.iter().map(|&m| big_omega(m)).collect()
    }

    fn has_duplicate_entries(&self) -> bool {
        let mut seen = self.entries.clone();
        seen.sort_unstable();
        seen.windows(2).any(|w| w[0] == w[1])
    }

    /// True when every divisor of every entry is itself an entry.
    pub fn is_divisor_closed(&self) -> bool {
        self.entries
            .iter()
            .all(|&m| divisors(m).iter().all(|d| self.entries.contains(d)))
    }
}

impl fmt::Display for AdmissibleTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, m) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", m)?;
        }
        write!(f, ")")
    }
}

/// All admissible tuples for a family of size `n` with entries at most
/// `bound`, in lexicographic order.
pub fn enumerate_admissible(n: usize, bound: u64) -> Vec<AdmissibleTuple> {
    assert!(n >= 1 && bound >= 1);
    // Position i (0-based) admits entries with Omega <= i.
    let candidates: Vec<Vec<u64>> = (0..n)
        .map(|i| (1..=bound).filter(|&m| big_omega(m) as usize <= i).collect())
        .collect();
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n);
    fn rec(
        candidates: &[Vec<u64>],
        current: &mut Vec<u64>,
        out: &mut Vec<AdmissibleTuple>,
    ) {
        let i = current.len();
        if i == candidates.len() {
            out.push(AdmissibleTuple {
                entries: current.clone(),
            });
            return;
        }
        for &m in &candidates[i] {
            current.push(m);
            rec(candidates, current, out);
            current.pop();
        }
    }
    rec(&candidates, &mut current, &mut out);
    out
}

/// The subset of admissible tuples with pairwise-distinct entries whose
/// entry set is closed under divisors (the minimal sufficient collection;
/// for `n = 3` these are exactly the shapes `(1, p, p^2)` and `(1, p, q)`).
pub fn enumerate_divisor_closed(n: usize, bound: u64) -> Vec<AdmissibleTuple> {
    enumerate_admissible(n, bound)
        .into_iter()
        .filter(|t| !t.has_duplicate_entries() && t.is_divisor_closed())
        .collect()
}

/// The matrix of a generalized (or log-) Wronskian: entry `(i, j)` is
/// `row_ops[i]` applied to the `j`-th family member.
#[derive(Debug, Clone)]
pub struct WronskianMatrix<K> {
    rows: Vec<Vec<ArithFn<K>>>,
    row_ops: Vec<DerivationOp>,
    min_precision: usize,
}

impl<K: ExactField> WronskianMatrix<K> {
    /// Rows are monomial derivations along the tuple entries.
    pub fn monomial(family: &[ArithFn<K>], tuple: &AdmissibleTuple) -> Result<Self> {
        assert_eq!(
            family.len(),
            tuple.len(),
            "tuple length must match family size"
        );
        let mut rows = Vec::with_capacity(tuple.len());
        let mut min_precision = usize::MAX;
        for (i, &m) in tuple.entries().iter().enumerate() {
            let mut row = Vec::with_capacity(family.len());
            for f in family {
                let derived = apply_monomial(m, f).map_err(|_| {
                    Error::PrecisionExhausted(format!(
                        "row {} (monomial derivation at {}) exceeds precision {}",
                        i + 1,
                        m,
                        f.precision()
                    ))
                })?;
                min_precision = min_precision.min(derived.precision());
                row.push(derived);
            }
            rows.push(row);
        }
        Ok(WronskianMatrix {
            rows,
            row_ops: tuple
                .entries()
                .iter()
                .map(|&m| DerivationOp::Monomial(m))
                .collect(),
            min_precision,
        })
    }

    pub fn rows(&self) -> &[Vec<ArithFn<K>>] {
        &self.rows
    }

    pub fn row_ops(&self) -> &[DerivationOp] {
        &self.row_ops
    }

    pub fn min_precision(&self) -> usize {
        self.min_precision
    }

    /// Exact determinant over the convolution ring at the common window:
    /// cofactor expansion up to 4x4, fraction-free elimination above.
    pub fn determinant(&self) -> Result<ArithFn<K>> {
        let entries: Vec<Vec<ArithFn<K>>> = self
            .rows
            .iter()
            .map(|row| row.iter().map(|e| e.truncate(self.min_precision)).collect())
            .collect();
        if entries.len() <= 4 {
            Ok(det_cofactor(&entries))
        } else {
            det_bareiss(entries, self.min_precision)
        }
    }
}

impl<K: PrimeLogs> WronskianMatrix<K> {
    /// Rows are iterated log-derivations `0..n-1`; the window is preserved.
    pub fn log(family: &[ArithFn<K>]) -> Self {
        let n = family.len();
        let min_precision = family.iter().map(|f| f.precision()).min().unwrap_or(1);
        let mut rows = Vec::with_capacity(n);
        let mut current: Vec<ArithFn<K>> = family.to_vec();
        for _ in 0..n {
            rows.push(current.clone());
            current = current.iter().map(apply_log).collect();
        }
        WronskianMatrix {
            rows,
            row_ops: (0..n)
                .map(|i| match i {
                    0 => DerivationOp::Monomial(1),
                    1 => DerivationOp::Log,
                    _ => DerivationOp::Composition(vec![DerivationOp::Log; i]),
                })
                .collect(),
            min_precision,
        }
    }
}

/// Recursive cofactor expansion along the first row.
fn det_cofactor<K: ExactField>(entries: &[Vec<ArithFn<K>>]) -> ArithFn<K> {
    let n = entries.len();
    if n == 1 {
        return entries[0][0].clone();
    }
    let precision = entries[0][0].precision();
    let mut acc = ArithFn::zero(precision);
    for j in 0..n {
        if entries[0][j].is_zero_in_window() {
            continue;
        }
        let minor: Vec<Vec<ArithFn<K>>> = entries[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let term = entries[0][j].convolve(&det_cofactor(&minor));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

/// Determinant as the signed sum over permutations. Kept as a second,
/// independent route; certificate re-verification goes through it.
pub fn det_leibniz<K: ExactField>(entries: &[Vec<ArithFn<K>>], precision: usize) -> ArithFn<K> {
    let n = entries.len();
    let mut acc = ArithFn::zero(precision);
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let sign_positive = permutation_parity(&perm);
        let mut product = ArithFn::<K>::basis(1, precision);
        for (i, &j) in perm.iter().enumerate() {
            product = product.convolve(&entries[i][j].truncate(precision));
        }
        acc = if sign_positive {
            acc.add(&product)
        } else {
            acc.sub(&product)
        };
        if !next_permutation(&mut perm) {
            break;
        }
    }
    acc
}

/// Scalar determinant by the permutation sum; used to re-verify pivot
/// certificates through a route independent of the elimination.
fn scalar_det_leibniz<K: ExactField>(entries: &[Vec<K>]) -> K {
    let n = entries.len();
    let mut acc = K::zero();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let mut product = K::one();
        for (i, &j) in perm.iter().enumerate() {
            product = product * entries[i][j].clone();
        }
        acc = if permutation_parity(&perm) {
            acc + product
        } else {
            acc - product
        };
        if !next_permutation(&mut perm) {
            break;
        }
    }
    acc
}

fn permutation_parity(perm: &[usize]) -> bool {
    let mut inversions = 0;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 0
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Exact quotient `a / b` in the convolution ring, assuming `b * h = a`
/// holds for some (untruncated) `h`. The window shrinks to
/// `floor(min window / ord(b))`.
fn exact_div_in_window<K: ExactField>(a: &ArithFn<K>, b: &ArithFn<K>) -> Result<ArithFn<K>> {
    let r = match b.ord() {
        OrdResult::Known(r) => r,
        OrdResult::AllZeroUpTo(n) => return Err(Error::UncertifiedNonzero(n as usize)),
    };
    let window = a.precision().min(b.precision());
    let out_prec = window / r as usize;
    if out_prec == 0 {
        return Err(Error::PrecisionExhausted(format!(
            "ring division by an element of order {} exceeds the window {}",
            r, window
        )));
    }
    let lead = b.value(r).clone();
    let mut h: Vec<K> = Vec::with_capacity(out_prec);
    for m in 1..=out_prec as u64 {
        let mut acc = a.value(r * m).clone();
        for u in divisors(r * m) {
            if u > r && r * m / u <= h.len() as u64 {
                let bu = b.value(u);
                if !bu.is_zero() {
                    acc = acc - bu.clone() * h[(r * m / u - 1) as usize].clone();
                }
            }
        }
        h.push(acc.checked_div(&lead).expect("order value is nonzero"));
    }
    Ok(ArithFn::from_values(h))
}

/// Fraction-free (Bareiss) elimination over the convolution ring; divisions
/// by previous pivots are exact in the ring and are carried out on the
/// window by the divisor recursion.
fn det_bareiss<K: ExactField>(
    mut m: Vec<Vec<ArithFn<K>>>,
    mut window: usize,
) -> Result<ArithFn<K>> {
    let n = m.len();
    let mut sign_positive = true;
    let mut prev_pivot: Option<ArithFn<K>> = None;
    for k in 0..n - 1 {
        // Pivot: the candidate with smallest known order loses the least
        // window in later divisions.
        let pivot_row = (k..n)
            .filter_map(|i| m[i][k].ord().known().map(|o| (o, i)))
            .min()
            .map(|(_, i)| i);
        let pivot_row = match pivot_row {
            Some(i) => i,
            None => {
                // The whole column is zero on the window, hence so is the
                // determinant (conservatively shrunk by pending divisions).
                let r_prev = prev_pivot
                    .as_ref()
                    .and_then(|p| p.ord().known())
                    .unwrap_or(1);
                let mut w = window;
                for _ in 0..(n - k - 1) {
                    w /= r_prev as usize;
                }
                if w == 0 {
                    return Err(Error::PrecisionExhausted(
                        "zero-column determinant window collapsed".into(),
                    ));
                }
                return Ok(ArithFn::zero(w));
            }
        };
        if pivot_row != k {
            m.swap(k, pivot_row);
            sign_positive = !sign_positive;
        }
        let pivot = m[k][k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let numerator = pivot
                    .convolve(&m[i][j])
                    .sub(&m[i][k].convolve(&m[k][j]));
                m[i][j] = match &prev_pivot {
                    None => numerator,
                    Some(p) => exact_div_in_window(&numerator, p)?,
                };
            }
        }
        window = m[n - 1][n - 1].precision().min(window);
        prev_pivot = Some(pivot);
    }
    let det = m[n - 1][n - 1].truncate(window);
    Ok(if sign_positive { det } else { det.neg() })
}

/// The generalized Wronskian of an in-ring family at an admissible tuple.
pub fn generalized_wronskian<K: ExactField>(
    family: &[ArithFn<K>],
    tuple: &AdmissibleTuple,
) -> Result<ArithFn<K>> {
    WronskianMatrix::monomial(family, tuple)?.determinant()
}

/// The Wronskian with respect to the log-derivation (rows are iterated
/// log-derivations); the window is preserved.
pub fn log_wronskian<K: PrimeLogs>(family: &[ArithFn<K>]) -> Result<ArithFn<K>> {
    WronskianMatrix::log(family).determinant()
}

/// Clear denominators of a fraction-field family: every member is scaled
/// by the product of all denominators, which preserves linear dependence
/// over the coefficient field in both directions.
pub fn clear_denominators<K: ExactField>(family: &[FracElem<K>]) -> Vec<ArithFn<K>> {
    family
        .iter()
        .enumerate()
        .map(|(j, member)| {
            let mut scaled = member.num().clone();
            for (i, other) in family.iter().enumerate() {
                if i != j {
                    scaled = scaled.convolve(other.den());
                }
            }
            scaled
        })
        .collect()
}

/// Generalized Wronskian of a fraction-field family, computed with
/// fraction arithmetic (cofactor expansion; the family sizes in play are
/// small).
pub fn generalized_wronskian_frac<K: PrimeLogs>(
    family: &[FracElem<K>],
    tuple: &AdmissibleTuple,
) -> Result<FracElem<K>> {
    assert_eq!(family.len(), tuple.len());
    let rows: Vec<Vec<FracElem<K>>> = tuple
        .entries()
        .iter()
        .map(|&m| {
            family
                .iter()
                .map(|f| f.derive_monomial(m))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    det_frac_cofactor(&rows).map_err(escape_to_precision)
}

/// Accumulated fraction denominators whose order leaves the window are a
/// form of precision exhaustion for determinant work.
fn escape_to_precision(e: Error) -> Error {
    match e {
        Error::UncertifiedNonzero(n) => Error::PrecisionExhausted(format!(
            "fraction denominator support escaped the window of {}",
            n
        )),
        other => other,
    }
}

/// Log-Wronskian of a fraction-field family.
pub fn log_wronskian_frac<K: PrimeLogs>(family: &[FracElem<K>]) -> Result<FracElem<K>> {
    let n = family.len();
    let mut rows = Vec::with_capacity(n);
    let mut current = family.to_vec();
    for i in 0..n {
        if i > 0 {
            current = current
                .iter()
                .map(|f| f.derive(&DerivationOp::Log))
                .collect::<Result<Vec<_>>>()?;
        }
        rows.push(current.clone());
    }
    det_frac_cofactor(&rows).map_err(escape_to_precision)
}

fn det_frac_cofactor<K: ExactField>(rows: &[Vec<FracElem<K>>]) -> Result<FracElem<K>> {
    let n = rows.len();
    if n == 1 {
        return Ok(rows[0][0].clone());
    }
    let precision = rows
        .iter()
        .flat_map(|r| r.iter().map(|e| e.eff_precision()))
        .min()
        .expect("nonempty matrix");
    let mut acc = FracElem::embed(ArithFn::zero(precision));
    for j in 0..n {
        if rows[0][j].is_zero_in_window() {
            continue;
        }
        let minor: Vec<Vec<FracElem<K>>> = rows[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let term = rows[0][j].mul(&det_frac_cofactor(&minor)?)?;
        acc = if j % 2 == 0 {
            acc.add(&term)?
        } else {
            acc.sub(&term)?
        };
    }
    Ok(acc)
}

/// Result of exact row reduction of the `n x N` value matrix.
#[derive(Debug, Clone, PartialEq)]
pub enum GaussianOutcome<K> {
    /// Pivot columns, strictly increasing: after row operations the family
    /// becomes nonzero rows of strictly increasing order.
    FullRank { pivots: Vec<u64> },
    /// Coefficients of a vanishing combination (verified on the window).
    NullVector(Vec<K>),
}

/// Exact Gaussian elimination on the matrix `(f_i(j))` over the window
/// `1..=precision`. A returned null vector is re-verified against the
/// family before being handed out.
pub fn gaussian_null_vector<K: ExactField>(
    family: &[ArithFn<K>],
    precision: usize,
) -> GaussianOutcome<K> {
    assert!(!family.is_empty(), "family must be nonempty");
    let n = family.len();
    let width = family
        .iter()
        .map(|f| f.precision())
        .min()
        .expect("nonempty family")
        .min(precision);
    let mut m: Vec<Vec<K>> = family
        .iter()
        .map(|f| (1..=width as u64).map(|j| f.value(j).clone()).collect())
        .collect();
    // Transform rows: t[i] tracks the combination of original members that
    // produced current row i.
    let mut t: Vec<Vec<K>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { K::one() } else { K::zero() }).collect())
        .collect();
    let mut next_row = 0usize;
    let mut pivots = Vec::new();
    for col in 0..width {
        if next_row == n {
            break;
        }
        let pivot_row = match (next_row..n).find(|&i| !m[i][col].is_zero()) {
            Some(i) => i,
            None => continue,
        };
        m.swap(next_row, pivot_row);
        t.swap(next_row, pivot_row);
        pivots.push(col as u64 + 1);
        let pivot = m[next_row][col].clone();
        let pivot_m = m[next_row].clone();
        let pivot_t = t[next_row].clone();
        for i in next_row + 1..n {
            if m[i][col].is_zero() {
                continue;
            }
            let factor = m[i][col]
                .checked_div(&pivot)
                .expect("pivot is nonzero");
            for (mij, pj) in m[i][col..width].iter_mut().zip(&pivot_m[col..width]) {
                *mij = mij.clone() - factor.clone() * pj.clone();
            }
            for (tij, pj) in t[i].iter_mut().zip(&pivot_t) {
                *tij = tij.clone() - factor.clone() * pj.clone();
            }
        }
        next_row += 1;
    }
    if next_row == n {
        return GaussianOutcome::FullRank { pivots };
    }
    // The first leftover row is identically zero; its transform row is the
    // dependence. Re-verify against the original family.
    let mut coeffs = t[next_row].clone();
    if let Some(first) = coeffs.iter().find(|c| !c.is_zero()) {
        if first
            .to_rational()
            .is_some_and(|r| r < Rational::from_integer(0.into()))
        {
            coeffs = coeffs.into_iter().map(|c| -c).collect();
        }
    }
    let mut combo = ArithFn::zero(width);
    for (c, f) in coeffs.iter().zip(family) {
        combo = combo.add(&f.truncate(width).scale(c));
    }
    assert!(
        combo.is_zero_in_window(),
        "null vector failed in-window re-verification"
    );
    GaussianOutcome::NullVector(coeffs)
}

/// How tuples are enumerated during a dependence scan.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerationMode {
    /// All admissible tuples within the bound.
    Full,
    /// Only divisor-closed tuples (the minimal sufficient collection).
    Walker,
}

impl fmt::Display for EnumerationMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerationMode::Full => write!(f, "full"),
            EnumerationMode::Walker => write!(f, "walker"),
        }
    }
}

/// Bounds for a dependence scan.
#[derive(Debug, Clone, Copy)]
pub struct DependenceConfig {
    pub precision: usize,
    pub tuple_bound: u64,
    pub mode: EnumerationMode,
}

impl Default for DependenceConfig {
    fn default() -> Self {
        DependenceConfig {
            precision: 64,
            tuple_bound: 16,
            mode: EnumerationMode::Full,
        }
    }
}

/// An exact witness of linear independence.
#[derive(Debug, Clone, PartialEq)]
pub enum IndependenceCertificate<K> {
    /// A generalized Wronskian with a nonzero coefficient: the determinant
    /// at `tuple` has value `value` at index `index`.
    WronskianTuple {
        tuple: AdmissibleTuple,
        index: u64,
        value: K,
    },
    /// A full pivot staircase from Gaussian elimination.
    GaussianPivots { pivots: Vec<u64> },
}

/// Outcome of a dependence test.
#[derive(Debug, Clone, PartialEq)]
pub enum DependenceVerdict<K> {
    Independent {
        certificate: IndependenceCertificate<K>,
    },
    DependentUpToPrecision {
        null_vector: Vec<K>,
        precision: usize,
    },
    Inconclusive {
        reason: String,
    },
}

/// A dependence verdict plus scan statistics.
#[derive(Debug, Clone)]
pub struct DependenceReport<K> {
    pub verdict: DependenceVerdict<K>,
    pub precision: usize,
    pub tuples_checked: usize,
    pub mode: EnumerationMode,
}

/// Decide linear dependence of a family over the coefficient field.
///
/// Tuples are scanned by ascending max entry, then lexicographically; the
/// first determinant with a nonzero in-window coefficient certifies
/// independence (re-verified through the permutation-sum route). If every
/// determinant vanishes on its window the verdict falls through to exact
/// Gaussian elimination, which either certifies independence by a full
/// staircase or produces a verified null vector.
pub fn test_dependence<K: ExactField>(
    family: &[ArithFn<K>],
    config: &DependenceConfig,
) -> Result<DependenceReport<K>> {
    if family.is_empty() {
        return Err(Error::InvalidInput("family must be nonempty".into()));
    }
    let precision = family
        .iter()
        .map(|f| f.precision())
        .min()
        .expect("nonempty family")
        .min(config.precision);
    let family: Vec<ArithFn<K>> = family.iter().map(|f| f.truncate(precision)).collect();
    let n = family.len();

    let mut tuples = match config.mode {
        EnumerationMode::Full => enumerate_admissible(n, config.tuple_bound),
        EnumerationMode::Walker => enumerate_divisor_closed(n, config.tuple_bound),
    };
    tuples.sort_by(|a, b| {
        a.max_entry()
            .cmp(&b.max_entry())
            .then_with(|| a.entries().cmp(b.entries()))
    });

    let mut tuples_checked = 0usize;
    for tuple in &tuples {
        // Rows with equal operators make the determinant identically zero.
        if tuple.has_duplicate_entries() {
            tuples_checked += 1;
            continue;
        }
        if tuple.max_entry() > precision as u64 {
            // The starving row cannot produce a single in-window value.
            continue;
        }
        let det = generalized_wronskian(&family, tuple)?;
        tuples_checked += 1;
        if let OrdResult::Known(index) = det.ord() {
            let value = det.value(index).clone();
            // Independent route: recompute through the permutation sum.
            let matrix = WronskianMatrix::monomial(&family, tuple)?;
            let check = det_leibniz(matrix.rows(), matrix.min_precision());
            if check.value(index) != &value || value.is_zero() {
                return Ok(DependenceReport {
                    verdict: DependenceVerdict::Inconclusive {
                        reason: format!(
                            "certificate re-verification failed at tuple {} index {}",
                            tuple, index
                        ),
                    },
                    precision,
                    tuples_checked,
                    mode: config.mode,
                });
            }
            return Ok(DependenceReport {
                verdict: DependenceVerdict::Independent {
                    certificate: IndependenceCertificate::WronskianTuple {
                        tuple: tuple.clone(),
                        index,
                        value,
                    },
                },
                precision,
                tuples_checked,
                mode: config.mode,
            });
        }
    }

    let verdict = match gaussian_null_vector(&family, precision) {
        GaussianOutcome::FullRank { pivots } => {
            // Re-verify through an independent route: the determinant of
            // the pivot submatrix, by the permutation sum over the field.
            let submatrix: Vec<Vec<K>> = family
                .iter()
                .map(|f| pivots.iter().map(|&j| f.value(j).clone()).collect())
                .collect();
            if scalar_det_leibniz(&submatrix).is_zero() {
                DependenceVerdict::Inconclusive {
                    reason: "pivot submatrix failed rank re-verification".into(),
                }
            } else {
                DependenceVerdict::Independent {
                    certificate: IndependenceCertificate::GaussianPivots { pivots },
                }
            }
        }
        GaussianOutcome::NullVector(null_vector) => DependenceVerdict::DependentUpToPrecision {
            null_vector,
            precision,
        },
    };
    Ok(DependenceReport {
        verdict,
        precision,
        tuples_checked,
        mode: config.mode,
    })
}

/// Dependence test for fraction-field families, by clearing denominators
/// and delegating; verdict and null vector transfer unchanged.
pub fn test_dependence_frac<K: ExactField>(
    family: &[FracElem<K>],
    config: &DependenceConfig,
) -> Result<DependenceReport<K>> {
    if family.is_empty() {
        return Err(Error::InvalidInput("family must be nonempty".into()));
    }
    let cleared = clear_denominators(family);
    test_dependence(&cleared, config)
}

/// Report for the implication "all generalized Wronskians vanish implies
/// the log-Wronskian vanishes", evaluated within bounds.
#[derive(Debug, Clone)]
pub struct AllToLogReport {
    pub all_generalized_vanish: bool,
    pub first_nonzero_tuple: Option<AdmissibleTuple>,
    pub log_wronskian_vanishes: bool,
    pub tuples_checked: usize,
}

impl AllToLogReport {
    /// The implication itself (vacuously true when a nonzero generalized
    /// Wronskian exists).
    pub fn implication_holds(&self) -> bool {
        !self.all_generalized_vanish || self.log_wronskian_vanishes
    }
}

/// Evaluate all generalized Wronskians within bounds together with the
/// log-Wronskian.
pub fn check_all_to_log<K: PrimeLogs>(
    family: &[ArithFn<K>],
    config: &DependenceConfig,
) -> Result<AllToLogReport> {
    if family.is_empty() {
        return Err(Error::InvalidInput("family must be nonempty".into()));
    }
    let precision = family
        .iter()
        .map(|f| f.precision())
        .min()
        .expect("nonempty family")
        .min(config.precision);
    let family: Vec<ArithFn<K>> = family.iter().map(|f| f.truncate(precision)).collect();
    let n = family.len();
    let mut first_nonzero_tuple = None;
    let mut tuples_checked = 0usize;
    for tuple in enumerate_admissible(n, config.tuple_bound) {
        if tuple.has_duplicate_entries() {
            tuples_checked += 1;
            continue;
        }
        if tuple.max_entry() > precision as u64 {
            continue;
        }
        let det = generalized_wronskian(&family, &tuple)?;
        tuples_checked += 1;
        if !det.is_zero_in_window() && first_nonzero_tuple.is_none() {
            first_nonzero_tuple = Some(tuple);
        }
    }
    let log_w = log_wronskian(&family)?;
    Ok(AllToLogReport {
        all_generalized_vanish: first_nonzero_tuple.is_none(),
        first_nonzero_tuple,
        log_wronskian_vanishes: log_w.is_zero_in_window(),
        tuples_checked,
    })
}

/// Fraction-family variant: denominators are cleared first, which
/// preserves both the collective vanishing and the dependence it signals.
pub fn check_all_to_log_frac<K: PrimeLogs>(
    family: &[FracElem<K>],
    config: &DependenceConfig,
) -> Result<AllToLogReport> {
    if family.is_empty() {
        return Err(Error::InvalidInput("family must be nonempty".into()));
    }
    check_all_to_log(&clear_denominators(family), config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Scalar;
    use num_traits::Zero;

    type F = ArithFn<Rational>;
    type S = ArithFn<Scalar>;

    fn rat(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn admissibility_validation() {
        assert!(AdmissibleTuple::new(vec![1, 2, 4]).is_ok());
        match AdmissibleTuple::new(vec![2, 1]) {
            Err(Error::InvalidInput(msg)) => assert_eq!(msg, "m_1 must be 1"),
            other => panic!("expected rejection, got {:?}", other),
        }
        match AdmissibleTuple::new(vec![1, 6]) {
            Err(Error::InvalidInput(msg)) => {
                assert!(msg.contains("Omega(6) = 2 > 1"), "{}", msg)
            }
            other => panic!("expected rejection, got {:?}", other),
        }
        assert!(AdmissibleTuple::new(vec![]).is_err());
        assert!(AdmissibleTuple::new(vec![1, 0]).is_err());
    }

    #[test]
    fn enumeration_examples() {
        // Oracle: position 2 admits 1 and primes only.
        let tuples = enumerate_admissible(2, 5);
        let expected: Vec<Vec<u64>> =
            vec![vec![1, 1], vec![1, 2], vec![1, 3], vec![1, 5]];
        assert_eq!(
            tuples.iter().map(|t| t.entries().to_vec()).collect::<Vec<_>>(),
            expected
        );

        assert_eq!(
            enumerate_admissible(1, 10)
                .iter()
                .map(|t| t.entries().to_vec())
                .collect::<Vec<_>>(),
            vec![vec![1]]
        );

        // n = 3, bound 4: position 3 admits 1..4 (Omega(4) = 2 <= 2).
        let tuples = enumerate_admissible(3, 4);
        let thirds: std::collections::BTreeSet<u64> =
            tuples.iter().map(|t| t.entries()[2]).collect();
        assert_eq!(thirds, [1u64, 2, 3, 4].into_iter().collect());
    }

    #[test]
    fn divisor_closed_shapes_for_three() {
        let tuples = enumerate_divisor_closed(3, 9);
        for t in &tuples {
            let e = t.entries();
            assert_eq!(e[0], 1);
            let p = e[1];
            assert!(crate::primes::is_prime(p));
            // Third entry is p^2 or a different prime.
            assert!(
                e[2] == p * p || (crate::primes::is_prime(e[2]) && e[2] != p),
                "unexpected shape {:?}",
                e
            );
        }
        // (1, 2, 4) and (1, 2, 3) are present; (1, 2, 6) is not (3 divides 6).
        let has = |v: &[u64]| tuples.iter().any(|t| t.entries() == v);
        assert!(has(&[1, 2, 4]));
        assert!(has(&[1, 2, 3]));
        assert!(!has(&[1, 2, 6]));
        assert!(!AdmissibleTuple::new(vec![1, 2, 6]).unwrap().is_divisor_closed());

        assert_eq!(enumerate_divisor_closed(1, 5).len(), 1);
    }

    #[test]
    fn divisor_closed_generalizes_to_four() {
        let tuples = enumerate_divisor_closed(4, 12);
        let has = |v: &[u64]| tuples.iter().any(|t| t.entries() == v);
        // Chains and mixed shapes with divisor-closed entry sets.
        assert!(has(&[1, 2, 4, 8]));
        assert!(has(&[1, 2, 3, 6]));
        assert!(has(&[1, 2, 4, 3]));
        assert!(has(&[1, 2, 5, 10]));
        // 10 = 2*5 requires 5 among the entries.
        assert!(!has(&[1, 2, 4, 10]));
        for t in &tuples {
            assert!(t.is_divisor_closed());
            assert!(!t.has_duplicate_entries());
        }
    }

    #[test]
    fn wronskian_of_basis_pair() {
        // Family (e_1, e_2), tuple (1, 2): rows are (e_1, e_2) and (0, e_1),
        // determinant e_1 * e_1 - e_2 * 0 = e_1.
        let family = [F::basis(1, 32), F::basis(2, 32)];
        let tuple = AdmissibleTuple::new(vec![1, 2]).unwrap();
        let det = generalized_wronskian(&family, &tuple).unwrap();
        assert_eq!(det, F::basis(1, 16));

        // Cross-check with the hand-written 2x2 expansion.
        let m = WronskianMatrix::monomial(&family, &tuple).unwrap();
        let p = m.min_precision();
        let hand = m.rows()[0][0]
            .truncate(p)
            .convolve(&m.rows()[1][1].truncate(p))
            .sub(&m.rows()[0][1].truncate(p).convolve(&m.rows()[1][0].truncate(p)));
        assert_eq!(det, hand);
    }

    #[test]
    fn starving_row_is_named_in_the_error() {
        let family = [F::basis(1, 8), F::basis(2, 8)];
        let tuple = AdmissibleTuple::new(vec![1, 11]).unwrap();
        match generalized_wronskian(&family, &tuple) {
            Err(Error::PrecisionExhausted(msg)) => {
                assert!(msg.contains("row 2"), "{}", msg);
                assert!(msg.contains("11"), "{}", msg);
            }
            other => panic!("expected precision exhaustion, got {:?}", other),
        }
    }

    #[test]
    fn wronskian_vanishes_on_proportional_columns() {
        let f = F::from_fn(32, |n| rat((n % 5) as i64));
        let family = [f.clone(), f.scale(&rat(3))];
        for tuple in enumerate_admissible(2, 8) {
            let det = generalized_wronskian(&family, &tuple).unwrap();
            assert!(det.is_zero_in_window(), "tuple {}", tuple);
        }
    }

    #[test]
    fn some_divisor_closed_tuple_separates_small_basis() {
        let family = [F::basis(1, 32), F::basis(2, 32), F::basis(3, 32)];
        let found = enumerate_divisor_closed(3, 9).into_iter().any(|t| {
            t.max_entry() <= 32
                && !generalized_wronskian(&family, &t)
                    .unwrap()
                    .is_zero_in_window()
        });
        assert!(found);
    }

    #[test]
    fn leibniz_agrees_with_cofactor_on_three_by_three() {
        let family = [
            F::from_fn(36, |n| rat((n % 3) as i64)),
            F::from_fn(36, |n| rat((n % 4) as i64)),
            F::from_fn(36, |n| rat((n % 5) as i64)),
        ];
        for tuple in enumerate_admissible(3, 4) {
            if tuple.has_duplicate_entries() {
                continue;
            }
            let m = WronskianMatrix::monomial(&family, &tuple).unwrap();
            assert_eq!(
                m.determinant().unwrap(),
                det_leibniz(m.rows(), m.min_precision()),
                "tuple {}",
                tuple
            );
        }
    }

    #[test]
    fn bareiss_matches_leibniz_on_five_by_five() {
        // 5x5 staircase-ish family keeps orders small so windows survive.
        let family: Vec<F> = (0..5)
            .map(|i| {
                F::from_fn(64, |n| {
                    rat(((n + i) % 3) as i64 + if n == i + 1 { 2 } else { 0 })
                })
            })
            .collect();
        let tuple = AdmissibleTuple::new(vec![1, 2, 3, 5, 7]).unwrap();
        let m = WronskianMatrix::monomial(&family, &tuple).unwrap();
        let det = m.determinant().unwrap();
        let oracle = det_leibniz(m.rows(), m.min_precision());
        assert!(det.eq_in_window(&oracle));
    }

    #[test]
    fn exact_ring_division_inverts_convolution() {
        let a = F::from_fn(48, |n| rat((n % 7) as i64)).add(&F::basis(2, 48));
        let b = F::basis(3, 48).add(&F::basis(5, 48).scale(&rat(2)));
        let product = a.convolve(&b);
        let recovered = exact_div_in_window(&product, &b).unwrap();
        assert_eq!(recovered.precision(), 16);
        assert!(recovered.eq_in_window(&a));
    }

    #[test]
    fn cofactor_matches_hand_expansion_three_by_three() {
        // Oracle: the fully written-out 3x3 expansion
        // a(ei - fh) - b(di - fg) + c(dh - eg).
        let family = [
            F::from_fn(27, |n| rat((n % 4) as i64)),
            F::from_fn(27, |n| rat((n % 3) as i64 + 1)),
            F::from_fn(27, |n| rat((5 * n % 7) as i64)),
        ];
        for tuple in enumerate_admissible(3, 3) {
            if tuple.has_duplicate_entries() {
                continue;
            }
            let m = WronskianMatrix::monomial(&family, &tuple).unwrap();
            let p = m.min_precision();
            let e = |i: usize, j: usize| m.rows()[i][j].truncate(p);
            let hand = e(0, 0)
                .convolve(&e(1, 1).convolve(&e(2, 2)).sub(&e(1, 2).convolve(&e(2, 1))))
                .sub(&e(0, 1).convolve(
                    &e(1, 0).convolve(&e(2, 2)).sub(&e(1, 2).convolve(&e(2, 0))),
                ))
                .add(&e(0, 2).convolve(
                    &e(1, 0).convolve(&e(2, 1)).sub(&e(1, 1).convolve(&e(2, 0))),
                ));
            assert_eq!(m.determinant().unwrap(), hand, "tuple {}", tuple);
        }
    }

    #[test]
    fn frac_wronskian_on_small_order_denominators() {
        // Fraction arithmetic multiplies denominator supports, so only
        // small-order denominators keep determinants visible in-window.
        let den = S::basis(1, 64).add(&S::basis(2, 64));
        let a = FracElem::new(S::basis(2, 64), den).unwrap();
        let b = FracElem::embed(S::basis(3, 64));
        let tuple = AdmissibleTuple::new(vec![1, 2]).unwrap();
        let det = generalized_wronskian_frac(&[a.clone(), b.clone()], &tuple).unwrap();
        assert!(!det.is_zero_in_window());
        // det = -e_3/(e_1+e_2)^2 by the quotient rule.
        let expected = FracElem::new(
            S::basis(3, 32).neg(),
            S::basis(1, 32)
                .add(&S::basis(2, 32))
                .convolve(&S::basis(1, 32).add(&S::basis(2, 32))),
        )
        .unwrap();
        assert!(det.eq_in_window(&expected));

        let proportional = [a.clone(), a.scale(&Scalar::from_integer(4))];
        let det = generalized_wronskian_frac(&proportional, &tuple).unwrap();
        assert!(det.is_zero_in_window());
    }

    #[test]
    fn frac_wronskian_window_escape_is_precision_exhaustion() {
        // On e_2/e_3 and e_3/e_2 the true determinant is -2 e_108 / e_216;
        // the accumulated denominator leaves the window, which surfaces as
        // precision exhaustion, while denominator clearing still certifies
        // independence.
        let a = FracElem::new(S::basis(2, 64), S::basis(3, 64)).unwrap();
        let b = FracElem::new(S::basis(3, 64), S::basis(2, 64)).unwrap();
        let tuple = AdmissibleTuple::new(vec![1, 2]).unwrap();
        match generalized_wronskian_frac(&[a.clone(), b.clone()], &tuple) {
            Err(Error::PrecisionExhausted(_)) => {}
            other => panic!("expected precision exhaustion, got {:?}", other),
        }
        let report =
            test_dependence_frac(&[a, b], &DependenceConfig::default()).unwrap();
        assert!(matches!(
            report.verdict,
            DependenceVerdict::Independent { .. }
        ));
    }

    #[test]
    fn frac_log_wronskian_embeds_ring_case() {
        // Embedding (e_1, e_2, e_3) as fractions reproduces the ring
        // log-Wronskian up to the common window.
        let ring_family = [S::basis(1, 16), S::basis(2, 16), S::basis(3, 16)];
        let ring_det = log_wronskian(&ring_family).unwrap();
        let frac_family: Vec<FracElem<Scalar>> = ring_family
            .iter()
            .map(|f| FracElem::embed(f.clone()))
            .collect();
        let frac_det = log_wronskian_frac(&frac_family).unwrap();
        assert!(frac_det.eq_in_window(&FracElem::embed(ring_det)));
    }

    #[test]
    fn log_wronskian_vandermonde() {
        // (e_1, e_2, e_3): the log-Wronskian is the Vandermonde in
        // (0, L2, L3) times e_6.
        let family = [S::basis(1, 8), S::basis(2, 8), S::basis(3, 8)];
        let det = log_wronskian(&family).unwrap();
        let l2 = Scalar::symbol(2);
        let l3 = Scalar::symbol(3);
        let coeff = &(&l2 * &l3) * &(&l3 - &l2);
        let expected = S::basis(6, 8).scale(&coeff);
        assert_eq!(det, expected);
    }

    #[test]
    fn log_wronskian_degenerate_cases() {
        let f = S::from_fn(12, |n| Scalar::from_integer((n % 4) as i64));
        assert!(log_wronskian(&[f.clone(), f.clone()])
            .unwrap()
            .is_zero_in_window());
        let c = S::constant(Scalar::from_integer(5), 12);
        assert_eq!(log_wronskian(std::slice::from_ref(&c)).unwrap(), c);
    }

    #[test]
    fn gaussian_staircase() {
        let family = [F::basis(1, 16), F::basis(2, 16), F::basis(4, 16)];
        match gaussian_null_vector(&family, 16) {
            GaussianOutcome::FullRank { pivots } => assert_eq!(pivots, vec![1, 2, 4]),
            other => panic!("expected full rank, got {:?}", other),
        }
    }

    #[test]
    fn gaussian_finds_proportionality() {
        let f = F::basis(2, 16);
        let family = [f.clone(), f.scale(&rat(3))];
        match gaussian_null_vector(&family, 16) {
            GaussianOutcome::NullVector(c) => {
                assert_eq!(c, vec![rat(3), rat(-1)]);
                let combo = family[0].scale(&c[0]).add(&family[1].scale(&c[1]));
                assert!(combo.is_zero_in_window());
            }
            other => panic!("expected null vector, got {:?}", other),
        }
    }

    #[test]
    fn gaussian_flags_zero_member() {
        let family = [F::basis(2, 8), F::zero(8), F::basis(3, 8)];
        match gaussian_null_vector(&family, 8) {
            GaussianOutcome::NullVector(c) => {
                assert!(c[0].is_zero());
                assert!(!c[1].is_zero());
                assert!(c[2].is_zero());
            }
            other => panic!("expected null vector, got {:?}", other),
        }
    }

    #[test]
    fn dependence_verdicts() {
        let config = DependenceConfig::default();

        // Proportional pair: dependent with a null vector.
        let f = F::basis(2, 64);
        let report = test_dependence(&[f.clone(), f.scale(&rat(3))], &config).unwrap();
        match &report.verdict {
            DependenceVerdict::DependentUpToPrecision { null_vector, precision } => {
                assert_eq!(*precision, 64);
                assert_eq!(null_vector.len(), 2);
            }
            other => panic!("expected dependent, got {:?}", other),
        }

        // (e_1, e_2): independent with certificate tuple (1, 2).
        let report =
            test_dependence(&[F::basis(1, 64), F::basis(2, 64)], &config).unwrap();
        match &report.verdict {
            DependenceVerdict::Independent {
                certificate:
                    IndependenceCertificate::WronskianTuple { tuple, index, value },
            } => {
                assert_eq!(tuple.entries(), &[1, 2]);
                assert_eq!(*index, 1);
                assert_eq!(*value, rat(1));
            }
            other => panic!("expected tuple certificate, got {:?}", other),
        }

        // Planted relation f_3 = f_1 + f_2.
        let f1 = F::basis(1, 64).add(&F::basis(2, 64));
        let f2 = F::basis(2, 64).add(&F::basis(3, 64));
        let f3 = f1.add(&f2);
        let report = test_dependence(&[f1.clone(), f2.clone(), f3], &config).unwrap();
        match &report.verdict {
            DependenceVerdict::DependentUpToPrecision { null_vector, .. } => {
                let combo = f1
                    .scale(&null_vector[0])
                    .add(&f2.scale(&null_vector[1]))
                    .add(&f1.add(&f2).scale(&null_vector[2]));
                assert!(combo.is_zero_in_window());
            }
            other => panic!("expected dependent, got {:?}", other),
        }

        assert!(test_dependence::<Rational>(&[], &config).is_err());
    }

    #[test]
    fn walker_mode_reaches_the_same_verdicts() {
        let config = DependenceConfig {
            mode: EnumerationMode::Walker,
            ..DependenceConfig::default()
        };
        let report =
            test_dependence(&[F::basis(1, 64), F::basis(2, 64)], &config).unwrap();
        match &report.verdict {
            DependenceVerdict::Independent {
                certificate: IndependenceCertificate::WronskianTuple { tuple, .. },
            } => assert_eq!(tuple.entries(), &[1, 2]),
            other => panic!("expected tuple certificate, got {:?}", other),
        }
        assert_eq!(report.mode, EnumerationMode::Walker);

        let f = F::basis(2, 64);
        let report = test_dependence(&[f.clone(), f.scale(&rat(3))], &config).unwrap();
        assert!(matches!(
            report.verdict,
            DependenceVerdict::DependentUpToPrecision { .. }
        ));
    }

    #[test]
    fn frac_dependence_via_cleared_denominators() {
        let a = FracElem::new(S::basis(2, 64), S::basis(3, 64)).unwrap();
        let b = a.scale(&Scalar::from_integer(5));
        let report =
            test_dependence_frac(&[a.clone(), b], &DependenceConfig::default()).unwrap();
        assert!(matches!(
            report.verdict,
            DependenceVerdict::DependentUpToPrecision { .. }
        ));

        let c = FracElem::new(S::basis(3, 64), S::basis(2, 64)).unwrap();
        let report =
            test_dependence_frac(&[a, c], &DependenceConfig::default()).unwrap();
        assert!(matches!(
            report.verdict,
            DependenceVerdict::Independent { .. }
        ));
    }

    #[test]
    fn all_to_log_on_dependent_family() {
        let f = S::basis(2, 64);
        let family = [f.clone(), f.scale(&Scalar::from_integer(3))];
        let report = check_all_to_log(&family, &DependenceConfig::default()).unwrap();
        assert!(report.all_generalized_vanish);
        assert!(report.log_wronskian_vanishes);
        assert!(report.implication_holds());
    }

    #[test]
    fn all_to_log_on_independent_family() {
        let family = [S::basis(1, 64), S::basis(2, 64)];
        let report = check_all_to_log(&family, &DependenceConfig::default()).unwrap();
        assert!(!report.all_generalized_vanish);
        assert!(report.first_nonzero_tuple.is_some());
        assert!(report.implication_holds());
    }

    #[test]
    fn all_to_log_single_member() {
        let f = S::basis(1, 16);
        let report = check_all_to_log(&[f], &DependenceConfig::default()).unwrap();
        assert!(!report.all_generalized_vanish);
        assert!(!report.log_wronskian_vanishes);
    }

    #[test]
    fn determinant_is_antisymmetric_and_multilinear() {
        let a = F::from_fn(24, |n| rat((n % 3) as i64 + 1));
        let b = F::from_fn(24, |n| rat((n % 5) as i64));
        let c = F::from_fn(24, |n| rat((2 * n % 7) as i64));
        let d = F::from_fn(24, |n| rat((n % 2) as i64));
        let det2 = |r00: &F, r01: &F, r10: &F, r11: &F| {
            let rows = vec![
                vec![r00.clone(), r01.clone()],
                vec![r10.clone(), r11.clone()],
            ];
            det_leibniz(&rows, 24)
        };
        // Swap changes sign.
        let plus = det2(&a, &b, &c, &d);
        let minus = det2(&c, &d, &a, &b);
        assert_eq!(plus, minus.neg());
        // Additivity in the first row.
        let sum_row = det2(&a.add(&c), &b.add(&d), &c, &d);
        let split = det2(&a, &b, &c, &d).add(&det2(&c, &d, &c, &d));
        assert_eq!(sum_row, split);
    }
}
