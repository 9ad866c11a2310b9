//! Number families associated with the factorial polynomials, and the
//! power-sum reductions that give them closed double-Stirling forms.
//!
//! Exponents `n` are positive throughout, so the `r = 0` term of every
//! power sum vanishes and sums start at `r = 1`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::combinat::{big_factorial, binomial, cycle, cycle_signed_index, power, stirling1_signed, stirling2};
use crate::error::{Error, Result};

fn check_positive(name: &str, v: usize) -> Result<()> {
    if v == 0 {
        return Err(Error::Index(format!("{name} must be >= 1")));
    }
    Ok(())
}

fn sign(e: usize) -> BigInt {
    if e.is_multiple_of(2) {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}

/// `[n] upper k = sum_r c(k,r) r^n`.
pub fn upper_assoc(n: usize, k: usize) -> Result<BigInt> {
    check_positive("n", n)?;
    Ok((1..=k).map(|r| cycle(k, r) * power(r as i64, n)).sum())
}

/// `[n] lower k = sum_r s1(k,r) r^n`.
pub fn lower_assoc(n: usize, k: usize) -> Result<BigInt> {
    check_positive("n", n)?;
    Ok((1..=k).map(|r| stirling1_signed(k, r) * power(r as i64, n)).sum())
}

/// Weights `gamma(k, r)`, `1 <= r <= k`, of a power sum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightScheme {
    Ones,
    Cycle,
    Stirling1Signed,
    /// `gamma(k, 1..=k)` for one fixed `k`.
    Custom(Vec<BigInt>),
}

impl WeightScheme {
    fn check(&self, k: usize) -> Result<()> {
        match self {
            WeightScheme::Custom(w) if w.len() != k => Err(Error::WeightLength { expected: k, got: w.len() }),
            _ => Ok(()),
        }
    }

    /// `gamma(k, r)` for `1 <= r <= k`.
    pub fn weight(&self, k: usize, r: usize) -> BigInt {
        match self {
            WeightScheme::Ones => BigInt::from(1),
            WeightScheme::Cycle => cycle(k, r),
            WeightScheme::Stirling1Signed => stirling1_signed(k, r),
            WeightScheme::Custom(w) => w[r - 1].clone(),
        }
    }
}

/// `sum_{r=1}^{k} gamma(k,r) r^n`, summed term by term.
pub fn power_sum_direct(scheme: &WeightScheme, n: usize, k: usize) -> Result<BigInt> {
    check_positive("n", n)?;
    check_positive("k", k)?;
    scheme.check(k)?;
    Ok((1..=k).map(|r| scheme.weight(k, r) * power(r as i64, n)).sum())
}

/// Inner sum of the reduction, `sum_{r=j}^{k} C(r,j) gamma(k,r)`.
pub fn upper_sum(scheme: &WeightScheme, k: usize, j: usize) -> Result<BigInt> {
    scheme.check(k)?;
    Ok((j.max(1)..=k).map(|r| binomial(r, j as i64) * scheme.weight(k, r)).sum())
}

/// `sum_{j=1}^{min(k,n)} j! s2(n,j) sum_{r=j}^{k} C(r,j) gamma(k,r)`.
pub fn power_sum_reduce(scheme: &WeightScheme, n: usize, k: usize) -> Result<BigInt> {
    check_positive("n", n)?;
    check_positive("k", k)?;
    scheme.check(k)?;
    let mut total = BigInt::zero();
    for j in 1..=k.min(n) {
        total += big_factorial(j) * stirling2(n, j) * upper_sum(scheme, k, j)?;
    }
    Ok(total)
}

/// Closed form of the unit-weight upper sum: `sum_{r=j}^{k} C(r,j) = C(k+1, j+1)`.
pub fn sum_rule_ones(k: usize, j: usize) -> Result<BigInt> {
    check_positive("j", j)?;
    if j > k {
        return Err(Error::Index(format!("sum_rule_ones needs j <= k, got j = {j}, k = {k}")));
    }
    Ok(binomial(k + 1, j as i64 + 1))
}

/// `sum_{j=1}^{min(k,n)} j! s2(n,j) C(k+1, j+1)`, equal to `1^n + ... + k^n`.
pub fn psw1_rhs(n: usize, k: usize) -> Result<BigInt> {
    check_positive("n", n)?;
    check_positive("k", k)?;
    Ok((1..=k.min(n))
        .map(|j| big_factorial(j) * stirling2(n, j) * binomial(k + 1, j as i64 + 1))
        .sum())
}

/// `sum_{j=1}^{min(k,n)} j! s2(n,j) c(k+1, j+1)`, equal to the upper family.
pub fn prop42_rhs(n: usize, k: usize) -> Result<BigInt> {
    check_positive("n", n)?;
    check_positive("k", k)?;
    Ok((1..=k.min(n))
        .map(|j| big_factorial(j) * stirling2(n, j) * cycle(k + 1, j + 1))
        .sum())
}

/// `sum_{j=1}^{min(k,n)} (-1)^(k-j) j! s2(n,j) (c(k-1,j-1) - c(k-1,j))`,
/// equal to the lower family.
pub fn prop44_rhs(n: usize, k: usize) -> Result<BigInt> {
    check_positive("n", n)?;
    check_positive("k", k)?;
    Ok((1..=k.min(n))
        .map(|j| sign(k - j) * big_factorial(j) * stirling2(n, j) * (cycle(k - 1, j - 1) - cycle(k - 1, j)))
        .sum())
}

/// `sum_{r=j+1}^{k} C(r,j) s1(k,r)`; equals `k s1(k-1, j)`.
pub fn prf1_lhs(k: usize, j: usize) -> Result<BigInt> {
    check_positive("k", k)?;
    if j >= k {
        return Err(Error::Index(format!("prf1 needs j < k, got j = {j}, k = {k}")));
    }
    Ok(((j + 1)..=k).map(|r| binomial(r, j as i64) * stirling1_signed(k, r)).sum())
}

/// `k s1(k-1, j)`.
pub fn prf1_rhs(k: usize, j: usize) -> Result<BigInt> {
    check_positive("k", k)?;
    Ok(BigInt::from(k) * stirling1_signed(k - 1, j))
}

/// `sum_{r=j}^{k} C(r,j) s1(k,r)`, the full upper sum with the `r = j` term.
pub fn prf1_full_lhs(k: usize, j: usize) -> BigInt {
    (j..=k).map(|r| binomial(r, j as i64) * stirling1_signed(k, r)).sum()
}

/// `s1(k-1, j-1) + s1(k-1, j)`, the closed form of [`prf1_full_lhs`] for `1 <= j <= k`.
pub fn prf1_full_rhs(k: usize, j: usize) -> Result<BigInt> {
    check_positive("j", j)?;
    if j > k {
        return Err(Error::Index(format!("need j <= k, got j = {j}, k = {k}")));
    }
    Ok(stirling1_signed(k - 1, j - 1) + stirling1_signed(k - 1, j))
}

/// `sum_{r=1}^{k} (-1)^r c(k,r) r^n`.
pub fn alternating_cycle_power_sum(n: usize, k: usize) -> BigInt {
    (1..=k).map(|r| sign(r) * cycle(k, r) * power(r as i64, n)).sum()
}

/// Coefficients of `c(k-1, 1..=n)` in `sum_r (-1)^r c(k,r) r^n`, for `k >= 2`,
/// gathered from the lower-family closed form: the coefficient of
/// `c(k-1, m)` is `(-1)^(m+1) (m! s2(n,m) + (m+1)! s2(n,m+1))`.
pub fn closing_coeffs_from_prop44(n: usize) -> Vec<BigInt> {
    (1..=n)
        .map(|m| sign(m + 1) * (big_factorial(m) * stirling2(n, m) + big_factorial(m + 1) * stirling2(n, m + 1)))
        .collect()
}

/// The closing coefficient sequences as printed: `(1)`, `(3, -2)`, `(7, -12, 6)`.
pub const PRINTED_CLOSING_COEFFS: [&[i64]; 3] = [&[1], &[3, -2], &[7, -12, 6]];

/// Closing-identity coefficients for `n` in `{1, 2, 3}`.
pub fn closing_identity_coeffs(n: usize) -> Result<Vec<BigInt>> {
    if !(1..=3).contains(&n) {
        return Err(Error::Index(format!("closing identities exist for n = 1, 2, 3; got {n}")));
    }
    Ok(closing_coeffs_from_prop44(n))
}

/// `sum_m coeffs[m-1] c(k-1, m)`.
pub fn closing_rhs(coeffs: &[BigInt], k: usize) -> BigInt {
    coeffs
        .iter()
        .enumerate()
        .map(|(i, a)| a * cycle_signed_index(k as i64 - 1, i + 1))
        .sum()
}

/// The `n = 3` right-hand side read literally with first index `k - 10` in
/// the last term; cycle numbers with a negative first index are zero.
pub fn closing_rhs_literal_n3(k: usize) -> BigInt {
    let k = k as i64;
    BigInt::from(7) * cycle_signed_index(k - 1, 1) - BigInt::from(12) * cycle_signed_index(k - 1, 2)
        + BigInt::from(6) * cycle_signed_index(k - 10, 3)
}
