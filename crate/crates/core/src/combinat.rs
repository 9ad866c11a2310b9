//! Exact integer combinatorics: binomials, factorial powers, Stirling, cycle
//! and Lah numbers.
//!
//! Index arguments are unsigned, so negative indices are unrepresentable.
//! Outside the triangle `0 <= k <= n` every family is zero, and
//! `s1(0,0) = s2(0,0) = l(0,0) = 1`.

use std::fmt;
use std::str::FromStr;
use std::sync::RwLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{factorial, Ring};

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: usize, k: i64) -> BigInt {
    if k < 0 || k as u64 > n as u64 {
        return BigInt::zero();
    }
    let k = (k as usize).min(n - k as usize);
    let mut acc = BigInt::one();
    for i in 1..=k {
        // acc = C(n-k+i, i), always integral
        acc = acc * BigInt::from(n - k + i) / BigInt::from(i);
    }
    acc
}

/// Falling factorial power `x (x-1) ... (x-j+1)`; `1` when `j == 0`.
pub fn falling<T: Ring>(x: &T, j: usize) -> T {
    let mut acc = T::one();
    let mut t = x.clone();
    for _ in 0..j {
        acc = acc * t.clone();
        t = t - T::one();
    }
    acc
}

/// Rising factorial power `x (x+1) ... (x+j-1)`; `1` when `j == 0`.
pub fn rising<T: Ring>(x: &T, j: usize) -> T {
    let mut acc = T::one();
    let mut t = x.clone();
    for _ in 0..j {
        acc = acc * t.clone();
        t = t + T::one();
    }
    acc
}

/// Coefficients (ascending powers of `x`) of the product `x (x-1) ... (x-k+1)`,
/// multiplied out linear factor by linear factor.
pub fn falling_coeffs(k: usize) -> Vec<BigInt> {
    expand_shifted_product(k, |i| -BigInt::from(i))
}

/// Coefficients of `x (x+1) ... (x+k-1)`, multiplied out directly.
pub fn rising_coeffs(k: usize) -> Vec<BigInt> {
    expand_shifted_product(k, BigInt::from)
}

fn expand_shifted_product(k: usize, shift: impl Fn(usize) -> BigInt) -> Vec<BigInt> {
    let mut coeffs = vec![BigInt::one()];
    for i in 0..k {
        let c = shift(i);
        // multiply by (x + c)
        let mut next = vec![BigInt::zero(); coeffs.len() + 1];
        for (p, a) in coeffs.iter().enumerate() {
            next[p + 1] += a;
            next[p] += a * &c;
        }
        coeffs = next;
    }
    coeffs
}

/// Triangle memoized row by row behind a lock; callers only see values.
struct RowMemo {
    rows: RwLock<Vec<Vec<BigInt>>>,
    next: fn(&[BigInt], usize) -> Vec<BigInt>,
}

impl RowMemo {
    const fn new(next: fn(&[BigInt], usize) -> Vec<BigInt>) -> Self {
        RowMemo {
            rows: RwLock::new(Vec::new()),
            next,
        }
    }

    fn get(&self, n: usize, k: usize) -> BigInt {
        if k > n {
            return BigInt::zero();
        }
        if let Some(row) = self.rows.read().unwrap().get(n) {
            return row[k].clone();
        }
        let mut rows = self.rows.write().unwrap();
        if rows.is_empty() {
            rows.push(vec![BigInt::one()]);
        }
        while rows.len() <= n {
            let m = rows.len();
            let row = (self.next)(&rows[m - 1], m);
            rows.push(row);
        }
        rows[n][k].clone()
    }
}

fn stirling1_row(prev: &[BigInt], n: usize) -> Vec<BigInt> {
    // s1(n,k) = s1(n-1,k-1) - (n-1) s1(n-1,k)
    let m = BigInt::from(n - 1);
    (0..=n)
        .map(|k| {
            let left = if k > 0 { prev[k - 1].clone() } else { BigInt::zero() };
            let right = prev.get(k).map(|v| v * &m).unwrap_or_default();
            left - right
        })
        .collect()
}

fn stirling2_row(prev: &[BigInt], n: usize) -> Vec<BigInt> {
    // S(n,k) = k S(n-1,k) + S(n-1,k-1)
    (0..=n)
        .map(|k| {
            let left = if k > 0 { prev[k - 1].clone() } else { BigInt::zero() };
            let right = prev.get(k).map(|v| v * BigInt::from(k)).unwrap_or_default();
            left + right
        })
        .collect()
}

static STIRLING1: RowMemo = RowMemo::new(stirling1_row);
static STIRLING2: RowMemo = RowMemo::new(stirling2_row);

/// Signed Stirling number of the first kind: coefficient of `x^k` in `x (x-1) ... (x-n+1)`.
pub fn stirling1_signed(n: usize, k: usize) -> BigInt {
    STIRLING1.get(n, k)
}

/// Stirling number of the second kind (subset number).
pub fn stirling2(n: usize, k: usize) -> BigInt {
    STIRLING2.get(n, k)
}

/// Cycle number `c(n,k) = |s1(n,k)|`.
pub fn cycle(n: usize, k: usize) -> BigInt {
    stirling1_signed(n, k).abs()
}

/// Cycle number with a signed first index; zero for negative `n`.
pub(crate) fn cycle_signed_index(n: i64, k: usize) -> BigInt {
    if n < 0 {
        BigInt::zero()
    } else {
        cycle(n as usize, k)
    }
}

/// Signed Lah number `l(n,k) = (-1)^n (n!/k!) C(n-1, k-1)`.
pub fn lah_signed(n: usize, k: usize) -> BigInt {
    let v = lah_unsigned(n, k);
    if n % 2 == 1 {
        -v
    } else {
        v
    }
}

/// Unsigned Lah number `(n!/k!) C(n-1, k-1)`.
pub fn lah_unsigned(n: usize, k: usize) -> BigInt {
    if n == 0 || k == 0 {
        return if n == k { BigInt::one() } else { BigInt::zero() };
    }
    if k > n {
        return BigInt::zero();
    }
    let ratio: BigInt = ((k + 1)..=n).map(BigInt::from).product();
    ratio * binomial(n - 1, k as i64 - 1)
}

/// `n!` as a big integer.
pub fn big_factorial(n: usize) -> BigInt {
    factorial(n)
}

/// `r^n` with `0^0 = 1`.
pub fn power(r: i64, n: usize) -> BigInt {
    num_traits::pow(BigInt::from(r), n)
}

/// Kronecker delta as a big integer.
pub fn delta(n: usize, k: usize) -> BigInt {
    if n == k {
        BigInt::one()
    } else {
        BigInt::zero()
    }
}

/// The integer triangles this module generates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NumberFamilyId {
    Stirling1Signed,
    Stirling2,
    Cycle,
    LahSigned,
    LahUnsigned,
}

impl NumberFamilyId {
    pub const ALL: [NumberFamilyId; 5] = [
        NumberFamilyId::Stirling1Signed,
        NumberFamilyId::Stirling2,
        NumberFamilyId::Cycle,
        NumberFamilyId::LahSigned,
        NumberFamilyId::LahUnsigned,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NumberFamilyId::Stirling1Signed => "stirling1",
            NumberFamilyId::Stirling2 => "stirling2",
            NumberFamilyId::Cycle => "cycle",
            NumberFamilyId::LahSigned => "lah",
            NumberFamilyId::LahUnsigned => "lah-unsigned",
        }
    }

    pub fn value(self, n: usize, k: usize) -> BigInt {
        match self {
            NumberFamilyId::Stirling1Signed => stirling1_signed(n, k),
            NumberFamilyId::Stirling2 => stirling2(n, k),
            NumberFamilyId::Cycle => cycle(n, k),
            NumberFamilyId::LahSigned => lah_signed(n, k),
            NumberFamilyId::LahUnsigned => lah_unsigned(n, k),
        }
    }
}

impl fmt::Display for NumberFamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NumberFamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        NumberFamilyId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}
