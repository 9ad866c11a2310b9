//! Partial Bell polynomials `B(n,k)` and the inverse family `A(n,k)`.
//!
//! `B(n,k)` lives in `X1..X_{n-k+1}`, is homogeneous of degree `k` and
//! isobaric of weight `n`. The lower-triangular matrices `(A(n,k))` and
//! `(B(n,k))` are mutually inverse; `A(n,k)` is Laurent in `X1`, homogeneous
//! of degree `-n` and isobaric of weight `-k`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::combinat::{big_factorial, binomial};
use crate::error::{Error, Result};
use crate::polyring::Monomial;
use crate::table::TriangularTable;
use crate::Poly;

fn check_indices(n: usize, k: usize) -> Result<()> {
    if k > n {
        return Err(Error::Index(format!("B({n},{k}) needs k <= n")));
    }
    Ok(())
}

/// Partitions of `n` into exactly `k` parts, parts non-increasing, emitted
/// in reverse lexicographic order of the part sequence.
pub fn partitions_into_parts(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(remaining: usize, parts_left: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts_left == 0 {
            if remaining == 0 {
                out.push(current.clone());
            }
            return;
        }
        // each of the other parts_left - 1 parts needs at least 1
        let upper = max_part.min(remaining + 1 - parts_left);
        let lower = remaining.div_ceil(parts_left);
        for part in (lower..=upper).rev() {
            current.push(part);
            go(remaining - part, parts_left - 1, part, current, out);
            current.pop();
        }
    }

    let mut out = Vec::new();
    if k == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    if k > n {
        return out;
    }
    go(n, k, n, &mut Vec::with_capacity(k), &mut out);
    out
}

/// `B(n,k)` straight from the diophantine sum over multiplicity sequences
/// `r_1 + r_2 + ... = k`, `r_1 + 2 r_2 + ... = n`.
pub fn bell_bruteforce(n: usize, k: usize) -> Result<Poly> {
    check_indices(n, k)?;
    let n_fact = big_factorial(n);
    let mut terms = Vec::new();
    for parts in partitions_into_parts(n, k) {
        let mut mult = vec![0usize; n - k + 2];
        for p in parts {
            mult[p] += 1;
        }
        let mut denom = BigInt::one();
        for (j, &r) in mult.iter().enumerate().skip(1) {
            denom *= big_factorial(r) * num_traits::pow(big_factorial(j), r);
        }
        let (coeff, rem) = n_fact.div_rem(&denom);
        assert!(rem.is_zero(), "non-integral coefficient {n_fact}/{denom} in B({n},{k})");
        let m = Monomial::from_pairs(mult.iter().enumerate().filter(|(_, &r)| r > 0).map(|(j, &r)| (j, r as i64)))?;
        terms.push((m, coeff));
    }
    Ok(Poly::from_terms(terms))
}

/// `B(n,k)` for `0 <= k <= n <= nmax`, built by the convolution recurrence
/// `B(n,k) = sum_{j=1}^{n-k+1} C(n-1,j-1) Xj B(n-j,k-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BellTable {
    entries: TriangularTable<Poly>,
}

impl BellTable {
    pub fn new(nmax: usize) -> Self {
        let mut entries = TriangularTable::new();
        entries.push_row(vec![Poly::one()]);
        for n in 1..=nmax {
            let mut row = vec![Poly::zero()];
            for k in 1..=n {
                let mut acc = Poly::zero();
                for j in 1..=(n - k + 1) {
                    let prev = entries.get(n - j, k - 1).expect("earlier row");
                    if prev.is_zero() {
                        continue;
                    }
                    let c = binomial(n - 1, j as i64 - 1);
                    acc = acc + (prev * &Poly::var(j)).scale(&c);
                }
                row.push(acc);
            }
            entries.push_row(row);
        }
        BellTable { entries }
    }

    pub fn nmax(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn get(&self, n: usize, k: usize) -> Option<&Poly> {
        self.entries.get(n, k)
    }

    /// Like [`get`](Self::get) for indices known to be in the table.
    pub fn at(&self, n: usize, k: usize) -> &Poly {
        self.get(n, k)
            .unwrap_or_else(|| panic!("B({n},{k}) outside table of size {}", self.nmax()))
    }

    pub fn entries(&self) -> &TriangularTable<Poly> {
        &self.entries
    }
}

/// `B(n,k)` via the recurrence.
pub fn bell_recurrence(n: usize, k: usize) -> Result<Poly> {
    check_indices(n, k)?;
    Ok(BellTable::new(n).at(n, k).clone())
}

/// Inverse of the Bell matrix, `A(n,k)` for `0 <= k <= n <= nmax`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ATable {
    entries: TriangularTable<Poly>,
}

impl ATable {
    /// Solves `sum_{j=k}^{n} A(n,j) B(j,k) = delta(n,k)` row by row:
    /// `A(n,n) = X1^-n` and, for `k = n-1` down to `1`,
    /// `A(n,k) = -(sum_{j=k+1}^{n} A(n,j) B(j,k)) / X1^k`.
    pub fn new(bell: &BellTable) -> Result<Self> {
        let nmax = bell.nmax();
        let mut entries = TriangularTable::new();
        entries.push_row(vec![Poly::one()]);
        for n in 1..=nmax {
            let mut row = vec![Poly::zero(); n + 1];
            row[n] = Poly::var_pow(1, -(n as i64))?;
            for k in (1..n).rev() {
                let pivot = bell.at(k, k);
                let x1_k = Monomial::var(1, k as i64)?;
                if pivot.len() != 1 || !pivot.coeff(&x1_k).is_one() {
                    return Err(Error::InexactDivision { n, k });
                }
                let sum: Poly = ((k + 1)..=n).map(|j| &row[j] * bell.at(j, k)).sum();
                let a = -sum.mul_monomial(&Monomial::var(1, -(k as i64))?);
                if a.max_var().is_some_and(|v| v > n - k + 1) {
                    return Err(Error::InexactDivision { n, k });
                }
                row[k] = a;
            }
            entries.push_row(row);
        }
        Ok(ATable { entries })
    }

    pub fn nmax(&self) -> usize {
        self.entries.len() - 1
    }

    pub fn get(&self, n: usize, k: usize) -> Option<&Poly> {
        self.entries.get(n, k)
    }

    pub fn at(&self, n: usize, k: usize) -> &Poly {
        self.get(n, k)
            .unwrap_or_else(|| panic!("A({n},{k}) outside table of size {}", self.nmax()))
    }

    pub fn entries(&self) -> &TriangularTable<Poly> {
        &self.entries
    }
}

/// `A(n,k)` for `0 <= k <= n <= nmax`.
pub fn a_table(nmax: usize) -> Result<ATable> {
    if nmax == 0 {
        return Err(Error::Index("a_table needs nmax >= 1".into()));
    }
    ATable::new(&BellTable::new(nmax))
}
