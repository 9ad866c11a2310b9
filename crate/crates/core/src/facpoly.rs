//! Potential polynomials `P(n,k)` and the lower/upper factorial polynomials.
//!
//! All three are Faà di Bruno polynomials `sum_j D^j(f)(X0) B(n,j)` of a
//! univariate `f`: the power `x^k`, the falling power `x(x-1)...(x-k+1)` and
//! the rising power `x(x+1)...(x+k-1)`. Derivatives are taken term-wise on
//! the monomial expansion of `f`, so everything stays in integer polynomials.

use std::collections::HashMap;
use std::sync::RwLock;

use num_bigint::BigInt;

use crate::bell::BellTable;
use crate::combinat::{cycle, falling, falling_coeffs, lah_signed, rising_coeffs, stirling1_signed, stirling2};
use crate::error::{Error, Result};
use crate::polyring::Monomial;
use crate::table::TriangularTable;
use crate::Poly;

/// Lower and upper factorial polynomials for `0 <= k <= n <= nmax`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorialTable {
    pub lower: TriangularTable<Poly>,
    pub upper: TriangularTable<Poly>,
}

/// Generator for every polynomial family over a shared Bell table.
///
/// Potential polynomials are cached by `(n, k)`; the cache is internal and
/// results are identical to the uncached free functions.
#[derive(Debug)]
pub struct FactorialPolynomials {
    bell: BellTable,
    potentials: RwLock<HashMap<(usize, i64), Poly>>,
}

impl FactorialPolynomials {
    pub fn new(nmax: usize) -> Self {
        Self::with_bell(BellTable::new(nmax))
    }

    pub fn with_bell(bell: BellTable) -> Self {
        FactorialPolynomials {
            bell,
            potentials: RwLock::new(HashMap::new()),
        }
    }

    pub fn bell(&self) -> &BellTable {
        &self.bell
    }

    pub fn nmax(&self) -> usize {
        self.bell.nmax()
    }

    fn check_n(&self, n: usize) -> Result<()> {
        if n > self.nmax() {
            return Err(Error::Index(format!("n = {n} exceeds table size {}", self.nmax())));
        }
        Ok(())
    }

    /// `sum_j D^j(f)(X0) B(n,j)` for `f = sum_r coeffs[r] x^r`.
    pub fn faa_di_bruno_polynomial(&self, coeffs: &[BigInt], n: usize) -> Result<Poly> {
        self.check_n(n)?;
        let mut total = Poly::zero();
        for j in 0..=n {
            // D^j(x^r) at X0 = falling(r, j) X0^(r-j)
            let derivative = Poly::from_terms(coeffs.iter().enumerate().skip(j).map(|(r, a)| {
                let c = a * falling(&BigInt::from(r), j);
                (Monomial::var(0, (r - j) as i64).expect("X0 exponent"), c)
            }));
            if derivative.is_zero() {
                continue;
            }
            total = total + &derivative * self.bell.at(n, j);
        }
        Ok(total)
    }

    /// `P(n,k) = sum_{j=0}^{n} falling(k,j) X0^(k-j) B(n,j)` for any integer `k`.
    pub fn potential(&self, n: usize, k: i64) -> Result<Poly> {
        self.check_n(n)?;
        if let Some(p) = self.potentials.read().unwrap().get(&(n, k)) {
            return Ok(p.clone());
        }
        let kk = BigInt::from(k);
        let mut total = Poly::zero();
        for j in 0..=n {
            let c = falling(&kk, j);
            if c == BigInt::from(0) {
                // falling(k, j) vanishes for 0 <= k < j and stays zero afterwards
                break;
            }
            let x0 = Monomial::var(0, k - j as i64)?;
            total = total + self.bell.at(n, j).mul_monomial(&x0).scale(&c);
        }
        self.potentials.write().unwrap().insert((n, k), total.clone());
        Ok(total)
    }

    /// Lower factorial polynomial from the derivatives of the expanded falling power.
    pub fn lower_factorial_direct(&self, n: usize, k: usize) -> Result<Poly> {
        self.faa_di_bruno_polynomial(&falling_coeffs(k), n)
    }

    /// Upper factorial polynomial from the derivatives of the expanded rising power.
    pub fn upper_factorial_by_derivatives(&self, n: usize, k: usize) -> Result<Poly> {
        self.faa_di_bruno_polynomial(&rising_coeffs(k), n)
    }

    /// Upper factorial polynomial as `sum_r c(k,r) P(n,r)`.
    pub fn upper_factorial_direct(&self, n: usize, k: usize) -> Result<Poly> {
        self.combine_potentials(n, k, cycle)
    }

    /// `sum_r s1(k,r) P(n,r)`.
    pub fn lower_from_potential(&self, n: usize, k: usize) -> Result<Poly> {
        self.combine_potentials(n, k, stirling1_signed)
    }

    fn combine_potentials(&self, n: usize, k: usize, weight: fn(usize, usize) -> BigInt) -> Result<Poly> {
        let mut total = Poly::zero();
        for r in 0..=k {
            let w = weight(k, r);
            total = total + self.potential(n, r as i64)?.scale(&w);
        }
        Ok(total)
    }

    /// `P(n,k) = sum_r s2(k,r) lower(n,r)`.
    pub fn potential_from_lower(&self, n: usize, k: usize) -> Result<Poly> {
        let mut total = Poly::zero();
        for r in 0..=k {
            total = total + self.lower_factorial_direct(n, r)?.scale(&stirling2(k, r));
        }
        Ok(total)
    }

    /// `upper(n,k) = sum_j (-1)^k l(k,j) lower(n,j)`.
    pub fn upper_from_lower(&self, n: usize, k: usize) -> Result<Poly> {
        let mut total = Poly::zero();
        for j in 0..=k {
            let w = sign(k) * lah_signed(k, j);
            total = total + self.lower_factorial_direct(n, j)?.scale(&w);
        }
        Ok(total)
    }

    /// `lower(n,k) = sum_j (-1)^j l(k,j) upper(n,j)`.
    pub fn lower_from_upper(&self, n: usize, k: usize) -> Result<Poly> {
        let mut total = Poly::zero();
        for j in 0..=k {
            let w = sign(j) * lah_signed(k, j);
            total = total + self.upper_factorial_direct(n, j)?.scale(&w);
        }
        Ok(total)
    }

    /// Both factorial tables for `0 <= k <= n <= nmax`.
    pub fn factorial_table(&self) -> Result<FactorialTable> {
        let nmax = self.nmax();
        let mut lower = TriangularTable::new();
        let mut upper = TriangularTable::new();
        for n in 0..=nmax {
            lower.push_row((0..=n).map(|k| self.lower_factorial_direct(n, k)).collect::<Result<_>>()?);
            upper.push_row((0..=n).map(|k| self.upper_factorial_direct(n, k)).collect::<Result<_>>()?);
        }
        Ok(FactorialTable { lower, upper })
    }
}

fn sign(e: usize) -> BigInt {
    if e.is_multiple_of(2) {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}

/// `P(n,k)`, uncached.
pub fn potential(n: usize, k: i64) -> Result<Poly> {
    FactorialPolynomials::new(n).potential(n, k)
}

pub fn lower_factorial_direct(n: usize, k: usize) -> Result<Poly> {
    FactorialPolynomials::new(n).lower_factorial_direct(n, k)
}

pub fn upper_factorial_direct(n: usize, k: usize) -> Result<Poly> {
    FactorialPolynomials::new(n).upper_factorial_direct(n, k)
}

pub fn lower_from_potential(n: usize, k: usize) -> Result<Poly> {
    FactorialPolynomials::new(n).lower_from_potential(n, k)
}

pub fn potential_from_lower(n: usize, k: usize) -> Result<Poly> {
    FactorialPolynomials::new(n).potential_from_lower(n, k)
}

pub fn upper_from_lower(n: usize, k: usize) -> Result<Poly> {
    FactorialPolynomials::new(n).upper_from_lower(n, k)
}

pub fn lower_from_upper(n: usize, k: usize) -> Result<Poly> {
    FactorialPolynomials::new(n).lower_from_upper(n, k)
}
