//! Truncated formal power series over a field.
//!
//! Coefficients are stored as plain coefficients of `x^n`; the Taylor
//! coefficient `f_n = D^n(f)(0)` is `n!` times the stored value. Binary
//! operations truncate to the smaller of the two orders.

use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};
use crate::scalar::{factorial, Field};

#[derive(Debug, Clone, PartialEq)]
pub struct Series<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Series<F> {
    /// Series with coefficients `c0..cN`; the order is `N`.
    pub fn new(coeffs: Vec<F>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Series("a series needs at least the constant coefficient".into()));
        }
        Ok(Series { coeffs })
    }

    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![F::zero(); order + 1],
        }
    }

    pub fn constant(c: F, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `x^m` truncated at `order`.
    pub fn monomial(m: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if m <= order {
            s.coeffs[m] = F::one();
        }
        s
    }

    /// The identity function `x`.
    pub fn identity(order: usize) -> Self {
        Self::monomial(1, order)
    }

    /// Series from Taylor coefficients `f_0..f_N` (divides by `n!`).
    pub fn from_taylor(taylor: &[F]) -> Result<Self> {
        Self::new(taylor.iter().enumerate().map(|(n, t)| t.clone() / factorial::<F>(n)).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    /// Coefficient of `x^n`.
    pub fn coeff(&self, n: usize) -> Result<&F> {
        self.coeffs
            .get(n)
            .ok_or_else(|| Error::Series(format!("coefficient {n} beyond order {}", self.order())))
    }

    pub fn truncate(&self, order: usize) -> Self {
        Series {
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        Series {
            coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::constant(F::one(), self.order());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Termwise derivative; the order drops by one.
    pub fn derive(&self) -> Result<Self> {
        if self.order() == 0 {
            return Err(Error::Series("cannot differentiate a series of order 0".into()));
        }
        Ok(Series {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(n, c)| c.clone() * F::from_usize_exact(n))
                .collect(),
        })
    }

    /// `D^n(f)(0) = n! * [x^n] f`.
    pub fn taylor_coeff(&self, n: usize) -> Result<F> {
        Ok(self.coeff(n)?.clone() * factorial::<F>(n))
    }

    /// `f(g(x))` for `g` without constant term, by Horner's scheme.
    pub fn compose(&self, g: &Series<F>) -> Result<Self> {
        if !g.coeffs[0].is_zero() {
            return Err(Error::Series("inner series must have zero constant term".into()));
        }
        let order = self.order().min(g.order());
        let g = g.truncate(order);
        let mut acc = Self::constant(self.coeffs[order].clone(), order);
        for c in self.coeffs[..order].iter().rev() {
            acc = &acc * &g;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// Compositional inverse `h` with `g(h(x)) = h(g(x)) = x`.
    ///
    /// Solved coefficient by coefficient: `[x^m] g(h)` is `g1 * h_m` plus
    /// terms in `h_1..h_{m-1}`, so `h_m` is fixed by making it vanish.
    pub fn invert_composition(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Series("not invertible: nonzero constant term".into()));
        }
        let order = self.order();
        if order == 0 {
            return Ok(Self::zero(0));
        }
        let g1 = self.coeffs[1].clone();
        if g1.is_zero() {
            return Err(Error::Series("not invertible: zero linear coefficient".into()));
        }
        let mut h = Self::zero(order);
        h.coeffs[1] = F::one() / g1.clone();
        for m in 2..=order {
            let partial = self.truncate(m).compose(&h.truncate(m))?;
            h.coeffs[m] = -(partial.coeffs[m].clone()) / g1.clone();
        }
        Ok(h)
    }
}

impl<F: Field> Add for &Series<F> {
    type Output = Series<F>;

    fn add(self, rhs: &Series<F>) -> Series<F> {
        Series {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }
}

impl<F: Field> Sub for &Series<F> {
    type Output = Series<F>;

    fn sub(self, rhs: &Series<F>) -> Series<F> {
        Series {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }
}

impl<F: Field> Mul for &Series<F> {
    type Output = Series<F>;

    fn mul(self, rhs: &Series<F>) -> Series<F> {
        let order = self.order().min(rhs.order());
        let mut out = vec![F::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                out[i + j] += &(a.clone() * b.clone());
            }
        }
        Series { coeffs: out }
    }
}
