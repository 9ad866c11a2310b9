//! Sparse multivariate Laurent polynomials in `X0, X1, X2, ...`.
//!
//! Only `X0` and `X1` may carry negative exponents. Terms are kept in a
//! `BTreeMap` keyed by [`Monomial`], whose `Ord` is the canonical print
//! order: total degree descending, then the exponents of `X1, X2, ...`
//! ascending lexicographically, then the exponent of `X0` ascending.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{Embed, Field, Ring};

/// Exponent vector, dense by variable index, trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<i64>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// `X<var>^<exp>`.
    pub fn var(var: usize, exp: i64) -> Result<Self> {
        let mut v = vec![0; var + 1];
        v[var] = exp;
        Monomial::from_exponents(v)
    }

    /// Builds a monomial from a dense exponent vector.
    pub fn from_exponents(mut exps: Vec<i64>) -> Result<Self> {
        if let Some((var, &exp)) = exps.iter().enumerate().skip(2).find(|(_, &e)| e < 0) {
            return Err(Error::NegativeExponent { var, exp });
        }
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Ok(Monomial(exps))
    }

    /// Builds a monomial from `(variable, exponent)` pairs; repeated variables add up.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, i64)>) -> Result<Self> {
        let mut v = Vec::new();
        for (var, exp) in pairs {
            if v.len() <= var {
                v.resize(var + 1, 0);
            }
            v[var] += exp;
        }
        Monomial::from_exponents(v)
    }

    pub fn exponent(&self, var: usize) -> i64 {
        self.0.get(var).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[i64] {
        &self.0
    }

    /// Nonzero `(variable, exponent)` pairs in increasing variable order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e != 0).map(|(i, &e)| (i, e))
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `sum_j j * exponent(Xj)`.
    pub fn weight(&self) -> i64 {
        self.0.iter().enumerate().map(|(j, &e)| j as i64 * e).sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let (long, short) = if self.0.len() >= other.0.len() { (self, other) } else { (other, self) };
        let mut v = long.0.clone();
        for (a, b) in v.iter_mut().zip(&short.0) {
            *a += b;
        }
        while v.last() == Some(&0) {
            v.pop();
        }
        Monomial(v)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        other
            .degree()
            .cmp(&self.degree())
            .then_with(|| {
                let len = self.0.len().max(other.0.len());
                (1..len)
                    .map(|i| self.exponent(i).cmp(&other.exponent(i)))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
            })
            .then_with(|| self.exponent(0).cmp(&other.exponent(0)))
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
            return f.write_str("1");
        }
        for (n, (var, exp)) in self.pairs().enumerate() {
            if n > 0 {
                f.write_str("*")?;
            }
            write!(f, "X{var}")?;
            if exp != 1 {
                write!(f, "^{exp}")?;
            }
        }
        Ok(())
    }
}

/// Finite sum of coefficient-weighted monomials, no zero coefficients stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<C> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Ring> Polynomial<C> {
    pub fn zero() -> Self {
        Polynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn term(m: Monomial, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    /// `X<var>^<exp>`.
    pub fn var_pow(var: usize, exp: i64) -> Result<Self> {
        Ok(Self::term(Monomial::var(var, exp)?, C::one()))
    }

    /// `X<var>`.
    pub fn var(var: usize) -> Self {
        Self::term(Monomial::var(var, 1).expect("positive exponent"), C::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: C) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a.clone() * c.clone())).collect(),
        }
    }

    /// Multiplies every term by the monomial `m` (exact in the Laurent ring).
    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Polynomial {
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Value with every indeterminate set to one, i.e. the coefficient sum.
    pub fn eval_all_ones(&self) -> C {
        self.terms.values().fold(C::zero(), |mut acc, c| {
            acc += c;
            acc
        })
    }

    /// Exact evaluation at an assignment of field values.
    pub fn eval<F>(&self, assignment: &BTreeMap<usize, F>) -> Result<F>
    where
        F: Field + Embed<C>,
    {
        let mut total = F::zero();
        for (m, c) in &self.terms {
            let mut value = F::embed(c);
            for (var, exp) in m.pairs() {
                let x = assignment.get(&var).ok_or(Error::MissingAssignment(var))?;
                if exp < 0 && x.is_zero() {
                    return Err(Error::Pole(var));
                }
                let p = num_traits::pow(x.clone(), exp.unsigned_abs() as usize);
                value = if exp < 0 { value / p } else { value * p };
            }
            total += &value;
        }
        Ok(total)
    }

    /// Largest variable index with a nonzero exponent, if any.
    pub fn max_var(&self) -> Option<usize> {
        self.terms.keys().filter_map(|m| m.0.len().checked_sub(1)).max()
    }

    /// Every term has total degree `d`.
    pub fn is_homogeneous(&self, d: i64) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    /// Every term has weight `w`.
    pub fn is_isobaric(&self, w: i64) -> bool {
        self.terms.keys().all(|m| m.weight() == w)
    }

    /// Smallest exponent of `var` across all terms.
    pub fn min_exponent(&self, var: usize) -> Option<i64> {
        self.terms.keys().map(|m| m.exponent(var)).min()
    }
}

impl<C: Ring> Default for Polynomial<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Ring> Add for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn add(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<C: Ring> Add for Polynomial<C> {
    type Output = Polynomial<C>;

    fn add(mut self, rhs: Polynomial<C>) -> Polynomial<C> {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<C: Ring> Neg for Polynomial<C> {
    type Output = Polynomial<C>;

    fn neg(self) -> Polynomial<C> {
        Polynomial {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<C: Ring> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn neg(self) -> Polynomial<C> {
        -self.clone()
    }
}

impl<C: Ring> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn sub(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }
}

impl<C: Ring> Sub for Polynomial<C> {
    type Output = Polynomial<C>;

    fn sub(self, rhs: Polynomial<C>) -> Polynomial<C> {
        &self - &rhs
    }
}

impl<C: Ring> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn mul(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Ring> Mul for Polynomial<C> {
    type Output = Polynomial<C>;

    fn mul(self, rhs: Polynomial<C>) -> Polynomial<C> {
        &self * &rhs
    }
}

impl<C: Ring> std::iter::Sum for Polynomial<C> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Polynomial::zero(), |acc, p| acc + p)
    }
}

impl<C: Ring + Signed + fmt::Display> Polynomial<C> {
    /// Canonical text, e.g. `3*X2^2 + 4*X1*X3` or `-X1^-3*X2`; zero prints `0`.
    pub fn to_canonical_string(&self) -> String {
        self.to_string()
    }
}

impl<C: Ring + Signed + fmt::Display> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl<C> FromStr for Polynomial<C>
where
    C: Ring + FromStr,
{
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_polynomial(s)
    }
}

fn parse_polynomial<C: Ring + FromStr>(s: &str) -> Result<Polynomial<C>> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(Error::Parse("empty input".into()));
    }
    // Split on + / - that are not exponent signs.
    let mut pieces: Vec<(bool, String)> = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    let mut prev: Option<char> = None;
    for ch in compact.chars() {
        if (ch == '+' || ch == '-') && prev != Some('^') {
            if !current.is_empty() {
                pieces.push((negative, std::mem::take(&mut current)));
            } else if prev.is_some() {
                return Err(Error::Parse(format!("dangling sign in `{s}`")));
            }
            negative = ch == '-';
        } else {
            current.push(ch);
        }
        prev = Some(ch);
    }
    if current.is_empty() {
        return Err(Error::Parse(format!("trailing sign in `{s}`")));
    }
    pieces.push((negative, current));

    let mut poly = Polynomial::zero();
    for (negative, body) in pieces {
        let mut coeff = C::one();
        let mut pairs = Vec::new();
        for (idx, factor) in body.split('*').enumerate() {
            if let Some(rest) = factor.strip_prefix('X') {
                let (var, exp) = match rest.split_once('^') {
                    Some((v, e)) => (v, e.parse::<i64>().map_err(|_| Error::Parse(format!("bad exponent `{e}`")))?),
                    None => (rest, 1),
                };
                let var = var.parse::<usize>().map_err(|_| Error::Parse(format!("bad variable `X{var}`")))?;
                pairs.push((var, exp));
            } else if idx == 0 {
                coeff = factor.parse::<C>().map_err(|_| Error::Parse(format!("bad coefficient `{factor}`")))?;
            } else {
                return Err(Error::Parse(format!("bad factor `{factor}`")));
            }
        }
        let m = Monomial::from_pairs(pairs)?;
        poly.add_term(m, if negative { -coeff } else { coeff });
    }
    Ok(poly)
}

/// One term of the JSON form: `{"coeff": "<decimal>", "exps": {"<var>": <exp>}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTerm {
    pub coeff: String,
    pub exps: BTreeMap<usize, i64>,
}

impl Polynomial<BigInt> {
    /// JSON terms in canonical order.
    pub fn to_json_terms(&self) -> Vec<JsonTerm> {
        self.terms
            .iter()
            .map(|(m, c)| JsonTerm {
                coeff: c.to_string(),
                exps: m.pairs().collect(),
            })
            .collect()
    }

    pub fn from_json_terms(terms: &[JsonTerm]) -> Result<Self> {
        let mut p = Polynomial::zero();
        for t in terms {
            let c: BigInt = t.coeff.parse().map_err(|_| Error::Parse(format!("bad coefficient `{}`", t.coeff)))?;
            p.add_term(Monomial::from_pairs(t.exps.iter().map(|(&v, &e)| (v, e)))?, c);
        }
        Ok(p)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_terms()).expect("terms serialize")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let terms: Vec<JsonTerm> = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json_terms(&terms)
    }
}
