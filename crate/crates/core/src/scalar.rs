//! Scalar traits the polynomial and series code is generic over.
//!
//! Integer-coefficient families use [`num_bigint::BigInt`]; the series oracle
//! runs over [`num_rational::BigRational`]. Machine floats also satisfy
//! [`Field`], which is handy for quick numeric sanity checks but carries no
//! exactness guarantees.

use std::fmt::Debug;
use std::ops::{AddAssign, Neg};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num};

/// Commutative ring with unity.
pub trait Ring: Num + Clone + Debug + Neg<Output = Self> + FromPrimitive + for<'a> AddAssign<&'a Self> {
    fn from_usize_exact(n: usize) -> Self {
        Self::from_usize(n).expect("ring cannot represent small integer")
    }

    fn from_i64_exact(n: i64) -> Self {
        Self::from_i64(n).expect("ring cannot represent small integer")
    }
}

impl<T> Ring for T where
    T: Num + Clone + Debug + Neg<Output = Self> + FromPrimitive + for<'a> AddAssign<&'a Self>
{
}

/// A ring in which `Div` is exact division by nonzero elements.
///
/// `BigInt` is deliberately excluded: its `Div` truncates.
pub trait Field: Ring {}

impl<T> Field for Ratio<T>
where
    T: Integer + Clone + Debug + FromPrimitive + Neg<Output = T>,
    Ratio<T>: Ring,
{
}

impl Field for f64 {}
impl Field for f32 {}

/// Lifts coefficients of type `C` into `Self`, e.g. integers into rationals.
pub trait Embed<C> {
    fn embed(c: &C) -> Self;
}

impl<T: Clone> Embed<T> for T {
    fn embed(c: &T) -> Self {
        c.clone()
    }
}

impl Embed<BigInt> for Ratio<BigInt> {
    fn embed(c: &BigInt) -> Self {
        Ratio::from_integer(c.clone())
    }
}

impl Embed<BigInt> for f64 {
    fn embed(c: &BigInt) -> Self {
        num_traits::ToPrimitive::to_f64(c).unwrap_or(f64::NAN)
    }
}

/// `n!` in any ring.
pub fn factorial<T: Ring>(n: usize) -> T {
    (1..=n).fold(T::one(), |acc, i| acc * T::from_usize_exact(i))
}
