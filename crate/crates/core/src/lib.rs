//! Exact construction of partial Bell, inverse-Bell, potential and factorial
//! polynomials, their associated integer families, and a checker for the
//! identities that tie them together.
//!
//! Polynomials and series are generic over their scalar; the aliases below
//! fix the exact instantiations used throughout.

pub mod bell;
pub mod combinat;
pub mod error;
pub mod facpoly;
pub mod grid;
pub mod numfam;
pub mod polyring;
pub mod scalar;
pub mod series;
pub mod table;
pub mod verify;

pub use error::{Error, Result};
pub use polyring::{Monomial, Polynomial};
pub use series::Series;

/// Integer-coefficient Laurent polynomial.
pub type Poly = Polynomial<num_bigint::BigInt>;

/// Exact rational.
pub type Rational = num_rational::BigRational;

/// Truncated power series over the rationals.
pub type QSeries = Series<Rational>;

/// Truncated power series over `f64`, for quick numeric experiments.
pub type F64Series = Series<f64>;
