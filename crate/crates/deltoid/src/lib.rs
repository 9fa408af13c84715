//! Exact combinatorics of delta-matroids and type-B generalized permutohedra.
//!
//! Everything is computed over arbitrary-precision integers and rationals.
//! The polynomial and linear-algebra layers are generic over a [`Coeff`]
//! scalar; the rest of the crate works with the rational aliases below.

use std::fmt;
use std::ops::Neg;

use num_traits::Num;

pub mod deltamatroid;
pub mod envelope;
pub mod fixtures;
pub mod error;
pub mod ground;
pub mod invariants;
pub mod io;
pub mod limits;
pub mod linalg;
pub mod localization;
pub mod logconc;
pub mod matroid;
pub mod poly;
pub mod polyhedra;
pub mod represent;
pub mod schubert;
pub mod suite;

pub use error::{Error, Result};

/// Scalar bound for polynomial coefficients and exact linear algebra.
pub trait Coeff:
    Clone + PartialEq + PartialOrd + fmt::Debug + fmt::Display + Num + Neg<Output = Self> + Send + Sync + 'static
{
}

impl<T> Coeff for T where
    T: Clone + PartialEq + PartialOrd + fmt::Debug + fmt::Display + Num + Neg<Output = T> + Send + Sync + 'static
{
}

pub type Rational = num_rational::BigRational;
pub type Integer = num_bigint::BigInt;
pub type QPoly = poly::MPoly<Rational>;
pub type ZPoly = poly::MPoly<Integer>;
/// Values fed to substitution when a binding is a constant.
pub type RationalFunctionValue = Rational;
