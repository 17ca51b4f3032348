//! Exact coefficient arithmetic.
//!
//! [`ParamScalar`] is a rational function in the coupling symbols with
//! arbitrary-precision integer coefficients, kept in canonical form so that
//! structural equality is mathematical equality. [`Field`] abstracts over it
//! and plain [`BigRational`] so the linear algebra runs on either.

mod poly;
mod scalar;

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use poly::{gcd, Exponents, Poly, NSYM};
pub use scalar::{Assignment, ParamScalar};

/// Formal coupling symbols. `b` serves the single-layer models, `u = √p`,
/// `v = √q` and `r` the two-layer one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Symbol {
    B,
    U,
    V,
    R,
}

impl Symbol {
    pub const ALL: [Symbol; NSYM] = [Symbol::B, Symbol::U, Symbol::V, Symbol::R];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Symbol::B => "b",
            Symbol::U => "u",
            Symbol::V => "v",
            Symbol::R => "r",
        }
    }

    pub fn from_name(s: &str) -> Option<Symbol> {
        Symbol::ALL.into_iter().find(|x| x.name() == s)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoeffError {
    #[error("resonance: denominator {denominator} vanishes")]
    Resonance { denominator: String },
    #[error("symbol {0} is not assigned")]
    Unassigned(&'static str),
    #[error("odd power of {0} cannot be specialized through its square")]
    OddPower(&'static str),
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed coefficient JSON: {0}")]
    Json(String),
}

/// Exact field operations shared by [`BigRational`] and [`ParamScalar`].
pub trait Field: Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn from_rational(r: &BigRational) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn div(&self, o: &Self) -> Option<Self> {
        o.inv().map(|i| self.mul(&i))
    }

    fn from_int(i: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(i)))
    }
}

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }
}

/// Shorthand for a rational constant.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
