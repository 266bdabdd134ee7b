//! Coefficient fields used throughout the crate.
//!
//! Every algorithm is generic over [`Field`]; the two concrete choices are
//! [`BigRat`] (specialized mode, q and t are numbers) and [`RatQT`]
//! (symbolic mode, q and t are indeterminates).

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::error::AlgebraError;
use super::ratqt::RatQT;

/// Exact rationals, backed by `num-rational`.
pub type BigRat = num_rational::BigRational;

pub trait Field: Clone + PartialEq + Debug + Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rat(value: &BigRat) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self, AlgebraError>;

    fn from_int(value: i64) -> Self {
        Self::from_rat(&BigRat::from_integer(BigInt::from(value)))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn div(&self, other: &Self) -> Result<Self, AlgebraError> {
        Ok(self.mul(&other.inv()?))
    }

    /// Integer power; negative exponents invert.
    fn pow(&self, exp: i64) -> Result<Self, AlgebraError> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        Ok(acc)
    }

    fn add_assign(&mut self, other: &Self) {
        *self = Field::add(self, other);
    }
}

impl Field for BigRat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_rat(value: &BigRat) -> Self {
        value.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self, AlgebraError> {
        if Zero::is_zero(self) {
            Err(AlgebraError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
}

impl Field for RatQT {
    fn zero() -> Self {
        RatQT::zero()
    }
    fn one() -> Self {
        RatQT::one()
    }
    fn from_rat(value: &BigRat) -> Self {
        RatQT::constant(value.clone())
    }
    fn is_zero(&self) -> bool {
        RatQT::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        RatQT::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        RatQT::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        RatQT::mul(self, other)
    }
    fn neg(&self) -> Self {
        RatQT::neg(self)
    }
    fn inv(&self) -> Result<Self, AlgebraError> {
        RatQT::inv(self)
    }
}

/// Display helper for rationals: `3`, `-2/5`.
pub fn fmt_rat(value: &BigRat) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

pub fn rat(numer: i64, denom: i64) -> BigRat {
    BigRat::new(BigInt::from(numer), BigInt::from(denom))
}
