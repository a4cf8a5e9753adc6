//! The semifields in which cluster coordinates take values.
//!
//! Every exchange relation is subtraction free, so mutation only needs
//! `plus`, `times` and `div`. Three semifields are provided: positive
//! rationals, the tropical semifield `(Q, max, +)` and Laurent/Puiseux series
//! with positive leading coefficient. Plain rationals also implement the
//! trait so that exchange relations can be evaluated on arbitrary (non
//! positive) inputs, where only division by zero can fail.

mod rational;
mod series;
mod trop;

pub use rational::{
    common_denominator, is_integral, max_q, pair, pair_mat, pair_vec, positive_part, q, qi,
    rational_from_json, rational_to_json, to_i64, Rational,
};
pub use series::{GenSeries, PosSeries, DEFAULT_PRECISION};
pub use trop::TropNumber;

use crate::error::{Error, Result};
use num_traits::{One, Signed, Zero};
use std::fmt::Debug;

/// Operations shared by all coordinate semifields.
pub trait Semifield: Clone + Debug + PartialEq + Send + Sync {
    fn one() -> Self;
    fn plus(&self, other: &Self) -> Result<Self>;
    fn times(&self, other: &Self) -> Result<Self>;
    fn div(&self, other: &Self) -> Result<Self>;

    /// Integer power; negative exponents go through `div`.
    fn pow(&self, e: i64) -> Result<Self> {
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut m = e.unsigned_abs();
        while m > 0 {
            if m & 1 == 1 {
                acc = acc.times(&base)?;
            }
            m >>= 1;
            if m > 0 {
                base = base.times(&base)?;
            }
        }
        if e < 0 {
            Self::one().div(&acc)
        } else {
            Ok(acc)
        }
    }
}

/// A strictly positive rational.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PosRational(Rational);

impl PosRational {
    pub fn new(x: Rational) -> Result<Self> {
        if x.is_positive() {
            Ok(PosRational(x))
        } else {
            Err(Error::InvalidParameters(format!("{x} is not positive")))
        }
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    pub fn into_inner(self) -> Rational {
        self.0
    }
}

impl Semifield for PosRational {
    fn one() -> Self {
        PosRational(<Rational as One>::one())
    }
    fn plus(&self, other: &Self) -> Result<Self> {
        Ok(PosRational(&self.0 + &other.0))
    }
    fn times(&self, other: &Self) -> Result<Self> {
        Ok(PosRational(&self.0 * &other.0))
    }
    fn div(&self, other: &Self) -> Result<Self> {
        Ok(PosRational(&self.0 / &other.0))
    }
}

impl Semifield for Rational {
    fn one() -> Self {
        One::one()
    }
    fn plus(&self, other: &Self) -> Result<Self> {
        Ok(self + other)
    }
    fn times(&self, other: &Self) -> Result<Self> {
        Ok(self * other)
    }
    fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(self / other)
        }
    }
}

impl Semifield for TropNumber {
    fn one() -> Self {
        TropNumber::Val(Rational::zero())
    }
    fn plus(&self, other: &Self) -> Result<Self> {
        Ok(TropNumber::Val(max_q(self.value()?, other.value()?)))
    }
    fn times(&self, other: &Self) -> Result<Self> {
        Ok(TropNumber::Val(self.value()? + other.value()?))
    }
    fn div(&self, other: &Self) -> Result<Self> {
        Ok(TropNumber::Val(self.value()? - other.value()?))
    }
    fn pow(&self, e: i64) -> Result<Self> {
        Ok(TropNumber::Val(self.value()? * qi(e)))
    }
}

impl Semifield for PosSeries {
    fn one() -> Self {
        PosSeries::one()
    }
    fn plus(&self, other: &Self) -> Result<Self> {
        PosSeries::new(self.as_gen().add(other.as_gen()))
    }
    fn times(&self, other: &Self) -> Result<Self> {
        PosSeries::new(self.as_gen().mul(other.as_gen()))
    }
    fn div(&self, other: &Self) -> Result<Self> {
        PosSeries::new(self.as_gen().div(other.as_gen())?)
    }
}

/// `trop_arith`: the tropical operations on bare rationals.
pub fn trop_add(x: &Rational, y: &Rational) -> Rational {
    max_q(x, y)
}

pub fn trop_mul(x: &Rational, y: &Rational) -> Rational {
    x + y
}

pub fn trop_div(x: &Rational, y: &Rational) -> Rational {
    x - y
}
