use super::rational::Rational;
use crate::error::{Error, Result};
use std::fmt;

/// An element of the tropical semifield `(Q, max, +)`.
///
/// `Bottom` marks an absent coordinate. It is never an operand.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TropNumber {
    Bottom,
    Val(Rational),
}

impl TropNumber {
    pub fn value(&self) -> Result<&Rational> {
        match self {
            TropNumber::Val(v) => Ok(v),
            TropNumber::Bottom => Err(Error::BottomArithmetic),
        }
    }
}

impl From<Rational> for TropNumber {
    fn from(v: Rational) -> Self {
        TropNumber::Val(v)
    }
}

impl fmt::Display for TropNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TropNumber::Bottom => write!(f, "-inf"),
            TropNumber::Val(v) => write!(f, "{v}"),
        }
    }
}
