//! Arbitrary precision rationals and their JSON form `[num, den]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub type Rational = BigRational;

/// `n/d` as a reduced rational.
pub fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn qi(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn is_integral(x: &Rational) -> bool {
    x.denom().is_one()
}

/// Integer value of an integral rational that fits in `i64`.
pub fn to_i64(x: &Rational) -> Option<i64> {
    if is_integral(x) {
        x.numer().to_i64()
    } else {
        None
    }
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(xs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    xs.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

pub fn max_q(a: &Rational, b: &Rational) -> Rational {
    if a >= b {
        a.clone()
    } else {
        b.clone()
    }
}

pub fn positive_part(x: &Rational) -> Rational {
    if x.is_positive() {
        x.clone()
    } else {
        Rational::zero()
    }
}

fn int_to_json(x: &BigInt) -> serde_json::Value {
    match x.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(x.to_string()),
    }
}

fn int_from_json(v: &serde_json::Value) -> Option<BigInt> {
    match v {
        serde_json::Value::Number(n) => n.as_i64().map(BigInt::from),
        serde_json::Value::String(s) => s.parse().ok(),
        _ => None,
    }
}

pub fn rational_to_json(x: &Rational) -> serde_json::Value {
    serde_json::Value::Array(vec![int_to_json(x.numer()), int_to_json(x.denom())])
}

pub fn rational_from_json(v: &serde_json::Value) -> Option<Rational> {
    match v {
        serde_json::Value::Array(a) if a.len() == 2 => {
            let n = int_from_json(&a[0])?;
            let d = int_from_json(&a[1])?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        serde_json::Value::Number(_) | serde_json::Value::String(_) => {
            int_from_json(v).map(Rational::from_integer)
        }
        _ => None,
    }
}

/// Serde adapter for a single rational stored as `[num, den]`.
pub mod pair {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Rational, s: S) -> Result<S::Ok, S::Error> {
        rational_to_json(x).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        rational_from_json(&v).ok_or_else(|| D::Error::custom("expected [num, den]"))
    }
}

/// Serde adapter for a vector of rationals.
pub mod pair_vec {
    use super::*;

    pub fn serialize<S: Serializer>(xs: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<serde_json::Value> = xs.iter().map(rational_to_json).collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let v = Vec::<serde_json::Value>::deserialize(d)?;
        v.iter()
            .map(|x| rational_from_json(x).ok_or_else(|| D::Error::custom("expected [num, den]")))
            .collect()
    }
}

/// Serde adapter for a rational matrix stored row-major.
pub mod pair_mat {
    use super::*;

    pub fn serialize<S: Serializer>(m: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<Vec<serde_json::Value>> = m
            .iter()
            .map(|row| row.iter().map(rational_to_json).collect())
            .collect();
        v.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Vec<Rational>>, D::Error> {
        let v = Vec::<Vec<serde_json::Value>>::deserialize(d)?;
        v.iter()
            .map(|row| {
                row.iter()
                    .map(|x| {
                        rational_from_json(x).ok_or_else(|| D::Error::custom("expected [num, den]"))
                    })
                    .collect()
            })
            .collect()
    }
}
