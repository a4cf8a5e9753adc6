//! Formal Laurent/Puiseux series over Q.
//!
//! A series with ramification `r` has exponents on the grid `Z/r`; all
//! exponents are stored as integers counting grid units. Binary operations
//! first move both operands to the lcm grid. Results are always stored on
//! the coarsest grid that holds their exponents and precision, so structural
//! equality is equality of series.

use super::rational::{rational_from_json, rational_to_json, Rational};
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;

/// Relative precision, in grid units, given to quotients of exact inputs.
pub const DEFAULT_PRECISION: i64 = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenSeries {
    ram: u32,
    terms: BTreeMap<i64, Rational>,
    /// Exponent (grid units) from which on coefficients are unknown.
    prec: Option<i64>,
}

fn gcd_i64(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

impl GenSeries {
    /// Builds a series on grid `Z/ram` from `(grid exponent, coefficient)` pairs.
    pub fn from_grid(ram: u32, terms: impl IntoIterator<Item = (i64, Rational)>, prec: Option<i64>) -> Self {
        assert!(ram > 0, "ramification must be positive");
        let mut map: BTreeMap<i64, Rational> = BTreeMap::new();
        for (e, c) in terms {
            if prec.is_some_and(|p| e >= p) {
                continue;
            }
            let slot = map.entry(e).or_insert_with(Rational::zero);
            *slot += c;
        }
        map.retain(|_, c| !c.is_zero());
        let mut s = GenSeries { ram, terms: map, prec };
        s.reduce_grid();
        s
    }

    fn reduce_grid(&mut self) {
        let mut g = self.ram as i64;
        for e in self.terms.keys() {
            g = gcd_i64(g, *e);
            if g == 1 {
                return;
            }
        }
        if let Some(p) = self.prec {
            g = gcd_i64(g, p);
        }
        if g > 1 {
            self.ram /= g as u32;
            self.terms = std::mem::take(&mut self.terms)
                .into_iter()
                .map(|(e, c)| (e / g, c))
                .collect();
            self.prec = self.prec.map(|p| p / g);
        }
    }

    pub fn zero() -> Self {
        GenSeries { ram: 1, terms: BTreeMap::new(), prec: None }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_grid(1, [(0, c)], None)
    }

    /// `c * t^e` for a rational exponent `e`.
    pub fn monomial(c: Rational, e: &Rational) -> Self {
        let ram: u32 = e.denom().try_into().expect("ramification fits in u32");
        let grid: i64 = e.numer().try_into().expect("exponent fits in i64");
        Self::from_grid(ram, [(grid, c)], None)
    }

    /// Unknown beyond grid exponent `p`, known to vanish below it.
    pub fn big_o(ram: u32, p: i64) -> Self {
        Self::from_grid(ram, [], Some(p))
    }

    pub fn ram(&self) -> u32 {
        self.ram
    }

    pub fn is_exact(&self) -> bool {
        self.prec.is_none()
    }

    /// True for the exact zero series.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.prec.is_none()
    }

    pub fn is_monomial(&self) -> bool {
        self.prec.is_none() && self.terms.len() == 1
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Precision as a rational exponent, `None` for exact series.
    pub fn precision(&self) -> Option<Rational> {
        self.prec.map(|p| Rational::new(BigInt::from(p), BigInt::from(self.ram)))
    }

    /// Terms as (rational exponent, coefficient), increasing exponent.
    pub fn terms(&self) -> impl Iterator<Item = (Rational, &Rational)> + '_ {
        let r = BigInt::from(self.ram);
        self.terms
            .iter()
            .map(move |(e, c)| (Rational::new(BigInt::from(*e), r.clone()), c))
    }

    pub fn grid_terms(&self) -> &BTreeMap<i64, Rational> {
        &self.terms
    }

    pub fn grid_precision(&self) -> Option<i64> {
        self.prec
    }

    pub fn coeff_grid(&self, e: i64) -> Rational {
        self.terms.get(&e).cloned().unwrap_or_else(Rational::zero)
    }

    fn valuation_grid(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Minimal exponent with a known nonzero coefficient.
    pub fn valuation(&self) -> Option<Rational> {
        self.valuation_grid()
            .map(|v| Rational::new(BigInt::from(v), BigInt::from(self.ram)))
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.values().next()
    }

    /// `-val(x)`, the tropicalization of a single series.
    pub fn neg_val(&self) -> Result<Rational> {
        self.valuation()
            .map(|v| -v)
            .ok_or_else(|| Error::IndeterminateValuation("no known nonzero term".into()))
    }

    /// Same series on the finer grid `Z/r`, where `r` is a multiple of the ramification.
    pub fn on_grid(&self, r: u32) -> (BTreeMap<i64, Rational>, Option<i64>) {
        assert!(r % self.ram == 0, "grid {r} does not refine {}", self.ram);
        let f = (r / self.ram) as i64;
        (
            self.terms.iter().map(|(e, c)| (e * f, c.clone())).collect(),
            self.prec.map(|p| p * f),
        )
    }

    fn unify(&self, other: &Self) -> (u32, BTreeMap<i64, Rational>, Option<i64>, BTreeMap<i64, Rational>, Option<i64>) {
        let r = self.ram.lcm(&other.ram);
        let (a, pa) = self.on_grid(r);
        let (b, pb) = other.on_grid(r);
        (r, a, pa, b, pb)
    }

    pub fn neg(&self) -> Self {
        GenSeries {
            ram: self.ram,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
            prec: self.prec,
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_grid(self.ram, self.terms.iter().map(|(e, x)| (*e, x * c)), self.prec)
    }

    pub fn add(&self, other: &Self) -> Self {
        let (r, a, pa, b, pb) = self.unify(other);
        let prec = min_opt(pa, pb);
        Self::from_grid(r, a.into_iter().chain(b), prec)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (r, a, pa, b, pb) = self.unify(other);
        // lower bounds on valuations; an empty series vanishes below its precision
        let low = |m: &BTreeMap<i64, Rational>, p: Option<i64>| m.keys().next().copied().or(p);
        let la = low(&a, pa);
        let lb = low(&b, pb);
        let prec = min_opt(add_opt(pa, lb, b.is_empty() && pb.is_none()), add_opt(pb, la, a.is_empty() && pa.is_none()));
        let mut out: BTreeMap<i64, Rational> = BTreeMap::new();
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let e = ea + eb;
                if prec.is_some_and(|p| e >= p) {
                    break;
                }
                let slot = out.entry(e).or_insert_with(Rational::zero);
                *slot += ca * cb;
            }
        }
        Self::from_grid(r, out, prec)
    }

    /// Quotient; quotients by non-monomials get `DEFAULT_PRECISION` relative precision.
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.div_with_precision(other, DEFAULT_PRECISION)
    }

    /// Quotient where exact non-monomial division keeps `rel` grid units beyond the valuation.
    pub fn div_with_precision(&self, other: &Self, rel: i64) -> Result<Self> {
        let (r, a, pa, b, pb) = self.unify(other);
        let Some((&vy, cy)) = b.iter().next() else {
            return Err(if pb.is_none() {
                Error::DivisionByZero
            } else {
                Error::IndeterminateValuation("divisor has no known leading term".into())
            });
        };
        let cy = cy.clone();
        if pb.is_none() && b.len() == 1 {
            return Ok(Self::from_grid(
                r,
                a.into_iter().map(|(e, c)| (e - vy, c / &cy)),
                pa.map(|p| p - vy),
            ));
        }
        let Some((&vx, _)) = a.iter().next() else {
            return Ok(Self::from_grid(r, [], pa.map(|p| p - vy)));
        };
        let rel_y = pb.map(|p| p - vy);
        let rel_x = pa.map(|p| p - vx);
        let n = min_opt(rel_x, rel_y).unwrap_or(rel).max(0) as usize;
        // 1/(y / (cy t^vy)) = sum inv[m] t^m
        let u: Vec<Rational> = (0..n).map(|j| b.get(&(vy + j as i64)).cloned().unwrap_or_default() / &cy).collect();
        let mut inv: Vec<Rational> = Vec::with_capacity(n);
        for m in 0..n {
            if m == 0 {
                inv.push(Rational::one());
                continue;
            }
            let mut s = Rational::zero();
            for j in 1..=m {
                if !u[j].is_zero() {
                    s -= &u[j] * &inv[m - j];
                }
            }
            inv.push(s);
        }
        let xa: Vec<Rational> = (0..n).map(|i| a.get(&(vx + i as i64)).cloned().unwrap_or_default()).collect();
        let mut out = Vec::with_capacity(n);
        for m in 0..n {
            let mut s = Rational::zero();
            for i in 0..=m {
                if !xa[i].is_zero() && !inv[m - i].is_zero() {
                    s += &xa[i] * &inv[m - i];
                }
            }
            out.push((vx - vy + m as i64, s / &cy));
        }
        Ok(Self::from_grid(r, out, Some(vx - vy + n as i64)))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }
}

fn min_opt(a: Option<i64>, b: Option<i64>) -> Option<i64> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

/// `p + low`, where an exact-zero partner makes the product exact.
fn add_opt(p: Option<i64>, low: Option<i64>, partner_exact_zero: bool) -> Option<i64> {
    if partner_exact_zero {
        return None;
    }
    match (p, low) {
        (Some(p), Some(l)) => Some(p + l),
        _ => None,
    }
}

impl Default for GenSeries {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for GenSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() && self.prec.is_none() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if e.is_zero() {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*t^({e})")?;
            }
        }
        if let Some(p) = self.precision() {
            if !first {
                write!(f, " + ")?;
            }
            write!(f, "O(t^({p}))")?;
        }
        Ok(())
    }
}

impl Serialize for GenSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let terms: Vec<serde_json::Value> = self
            .terms()
            .map(|(e, c)| {
                let ej = rational_to_json(&e);
                let cj = rational_to_json(c);
                serde_json::json!([ej[0], ej[1], cj[0], cj[1]])
            })
            .collect();
        let precision = self.precision().map(|p| rational_to_json(&p));
        serde_json::json!({ "terms": terms, "precision": precision }).serialize(s)
    }
}

impl<'de> Deserialize<'de> for GenSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            terms: Vec<[serde_json::Value; 4]>,
            #[serde(default)]
            precision: Option<serde_json::Value>,
        }
        let raw = Raw::deserialize(d)?;
        let bad = || D::Error::custom("malformed series term");
        let mut parsed = Vec::new();
        for [en, ed, cn, cd] in &raw.terms {
            let e = rational_from_json(&serde_json::json!([en, ed])).ok_or_else(bad)?;
            let c = rational_from_json(&serde_json::json!([cn, cd])).ok_or_else(bad)?;
            parsed.push((e, c));
        }
        let prec = match raw.precision {
            None | Some(serde_json::Value::Null) => None,
            Some(v) => Some(rational_from_json(&v).ok_or_else(bad)?),
        };
        let mut ram = BigInt::one();
        for (e, _) in &parsed {
            ram = ram.lcm(e.denom());
        }
        if let Some(p) = &prec {
            ram = ram.lcm(p.denom());
        }
        let r: u32 = (&ram).try_into().map_err(|_| bad())?;
        let to_grid = |e: &Rational| -> Option<i64> { (e * Rational::from_integer(ram.clone())).to_integer().try_into().ok() };
        let terms: Option<Vec<(i64, Rational)>> = parsed.iter().map(|(e, c)| to_grid(e).map(|g| (g, c.clone()))).collect();
        let prec_grid = match &prec {
            Some(p) => Some(to_grid(p).ok_or_else(bad)?),
            None => None,
        };
        Ok(GenSeries::from_grid(r, terms.ok_or_else(bad)?, prec_grid))
    }
}

/// A series with a known, positive leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct PosSeries(GenSeries);

impl PosSeries {
    pub fn new(g: GenSeries) -> Result<Self> {
        match g.leading_coeff() {
            Some(c) if c.is_positive() => Ok(PosSeries(g)),
            Some(_) => Err(Error::InvalidParameters(format!("series {g} has a non-positive leading coefficient"))),
            None => Err(Error::IndeterminateValuation(format!("series {g} has no known leading term"))),
        }
    }

    pub fn one() -> Self {
        PosSeries(GenSeries::one())
    }

    /// `c * t^e` with `c > 0`.
    pub fn monomial(c: Rational, e: &Rational) -> Result<Self> {
        Self::new(GenSeries::monomial(c, e))
    }

    pub fn as_gen(&self) -> &GenSeries {
        &self.0
    }

    pub fn into_gen(self) -> GenSeries {
        self.0
    }

    pub fn neg_val(&self) -> Rational {
        self.0.neg_val().expect("positive series have a leading term")
    }
}

impl<'de> Deserialize<'de> for PosSeries {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let g = GenSeries::deserialize(d)?;
        PosSeries::new(g).map_err(D::Error::custom)
    }
}
