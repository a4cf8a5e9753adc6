//! Lattices in `K^k` given by generators with exact Laurent/Puiseux
//! entries, and the coweight-valued distance between them.

use crate::error::{Error, Result};
use crate::linalg::det_columns;
use crate::semifield::{qi, rational_to_json, GenSeries, Rational};
use num_traits::Zero;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatticeMode {
    SL,
    PGL,
}

/// The `O`-span of `k` generators (stored as columns).
#[derive(Clone, Debug, PartialEq)]
pub struct LatticeRep {
    gens: Vec<Vec<GenSeries>>,
    mode: LatticeMode,
}

pub(crate) fn det_of(cols: &[&Vec<GenSeries>]) -> GenSeries {
    let refs: Vec<&[GenSeries]> = cols.iter().map(|c| c.as_slice()).collect();
    det_columns(&refs)
}

pub(crate) fn exact_valuation(x: &GenSeries) -> Result<Rational> {
    if !x.is_exact() {
        return Err(Error::IndeterminateValuation("oracle inputs must be exact".into()));
    }
    x.valuation().ok_or_else(|| Error::IndeterminateValuation("valuation of zero".into()))
}

impl LatticeRep {
    pub fn new(gens: Vec<Vec<GenSeries>>, mode: LatticeMode) -> Result<Self> {
        let k = gens.len();
        if k == 0 || gens.iter().any(|g| g.len() != k) {
            return Err(Error::Malformed(format!("need {k} generators of length {k}")));
        }
        let l = LatticeRep { gens, mode };
        let d = l.det();
        if d.is_zero() {
            return Err(Error::Singular("generators are dependent".into()));
        }
        if mode == LatticeMode::SL && !exact_valuation(&d)?.is_zero() {
            return Err(Error::InvalidParameters("SL lattice needs a determinant of valuation 0".into()));
        }
        Ok(l)
    }

    pub fn standard(k: usize, mode: LatticeMode) -> Self {
        let gens = (0..k)
            .map(|c| (0..k).map(|r| if r == c { GenSeries::one() } else { GenSeries::zero() }).collect())
            .collect();
        LatticeRep { gens, mode }
    }

    /// The lattice `t^μ` spanned by `t^{-μ_i} e_i`.
    pub fn from_coweight(mu: &[Rational], mode: LatticeMode) -> Result<Self> {
        let k = mu.len();
        let gens = (0..k)
            .map(|c| {
                (0..k)
                    .map(|r| if r == c { GenSeries::monomial(qi(1), &-&mu[c]) } else { GenSeries::zero() })
                    .collect()
            })
            .collect();
        Self::new(gens, mode)
    }

    pub fn k(&self) -> usize {
        self.gens.len()
    }

    pub fn mode(&self) -> LatticeMode {
        self.mode
    }

    pub fn gens(&self) -> &[Vec<GenSeries>] {
        &self.gens
    }

    pub fn det(&self) -> GenSeries {
        let cols: Vec<&Vec<GenSeries>> = self.gens.iter().collect();
        det_of(&cols)
    }

    pub fn det_valuation(&self) -> Result<Rational> {
        exact_valuation(&self.det())
    }

    /// Generators as a `k x k` matrix of series, one column per generator.
    pub fn to_json(&self) -> Value {
        let series = |s: &GenSeries| -> Value {
            Value::Array(s.terms().map(|(e, c)| json!([rational_to_json(&e), rational_to_json(c)])).collect())
        };
        json!({
            "mode": match self.mode { LatticeMode::SL => "SL", LatticeMode::PGL => "PGL" },
            "generators": self.gens.iter().map(|g| g.iter().map(series).collect::<Vec<_>>()).collect::<Vec<_>>(),
        })
    }
}

/// A coweight sorted decreasingly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoweightDistance {
    pub mu: Vec<Rational>,
}

impl CoweightDistance {
    pub fn is_zero(&self) -> bool {
        self.mu.iter().all(Zero::is_zero)
    }

    /// Subtracts the mean (the PGL quotient).
    pub fn normalized(&self) -> Self {
        let mean: Rational = self.mu.iter().sum::<Rational>() / qi(self.mu.len() as i64);
        CoweightDistance { mu: self.mu.iter().map(|m| m - &mean).collect() }
    }

    /// `ω_j · μ`.
    pub fn omega(&self, j: usize) -> Rational {
        crate::points::omega_pair(j, &self.mu)
    }

    /// `-w_0 μ`.
    pub fn dual(&self) -> Self {
        CoweightDistance { mu: self.mu.iter().rev().map(|m| -m).collect() }
    }

    /// Dominance order on partial sums, totals equal.
    pub fn dominated_by(&self, other: &Self) -> bool {
        let (mut a, mut b) = (Rational::zero(), Rational::zero());
        for (x, y) in self.mu.iter().zip(&other.mu) {
            a += x;
            b += y;
            if a > b {
                return false;
            }
        }
        a == b
    }
}

fn subsets(k: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, k: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..k {
            cur.push(i);
            rec(i + 1, k, size, cur, out);
            cur.pop();
        }
    }
    rec(0, k, size, &mut cur, &mut out);
    out
}

/// Elementary-divisor distance `d(L1, L2)`: with `C` the matrix of `L2`'s
/// generators in `L1`'s basis and `ν_i` the least valuation of an `i x i`
/// minor of `C`, the divisors are `ν_i - ν_{i-1}` and `μ` is their
/// negatives sorted decreasingly. PGL lattices are compared up to scale.
pub fn lattice_distance(l1: &LatticeRep, l2: &LatticeRep) -> Result<CoweightDistance> {
    let k = l1.k();
    if l2.k() != k {
        return Err(Error::InvalidParameters("lattices of different rank".into()));
    }
    let d1 = l1.det();
    let v1 = exact_valuation(&d1)?;
    // det(L1) C, by Cramer's rule
    let m: Vec<Vec<GenSeries>> = (0..k)
        .map(|j| {
            (0..k)
                .map(|r| {
                    let cols: Vec<&Vec<GenSeries>> =
                        (0..k).map(|c| if c == r { &l2.gens[j] } else { &l1.gens[c] }).collect();
                    det_of(&cols)
                })
                .collect()
        })
        .collect();
    let mut nu = vec![Rational::zero(); k + 1];
    for (i, slot) in nu.iter_mut().enumerate().skip(1) {
        let mut best: Option<Rational> = None;
        for rows in subsets(k, i) {
            for cols in subsets(k, i) {
                let sub: Vec<Vec<GenSeries>> =
                    cols.iter().map(|&c| rows.iter().map(|&r| m[c][r].clone()).collect()).collect();
                let refs: Vec<&Vec<GenSeries>> = sub.iter().collect();
                let d = det_of(&refs);
                if d.is_zero() {
                    continue;
                }
                let v = exact_valuation(&d)?;
                if best.as_ref().is_none_or(|b| v < *b) {
                    best = Some(v);
                }
            }
        }
        let b = best.ok_or_else(|| Error::Singular("change of basis is not invertible".into()))?;
        *slot = b - &v1 * qi(i as i64);
    }
    let mut mu: Vec<Rational> = (1..=k).map(|i| -(&nu[i] - &nu[i - 1])).collect();
    mu.sort_by(|a, b| b.cmp(a));
    let out = CoweightDistance { mu };
    Ok(if l1.mode == LatticeMode::PGL || l2.mode == LatticeMode::PGL { out.normalized() } else { out })
}

/// Same `O`-module (distance zero before any normalization).
pub fn same_lattice(l1: &LatticeRep, l2: &LatticeRep) -> Result<bool> {
    let a = LatticeRep { gens: l1.gens.clone(), mode: LatticeMode::SL };
    let b = LatticeRep { gens: l2.gens.clone(), mode: LatticeMode::SL };
    Ok(lattice_distance(&a, &b)?.is_zero())
}
