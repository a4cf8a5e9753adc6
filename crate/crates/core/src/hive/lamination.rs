//! The laminations `l_i`, the lineality directions they span, and the
//! integrality bookkeeping on boundary distances.

use super::boundary::BoundaryDistances;
use super::cone::cone_check;
use super::lift::boundary_of;
use crate::error::{Error, Result};
use crate::points::{act_t, PluckerVector};
use crate::semifield::{is_integral, q, qi, Rational};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

/// `P_J(l_i) = Σ_{j ∈ J, o = (j - i) mod n < k} (k - 1 - o) / k`.
pub fn l_lamination(i: usize, k: usize, n: usize) -> PluckerVector {
    PluckerVector::from_fn(k, n, |j| {
        j.elems()
            .iter()
            .map(|&v| (v + n - i) % n)
            .filter(|&o| o < k)
            .map(|o| q((k - 1 - o) as i64, k as i64))
            .sum()
    })
}

/// The torus element whose action adds `π(l_i)`: the shift of
/// `(1/k)(k-1, …, 1, 0, …, 0)` starting at position `i`.
pub fn lamination_torus_element(i: usize, k: usize, n: usize) -> Vec<Rational> {
    let mut c = vec![Rational::zero(); n];
    for o in 0..k {
        c[(i - 1 + o) % n] = q((k - 1 - o) as i64, k as i64);
    }
    c
}

/// `y + Σ c_i π(l_i)`.
pub fn act_lineality(y: &PluckerVector, c: &[Rational]) -> PluckerVector {
    let (k, n) = (y.k(), y.n());
    let mut t = vec![Rational::zero(); n];
    for (i, ci) in c.iter().enumerate() {
        for (tj, lj) in t.iter_mut().zip(lamination_torus_element(i + 1, k, n)) {
            *tj += ci * lj;
        }
    }
    act_t(y, &t)
}

/// Coefficients `c` (all equal) with `y + Σ c_i π(l_i)` in the cone, and the
/// moved point. `Σ_i π(l_i)` is the constant `k(k-1)/2`, which raises every
/// cone slack by `k - 1`.
pub fn cone_representative(y: &PluckerVector) -> Result<(Vec<Rational>, PluckerVector)> {
    let report = cone_check(y)?;
    let worst = report.entries.iter().map(|e| e.slack.clone()).min().unwrap_or_else(Rational::zero);
    let t = if worst.is_negative() { -worst / qi(y.k() as i64 - 1) } else { Rational::zero() };
    let c = vec![t; y.n()];
    let moved = act_lineality(y, &c);
    Ok((c, moved))
}

#[derive(Clone, Debug, PartialEq)]
pub struct IntegralityReport {
    pub a: BoundaryDistances,
    pub a_integral: bool,
    pub a_nonnegative: bool,
    pub plucker_integral: bool,
    /// Largest denominator among the Plücker values.
    pub max_denominator: BigInt,
}

impl IntegralityReport {
    /// Boundary distances form a nonnegative integer vector.
    pub fn integral(&self) -> bool {
        self.a_integral && self.a_nonnegative
    }

    pub fn to_json(&self) -> Value {
        json!({
            "a": self.a.iter().map(crate::semifield::rational_to_json).collect::<Vec<_>>(),
            "a_integral": self.a_integral,
            "a_nonnegative": self.a_nonnegative,
            "plucker_integral": self.plucker_integral,
            "max_denominator": self.max_denominator.to_string(),
        })
    }
}

pub fn integrality_check(y: &PluckerVector) -> Result<IntegralityReport> {
    let a = boundary_of(y)?;
    Ok(IntegralityReport {
        a_integral: a.iter().all(is_integral),
        a_nonnegative: a.iter().all(|x| !x.is_negative()),
        plucker_integral: y.values().iter().all(is_integral),
        max_denominator: y.values().iter().map(|x| x.denom().clone()).max().unwrap_or_else(|| BigInt::from(1)),
        a,
    })
}

/// Multi-weight `(a_1 ω₁, …, a_n ω₁)` of the invariant space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightReport {
    pub k: usize,
    pub multiplicities: Vec<BigInt>,
    pub total: BigInt,
}

impl WeightReport {
    pub fn to_json(&self) -> Value {
        json!({
            "k": self.k,
            "weights": self.multiplicities.iter().map(|m| format!("{m}w1")).collect::<Vec<_>>(),
            "total": self.total.to_string(),
        })
    }
}

pub fn weight_report(y: &PluckerVector) -> Result<WeightReport> {
    let a = boundary_of(y)?;
    if let Some(x) = a.iter().find(|x| !is_integral(x)) {
        return Err(Error::InvalidParameters(format!("boundary distance {x} is not integral")));
    }
    let multiplicities: Vec<BigInt> = a.iter().map(|x| x.numer().clone()).collect();
    let total = multiplicities.iter().sum();
    Ok(WeightReport { k: y.k(), multiplicities, total })
}

/// Experimental: acts by `(1/k)(b_1, …, b_n)` with `b_i = Σ_{j<i} a_j`.
pub fn rw_normalize(y: &PluckerVector, a: &[Rational]) -> PluckerVector {
    let k = qi(y.k() as i64);
    let mut acc = Rational::zero();
    let mut c = Vec::with_capacity(a.len());
    for aj in a {
        c.push(&acc / &k);
        acc += aj;
    }
    act_t(y, &c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::PluckerLabel;
    use crate::hive::frozen_from_boundary;

    #[test]
    fn lamination_values() {
        let l1 = l_lamination(1, 4, 8);
        assert_eq!(l1.get(&PluckerLabel::new(8, [1, 2, 3, 4]).unwrap()), &q(3, 2));
        assert_eq!(l1.get(&PluckerLabel::new(8, [4, 5, 6, 7]).unwrap()), &qi(0));
        let mut ind = vec![qi(0); 8];
        for x in ind.iter_mut().take(4) {
            *x = qi(1);
        }
        let f: Vec<Rational> = (1..=8).map(|i| l1.frozen(i).clone()).collect();
        assert_eq!(f, frozen_from_boundary(4, &ind));
        assert_eq!(boundary_of(&l1).unwrap(), ind);
    }

    #[test]
    fn lamination_is_torus_action() {
        for i in 1..=7 {
            let via_t = act_t(&PluckerVector::zero(3, 7), &lamination_torus_element(i, 3, 7));
            assert_eq!(via_t, l_lamination(i, 3, 7));
        }
    }

    #[test]
    fn integrality_of_l1() {
        let r = integrality_check(&l_lamination(1, 4, 8)).unwrap();
        assert!(r.integral());
        assert!(!r.plucker_integral);
        assert_eq!(r.max_denominator, BigInt::from(4));
        let w = weight_report(&l_lamination(1, 4, 8)).unwrap();
        assert_eq!(w.total, BigInt::from(4));
        assert!(integrality_check(&PluckerVector::zero(4, 8)).unwrap().plucker_integral);
    }

    #[test]
    fn rw_staircase() {
        let y = PluckerVector::zero(2, 4);
        assert_eq!(rw_normalize(&y, &vec![qi(0); 4]), y);
        let z = rw_normalize(&y, &[qi(1), qi(0), qi(0), qi(0)]);
        assert_eq!(z.get(&PluckerLabel::new(4, [2, 3]).unwrap()), &qi(1));
        assert_eq!(z.get(&PluckerLabel::new(4, [1, 2]).unwrap()), &q(1, 2));
    }
}
