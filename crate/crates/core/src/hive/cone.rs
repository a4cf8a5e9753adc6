//! Hive inequalities on flag-configuration charts and the cone
//! inequalities on tropical Plücker vectors.

use super::boundary::boundary_from_frozen;
use crate::catalog::{FlagMonomialLabel, Label, PluckerLabel};
use crate::error::{Error, Result};
use crate::points::{
    act_h, chart_triangulation, fan_chart, random_trop_point, to_fan_chart, CoweightVector, PluckerVector, TropPoint,
};
use rand::Rng;
use crate::semifield::{q, rational_to_json, Rational};
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

/// A tropical point on an unmutated triangulation chart, read with every
/// pure label `{v:k}` equal to 0.
pub type HiveCoordinates = TropPoint;

#[derive(Clone, Debug, PartialEq)]
pub struct Inequality {
    pub id: String,
    pub lhs: Rational,
    pub rhs: Rational,
    pub slack: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConeReport {
    pub entries: Vec<Inequality>,
    pub member: bool,
}

impl ConeReport {
    pub fn new(entries: Vec<Inequality>) -> Self {
        let member = entries.iter().all(|e| !e.slack.is_negative());
        ConeReport { entries, member }
    }

    /// Every slack strictly positive.
    pub fn strict_member(&self) -> bool {
        self.entries.iter().all(|e| e.slack.is_positive())
    }

    /// A member with at least one tight inequality.
    pub fn on_boundary(&self) -> bool {
        self.member && self.entries.iter().any(|e| e.slack.is_zero())
    }

    pub fn violated(&self) -> impl Iterator<Item = &Inequality> {
        self.entries.iter().filter(|e| e.slack.is_negative())
    }

    pub fn get(&self, id: &str) -> Option<&Inequality> {
        self.entries.iter().find(|e| e.id == id)
    }

    /// With `strict`, a point with a tight inequality is reported as a
    /// boundary point rather than a member.
    pub fn to_json(&self, strict: bool) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|e| {
                json!({
                    "id": e.id,
                    "lhs": rational_to_json(&e.lhs),
                    "rhs": rational_to_json(&e.rhs),
                    "slack": rational_to_json(&e.slack),
                })
            })
            .collect();
        let boundary = self.on_boundary();
        json!({
            "member": if strict { self.member && !boundary } else { self.member },
            "boundary": boundary,
            "strict": strict,
            "inequalities": entries,
        })
    }
}

/// One rhombus: the two obtuse vertices and the two acute vertices, as
/// exponent triples on the triangle's corners `(A, B, C)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rhombus {
    pub family: char,
    pub base: [u32; 3],
    pub obtuse: [[u32; 3]; 2],
    pub acute: [[u32; 3]; 2],
}

/// All rhombi of the hive triangle of size `k`: three families, one per
/// corner, indexed by `i + j + l = k - 2`.
pub fn rhombi(k: usize) -> Vec<Rhombus> {
    let mut out = Vec::new();
    if k < 2 {
        return out;
    }
    let s = k as u32 - 2;
    for (family, f) in [('A', 0usize), ('B', 1), ('C', 2)] {
        for i in 0..=s {
            for j in 0..=s - i {
                let l = s - i - j;
                let (i1, j1, l1) = (i + 1, j + 1, l + 1);
                let r = match f {
                    0 => ([[i1, j1, l], [i1, j, l1]], [[i + 2, j, l], [i, j1, l1]]),
                    1 => ([[i, j1, l1], [i1, j1, l]], [[i, j + 2, l], [i1, j, l1]]),
                    _ => ([[i1, j, l1], [i, j1, l1]], [[i, j, l + 2], [i1, j1, l]]),
                };
                out.push(Rhombus { family, base: [i, j, l], obtuse: r.0, acute: r.1 });
            }
        }
    }
    out
}

pub fn rhombus_id(tri: [usize; 3], r: &Rhombus) -> String {
    format!(
        "T({},{},{}):{}[{},{},{}]",
        tri[0], tri[1], tri[2], r.family, r.base[0], r.base[1], r.base[2]
    )
}

pub(crate) fn triangle_monomial(n: usize, tri: [usize; 3], e: [u32; 3]) -> FlagMonomialLabel {
    FlagMonomialLabel::new(n, tri.iter().copied().zip(e)).expect("exponents sum to k")
}

fn chart_k(h: &HiveCoordinates) -> Result<usize> {
    h.chart
        .labels()
        .iter()
        .find_map(Label::as_flag)
        .map(FlagMonomialLabel::k)
        .ok_or_else(|| Error::ChartMismatch(format!("{} is not a flag chart", h.chart.chart_id())))
}

/// Evaluates every rhombus inequality in every triangle of the chart's
/// triangulation; mutated charts are first moved to the fan at vertex 1.
pub fn hive_check(h: &HiveCoordinates) -> Result<ConeReport> {
    let h = if h.chart.path().is_empty() {
        h.clone()
    } else {
        to_fan_chart(h, chart_k(h)?)?
    };
    let k = chart_k(&h)?;
    let n = h.chart.n();
    let t = chart_triangulation(&h.chart).ok_or_else(|| Error::ChartMismatch(h.chart.id().to_string()))?;
    let value = |tri: [usize; 3], e: [u32; 3]| -> Result<Rational> {
        let m = triangle_monomial(n, tri, e);
        if m.is_pure() {
            return Ok(Rational::zero());
        }
        let l = Label::Flag(m);
        h.get(&l).cloned().ok_or_else(|| Error::LabelNotFound(l.to_string()))
    };
    let shapes = rhombi(k);
    let mut entries = Vec::new();
    for &tri in t.triangles() {
        for r in &shapes {
            let lhs = value(tri, r.obtuse[0])? + value(tri, r.obtuse[1])?;
            let rhs = value(tri, r.acute[0])? + value(tri, r.acute[1])?;
            let slack = &lhs - &rhs;
            entries.push(Inequality { id: rhombus_id(tri, r), lhs, rhs, slack });
        }
    }
    Ok(ConeReport::new(entries))
}

/// `F_i^+ = P(i, …, i+k-2, i+k)`.
pub fn frozen_plus(n: usize, k: usize, i: usize) -> PluckerLabel {
    let mut elems: Vec<usize> = (0..k - 1).map(|s| (i - 1 + s) % n + 1).collect();
    elems.push((i - 1 + k) % n + 1);
    PluckerLabel::new(n, elems).expect("k < n")
}

/// The frozen values `F_i` of a Plücker vector.
pub fn frozen_values(y: &PluckerVector) -> Vec<Rational> {
    (1..=y.n()).map(|i| y.frozen(i).clone()).collect()
}

/// The `n` inequalities `F_i + (k-1)/k a_{i+k} >= F_i^+`.
pub fn cone_check(y: &PluckerVector) -> Result<ConeReport> {
    let (k, n) = (y.k(), y.n());
    let f = frozen_values(y);
    let a = boundary_from_frozen(k, &f)?;
    let c = q(k as i64 - 1, k as i64);
    let entries = (1..=n)
        .map(|i| {
            let lhs = &f[i - 1] + &c * &a[(i - 1 + k) % n];
            let rhs = y.get(&frozen_plus(n, k, i)).clone();
            let slack = &lhs - &rhs;
            Inequality { id: format!("cone[{i}]"), lhs, rhs, slack }
        })
        .collect();
    Ok(ConeReport::new(entries))
}

/// An integral point of the hive cone: a random integral point of the fan
/// chart, moved by `c ρ` with `ρ = (k-1, k-3, …, 1-k)` at every vertex.
/// Each unit of that move raises every rhombus slack by two, so `c` is half
/// the largest violation, rounded up.
pub fn random_hive_point<R: Rng>(k: usize, n: usize, rng: &mut R, range: i64) -> Result<HiveCoordinates> {
    let x = random_trop_point(fan_chart(k, n)?, rng, range, 1);
    let worst = hive_check(&x)?.entries.iter().map(|e| e.slack.clone()).min().unwrap_or_else(Rational::zero);
    if !worst.is_negative() {
        return Ok(x);
    }
    let c = Rational::from_integer((-worst / q(2, 1)).ceil().to_integer());
    let lam: Vec<Rational> = (0..k).map(|i| &c * q(k as i64 - 1 - 2 * i as i64, 1)).collect();
    act_h(&x, &CoweightVector::new(k, vec![lam; n])?)
}
