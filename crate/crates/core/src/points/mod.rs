//! Tropical points in cluster charts: chart changes, monomial lifts to
//! positive series, the pushforward to tropical Plücker vectors and the
//! torus actions.

mod actions;
mod evaluator;
mod plucker;
mod reconstruct;

pub use actions::{
    act_h, act_t, act_t_point, omega_pair, plucker_vector, plucker_vector_seeded, pushforward_pi,
    pushforward_pi_chart, pushforward_pi_series, CoweightVector,
};
pub use evaluator::ConfAEvaluator;
pub use plucker::{plucker_rank, PluckerVector};
pub use reconstruct::{flags_from_fan, gr_matrix};

use crate::catalog::{confa_seed, grassmannian_seed, Label, Triangulation};
use crate::cluster::{apply_path, LabeledSeed, Mode, PointInChart};
use crate::error::{Error, Result};
use crate::semifield::{q, qi, rational_from_json, rational_to_json, PosSeries, Rational, TropNumber};
use rand::Rng;
use serde_json::{Map, Value};
use std::sync::Arc;

pub type SeriesPoint = PointInChart<PosSeries>;

/// Rational tropical coordinates in a chart.
#[derive(Clone, Debug, PartialEq)]
pub struct TropPoint {
    pub chart: Arc<LabeledSeed>,
    pub coords: Vec<Rational>,
}

impl TropPoint {
    pub fn new(chart: Arc<LabeledSeed>, coords: Vec<Rational>) -> Result<Self> {
        if coords.len() != chart.len() {
            return Err(Error::Malformed(format!("{} coordinates for a chart of size {}", coords.len(), chart.len())));
        }
        Ok(TropPoint { chart, coords })
    }

    pub fn zero(chart: Arc<LabeledSeed>) -> Self {
        let coords = vec![qi(0); chart.len()];
        TropPoint { chart, coords }
    }

    pub fn get(&self, l: &Label) -> Option<&Rational> {
        self.chart.index_of(l).map(|i| &self.coords[i])
    }

    pub fn to_semifield(&self) -> PointInChart<TropNumber> {
        PointInChart { chart: self.chart.clone(), coords: self.coords.iter().cloned().map(TropNumber::Val).collect() }
    }

    pub fn from_semifield(p: &PointInChart<TropNumber>) -> Result<Self> {
        let coords = p.coords.iter().map(|c| c.value().cloned()).collect::<Result<Vec<_>>>()?;
        Ok(TropPoint { chart: p.chart.clone(), coords })
    }

    /// Moves back along the chart's mutation path and attaches `base`,
    /// which must be the unmutated chart the path started from.
    pub fn rebase(&self, base: &Arc<LabeledSeed>) -> Result<TropPoint> {
        if self.chart.id() != base.id() || !base.path().is_empty() {
            return Err(Error::ChartMismatch(format!("{} is not based at {}", self.chart.chart_id(), base.chart_id())));
        }
        let back: Vec<usize> = self.chart.path().iter().rev().copied().collect();
        let p = change_chart(self, &back)?;
        Ok(TropPoint { chart: base.clone(), coords: p.coords })
    }

    /// `{"chart-id": ..., "coords": {label: [num, den]}}`.
    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        for (l, v) in self.chart.labels().iter().zip(&self.coords) {
            m.insert(l.to_string(), rational_to_json(v));
        }
        serde_json::json!({ "chart-id": self.chart.chart_id(), "coords": m })
    }

    /// Reads coordinates for the given chart; the chart id must match.
    pub fn from_json(v: &Value, chart: Arc<LabeledSeed>) -> Result<Self> {
        let id = v.get("chart-id").and_then(Value::as_str).ok_or_else(|| Error::Malformed("missing chart-id".into()))?;
        if id != chart.chart_id() {
            return Err(Error::ChartMismatch(format!("point is on {id}, chart is {}", chart.chart_id())));
        }
        let coords = v.get("coords").and_then(Value::as_object).ok_or_else(|| Error::Malformed("missing coords".into()))?;
        let mut out = vec![None; chart.len()];
        for (key, val) in coords {
            let l = Label::parse(key, chart.n())?;
            let i = chart.index_of(&l).ok_or_else(|| Error::LabelNotFound(key.clone()))?;
            out[i] = Some(rational_from_json(val).ok_or_else(|| Error::Malformed(format!("bad value at {key}")))?);
        }
        let coords = out
            .into_iter()
            .enumerate()
            .map(|(i, c)| c.ok_or_else(|| Error::Malformed(format!("missing coordinate {}", chart.label(i)))))
            .collect::<Result<Vec<_>>>()?;
        Ok(TropPoint { chart, coords })
    }
}

/// Tropical mutation along `path`.
pub fn change_chart(p: &TropPoint, path: &[usize]) -> Result<TropPoint> {
    TropPoint::from_semifield(&apply_path(&p.to_semifield(), path, Mode::A)?)
}

/// Each coordinate `f` becomes `t^(-f)` with leading coefficient 1.
pub fn lift_to_series(p: &TropPoint) -> SeriesPoint {
    let coords = p.coords.iter().map(|f| PosSeries::monomial(qi(1), &-f).expect("1 is positive")).collect();
    PointInChart { chart: p.chart.clone(), coords }
}

/// As [`lift_to_series`] with random leading coefficients in `[1/4, 4]`.
pub fn lift_to_series_random<R: Rng>(p: &TropPoint, rng: &mut R) -> SeriesPoint {
    let coords = p
        .coords
        .iter()
        .map(|f| {
            let c = q(rng.gen_range(1..=16), rng.gen_range(1..=4));
            PosSeries::monomial(c, &-f).expect("coefficient is positive")
        })
        .collect();
    PointInChart { chart: p.chart.clone(), coords }
}

/// Coordinatewise `-val`.
pub fn tropicalize(p: &SeriesPoint) -> TropPoint {
    TropPoint { chart: p.chart.clone(), coords: p.coords.iter().map(|s| s.neg_val()).collect() }
}

/// Uniform random coordinates in `[-range, range]` with denominator `den`.
pub fn random_trop_point<R: Rng>(chart: Arc<LabeledSeed>, rng: &mut R, range: i64, den: i64) -> TropPoint {
    let coords = (0..chart.len()).map(|_| q(rng.gen_range(-range * den..=range * den), den)).collect();
    TropPoint { chart, coords }
}

/// Parses the triangulation out of a flag-configuration chart id.
pub fn chart_triangulation(chart: &LabeledSeed) -> Option<Triangulation> {
    let inner = chart.id().strip_prefix("confA(")?.strip_suffix(')')?;
    let (_, tris) = inner.split_once(';')?;
    let mut out = Vec::new();
    for t in tris.split('.') {
        let v: Vec<usize> = t.split(',').filter_map(|x| x.parse().ok()).collect();
        out.push([*v.first()?, *v.get(1)?, *v.get(2)?]);
    }
    Triangulation::new(chart.n(), out).ok()
}

/// Flag-configuration chart for the fan at vertex 1, shared.
pub fn fan_chart(k: usize, n: usize) -> Result<Arc<LabeledSeed>> {
    Ok(Arc::new(confa_seed(k, &Triangulation::fan(n, 1)?)?))
}

pub fn gr_chart(k: usize, n: usize) -> Result<Arc<LabeledSeed>> {
    Ok(Arc::new(grassmannian_seed(k, n)?))
}

/// Moves a point on any triangulation chart (possibly mutated) onto the
/// fan chart at vertex 1.
pub fn to_fan_chart(x: &TropPoint, k: usize) -> Result<TropPoint> {
    let t = chart_triangulation(&x.chart).ok_or_else(|| Error::ChartMismatch(x.chart.id().to_string()))?;
    let base = Arc::new(confa_seed(k, &t)?);
    let x = x.rebase(&base)?;
    let fan = Triangulation::fan(t.n(), 1)?;
    if t == fan {
        return Ok(x);
    }
    let change = crate::catalog::chart_change(k, &t, &fan)?;
    let moved = change_chart(&x, &change.path)?;
    let target = Arc::new(confa_seed(k, &fan)?);
    let perm = change.permutation(&target)?;
    let mut coords = vec![qi(0); target.len()];
    for (i, &j) in perm.iter().enumerate() {
        coords[j] = moved.coords[i].clone();
    }
    TropPoint::new(target, coords)
}
