//! The distinguished lift of a tropical Plücker vector to hive coordinates.

use super::boundary::{boundary_from_frozen, BoundaryDistances};
use super::cone::{frozen_values, HiveCoordinates};
use super::reduce::reduce_to_plucker;
use crate::catalog::{confa_seed, FlagMonomialLabel, Label, PluckerLabel, Triangulation};
use crate::error::{Error, Result};
use crate::points::{fan_chart, PluckerVector, TropPoint};
use crate::semifield::Rational;
use std::sync::Arc;

/// Boundary distances forced by the frozen values of `y`.
pub fn boundary_of(y: &PluckerVector) -> Result<BoundaryDistances> {
    boundary_from_frozen(y.k(), &frozen_values(y))
}

fn lift_on(y: &PluckerVector, chart: Arc<crate::cluster::LabeledSeed>) -> Result<HiveCoordinates> {
    let a = boundary_of(y)?;
    let coords = chart
        .labels()
        .iter()
        .map(|l| {
            let m = l.as_flag().ok_or_else(|| Error::ChartMismatch(format!("opaque label {l}")))?;
            let (j, off) = reduce_to_plucker(m, &a)?;
            Ok(y.get(&j) + off)
        })
        .collect::<Result<Vec<_>>>()?;
    TropPoint::new(chart, coords)
}

/// The unique lift satisfying every key equation, on the fan chart at
/// vertex 1.
pub fn distinguished_lift(y: &PluckerVector) -> Result<HiveCoordinates> {
    lift_on(y, fan_chart(y.k(), y.n())?)
}

/// The same lift read on the chart of any triangulation.
pub fn distinguished_lift_on(y: &PluckerVector, t: &Triangulation) -> Result<HiveCoordinates> {
    lift_on(y, Arc::new(confa_seed(y.k(), t)?))
}

fn reverse_index(n: usize, i: usize) -> usize {
    n + 1 - i
}

/// Experimental second section: the distinguished lift of the reversed
/// configuration, read back in the original orientation, so that the
/// boundary distances run `d(x_{i+1}, x_i) = a_i ω₁`. Lives on the fan
/// chart at vertex `n`.
pub fn dual_lift(y: &PluckerVector) -> Result<HiveCoordinates> {
    let (k, n) = (y.k(), y.n());
    let rev = PluckerVector::try_from_fn(k, n, |j| {
        Ok(y.get(&PluckerLabel::new(n, j.elems().iter().map(|&i| reverse_index(n, i)))?).clone())
    })?;
    let a = boundary_of(&rev)?;
    let chart = Arc::new(confa_seed(k, &Triangulation::fan(n, n)?)?);
    let coords = chart
        .labels()
        .iter()
        .map(|l| {
            let m = l.as_flag().ok_or_else(|| Error::ChartMismatch(format!("opaque label {l}")))?;
            let mr = FlagMonomialLabel::new(n, m.exps().iter().map(|(&v, &e)| (reverse_index(n, v), e)))?;
            let (j, off) = reduce_to_plucker(&mr, &a)?;
            Ok::<Rational, Error>(rev.get(&j) + off)
        })
        .collect::<Result<Vec<_>>>()?;
    TropPoint::new(chart, coords)
}

/// Reads the value of `m` off hive coordinates, pure labels giving 0.
pub fn hive_value(h: &HiveCoordinates, m: &FlagMonomialLabel) -> Option<Rational> {
    if m.is_pure() {
        return Some(Rational::from_integer(0.into()));
    }
    h.get(&Label::Flag(m.clone())).cloned()
}
