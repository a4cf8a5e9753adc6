use super::{
    gr_chart, lift_to_series, lift_to_series_random, to_fan_chart, ConfAEvaluator, PluckerVector,
    TropPoint,
};
use crate::catalog::{pluecker_eval, FlagMonomialLabel, Label};
use crate::cluster::LabeledSeed;
use crate::error::{Error, Result};
use crate::semifield::{qi, Rational};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn chart_k(chart: &LabeledSeed) -> Result<usize> {
    chart
        .labels()
        .iter()
        .find_map(|l| match l {
            Label::Flag(m) => Some(m.k()),
            Label::Plucker(p) => Some(p.k()),
            Label::Opaque(_) => None,
        })
        .ok_or_else(|| Error::ChartMismatch(format!("cannot read k from {}", chart.chart_id())))
}

/// All tropical Plücker coordinates of a point on a Grassmannian chart,
/// through a monomial lift and an explicit matrix.
pub fn plucker_vector(y: &TropPoint) -> Result<PluckerVector> {
    plucker_vector_seeded(y, 0)
}

/// As [`plucker_vector`]; should a minor vanish, retries with random
/// leading coefficients drawn from `rng_seed`.
pub fn plucker_vector_seeded(y: &TropPoint, rng_seed: u64) -> Result<PluckerVector> {
    let k = chart_k(&y.chart)?;
    let n = y.chart.n();
    let base = gr_chart(k, n)?;
    let y = y.rebase(&base)?;
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    for attempt in 0..4 {
        let s = if attempt == 0 { lift_to_series(&y) } else { lift_to_series_random(&y, &mut rng) };
        let m = super::gr_matrix(&s, k)?;
        let out = PluckerVector::try_from_fn(k, n, |j| pluecker_eval(&m, j).neg_val());
        match out {
            Ok(v) => return Ok(v),
            Err(Error::IndeterminateValuation(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Unconverged(4))
}

/// Tropical Plücker coordinates of the first vectors of the flags.
pub fn pushforward_pi(x: &TropPoint) -> Result<PluckerVector> {
    let k = chart_k(&x.chart)?;
    let n = x.chart.n();
    let x = to_fan_chart(x, k)?;
    if k <= 4 {
        let ev = ConfAEvaluator::shared(k, n)?;
        let regs = ev.eval(&x.coords)?;
        PluckerVector::try_from_fn(k, n, |j| ev.value_of(&regs, &FlagMonomialLabel::from_plucker(j)))
    } else {
        pushforward_pi_series(&x)
    }
}

/// [`pushforward_pi`] through a monomial lift and explicit flags.
pub fn pushforward_pi_series(x: &TropPoint) -> Result<PluckerVector> {
    let k = chart_k(&x.chart)?;
    let n = x.chart.n();
    let x = to_fan_chart(x, k)?;
    let flags = super::flags_from_fan(&lift_to_series(&x), k)?;
    let m = flags.first_vectors();
    PluckerVector::try_from_fn(k, n, |j| pluecker_eval(&m, j).neg_val())
}

/// The pushforward restricted to the Grassmannian grid chart.
pub fn pushforward_pi_chart(x: &TropPoint) -> Result<TropPoint> {
    let y = pushforward_pi(x)?;
    let chart = gr_chart(y.k(), y.n())?;
    let coords = chart.labels().iter().map(|l| y.get(l.as_plucker().expect("Plücker chart")).clone()).collect();
    TropPoint::new(chart, coords)
}

/// Per-vertex coweights `lambda_v` in `Q^k`; only their classes modulo the
/// all-ones vector matter.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoweightVector {
    pub k: usize,
    pub lambdas: Vec<Vec<Rational>>,
}

impl CoweightVector {
    pub fn new(k: usize, lambdas: Vec<Vec<Rational>>) -> Result<Self> {
        if lambdas.iter().any(|l| l.len() != k) {
            return Err(Error::Malformed(format!("coweights must have {k} entries")));
        }
        Ok(CoweightVector { k, lambdas })
    }

    pub fn zero(k: usize, n: usize) -> Self {
        CoweightVector { k, lambdas: vec![vec![qi(0); k]; n] }
    }

    /// The scaling vector `(omega_1 . lambda_v)_v`.
    pub fn psi(&self) -> Vec<Rational> {
        self.lambdas.iter().map(|l| omega_pair(1, l)).collect()
    }
}

/// `omega_j . lambda = lambda_1 + ... + lambda_j - j (sum lambda) / k`.
pub fn omega_pair(j: usize, lambda: &[Rational]) -> Rational {
    let k = lambda.len() as i64;
    let total: Rational = lambda.iter().sum();
    let head: Rational = lambda[..j].iter().sum();
    head - total * qi(j as i64) / qi(k)
}

/// Torus action on flag configurations: the coordinate at `m` gains
/// `sum_v omega_{m(v)} . lambda_v`.
pub fn act_h(x: &TropPoint, lambda: &CoweightVector) -> Result<TropPoint> {
    if lambda.lambdas.len() != x.chart.n() {
        return Err(Error::InvalidParameters("one coweight per vertex required".into()));
    }
    let mut out = x.clone();
    for (i, l) in x.chart.labels().iter().enumerate() {
        let m = l.as_flag().ok_or_else(|| Error::ChartMismatch(format!("label {l} is not a flag function")))?;
        for (&v, &e) in m.exps() {
            out.coords[i] += omega_pair(e as usize, &lambda.lambdas[v - 1]);
        }
    }
    Ok(out)
}

/// Torus action on vector configurations: `P_J` gains `sum_{i in J} c_i`.
pub fn act_t(y: &PluckerVector, c: &[Rational]) -> PluckerVector {
    PluckerVector::from_fn(y.k(), y.n(), |j| y.get(j) + j.elems().iter().map(|&i| &c[i - 1]).sum::<Rational>())
}

/// [`act_t`] on a point of a Grassmannian chart.
pub fn act_t_point(y: &TropPoint, c: &[Rational]) -> Result<TropPoint> {
    let mut out = y.clone();
    for (i, l) in y.chart.labels().iter().enumerate() {
        let p = l.as_plucker().ok_or_else(|| Error::ChartMismatch(format!("label {l} is not a Plücker coordinate")))?;
        out.coords[i] += p.elems().iter().map(|&j| &c[j - 1]).sum::<Rational>();
    }
    Ok(out)
}
