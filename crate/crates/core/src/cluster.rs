//! Seeds, mutation of exchange matrices and of A- and X-coordinates in any
//! semifield, and the p-map from A- to X-coordinates.
//!
//! Convention: `b[i][j] > 0` means `b[i][j]` arrows from `j` to `i`.

use crate::catalog::labels::Label;
use crate::error::{Error, Result};
use crate::semifield::{pair_mat, q, qi, to_i64, PosSeries, Rational, Semifield};
use num_traits::{Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::sync::Arc;

/// Index set `0..len`, frozen subset, exchange matrix and symmetrizer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Seed {
    frozen: Vec<bool>,
    b: Vec<Vec<Rational>>,
    d: Vec<u32>,
}

impl Seed {
    pub fn new(b: Vec<Vec<Rational>>, frozen: Vec<bool>, d: Vec<u32>) -> Result<Self> {
        let seed = Seed { frozen, b, d };
        seed.validate()?;
        Ok(seed)
    }

    /// Checks skew-symmetrizability and integrality off the frozen block.
    pub fn validate(&self) -> Result<()> {
        let n = self.b.len();
        if self.frozen.len() != n || self.d.len() != n || self.b.iter().any(|r| r.len() != n) {
            return Err(Error::Malformed("seed dimensions disagree".into()));
        }
        if self.d.contains(&0) {
            return Err(Error::Malformed("symmetrizer must be positive".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = &self.b[i][j] * qi(self.d[j] as i64);
                let rhs = -(&self.b[j][i] * qi(self.d[i] as i64));
                if lhs != rhs {
                    return Err(Error::Malformed(format!("b[{i}][{j}] d[{j}] != -b[{j}][{i}] d[{i}]")));
                }
                if !(self.frozen[i] && self.frozen[j]) && !self.b[i][j].is_integer() {
                    return Err(Error::NonIntegralExponent(i, j));
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.b.len()
    }

    pub fn is_empty(&self) -> bool {
        self.b.is_empty()
    }

    pub fn is_frozen(&self, i: usize) -> bool {
        self.frozen[i]
    }

    pub fn frozen(&self) -> &[bool] {
        &self.frozen
    }

    pub fn mutable_indices(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| !self.frozen[i]).collect()
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.b
    }

    pub fn symmetrizer(&self) -> &[u32] {
        &self.d
    }

    pub fn b(&self, i: usize, j: usize) -> &Rational {
        &self.b[i][j]
    }

    /// `b[i][j]` as an integer exponent.
    pub fn b_int(&self, i: usize, j: usize) -> Result<i64> {
        to_i64(&self.b[i][j]).ok_or(Error::NonIntegralExponent(i, j))
    }

    pub fn mutate(&self, k: usize) -> Result<Seed> {
        Ok(Seed { frozen: self.frozen.clone(), b: mutate_matrix(&self.b, &self.frozen, k)?, d: self.d.clone() })
    }
}

/// Matrix mutation at the unfrozen index `k`.
pub fn mutate_matrix(b: &[Vec<Rational>], frozen: &[bool], k: usize) -> Result<Vec<Vec<Rational>>> {
    let n = b.len();
    if k >= n {
        return Err(Error::IndexOutOfRange(k));
    }
    if frozen[k] {
        return Err(Error::FrozenIndex(k));
    }
    let half = q(1, 2);
    let mut out = b.to_vec();
    for i in 0..n {
        for j in 0..n {
            if i == k || j == k {
                out[i][j] = -&b[i][j];
            } else if !b[i][k].is_zero() && !b[k][j].is_zero() {
                let corr = (b[i][k].abs() * &b[k][j] + &b[i][k] * b[k][j].abs()) * &half;
                out[i][j] = &b[i][j] + corr;
            }
        }
    }
    Ok(out)
}

/// A seed whose vertices carry the functions sitting at them, plus the
/// mutation path taken from the chart it was built as.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledSeed {
    id: String,
    n: usize,
    seed: Seed,
    labels: Vec<Label>,
    path: Vec<usize>,
    index: HashMap<Label, usize>,
}

impl LabeledSeed {
    /// `n` is the number of columns or marked points the labels refer to.
    pub fn new(id: impl Into<String>, n: usize, seed: Seed, labels: Vec<Label>) -> Result<Self> {
        Self::with_path(id, n, seed, labels, Vec::new())
    }

    fn with_path(id: impl Into<String>, n: usize, seed: Seed, labels: Vec<Label>, path: Vec<usize>) -> Result<Self> {
        if labels.len() != seed.len() {
            return Err(Error::Malformed("one label per index required".into()));
        }
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::Malformed(format!("duplicate label {l}")));
            }
        }
        Ok(LabeledSeed { id: id.into(), n, seed, labels, path, index })
    }

    /// Identifier of the base chart; the mutation path is tracked separately.
    pub fn id(&self) -> &str {
        &self.id
    }

    /// Identifier including the mutation path, e.g. `gr(2,4)/mu[0]`.
    pub fn chart_id(&self) -> String {
        if self.path.is_empty() {
            self.id.clone()
        } else {
            let p: Vec<String> = self.path.iter().map(|i| i.to_string()).collect();
            format!("{}/mu[{}]", self.id, p.join(","))
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn seed(&self) -> &Seed {
        &self.seed
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &Label {
        &self.labels[i]
    }

    pub fn path(&self) -> &[usize] {
        &self.path
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn index_of(&self, l: &Label) -> Option<usize> {
        self.index.get(l).copied()
    }

    /// Mutation at `k`; the new function at `k` gets an opaque label.
    pub fn mutate(&self, k: usize) -> Result<LabeledSeed> {
        let seed = self.seed.mutate(k)?;
        let mut labels = self.labels.clone();
        labels[k] = Label::Opaque(format!("mu{}[{}]", self.path.len() + 1, self.labels[k]));
        let mut path = self.path.clone();
        path.push(k);
        Self::with_path(self.id.clone(), self.n, seed, labels, path)
    }

    pub fn apply_path(&self, path: &[usize]) -> Result<LabeledSeed> {
        let mut s = self.clone();
        for &k in path {
            s = s.mutate(k)?;
        }
        Ok(s)
    }

    /// Replaces labels, keeping the quiver. Used after certifying by
    /// evaluation that mutated vertices carry known functions.
    pub fn relabeled(&self, id: impl Into<String>, labels: Vec<Label>) -> Result<LabeledSeed> {
        Self::with_path(id, self.n, self.seed.clone(), labels, Vec::new())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(SeedJson::from(self)).expect("seed JSON is always serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let j: SeedJson = serde_json::from_value(v.clone()).map_err(|e| Error::Malformed(e.to_string()))?;
        let len = j.indices.len();
        if j.indices != (0..len).collect::<Vec<_>>() {
            return Err(Error::Malformed("indices must be 0..len".into()));
        }
        let mut frozen = vec![false; len];
        for &f in &j.frozen {
            *frozen.get_mut(f).ok_or(Error::IndexOutOfRange(f))? = true;
        }
        let seed = Seed::new(j.b, frozen, j.d)?;
        let labels = j.labels.iter().map(|s| Label::parse(s, j.n)).collect::<Result<Vec<_>>>()?;
        Self::with_path(j.id, j.n, seed, labels, j.path)
    }
}

#[derive(Serialize, Deserialize)]
struct SeedJson {
    id: String,
    n: usize,
    indices: Vec<usize>,
    frozen: Vec<usize>,
    #[serde(rename = "B", with = "pair_mat")]
    b: Vec<Vec<Rational>>,
    d: Vec<u32>,
    labels: Vec<String>,
    #[serde(default)]
    path: Vec<usize>,
}

impl From<&LabeledSeed> for SeedJson {
    fn from(s: &LabeledSeed) -> Self {
        SeedJson {
            id: s.id.clone(),
            n: s.n,
            indices: (0..s.len()).collect(),
            frozen: (0..s.len()).filter(|&i| s.seed.is_frozen(i)).collect(),
            b: s.seed.b.clone(),
            d: s.seed.d.clone(),
            labels: s.labels.iter().map(|l| l.to_string()).collect(),
            path: s.path.clone(),
        }
    }
}

/// Coordinates of a point in the chart of a labeled seed.
#[derive(Clone, Debug, PartialEq)]
pub struct PointInChart<S> {
    pub chart: Arc<LabeledSeed>,
    pub coords: Vec<S>,
}

/// Which transformation rule to use along a path.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    A,
    X,
}

impl<S: Semifield> PointInChart<S> {
    pub fn new(chart: Arc<LabeledSeed>, coords: Vec<S>) -> Result<Self> {
        if coords.len() != chart.len() {
            return Err(Error::Malformed(format!("{} coordinates for a chart of size {}", coords.len(), chart.len())));
        }
        Ok(PointInChart { chart, coords })
    }

    pub fn get(&self, l: &Label) -> Option<&S> {
        self.chart.index_of(l).map(|i| &self.coords[i])
    }
}

fn check_mutable(seed: &Seed, k: usize) -> Result<()> {
    if k >= seed.len() {
        return Err(Error::IndexOutOfRange(k));
    }
    if seed.is_frozen(k) {
        return Err(Error::FrozenIndex(k));
    }
    Ok(())
}

/// A-coordinate mutation: `A_k' = (prod_{b_kj>0} A_j^b_kj + prod_{b_kj<0} A_j^-b_kj) / A_k`.
pub fn mutate_a<S: Semifield>(p: &PointInChart<S>, k: usize) -> Result<PointInChart<S>> {
    mutate_a_with(p, k, |a, b| a.div(b))
}

/// [`mutate_a`] on series, dividing with `rel` grid units of relative
/// precision.
pub fn mutate_a_series(p: &PointInChart<PosSeries>, k: usize, rel: i64) -> Result<PointInChart<PosSeries>> {
    mutate_a_with(p, k, |a, b| PosSeries::new(a.as_gen().div_with_precision(b.as_gen(), rel)?))
}

fn mutate_a_with<S: Semifield>(
    p: &PointInChart<S>,
    k: usize,
    div: impl Fn(&S, &S) -> Result<S>,
) -> Result<PointInChart<S>> {
    let seed = p.chart.seed();
    check_mutable(seed, k)?;
    let mut pos = S::one();
    let mut neg = S::one();
    for j in 0..seed.len() {
        let e = seed.b_int(k, j)?;
        if e > 0 {
            pos = pos.times(&p.coords[j].pow(e)?)?;
        } else if e < 0 {
            neg = neg.times(&p.coords[j].pow(-e)?)?;
        }
    }
    let mut coords = p.coords.clone();
    coords[k] = div(&pos.plus(&neg)?, &p.coords[k])?;
    Ok(PointInChart { chart: Arc::new(p.chart.mutate(k)?), coords })
}

/// X-coordinate mutation: `X_k' = 1/X_k`, `X_i' = X_i X_k^[b_ik]_+ (1 + X_k)^-b_ik`.
pub fn mutate_x<S: Semifield>(p: &PointInChart<S>, k: usize) -> Result<PointInChart<S>> {
    let seed = p.chart.seed();
    check_mutable(seed, k)?;
    let xk = &p.coords[k];
    let one_plus = S::one().plus(xk)?;
    let mut coords = p.coords.clone();
    for (i, c) in coords.iter_mut().enumerate() {
        if i == k {
            *c = S::one().div(xk)?;
            continue;
        }
        let e = seed.b_int(i, k)?;
        if e != 0 {
            let mut v = c.times(&one_plus.pow(-e)?)?;
            if e > 0 {
                v = v.times(&xk.pow(e)?)?;
            }
            *c = v;
        }
    }
    Ok(PointInChart { chart: Arc::new(p.chart.mutate(k)?), coords })
}

/// `X_i = prod_j A_j^b_ij`, for every index of the chart.
pub fn p_map<S: Semifield>(p: &PointInChart<S>) -> Result<PointInChart<S>> {
    let seed = p.chart.seed();
    let mut coords = Vec::with_capacity(seed.len());
    for i in 0..seed.len() {
        let mut x = S::one();
        for j in 0..seed.len() {
            let e = seed.b_int(i, j)?;
            if e != 0 {
                x = x.times(&p.coords[j].pow(e)?)?;
            }
        }
        coords.push(x);
    }
    Ok(PointInChart { chart: p.chart.clone(), coords })
}

/// Left-to-right composition of mutations.
pub fn apply_path<S: Semifield>(p: &PointInChart<S>, path: &[usize], mode: Mode) -> Result<PointInChart<S>> {
    let mut cur = p.clone();
    for &k in path {
        cur = match mode {
            Mode::A => mutate_a(&cur, k)?,
            Mode::X => mutate_x(&cur, k)?,
        };
    }
    Ok(cur)
}

/// A random skew-symmetrizable seed with symmetrizer entries in `{1, 2}`
/// and integer entries bounded by `2 * max_entry`.
pub fn random_seed<R: Rng>(rng: &mut R, rank: usize, frozen: usize, max_entry: i64) -> Seed {
    let d: Vec<u32> = (0..rank).map(|_| rng.gen_range(1..=2)).collect();
    let mut b = vec![vec![Rational::zero(); rank]; rank];
    for i in 0..rank {
        for j in i + 1..rank {
            let s = rng.gen_range(-max_entry..=max_entry);
            // b_ij = s d_i, b_ji = -s d_j
            b[i][j] = qi(s * d[i] as i64);
            b[j][i] = qi(-s * d[j] as i64);
        }
    }
    let frozen_flags = (0..rank).map(|i| i >= rank - frozen.min(rank)).collect();
    Seed::new(b, frozen_flags, d).expect("construction is skew-symmetrizable")
}

/// Labels `x0, x1, ...` for an unlabeled seed.
pub fn opaque_labels(len: usize) -> Vec<Label> {
    (0..len).map(|i| Label::Opaque(format!("x{i}"))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semifield::{PosRational, TropNumber};

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| qi(x)).collect()).collect()
    }

    #[test]
    fn rank_two_sign_flip() {
        let b = mat(&[&[0, 1], &[-1, 0]]);
        let m = mutate_matrix(&b, &[false, false], 0).unwrap();
        assert_eq!(m[0][1], qi(-1));
    }

    #[test]
    fn path_of_length_two_composes_arrows() {
        let b = mat(&[&[0, 1, 0], &[-1, 0, 1], &[0, -1, 0]]);
        let m = mutate_matrix(&b, &[false; 3], 1).unwrap();
        assert_eq!(m[0][2], qi(1));
        assert_eq!(m[2][0], qi(-1));
        assert_eq!(m[0][1], qi(-1));
        assert_eq!(m[1][2], qi(-1));
    }

    #[test]
    fn frozen_mutation_rejected() {
        let b = mat(&[&[0, 1], &[-1, 0]]);
        assert_eq!(mutate_matrix(&b, &[true, false], 0), Err(Error::FrozenIndex(0)));
    }

    fn gr24_like() -> Arc<LabeledSeed> {
        // vertex 0 mutable; in-arrows from 1, 3, out-arrows to 2, 4
        let b = mat(&[
            &[0, 1, -1, 1, -1],
            &[-1, 0, 0, 0, 0],
            &[1, 0, 0, 0, 0],
            &[-1, 0, 0, 0, 0],
            &[1, 0, 0, 0, 0],
        ]);
        let seed = Seed::new(b, vec![false, true, true, true, true], vec![1; 5]).unwrap();
        Arc::new(LabeledSeed::new("test", 4, seed, opaque_labels(5)).unwrap())
    }

    #[test]
    fn exchange_relation_in_rationals() {
        // P13 = 2, P12 = 1, P23 = 1, P34 = 1, P14 = 3
        let vals = [2, 1, 1, 1, 3].map(|x| PosRational::new(qi(x)).unwrap()).to_vec();
        let p = PointInChart::new(gr24_like(), vals).unwrap();
        let m = mutate_a(&p, 0).unwrap();
        assert_eq!(m.coords[0].value(), &qi(2));
    }

    #[test]
    fn tropical_exchange_with_zero_coords() {
        let vals = vec![TropNumber::Val(qi(0)); 5];
        let p = PointInChart::new(gr24_like(), vals).unwrap();
        let m = mutate_a(&p, 0).unwrap();
        assert_eq!(m.coords[0], TropNumber::Val(qi(0)));
    }

    #[test]
    fn x_mutation_rational_example() {
        let b = mat(&[&[0, 1], &[-1, 0]]);
        let seed = Seed::new(b, vec![false, false], vec![1, 1]).unwrap();
        let chart = Arc::new(LabeledSeed::new("t", 2, seed, opaque_labels(2)).unwrap());
        let p = PointInChart::new(chart, vec![qi(2), qi(3)]).unwrap();
        let m = mutate_x(&p, 1).unwrap();
        assert_eq!(m.coords[0], q(3, 2));
        assert_eq!(m.coords[1], q(1, 3));
        let back = mutate_x(&m, 1).unwrap();
        assert_eq!(back.coords, p.coords);
    }

    #[test]
    fn p_map_of_ones_is_ones() {
        let p = PointInChart::new(gr24_like(), vec![qi(1); 5]).unwrap();
        assert!(p_map(&p).unwrap().coords.iter().all(|x| *x == qi(1)));
    }

    #[test]
    fn seed_json_round_trip() {
        let s = gr24_like().mutate(0).unwrap();
        let back = LabeledSeed::from_json(&s.to_json()).unwrap();
        assert_eq!(back, s);
    }

    #[test]
    fn random_seeds_are_valid() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let s = random_seed(&mut rng, 6, 2, 2);
            s.validate().unwrap();
            let m = s.mutate(0).unwrap();
            m.validate().unwrap();
            assert_eq!(m.mutate(0).unwrap(), s);
        }
    }
}
