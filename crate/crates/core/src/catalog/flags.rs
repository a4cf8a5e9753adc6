use super::labels::{FlagMonomialLabel, PluckerLabel};
use crate::error::{Error, Result};
use crate::linalg::{det_columns, Ring};
use crate::semifield::{qi, Rational};
use num_traits::Zero;
use rand::Rng;

/// n principal flags in k-space, each given by an ordered frame; the
/// m-th step of flag i is spanned by its first m frame vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct FlagConfig<F> {
    k: usize,
    flags: Vec<Vec<Vec<F>>>,
}

impl<F: Ring> FlagConfig<F> {
    pub fn new(k: usize, flags: Vec<Vec<Vec<F>>>) -> Result<Self> {
        if flags.iter().any(|f| f.len() != k || f.iter().any(|v| v.len() != k)) {
            return Err(Error::Malformed(format!("every frame needs {k} vectors of length {k}")));
        }
        Ok(FlagConfig { k, flags })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.flags.len()
    }

    /// Frame of flag `i` (1-based).
    pub fn frame(&self, i: usize) -> &[Vec<F>] {
        &self.flags[i - 1]
    }

    pub fn frames(&self) -> &[Vec<Vec<F>>] {
        &self.flags
    }

    pub fn frame_det(&self, i: usize) -> F {
        let cols: Vec<&[F]> = self.frame(i).iter().map(|v| v.as_slice()).collect();
        det_columns(&cols)
    }

    /// The `k x n` matrix whose columns are the first frame vectors.
    pub fn first_vectors(&self) -> Vec<Vec<F>> {
        (0..self.k).map(|r| self.flags.iter().map(|f| f[0][r].clone()).collect()).collect()
    }
}

/// Determinant of the concatenated initial frame segments, vertices in
/// increasing order.
pub fn f_eval<F: Ring>(c: &FlagConfig<F>, m: &FlagMonomialLabel) -> Result<F> {
    if m.k() != c.k() || m.n() != c.n() {
        return Err(Error::InvalidParameters(format!("label {m} does not fit k={}, n={}", c.k(), c.n())));
    }
    let mut cols: Vec<&[F]> = Vec::with_capacity(c.k());
    for (&v, &e) in m.exps() {
        cols.extend(c.frame(v)[..e as usize].iter().map(|x| x.as_slice()));
    }
    Ok(det_columns(&cols))
}

/// Minor of the row-major `k x n` matrix on the columns of `j`.
pub fn pluecker_eval<F: Ring>(m: &[Vec<F>], j: &PluckerLabel) -> F {
    let cols: Vec<Vec<F>> = j.elems().iter().map(|&c| m.iter().map(|row| row[c - 1].clone()).collect()).collect();
    let refs: Vec<&[F]> = cols.iter().map(|c| c.as_slice()).collect();
    det_columns(&refs)
}

/// `s_G = (-1)^(k-1)`.
pub fn twist_sign(k: usize) -> i64 {
    if k % 2 == 1 {
        1
    } else {
        -1
    }
}

fn signed<F: Ring>(x: &F, s: i64) -> F {
    if s == 1 {
        x.clone()
    } else {
        F::zero().sub(x)
    }
}

/// Twisted cyclic shift of columns: `(v_1, ..., v_n) -> (v_2, ..., v_n, s_G v_1)`.
/// Satisfies `P_{J-1}(rho M) = P_J(M)`.
pub fn rho_matrix<F: Ring>(m: &[Vec<F>]) -> Vec<Vec<F>> {
    let s = twist_sign(m.len());
    m.iter()
        .map(|row| {
            let mut r: Vec<F> = row[1..].to_vec();
            r.push(signed(&row[0], s));
            r
        })
        .collect()
}

/// Twisted cyclic shift of flags: `(F_1, ..., F_n) -> (F_2, ..., F_n, s_G F_1)`.
pub fn tau_flags<F: Ring>(c: &FlagConfig<F>) -> FlagConfig<F> {
    let s = twist_sign(c.k());
    let mut flags: Vec<Vec<Vec<F>>> = c.flags[1..].to_vec();
    flags.push(c.flags[0].iter().map(|v| v.iter().map(|x| signed(x, s)).collect()).collect());
    FlagConfig { k: c.k, flags }
}

/// Flags `F_{2i-1} = (v_i1, ..., v_ik)` and `F_{2i} = (v_ik, ..., v_i1)` from
/// n blocks of k vectors with unit determinant. The reversed frames have
/// determinant `(-1)^(k(k-1)/2)`.
pub fn vectors_to_flags<F: Ring>(blocks: &[Vec<Vec<F>>]) -> Result<FlagConfig<F>> {
    let k = blocks.first().map(|b| b.len()).unwrap_or(0);
    let mut flags = Vec::with_capacity(2 * blocks.len());
    for (i, b) in blocks.iter().enumerate() {
        let cols: Vec<&[F]> = b.iter().map(|v| v.as_slice()).collect();
        if b.len() != k || !det_columns(&cols).sub(&F::one()).is_zero() {
            return Err(Error::Singular(format!("block {} is not unimodular", i + 1)));
        }
        flags.push(b.clone());
        flags.push(b.iter().rev().cloned().collect());
    }
    FlagConfig::new(k, flags)
}

/// Random rational frames with small integer entries and unit determinant.
pub fn random_flag_config<R: Rng>(rng: &mut R, k: usize, n: usize) -> FlagConfig<Rational> {
    let mut flags = Vec::with_capacity(n);
    while flags.len() < n {
        let mut frame: Vec<Vec<Rational>> =
            (0..k).map(|_| (0..k).map(|_| qi(rng.gen_range(-5..=5))).collect()).collect();
        let cols: Vec<&[Rational]> = frame.iter().map(|v| v.as_slice()).collect();
        let d = det_columns(&cols);
        if Zero::is_zero(&d) {
            continue;
        }
        for x in frame[k - 1].iter_mut() {
            *x = &*x / &d;
        }
        flags.push(frame);
    }
    FlagConfig { k, flags }
}

/// Random `k x n` rational matrix with small integer entries.
pub fn random_matrix<R: Rng>(rng: &mut R, k: usize, n: usize) -> Vec<Vec<Rational>> {
    (0..k).map(|_| (0..n).map(|_| qi(rng.gen_range(-5..=5))).collect()).collect()
}
