//! Explicit matrices and flags realizing given chart coordinates.
//!
//! Each unknown entry enters one chart function linearly with a coefficient
//! that is, up to sign, another chart function. On monomial lifts those are
//! monomials, so every division is exact.

use super::SeriesPoint;
use crate::catalog::{FlagConfig, FlagMonomialLabel, Label, PluckerLabel};
use crate::error::{Error, Result};
use crate::linalg::det_columns;
use crate::semifield::GenSeries;

fn value(p: &SeriesPoint, l: &Label) -> Result<GenSeries> {
    p.get(l).map(|s| s.as_gen().clone()).ok_or_else(|| Error::LabelNotFound(l.to_string()))
}

/// Solves `f(x) = target` for `f` affine in `x`.
fn solve_affine(target: &GenSeries, f: impl Fn(&GenSeries) -> GenSeries) -> Result<GenSeries> {
    let beta = f(&GenSeries::zero());
    let alpha = f(&GenSeries::one()).sub(&beta);
    if alpha.is_zero() {
        return Err(Error::Singular("degenerate chart: a cofactor vanishes".into()));
    }
    target.sub(&beta).div(&alpha)
}

fn cols_det(cols: &[&Vec<GenSeries>]) -> GenSeries {
    let refs: Vec<&[GenSeries]> = cols.iter().map(|c| c.as_slice()).collect();
    det_columns(&refs)
}

/// A `k x n` series matrix whose Plücker coordinates at the labels of the
/// Grassmannian grid seed are the given values. The point must be on the
/// unmutated grid chart.
pub fn gr_matrix(p: &SeriesPoint, k: usize) -> Result<Vec<Vec<GenSeries>>> {
    let n = p.chart.n();
    let lab = |s: Vec<usize>| -> Result<Label> { Ok(Label::Plucker(PluckerLabel::new(n, s)?)) };
    let lambda = value(p, &lab((1..=k).collect())?)?;
    // columns as vectors; A = [I | M]
    let mut cols: Vec<Vec<GenSeries>> = (0..n)
        .map(|c| (0..k).map(|r| if c < k && r == c { GenSeries::one() } else { GenSeries::zero() }).collect())
        .collect();
    for c in k + 1..=n {
        for b in 1..=k {
            let a = k - b;
            let i = c + 1 - b;
            let set: Vec<usize> = (1..=a).chain(i..=c).collect();
            let target = value(p, &lab(set.clone())?)?.div(&lambda)?;
            let row = k - b;
            let x = {
                let cols_ref = &cols;
                solve_affine(&target, |x| {
                    let mut col = cols_ref[c - 1].clone();
                    col[row] = x.clone();
                    let picked: Vec<&Vec<GenSeries>> =
                        set.iter().map(|&s| if s == c { &col } else { &cols_ref[s - 1] }).collect();
                    cols_det(&picked)
                })?
            };
            cols[c - 1][row] = x;
        }
    }
    let mut rows: Vec<Vec<GenSeries>> = (0..k).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
    for x in rows[0].iter_mut() {
        *x = x.mul(&lambda);
    }
    Ok(rows)
}

/// Flags realizing the coordinates of a point on the unmutated chart of the
/// fan triangulation at vertex 1. `F_1` is the standard frame.
pub fn flags_from_fan(p: &SeriesPoint, k: usize) -> Result<FlagConfig<GenSeries>> {
    let n = p.chart.n();
    let fval = |exps: &[(usize, usize)]| -> Result<GenSeries> {
        let m = FlagMonomialLabel::new(n, exps.iter().map(|&(v, e)| (v, e as u32)))?;
        if m.is_pure() {
            Ok(GenSeries::one())
        } else {
            value(p, &Label::Flag(m))
        }
    };
    let unit = |r: usize| -> Vec<GenSeries> {
        (0..k).map(|i| if i == r { GenSeries::one() } else { GenSeries::zero() }).collect()
    };
    let f1: Vec<Vec<GenSeries>> = (0..k).map(unit).collect();
    // F_2: w_c = x_c e_{k-c+1}, fixed by the edge values 1^{k-c} 2^c
    let mut f2: Vec<Vec<GenSeries>> = Vec::with_capacity(k);
    for c in 1..=k {
        let target = fval(&[(1, k - c), (2, c)])?;
        let row = k - c;
        let x = solve_affine(&target, |x| {
            let mut w = vec![GenSeries::zero(); k];
            w[row] = x.clone();
            let mut picked: Vec<&Vec<GenSeries>> = f1[..k - c].iter().collect();
            picked.extend(f2.iter());
            picked.push(&w);
            cols_det(&picked)
        })?;
        let mut w = vec![GenSeries::zero(); k];
        w[row] = x;
        f2.push(w);
    }
    let mut frames = vec![f1, f2];
    for j in 2..n {
        let fj = frames[j - 1].clone();
        let f1 = &frames[0];
        let mut next: Vec<Vec<GenSeries>> = Vec::with_capacity(k);
        for c in 1..=k {
            // gauge: rows below k - c + 1 vanish
            let mut w = vec![GenSeries::zero(); k];
            for a in (0..=k - c).rev() {
                let b = k - a - c;
                let target = fval(&[(1, a), (j, b), (j + 1, c)])?;
                let x = solve_affine(&target, |x| {
                    let mut w2 = w.clone();
                    w2[a] = x.clone();
                    let mut picked: Vec<&Vec<GenSeries>> = f1[..a].iter().collect();
                    picked.extend(fj[..b].iter());
                    picked.extend(next.iter());
                    picked.push(&w2);
                    cols_det(&picked)
                })?;
                w[a] = x;
            }
            next.push(w);
        }
        frames.push(next);
    }
    FlagConfig::new(k, frames)
}
