//! Determinants over commutative rings without division.
//!
//! Series entries make pivoting by division lossy, so determinants are
//! expanded over column subsets (row by row), which needs only ring
//! operations and costs `O(2^k k)` products.

use crate::semifield::{GenSeries, Rational};
use num_traits::{One, Zero};
use std::collections::HashMap;

pub trait Ring: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn is_zero(&self) -> bool;
}

impl Ring for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

impl Ring for GenSeries {
    fn zero() -> Self {
        GenSeries::zero()
    }
    fn one() -> Self {
        GenSeries::one()
    }
    fn add(&self, o: &Self) -> Self {
        GenSeries::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        GenSeries::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        GenSeries::mul(self, o)
    }
    fn is_zero(&self) -> bool {
        GenSeries::is_zero(self)
    }
}

/// Determinant of the square matrix whose columns are `cols`.
pub fn det_columns<R: Ring>(cols: &[&[R]]) -> R {
    let m = cols.len();
    if m == 0 {
        return R::one();
    }
    assert!(cols.iter().all(|c| c.len() == m), "matrix is not square");
    // minors[S] = det of rows 0..|S| restricted to column set S
    let mut minors: HashMap<u32, R> = HashMap::new();
    minors.insert(0, R::one());
    for row in 0..m {
        let mut next: HashMap<u32, R> = HashMap::new();
        for (mask, val) in &minors {
            if val.is_zero() {
                continue;
            }
            // expanding along the new row: sign from columns of S after j
            for j in 0..m {
                if mask & (1 << j) != 0 {
                    continue;
                }
                let entry = &cols[j][row];
                if entry.is_zero() {
                    continue;
                }
                let after = (mask >> (j + 1)).count_ones();
                let term = val.mul(entry);
                let slot = next.entry(mask | (1 << j)).or_insert_with(R::zero);
                *slot = if after % 2 == 0 { slot.add(&term) } else { slot.sub(&term) };
            }
        }
        minors = next;
    }
    minors.remove(&((1u32 << m) - 1)).unwrap_or_else(R::zero)
}

/// Determinant of a row-major square matrix.
pub fn det<R: Ring>(rows: &[Vec<R>]) -> R {
    let m = rows.len();
    let cols: Vec<Vec<R>> = (0..m).map(|j| rows.iter().map(|r| r[j].clone()).collect()).collect();
    let refs: Vec<&[R]> = cols.iter().map(|c| c.as_slice()).collect();
    det_columns(&refs)
}

/// Exact solve of a square rational system by Gaussian elimination.
pub fn solve_rational(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !Zero::is_zero(&m[r][col]))?;
        m.swap(col, piv);
        let p = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x = &*x / &p;
        }
        for r in 0..n {
            if r != col && !Zero::is_zero(&m[r][col]) {
                let f = m[r][col].clone();
                for c in col..=n {
                    let v = &m[col][c] * &f;
                    m[r][c] -= v;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n].clone()).collect())
}
