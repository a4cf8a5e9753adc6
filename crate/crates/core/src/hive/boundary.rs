//! Boundary distances `a_i` (with `d(x_{i-1}, x_i) = a_i ω₁`) and the
//! frozen values they force.

use crate::error::{Error, Result};
use crate::linalg::solve_rational;
use crate::semifield::{q, Rational};
use num_traits::Zero;

/// `a_i` stored at index `i - 1`, indices mod `n`.
pub type BoundaryDistances = Vec<Rational>;

fn coefficient_rows(k: usize, n: usize) -> Vec<Vec<Rational>> {
    (0..n)
        .map(|i| {
            let mut row = vec![Rational::zero(); n];
            for j in 1..k {
                row[(i + j) % n] += q(j as i64, k as i64);
            }
            row
        })
        .collect()
}

/// `F_i = Σ_{j=1}^{k-1} j a_{i+j} / k`.
pub fn frozen_from_boundary(k: usize, a: &[Rational]) -> Vec<Rational> {
    coefficient_rows(k, a.len())
        .iter()
        .map(|row| row.iter().zip(a).map(|(c, x)| c * x).sum())
        .collect()
}

/// Inverse of [`frozen_from_boundary`]; needs `2 <= k < n`.
pub fn boundary_from_frozen(k: usize, f: &[Rational]) -> Result<BoundaryDistances> {
    let n = f.len();
    if k < 2 || k >= n {
        return Err(Error::Singular(format!("frozen system for k={k}, n={n}")));
    }
    solve_rational(&coefficient_rows(k, n), f).ok_or_else(|| Error::Singular(format!("frozen system for k={k}, n={n}")))
}
