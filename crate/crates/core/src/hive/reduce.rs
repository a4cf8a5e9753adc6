//! Rewriting a flag monomial as a Plücker coordinate plus a multiple of the
//! boundary distances, by repeated use of the key equation
//! `…B^i C^c = …C^{i+c} + a_C i / k` for `B = C - 1`.

use crate::catalog::{FlagMonomialLabel, PluckerLabel};
use crate::error::{Error, Result};
use crate::semifield::{q, Rational};
use num_traits::Zero;
use std::collections::BTreeMap;

/// Which vertex with exponent at least 2 is split next.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitOrder {
    /// Largest vertex index (the last one in the fan order at vertex 1).
    Latest,
    /// Smallest vertex index.
    Earliest,
}

/// `m = P(result) + offset` whenever the boundary distances are `a`.
pub fn reduce_to_plucker(m: &FlagMonomialLabel, a: &[Rational]) -> Result<(PluckerLabel, Rational)> {
    reduce_with(m, a, SplitOrder::Latest)
}

pub fn reduce_with(m: &FlagMonomialLabel, a: &[Rational], order: SplitOrder) -> Result<(PluckerLabel, Rational)> {
    let n = m.n();
    let k = m.k();
    if a.len() != n {
        return Err(Error::InvalidParameters(format!("{} boundary distances for n={n}", a.len())));
    }
    if k >= n {
        return Err(Error::ReductionOverflow);
    }
    let mut exps: BTreeMap<usize, u32> = m.exps().clone();
    let mut offset = Rational::zero();
    let kq = k as i64;
    for _ in 0..k * n {
        let heavy = exps.iter().filter(|(_, &e)| e >= 2).map(|(&v, _)| v);
        let v = match order {
            SplitOrder::Latest => heavy.max(),
            SplitOrder::Earliest => heavy.min(),
        };
        let Some(v) = v else {
            return Ok((PluckerLabel::new(n, exps.keys().copied())?, offset));
        };
        let e = exps[&v];
        let u = if v == 1 { n } else { v - 1 };
        exps.insert(v, 1);
        *exps.entry(u).or_insert(0) += e - 1;
        offset -= &a[v - 1] * q(e as i64 - 1, kq);
    }
    Err(Error::ReductionOverflow)
}
