//! Lattices of a positive flag configuration: each flag, read against a
//! transverse flag, determines a frame whose span is a point of the
//! building.

use super::lattice::{det_of, exact_valuation, same_lattice, LatticeMode, LatticeRep};
use crate::catalog::FlagConfig;
use crate::error::{Error, Result};
use crate::hive::hive_check;
use crate::points::{flags_from_fan, tropicalize, SeriesPoint};
use crate::semifield::{qi, GenSeries};

#[derive(Clone, Debug)]
pub struct BuildingConfig {
    pub lattices: Vec<LatticeRep>,
    /// The tropical point satisfies the hive inequalities.
    pub hive: bool,
    /// Every transverse flag gave the same lattice (checked for hive points).
    pub independent: bool,
    /// Lattices were taken relative to the next flag without a check.
    pub warning: bool,
}

/// Frame of flag `i` relative to flag `j` (1-based): `w_m` spans
/// `F_i^{(m)} ∩ F_j^{(k-m+1)}`, rescaled by a unit so that its coefficient
/// on the `m`-th vector of `F_i` has leading term 1. The partial wedges then
/// agree with those of `F_i` up to units.
pub fn frame_against(flags: &FlagConfig<GenSeries>, i: usize, j: usize) -> Result<Vec<Vec<GenSeries>>> {
    let k = flags.k();
    let v = flags.frame(i);
    let u = flags.frame(j);
    let mut out = Vec::with_capacity(k);
    for m in 1..=k {
        let us: Vec<&Vec<GenSeries>> = u[..k - m + 1].iter().collect();
        let mut x = vec![GenSeries::zero(); k];
        let mut lead = GenSeries::zero();
        for s in 1..=m {
            let mut cols: Vec<&Vec<GenSeries>> = (1..=m).filter(|&t| t != s).map(|t| &v[t - 1]).collect();
            cols.extend(us.iter().copied());
            let mut c = det_of(&cols);
            if s % 2 == 1 {
                c = c.neg();
            }
            for (xr, vr) in x.iter_mut().zip(&v[s - 1]) {
                *xr = xr.add(&c.mul(vr));
            }
            if s == m {
                lead = c;
            }
        }
        if lead.is_zero() {
            return Err(Error::NonTransverse(i, j));
        }
        let val = exact_valuation(&lead)?;
        let lc = lead.leading_coeff().expect("nonzero").clone();
        let unit = GenSeries::monomial(qi(1) / lc, &-val);
        out.push(x.iter().map(|e| e.mul(&unit)).collect());
    }
    Ok(out)
}

fn frame(flags: &FlagConfig<GenSeries>, i: usize, j: usize) -> Result<Vec<Vec<GenSeries>>> {
    frame_against(flags, i, j)
}

/// Lattices of the configuration realizing a positive series point on the
/// fan chart at vertex 1.
pub fn config_from_flags(x: &SeriesPoint, k: usize) -> Result<BuildingConfig> {
    let flags = flags_from_fan(x, k)?;
    config_from_flag_config(&flags, hive_check(&tropicalize(x))?.member)
}

/// As [`config_from_flags`], from explicit flags; `hive` selects whether the
/// choice of transverse flag is checked.
pub fn config_from_flag_config(flags: &FlagConfig<GenSeries>, hive: bool) -> Result<BuildingConfig> {
    let n = flags.n();
    let mut lattices = Vec::with_capacity(n);
    let mut independent = true;
    for i in 1..=n {
        let next = i % n + 1;
        let lat = LatticeRep::new(frame(flags, i, next)?, LatticeMode::SL)?;
        if hive {
            for j in (1..=n).filter(|&j| j != i && j != next) {
                let other = LatticeRep::new(frame(flags, i, j)?, LatticeMode::SL)?;
                independent &= same_lattice(&lat, &other)?;
            }
        }
        lattices.push(lat);
    }
    Ok(BuildingConfig { lattices, hive, independent: hive && independent, warning: !hive })
}
