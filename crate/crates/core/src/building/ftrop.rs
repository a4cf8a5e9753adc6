//! Tropical flag functions of lattice configurations by search, and their
//! metric description as a minimum over the building.

use super::lattice::{det_of, exact_valuation, lattice_distance, LatticeMode, LatticeRep};
use crate::error::{Error, Result};
use crate::semifield::{q, qi, GenSeries, Rational};
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Result of a bounded search with the vectors that achieve it.
#[derive(Clone, Debug, PartialEq)]
pub struct SearchResult {
    pub value: Rational,
    pub certificate: Vec<Vec<String>>,
    /// The previous bound gave the same value.
    pub stable: bool,
}

fn common_ram(lats: &[&LatticeRep]) -> u32 {
    lats.iter()
        .flat_map(|l| l.gens().iter().flatten())
        .fold(1u32, |acc, s| acc.lcm(&s.ram()))
}

fn shift(v: &[GenSeries], e: u32, ram: u32) -> Vec<GenSeries> {
    let t = GenSeries::monomial(qi(1), &q(e as i64, ram as i64));
    v.iter().map(|x| x.mul(&t)).collect()
}

fn combine(a: &[GenSeries], b: &[GenSeries], c: i64) -> Vec<GenSeries> {
    a.iter().zip(b).map(|(x, y)| x.add(&y.scale(&qi(c)))).collect()
}

/// Elements of the lattice tried at search level `b`: generators times
/// `t^{e/r}` for `e <= b`, and from level 1 on, sums and differences of two
/// generators, one of them shifted by up to `t^{(b-1)/r}`.
fn candidates(l: &LatticeRep, b: u32, ram: u32) -> Vec<(String, Vec<GenSeries>)> {
    let g = l.gens();
    let mut out = Vec::new();
    for e in 0..=b {
        for (s, gs) in g.iter().enumerate() {
            out.push((format!("t^({e}/{ram}) g{}", s + 1), shift(gs, e, ram)));
        }
    }
    if b >= 1 {
        for e in 0..b {
            for s in 0..g.len() {
                for r in 0..g.len() {
                    if s == r || (e == 0 && r < s) {
                        continue;
                    }
                    let moved = shift(&g[r], e, ram);
                    for c in [1i64, -1] {
                        out.push((format!("g{} + {c} t^({e}/{ram}) g{}", s + 1, r + 1), combine(&g[s], &moved, c)));
                    }
                }
            }
        }
    }
    out
}

fn choose(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// `Σ_j i_j val(det L_j) / k`, which makes the search value independent of
/// the scale of each lattice.
pub fn pgl_correction(lats: &[&LatticeRep], exps: &[u32]) -> Result<Rational> {
    let k = lats[0].k() as i64;
    let mut acc = Rational::zero();
    for (l, &e) in lats.iter().zip(exps) {
        if e > 0 {
            acc += l.det_valuation()? * qi(e as i64);
        }
    }
    Ok(acc / qi(k))
}

fn search_level(lats: &[&LatticeRep], exps: &[u32], b: u32, ram: u32) -> Result<(Rational, Vec<Vec<String>>)> {
    let pools: Vec<Vec<(String, Vec<GenSeries>)>> = lats.iter().map(|l| candidates(l, b, ram)).collect();
    let choices: Vec<Vec<Vec<usize>>> = pools
        .iter()
        .zip(exps)
        .map(|(p, &e)| choose(p.len(), e as usize))
        .collect();
    let mut best: Option<(Rational, Vec<Vec<String>>)> = None;
    let mut idx = vec![0usize; lats.len()];
    loop {
        let mut cols: Vec<&Vec<GenSeries>> = Vec::new();
        for (j, &i) in idx.iter().enumerate() {
            for &c in &choices[j][i] {
                cols.push(&pools[j][c].1);
            }
        }
        let d = det_of(&cols);
        if !d.is_zero() {
            let v = -exact_valuation(&d)?;
            if best.as_ref().is_none_or(|(bv, _)| v > *bv) {
                let cert = idx
                    .iter()
                    .enumerate()
                    .map(|(j, &i)| choices[j][i].iter().map(|&c| pools[j][c].0.clone()).collect())
                    .collect();
                best = Some((v, cert));
            }
        }
        // odometer over the lattices' choices
        let mut j = 0;
        loop {
            if j == idx.len() {
                return best.ok_or_else(|| Error::Singular("every determinant vanishes".into()));
            }
            idx[j] += 1;
            if idx[j] < choices[j].len() {
                break;
            }
            idx[j] = 0;
            j += 1;
        }
    }
}

/// Largest `-val det` over vectors drawn from the lattices (`exps[j]` of
/// them from lattice `j`), with the scale correction. Elements of a
/// lattice are `O`-combinations of its generators, so by multilinearity the
/// supremum is attained on generators; the search levels certify this.
pub fn f_trop_bruteforce(lats: &[&LatticeRep], exps: &[u32], bound: u32) -> Result<SearchResult> {
    if lats.is_empty() || lats.len() != exps.len() {
        return Err(Error::InvalidParameters("one exponent per lattice".into()));
    }
    let k = lats[0].k();
    if exps.iter().sum::<u32>() as usize != k {
        return Err(Error::InvalidParameters(format!("exponents must sum to {k}")));
    }
    let ram = common_ram(lats);
    let corr = pgl_correction(lats, exps)?;
    let (value, certificate) = search_level(lats, exps, bound, ram)?;
    let stable = if bound == 0 { false } else { search_level(lats, exps, bound - 1, ram)?.0 == value };
    Ok(SearchResult { value: value + corr, certificate, stable })
}

/// Raises the bound from 1 until two consecutive levels agree; returns the
/// value and the bound reached.
pub fn f_trop_certified(lats: &[&LatticeRep], exps: &[u32], max_bound: u32) -> Result<(Rational, u32)> {
    for b in 1..=max_bound {
        let r = f_trop_bruteforce(lats, exps, b)?;
        if r.stable {
            return Ok((r.value, b));
        }
    }
    Err(Error::Unconverged(max_bound))
}

fn pool_vectors(lats: &[&LatticeRep]) -> Vec<Vec<GenSeries>> {
    let mut pool: Vec<Vec<GenSeries>> = Vec::new();
    for l in lats {
        let g = l.gens();
        pool.extend(g.iter().cloned());
        if l.k() == 2 {
            for s in 0..g.len() {
                for r in s + 1..g.len() {
                    pool.push(combine(&g[s], &g[r], 1));
                    pool.push(combine(&g[s], &g[r], -1));
                }
            }
        }
    }
    pool
}

/// `min_p Σ_j ω_{i_j} · d(p, x_j)` over the lattices spanned by rescaled
/// `k`-subsets of a pool of vectors built from the inputs' generators, with
/// rescaling exponents in `[-window, window]` (units `1/r`).
pub fn metric_f_min(lats: &[&LatticeRep], exps: &[u32], window: u32) -> Result<SearchResult> {
    let k = lats[0].k();
    let ram = common_ram(lats);
    let pool = pool_vectors(lats);
    let eval = |w: u32| -> Result<(Rational, Vec<Vec<String>>)> {
        let mut best: Option<(Rational, Vec<Vec<String>>)> = None;
        let span = 2 * w as usize + 1;
        for basis in choose(pool.len(), k) {
            let cols: Vec<&Vec<GenSeries>> = basis.iter().map(|&i| &pool[i]).collect();
            if det_of(&cols).is_zero() {
                continue;
            }
            for code in 0..span.pow(k as u32) {
                let mut c = code;
                let mut gens = Vec::with_capacity(k);
                let mut tag = Vec::with_capacity(k);
                for &i in &basis {
                    let e = (c % span) as i64 - w as i64;
                    c /= span;
                    let t = GenSeries::monomial(qi(1), &q(e, ram as i64));
                    gens.push(pool[i].iter().map(|x| x.mul(&t)).collect());
                    tag.push(format!("t^({e}/{ram}) p{}", i + 1));
                }
                let p = LatticeRep::new(gens, LatticeMode::PGL)?;
                let mut total = Rational::zero();
                for (l, &e) in lats.iter().zip(exps) {
                    if e > 0 {
                        total += lattice_distance(&p, l)?.omega(e as usize);
                    }
                }
                if best.as_ref().is_none_or(|(b, _)| total < *b) {
                    best = Some((total, vec![tag]));
                }
            }
        }
        best.ok_or_else(|| Error::Singular("no candidate lattice".into()))
    };
    let (value, certificate) = eval(window)?;
    let stable = window > 0 && eval(window - 1)?.0 == value;
    Ok(SearchResult { value, certificate, stable })
}

/// Failures of the two conditions of a positive configuration.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct PosConfigReport {
    pub checked: usize,
    pub not_minimizing: Vec<String>,
    pub not_positive: Vec<String>,
}

impl PosConfigReport {
    pub fn passed(&self) -> bool {
        self.not_minimizing.is_empty() && self.not_positive.is_empty()
    }
}

/// All splits `(i1, i2, i3)` of `k`.
pub fn splits(k: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for i in 0..=k {
        for j in 0..=k - i {
            out.push([i, j, k - i - j]);
        }
    }
    out
}

/// For each listed triple `p < q < r` (1-based) and each split of `k`: the
/// leading vectors of the generators reach the searched maximum, and their
/// determinant has positive leading coefficient. The search bound is
/// raised up to `max_bound` until stable.
pub fn valuation_minimizing_check(lats: &[LatticeRep], triples: &[[usize; 3]], max_bound: u32) -> Result<PosConfigReport> {
    let k = lats[0].k() as u32;
    let mut report = PosConfigReport::default();
    for &[p, qq, r] in triples {
        let trio = [&lats[p - 1], &lats[qq - 1], &lats[r - 1]];
        for e in splits(k) {
            let mut cols: Vec<&Vec<GenSeries>> = Vec::new();
            for (l, &n) in trio.iter().zip(&e) {
                cols.extend(l.gens()[..n as usize].iter());
            }
            let d = det_of(&cols);
            let id = format!("({p},{qq},{r}):{:?}", e);
            report.checked += 1;
            if d.is_zero() {
                report.not_minimizing.push(id);
                continue;
            }
            let own = -exact_valuation(&d)? + pgl_correction(&trio, &e)?;
            let (best, _) = f_trop_certified(&trio, &e, max_bound)?;
            if best != own {
                report.not_minimizing.push(id.clone());
            }
            if !d.leading_coeff().is_some_and(|c| c.is_positive()) {
                report.not_positive.push(id);
            }
        }
    }
    Ok(report)
}
