use super::labels::{FlagMonomialLabel, Label};
use super::seeds::confa_seed;
use super::triangulation::Triangulation;
use crate::cluster::LabeledSeed;
use crate::error::{Error, Result};
use std::collections::HashMap;

/// Mutation path between the seeds of two triangulations, with the
/// functions sitting at each index (in the source seed's index order)
/// once the path has been applied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartChange {
    pub target: Triangulation,
    pub path: Vec<usize>,
    pub labels: Vec<FlagMonomialLabel>,
}

impl ChartChange {
    /// `perm[i]` is the index in `target_seed` of the function ending at `i`.
    pub fn permutation(&self, target_seed: &LabeledSeed) -> Result<Vec<usize>> {
        self.labels
            .iter()
            .map(|l| {
                target_seed
                    .index_of(&Label::Flag(l.clone()))
                    .ok_or_else(|| Error::LabelNotFound(l.to_string()))
            })
            .collect()
    }
}

fn quad_label(n: usize, quad: &[usize; 4], e: [usize; 4]) -> FlagMonomialLabel {
    FlagMonomialLabel::new(n, (0..4).map(|i| (quad[i], e[i] as u32))).expect("quad vertices are in range")
}

/// Octahedron-recurrence layers for flipping the diagonal `p r` of the quad
/// `(p, q, r, s)`. Writing `f_abcd` for the function with exponents
/// `(a, b, c, d)` at `(p, q, r, s)`, layer `l = 1..k` mutates every
/// `f_{a+1,b,c+1,d}` with `b + d = l - 1`, which becomes `f_{a,b+1,c,d+1}`.
/// Returns the (mutated, resulting) label pairs in order.
pub fn flip_steps(k: usize, n: usize, quad: &[usize; 4]) -> Vec<(FlagMonomialLabel, FlagMonomialLabel)> {
    let mut out = Vec::with_capacity(k * (k * k - 1) / 6);
    for layer in 1..k {
        for b in 0..layer {
            let d = layer - 1 - b;
            for a in 0..k - layer {
                let c = k - 1 - layer - a;
                out.push((quad_label(n, quad, [a + 1, b, c + 1, d]), quad_label(n, quad, [a, b + 1, c, d + 1])));
            }
        }
    }
    out
}

fn flip_labels(k: usize, n: usize, quad: &[usize; 4], labels: &mut [FlagMonomialLabel]) -> Result<Vec<usize>> {
    let mut index: HashMap<FlagMonomialLabel, usize> =
        labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
    let mut path = Vec::new();
    for (old, new) in flip_steps(k, n, quad) {
        let i = index.remove(&old).ok_or_else(|| Error::LabelNotFound(old.to_string()))?;
        path.push(i);
        labels[i] = new.clone();
        index.insert(new, i);
    }
    Ok(path)
}

/// Flip of the diagonal `(a, c)` of `t` as a mutation path on `confa_seed(k, t)`.
pub fn flip_sequence(k: usize, t: &Triangulation, a: usize, c: usize) -> Result<ChartChange> {
    let seed = confa_seed(k, t)?;
    let labels: Vec<FlagMonomialLabel> =
        seed.labels().iter().map(|l| l.as_flag().cloned().expect("flag seed")).collect();
    chain(k, t, labels, &[(a, c)])
}

/// Mutation path from `confa_seed(k, from)` to the seed of `to`.
pub fn chart_change(k: usize, from: &Triangulation, to: &Triangulation) -> Result<ChartChange> {
    let seed = confa_seed(k, from)?;
    let labels: Vec<FlagMonomialLabel> =
        seed.labels().iter().map(|l| l.as_flag().cloned().expect("flag seed")).collect();
    chain(k, from, labels, &from.flips_to(to)?)
}

fn chain(
    k: usize,
    t: &Triangulation,
    mut labels: Vec<FlagMonomialLabel>,
    flips: &[(usize, usize)],
) -> Result<ChartChange> {
    let mut cur = t.clone();
    let mut path = Vec::new();
    for &(a, c) in flips {
        let (next, quad) = cur.flip(a, c)?;
        path.extend(flip_labels(k, t.n(), &quad, &mut labels)?);
        cur = next;
    }
    Ok(ChartChange { target: cur, path, labels })
}
