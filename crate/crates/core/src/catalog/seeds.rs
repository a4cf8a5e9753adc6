use super::labels::{FlagMonomialLabel, Label, PluckerLabel};
use super::triangulation::Triangulation;
use crate::cluster::{LabeledSeed, Seed};
use crate::error::{Error, Result};
use crate::semifield::{q, Rational};
use num_traits::Zero;
use std::collections::BTreeMap;

/// Rectangular grid seed for the affine cone over Gr(k, n).
///
/// Row `r = 0..k` holds the labels `{1..a} ∪ {i..i+b-1}` with `b = r + 1`,
/// `a = k - b` and `i = n - r - c` in column `c`; row 0 has one extra
/// column holding `{1..k}`.
pub fn grassmannian_seed(k: usize, n: usize) -> Result<LabeledSeed> {
    if k < 2 || k + 2 > n {
        return Err(Error::InvalidParameters(format!("need 2 <= k <= n - 2, got k={k}, n={n}")));
    }
    let w = n - k;
    let mut pos: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut labels = Vec::new();
    let mut frozen = Vec::new();
    for r in 0..k {
        let cols = if r == 0 { w + 1 } else { w };
        for c in 0..cols {
            let b = r + 1;
            let a = k - b;
            let i = n - r - c;
            let set = (1..=a).chain(i..i + b);
            pos.insert((c, r), labels.len());
            labels.push(Label::Plucker(PluckerLabel::new(n, set)?));
            frozen.push(c == 0 || r == k - 1 || c == w);
        }
    }
    let m = labels.len();
    let mut b = vec![vec![Rational::zero(); m]; m];
    let mut arrow = |from: (usize, usize), to: (usize, usize)| {
        let (f, t) = (pos[&from], pos[&to]);
        b[t][f] += q(1, 1);
        b[f][t] -= q(1, 1);
    };
    for r in 0..k {
        for c in 0..w {
            if r + 1 < k {
                if r == 0 || c + 1 < w {
                    arrow((c + 1, r), (c, r));
                }
                arrow((c, r), (c, r + 1));
                if c + 1 < w {
                    arrow((c, r + 1), (c + 1, r));
                }
            }
        }
    }
    arrow((w - 1, k - 1), (w, 0));
    let seed = Seed::new(b, frozen, vec![1; m])?;
    LabeledSeed::new(format!("gr({k},{n})"), n, seed, labels)
}

/// All non-pure exponent triples of a triangle with vertices `p < q < r`.
fn triangle_nodes(k: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..=k {
        for b in 0..=k - a {
            let c = k - a - b;
            if a < k && b < k && c < k {
                out.push([a, b, c]);
            }
        }
    }
    out
}

fn triple_label(n: usize, t: &[usize; 3], e: &[usize; 3]) -> FlagMonomialLabel {
    FlagMonomialLabel::new(n, (0..3).map(|i| (t[i], e[i] as u32))).expect("triangle vertices are in range")
}

/// Seed for configurations of n principal flags in k-space, glued from the
/// triangles of `t`. Edge functions on the boundary are frozen.
pub fn confa_seed(k: usize, t: &Triangulation) -> Result<LabeledSeed> {
    let n = t.n();
    if k < 2 {
        return Err(Error::InvalidParameters(format!("k = {k} has no cluster structure")));
    }
    let mut set = std::collections::BTreeSet::new();
    for tri in t.triangles() {
        for e in triangle_nodes(k) {
            set.insert(triple_label(n, tri, &e));
        }
    }
    let labels: Vec<FlagMonomialLabel> = set.into_iter().collect();
    let index: BTreeMap<&FlagMonomialLabel, usize> = labels.iter().enumerate().map(|(i, l)| (l, i)).collect();
    let m = labels.len();
    let mut b = vec![vec![Rational::zero(); m]; m];
    let deltas: [[i64; 3]; 3] = [[1, -1, 0], [0, 1, -1], [-1, 0, 1]];
    for tri in t.triangles() {
        for e in triangle_nodes(k) {
            for d in &deltas {
                let f: Vec<i64> = (0..3).map(|i| e[i] as i64 + d[i]).collect();
                if f.iter().any(|&x| x < 0 || x >= k as i64) {
                    continue;
                }
                let f = [f[0] as usize, f[1] as usize, f[2] as usize];
                let fixed = d.iter().position(|&x| x == 0).expect("one coordinate is fixed");
                let weight = if e[fixed] == 0 { q(1, 2) } else { q(1, 1) };
                // arrow from f to e
                let (x, y) = (index[&triple_label(n, tri, &e)], index[&triple_label(n, tri, &f)]);
                b[x][y] += &weight;
                b[y][x] -= &weight;
            }
        }
    }
    let frozen: Vec<bool> = labels
        .iter()
        .map(|l| {
            let s = l.support();
            s.len() == 2 && t.is_boundary_edge(s[0], s[1])
        })
        .collect();
    let seed = Seed::new(b, frozen, vec![1; m])?;
    let id = format!("confA({k},{n};{})", tri_id(t));
    LabeledSeed::new(id, n, seed, labels.into_iter().map(Label::Flag).collect())
}

fn tri_id(t: &Triangulation) -> String {
    let parts: Vec<String> = t.triangles().iter().map(|x| format!("{},{},{}", x[0], x[1], x[2])).collect();
    parts.join(".")
}

/// Number of vertices of `confa_seed(k, T)` for any triangulation of the n-gon.
pub fn confa_label_count(k: usize, n: usize) -> usize {
    (k - 1) * (2 * n - 3) + (k - 1) * (k - 2) * (n - 2) / 2
}
