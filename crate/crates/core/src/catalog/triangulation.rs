use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A triangulation of the n-gon with vertices `1..=n`; each triangle is
/// stored with increasing vertices, which is also their cyclic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TriangulationJson", into = "TriangulationJson")]
pub struct Triangulation {
    n: usize,
    triangles: Vec<[usize; 3]>,
}

#[derive(Serialize, Deserialize)]
struct TriangulationJson {
    n: usize,
    triangles: Vec<[usize; 3]>,
}

impl TryFrom<TriangulationJson> for Triangulation {
    type Error = Error;
    fn try_from(j: TriangulationJson) -> Result<Self> {
        Triangulation::new(j.n, j.triangles)
    }
}

impl From<Triangulation> for TriangulationJson {
    fn from(t: Triangulation) -> Self {
        TriangulationJson { n: t.n, triangles: t.triangles }
    }
}

fn is_boundary(n: usize, a: usize, b: usize) -> bool {
    b == a + 1 || (a == 1 && b == n)
}

fn crosses((a, b): (usize, usize), (c, d): (usize, usize)) -> bool {
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

impl Triangulation {
    pub fn new(n: usize, triangles: Vec<[usize; 3]>) -> Result<Self> {
        let bad = |m: String| Err(Error::InvalidTriangulation(m));
        if n < 3 {
            return bad(format!("{n}-gon"));
        }
        if triangles.len() != n - 2 {
            return bad(format!("{} triangles for an {n}-gon", triangles.len()));
        }
        let mut tris = Vec::with_capacity(triangles.len());
        for t in triangles {
            let mut s = t;
            s.sort_unstable();
            if s[0] == 0 || s[2] > n || s[0] == s[1] || s[1] == s[2] {
                return bad(format!("bad triangle {t:?}"));
            }
            tris.push(s);
        }
        let mut uses: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for t in &tris {
            for e in [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])] {
                *uses.entry(e).or_insert(0) += 1;
            }
        }
        for i in 1..=n {
            let e = if i == n { (1, n) } else { (i, i + 1) };
            if uses.get(&e) != Some(&1) {
                return bad(format!("boundary edge {e:?} not used exactly once"));
            }
        }
        let diags: Vec<(usize, usize)> = uses.keys().copied().filter(|&(a, b)| !is_boundary(n, a, b)).collect();
        if diags.len() != n - 3 || diags.iter().any(|d| uses[d] != 2) {
            return bad("diagonals must be shared by exactly two triangles".into());
        }
        for (i, &d) in diags.iter().enumerate() {
            if diags[i + 1..].iter().any(|&e| crosses(d, e)) {
                return bad(format!("diagonal {d:?} crosses another"));
            }
        }
        tris.sort_unstable();
        Ok(Triangulation { n, triangles: tris })
    }

    /// Triangles `(v, v+i, v+i+1)` for `i = 1..n-2`, indices mod n.
    pub fn fan(n: usize, v: usize) -> Result<Self> {
        if v == 0 || v > n {
            return Err(Error::InvalidParameters(format!("fan vertex {v} outside [1, {n}]")));
        }
        let w = |j: usize| (j - 1) % n + 1;
        Triangulation::new(n, (1..n - 1).map(|i| [v, w(v + i), w(v + i + 1)]).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    /// All edges `(a, b)` with `a < b`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut es: Vec<(usize, usize)> =
            self.triangles.iter().flat_map(|t| [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])]).collect();
        es.sort_unstable();
        es.dedup();
        es
    }

    pub fn diagonals(&self) -> Vec<(usize, usize)> {
        self.edges().into_iter().filter(|&(a, b)| !is_boundary(self.n, a, b)).collect()
    }

    pub fn is_boundary_edge(&self, a: usize, b: usize) -> bool {
        let (a, b) = (a.min(b), a.max(b));
        is_boundary(self.n, a, b)
    }

    /// Replaces the diagonal `(a, c)` by the other diagonal of its
    /// quadrilateral. Returns the new triangulation and the quadrilateral
    /// in cyclic order `(p, q, r, s)` with the old diagonal being `p r`.
    pub fn flip(&self, a: usize, c: usize) -> Result<(Triangulation, [usize; 4])> {
        let (a, c) = (a.min(c), a.max(c));
        if a == 0 || c > self.n || a == c {
            return Err(Error::NotADiagonal(a, c));
        }
        let apex: Vec<usize> = self
            .triangles
            .iter()
            .filter(|t| t.contains(&a) && t.contains(&c))
            .map(|t| t.iter().copied().find(|&v| v != a && v != c).expect("triangle has a third vertex"))
            .collect();
        if apex.len() != 2 {
            return Err(Error::NotADiagonal(a, c));
        }
        let (x, y) = (apex[0], apex[1]);
        let mut quad = [a, c, x, y];
        quad.sort_unstable();
        if quad[0] != a {
            quad.rotate_left(1);
        }
        let mut tris: Vec<[usize; 3]> = self
            .triangles
            .iter()
            .copied()
            .filter(|t| !(t.contains(&a) && t.contains(&c)))
            .collect();
        tris.push([a, x, y]);
        tris.push([c, x, y]);
        Ok((Triangulation::new(self.n, tris)?, quad))
    }

    /// A sequence of diagonal flips turning `self` into `target`.
    pub fn flips_to(&self, target: &Triangulation) -> Result<Vec<(usize, usize)>> {
        if self.n != target.n {
            return Err(Error::InvalidParameters("triangulations of different polygons".into()));
        }
        // go to the fan at 1 from both ends and splice
        let a = self.flips_to_fan()?;
        let b = target.flips_to_fan()?;
        let mut cur = self.clone();
        let mut out = Vec::new();
        for d in a {
            out.push(d);
            cur = cur.flip(d.0, d.1)?.0;
        }
        // replay b backwards: each step undoes a flip, whose new diagonal we flip
        let mut states = vec![target.clone()];
        for d in &b {
            let next = states.last().expect("nonempty").flip(d.0, d.1)?.0;
            states.push(next);
        }
        for i in (0..b.len()).rev() {
            let before = &states[i];
            let after = &states[i + 1];
            let new_diag = after
                .diagonals()
                .into_iter()
                .find(|e| !before.diagonals().contains(e))
                .expect("a flip introduces one diagonal");
            out.push(new_diag);
            cur = cur.flip(new_diag.0, new_diag.1)?.0;
        }
        debug_assert_eq!(&cur, target);
        Ok(out)
    }

    /// Flips reaching the fan at vertex 1: repeatedly flip a diagonal not
    /// touching 1 inside a triangle containing 1.
    pub fn flips_to_fan(&self) -> Result<Vec<(usize, usize)>> {
        let mut cur = self.clone();
        let mut out = Vec::new();
        loop {
            let next = cur
                .triangles
                .iter()
                .find(|t| t[0] == 1 && !is_boundary(self.n, t[1], t[2]))
                .map(|t| (t[1], t[2]));
            match next {
                Some(d) => {
                    out.push(d);
                    cur = cur.flip(d.0, d.1)?.0;
                }
                None => break,
            }
        }
        Ok(out)
    }
}
