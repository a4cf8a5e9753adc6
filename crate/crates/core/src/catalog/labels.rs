use crate::error::{Error, Result};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// A k-subset of `{1, ..., n}`, naming the Plücker coordinate `P_J`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PluckerLabel {
    n: usize,
    set: Vec<usize>,
}

impl PluckerLabel {
    pub fn new(n: usize, elems: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut set: Vec<usize> = elems.into_iter().collect();
        set.sort_unstable();
        let before = set.len();
        set.dedup();
        if set.len() != before || set.iter().any(|&j| j == 0 || j > n) {
            return Err(Error::InvalidParameters(format!("{set:?} is not a subset of [1, {n}]")));
        }
        Ok(PluckerLabel { n, set })
    }

    /// Cyclic interval `{i, i+1, ..., i+k-1}` (mod n, 1-based).
    pub fn interval(n: usize, i: usize, k: usize) -> Self {
        Self::new(n, (0..k).map(|s| wrap(n, i + s))).expect("intervals are valid")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.set.len()
    }

    pub fn elems(&self) -> &[usize] {
        &self.set
    }

    pub fn contains(&self, j: usize) -> bool {
        self.set.binary_search(&j).is_ok()
    }

    /// All k-subsets of `[n]` in lexicographic order.
    pub fn all(k: usize, n: usize) -> Vec<PluckerLabel> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(k);
        fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<PluckerLabel>) {
            if cur.len() == k {
                out.push(PluckerLabel { n, set: cur.clone() });
                return;
            }
            for j in start..=n {
                if n - j + 1 < k - cur.len() {
                    break;
                }
                cur.push(j);
                rec(j + 1, n, k, cur, out);
                cur.pop();
            }
        }
        rec(1, n, k, &mut cur, &mut out);
        out
    }

    /// Index labels shifted by `s` modulo n.
    pub fn shifted(&self, s: i64) -> Self {
        Self::new(self.n, self.set.iter().map(|&j| wrap_signed(self.n, j as i64 + s))).expect("shift is a bijection")
    }
}

/// `j` reduced into `1..=n`.
pub fn wrap(n: usize, j: usize) -> usize {
    (j - 1) % n + 1
}

pub fn wrap_signed(n: usize, j: i64) -> usize {
    ((j - 1).rem_euclid(n as i64) + 1) as usize
}

impl fmt::Display for PluckerLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.set.iter().map(|j| j.to_string()).collect();
        write!(f, "P({})", parts.join(","))
    }
}

/// A monomial `prod_v F_v^{m(v)}` naming the flag function
/// `det(u^{(v_1)}_1..u^{(v_1)}_{m(v_1)}, u^{(v_2)}_1, ...)` with vertices in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FlagMonomialLabel {
    n: usize,
    exps: BTreeMap<usize, u32>,
}

impl FlagMonomialLabel {
    pub fn new(n: usize, exps: impl IntoIterator<Item = (usize, u32)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (v, e) in exps {
            if v == 0 || v > n {
                return Err(Error::InvalidParameters(format!("vertex {v} outside [1, {n}]")));
            }
            if e > 0 {
                *map.entry(v).or_insert(0) += e;
            }
        }
        if map.is_empty() {
            return Err(Error::InvalidParameters("empty flag monomial".into()));
        }
        Ok(FlagMonomialLabel { n, exps: map })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.exps.values().map(|&e| e as usize).sum()
    }

    pub fn exp(&self, v: usize) -> u32 {
        self.exps.get(&v).copied().unwrap_or(0)
    }

    pub fn exps(&self) -> &BTreeMap<usize, u32> {
        &self.exps
    }

    pub fn support(&self) -> Vec<usize> {
        self.exps.keys().copied().collect()
    }

    /// `{v: k}`, fixed to value 1 (tropically 0) by the determinant normalization.
    pub fn is_pure(&self) -> bool {
        self.exps.len() == 1
    }

    /// Exponent 1 at each vertex of `J`.
    pub fn from_plucker(j: &PluckerLabel) -> Self {
        FlagMonomialLabel { n: j.n(), exps: j.elems().iter().map(|&v| (v, 1)).collect() }
    }

    /// The Plücker label when all exponents are 1.
    pub fn as_plucker(&self) -> Option<PluckerLabel> {
        if self.exps.values().all(|&e| e == 1) {
            PluckerLabel::new(self.n, self.exps.keys().copied()).ok()
        } else {
            None
        }
    }

    /// Vertex labels shifted by `s` modulo n.
    pub fn shifted(&self, s: i64) -> Self {
        FlagMonomialLabel {
            n: self.n,
            exps: self.exps.iter().map(|(&v, &e)| (wrap_signed(self.n, v as i64 + s), e)).collect(),
        }
    }
}

impl fmt::Display for FlagMonomialLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.exps.iter().map(|(v, e)| format!("{v}:{e}")).collect();
        write!(f, "F({})", parts.join(","))
    }
}

/// The function sitting at a quiver vertex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Label {
    Plucker(PluckerLabel),
    Flag(FlagMonomialLabel),
    Opaque(String),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Plucker(p) => write!(f, "{p}"),
            Label::Flag(m) => write!(f, "{m}"),
            Label::Opaque(s) => write!(f, "{s}"),
        }
    }
}

fn parse_list(s: &str, prefix: &str) -> Option<Vec<String>> {
    let inner = s.strip_prefix(prefix)?.strip_suffix(')')?;
    Some(inner.split(',').map(|p| p.trim().to_string()).collect())
}

impl Label {
    /// Parses `P(1,3)` and `F(1:2,3:1)`; anything else is opaque.
    pub fn parse(s: &str, n: usize) -> Result<Self> {
        if let Some(parts) = parse_list(s, "P(") {
            let elems: Option<Vec<usize>> = parts.iter().map(|p| p.parse().ok()).collect();
            let elems = elems.ok_or_else(|| Error::Malformed(format!("bad Plücker label {s}")))?;
            return Ok(Label::Plucker(PluckerLabel::new(n, elems)?));
        }
        if let Some(parts) = parse_list(s, "F(") {
            let mut exps = Vec::new();
            for p in parts {
                let (v, e) = p.split_once(':').ok_or_else(|| Error::Malformed(format!("bad flag label {s}")))?;
                let v = usize::from_str(v.trim()).map_err(|_| Error::Malformed(s.into()))?;
                let e = u32::from_str(e.trim()).map_err(|_| Error::Malformed(s.into()))?;
                exps.push((v, e));
            }
            return Ok(Label::Flag(FlagMonomialLabel::new(n, exps)?));
        }
        Ok(Label::Opaque(s.to_string()))
    }

    pub fn as_flag(&self) -> Option<&FlagMonomialLabel> {
        match self {
            Label::Flag(m) => Some(m),
            _ => None,
        }
    }

    pub fn as_plucker(&self) -> Option<&PluckerLabel> {
        match self {
            Label::Plucker(p) => Some(p),
            _ => None,
        }
    }

    /// Vertex labels shifted by `s` modulo n; opaque labels are unchanged.
    pub fn shifted(&self, s: i64) -> Label {
        match self {
            Label::Plucker(p) => Label::Plucker(p.shifted(s)),
            Label::Flag(m) => Label::Flag(m.shifted(s)),
            Label::Opaque(o) => Label::Opaque(o.clone()),
        }
    }
}
