use crate::catalog::PluckerLabel;
use crate::error::{Error, Result};
use crate::semifield::{rational_from_json, rational_to_json, Rational};
use num_traits::Zero;
use serde_json::{Map, Value};

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// Position of `j` in the lexicographic list `PluckerLabel::all(k, n)`.
pub fn plucker_rank(j: &PluckerLabel) -> usize {
    let (n, k) = (j.n(), j.k());
    let mut rank = 0;
    let mut prev = 0;
    for (i, &s) in j.elems().iter().enumerate() {
        for x in prev + 1..s {
            rank += binom(n - x, k - i - 1);
        }
        prev = s;
    }
    rank
}

/// Tropical values of all `C(n, k)` Plücker coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerVector {
    k: usize,
    n: usize,
    values: Vec<Rational>,
}

impl PluckerVector {
    pub fn zero(k: usize, n: usize) -> Self {
        PluckerVector { k, n, values: vec![Rational::zero(); binom(n, k)] }
    }

    pub fn from_fn(k: usize, n: usize, mut f: impl FnMut(&PluckerLabel) -> Rational) -> Self {
        PluckerVector { k, n, values: PluckerLabel::all(k, n).iter().map(&mut f).collect() }
    }

    pub fn try_from_fn(k: usize, n: usize, mut f: impl FnMut(&PluckerLabel) -> Result<Rational>) -> Result<Self> {
        let values = PluckerLabel::all(k, n).iter().map(&mut f).collect::<Result<Vec<_>>>()?;
        Ok(PluckerVector { k, n, values })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, j: &PluckerLabel) -> &Rational {
        &self.values[plucker_rank(j)]
    }

    pub fn set(&mut self, j: &PluckerLabel, v: Rational) {
        let r = plucker_rank(j);
        self.values[r] = v;
    }

    /// Value at the cyclic interval `{i, ..., i+k-1}`.
    pub fn frozen(&self, i: usize) -> &Rational {
        self.get(&PluckerLabel::interval(self.n, i, self.k))
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn iter(&self) -> impl Iterator<Item = (PluckerLabel, &Rational)> + '_ {
        PluckerLabel::all(self.k, self.n).into_iter().zip(self.values.iter())
    }

    pub fn add(&self, other: &PluckerVector) -> PluckerVector {
        assert_eq!((self.k, self.n), (other.k, other.n), "Plücker vectors of different shapes");
        PluckerVector {
            k: self.k,
            n: self.n,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> PluckerVector {
        PluckerVector { k: self.k, n: self.n, values: self.values.iter().map(|a| a * c).collect() }
    }

    pub fn to_json(&self) -> Value {
        let mut m = Map::new();
        for (j, v) in self.iter() {
            m.insert(j.to_string(), rational_to_json(v));
        }
        serde_json::json!({ "k": self.k, "n": self.n, "values": m })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = |m: &str| Error::Malformed(format!("Plücker vector: {m}"));
        let k = v.get("k").and_then(Value::as_u64).ok_or_else(|| bad("missing k"))? as usize;
        let n = v.get("n").and_then(Value::as_u64).ok_or_else(|| bad("missing n"))? as usize;
        let vals = v.get("values").and_then(Value::as_object).ok_or_else(|| bad("missing values"))?;
        if k == 0 || k > n {
            return Err(bad("bad k, n"));
        }
        let mut out = PluckerVector::zero(k, n);
        let mut seen = 0;
        for (key, val) in vals {
            let label = match crate::catalog::Label::parse(key, n)? {
                crate::catalog::Label::Plucker(p) if p.k() == k => p,
                _ => return Err(bad(&format!("bad label {key}"))),
            };
            out.set(&label, rational_from_json(val).ok_or_else(|| bad("bad value"))?);
            seen += 1;
        }
        if seen != out.values.len() {
            return Err(bad("every k-subset needs a value"));
        }
        Ok(out)
    }
}
