//! Tropical values of every flag function reachable by flips from the fan
//! chart at vertex 1, compiled once per `(k, n)` into a straight-line
//! program of tropical exchange relations.

use crate::catalog::{confa_seed, flip_steps, FlagMonomialLabel, Label, Triangulation};
use crate::error::{Error, Result};
use crate::semifield::{common_denominator, Rational};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::{Arc, Mutex, OnceLock};

#[derive(Clone, Debug)]
struct Op {
    dst: usize,
    old: usize,
    pos: Vec<(usize, i64)>,
    neg: Vec<(usize, i64)>,
}

/// Exchange-relation program rooted at the fan chart at vertex 1.
#[derive(Debug)]
pub struct ConfAEvaluator {
    k: usize,
    n: usize,
    base_len: usize,
    labels: Vec<FlagMonomialLabel>,
    index: HashMap<FlagMonomialLabel, usize>,
    ops: Vec<Op>,
}

struct State {
    t: Triangulation,
    b: Vec<Vec<i64>>,
    frozen: Vec<bool>,
    labels: Vec<FlagMonomialLabel>,
    regs: Vec<usize>,
}

fn mutate_int(b: &mut [Vec<i64>], frozen: &[bool], k: usize) {
    let n = b.len();
    let old = b.to_vec();
    for i in 0..n {
        for j in 0..n {
            if i == k || j == k {
                b[i][j] = -old[i][j];
            } else if !(frozen[i] && frozen[j]) {
                let (x, y) = (old[i][k], old[k][j]);
                b[i][j] = old[i][j] + (x.abs() * y + x * y.abs()) / 2;
            }
        }
    }
}

impl ConfAEvaluator {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        let fan = Triangulation::fan(n, 1)?;
        let seed = confa_seed(k, &fan)?;
        let labels: Vec<FlagMonomialLabel> =
            seed.labels().iter().map(|l| l.as_flag().cloned().expect("flag seed")).collect();
        let base_len = labels.len();
        let frozen = seed.seed().frozen().to_vec();
        let b: Vec<Vec<i64>> = (0..base_len)
            .map(|i| {
                (0..base_len)
                    .map(|j| if frozen[i] && frozen[j] { 0 } else { seed.seed().b_int(i, j).expect("integral off frozen block") })
                    .collect()
            })
            .collect();
        let mut ev = ConfAEvaluator {
            k,
            n,
            base_len,
            index: labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect(),
            labels: labels.clone(),
            ops: Vec::new(),
        };
        let mut seen: HashSet<Triangulation> = HashSet::new();
        seen.insert(fan.clone());
        let mut queue = VecDeque::new();
        queue.push_back(State { t: fan, b, frozen, regs: (0..base_len).collect(), labels });
        while let Some(st) = queue.pop_front() {
            for (a, c) in st.t.diagonals() {
                let (t2, quad) = st.t.flip(a, c)?;
                let mut b = st.b.clone();
                let mut labels = st.labels.clone();
                let mut regs = st.regs.clone();
                let mut pos_of: HashMap<FlagMonomialLabel, usize> =
                    labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
                for (old, new) in flip_steps(k, n, &quad) {
                    let i = pos_of.remove(&old).ok_or_else(|| Error::LabelNotFound(old.to_string()))?;
                    let reg = match ev.index.get(&new) {
                        Some(&r) => r,
                        None => {
                            let r = ev.labels.len();
                            let mut pos = Vec::new();
                            let mut neg = Vec::new();
                            for (j, &e) in b[i].iter().enumerate() {
                                if e > 0 {
                                    pos.push((regs[j], e));
                                } else if e < 0 {
                                    neg.push((regs[j], -e));
                                }
                            }
                            ev.ops.push(Op { dst: r, old: regs[i], pos, neg });
                            ev.labels.push(new.clone());
                            ev.index.insert(new.clone(), r);
                            r
                        }
                    };
                    mutate_int(&mut b, &st.frozen, i);
                    labels[i] = new.clone();
                    regs[i] = reg;
                    pos_of.insert(new, i);
                }
                if seen.insert(t2.clone()) {
                    queue.push_back(State { t: t2, b, frozen: st.frozen.clone(), labels, regs });
                }
            }
        }
        Ok(ev)
    }

    /// Shared instance per `(k, n)`.
    pub fn shared(k: usize, n: usize) -> Result<Arc<ConfAEvaluator>> {
        static CACHE: OnceLock<Mutex<HashMap<(usize, usize), Arc<ConfAEvaluator>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(e) = cache.lock().expect("evaluator cache poisoned").get(&(k, n)) {
            return Ok(e.clone());
        }
        let e = Arc::new(ConfAEvaluator::new(k, n)?);
        cache.lock().expect("evaluator cache poisoned").insert((k, n), e.clone());
        Ok(e)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of coordinates of the fan chart (the program's inputs).
    pub fn base_len(&self) -> usize {
        self.base_len
    }

    /// All functions the program computes, in register order; the first
    /// `base_len` are the fan chart's labels in its index order.
    pub fn labels(&self) -> &[FlagMonomialLabel] {
        &self.labels
    }

    /// Register of `m`; pure labels have no register (their value is 0).
    pub fn register(&self, m: &FlagMonomialLabel) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Runs the program on integer inputs, all values scaled by a common
    /// denominator.
    pub fn eval_scaled(&self, base: &[i128]) -> Vec<i128> {
        assert_eq!(base.len(), self.base_len, "input does not match the fan chart");
        let mut regs = Vec::with_capacity(self.labels.len());
        regs.extend_from_slice(base);
        regs.resize(self.labels.len(), 0);
        for op in &self.ops {
            let p: i128 = op.pos.iter().map(|&(r, e)| regs[r] * e as i128).sum();
            let q: i128 = op.neg.iter().map(|&(r, e)| regs[r] * e as i128).sum();
            regs[op.dst] = p.max(q) - regs[op.old];
        }
        regs
    }

    /// Scales rational inputs to integers; returns the scaled inputs and the scale.
    pub fn scale_inputs(base: &[Rational]) -> Result<(Vec<i128>, i128)> {
        let d: BigInt = common_denominator(base.iter());
        let den = d.to_i128().ok_or_else(|| Error::InvalidParameters("denominator too large".into()))?;
        let scaled = base
            .iter()
            .map(|x| {
                (x.numer() * (&d / x.denom()))
                    .to_i128()
                    .ok_or_else(|| Error::InvalidParameters("coordinate too large".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((scaled, den))
    }

    /// Tropical values of all reachable functions.
    pub fn eval(&self, base: &[Rational]) -> Result<Vec<Rational>> {
        let (scaled, den) = Self::scale_inputs(base)?;
        Ok(self.eval_scaled(&scaled).into_iter().map(|v| Rational::new(v.into(), den.into())).collect())
    }

    /// Value of one function, with pure labels evaluating to 0.
    pub fn value_of(&self, regs: &[Rational], m: &FlagMonomialLabel) -> Result<Rational> {
        if m.is_pure() {
            return Ok(Rational::from_integer(0.into()));
        }
        self.register(m).map(|r| regs[r].clone()).ok_or_else(|| Error::LabelNotFound(m.to_string()))
    }

    pub fn covers(&self, m: &Label) -> bool {
        match m {
            Label::Flag(f) => f.is_pure() || self.index.contains_key(f),
            Label::Plucker(p) => self.index.contains_key(&FlagMonomialLabel::from_plucker(p)),
            Label::Opaque(_) => false,
        }
    }
}
