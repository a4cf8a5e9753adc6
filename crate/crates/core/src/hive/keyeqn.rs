//! Every instance of the key equation `…B^i C^c = …C^{i+c} + a_C i / k`
//! (`B = C - 1`, `i, c > 0`) over the functions the evaluator reaches,
//! checked in scaled integer arithmetic.

use crate::catalog::FlagMonomialLabel;
use crate::error::{Error, Result};
use crate::points::ConfAEvaluator;
use crate::semifield::{common_denominator, q, Rational};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use std::collections::BTreeMap;
use std::sync::Arc;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KeyInstance {
    pub lhs: FlagMonomialLabel,
    pub rhs: FlagMonomialLabel,
    /// The vertex `C`; `B = C - 1`.
    pub c: usize,
    /// Exponent of `B` in `lhs`.
    pub b_exp: u32,
    lhs_reg: usize,
    rhs_reg: Option<usize>,
}

pub struct KeyEqnChecker {
    ev: Arc<ConfAEvaluator>,
    instances: Vec<KeyInstance>,
}

impl KeyEqnChecker {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        let ev = ConfAEvaluator::shared(k, n)?;
        let mut instances = Vec::new();
        for (reg, m) in ev.labels().iter().enumerate() {
            for &c in m.exps().keys() {
                let b = if c == 1 { n } else { c - 1 };
                let i = m.exp(b);
                if i == 0 {
                    continue;
                }
                let mut e: BTreeMap<usize, u32> = m.exps().clone();
                e.remove(&b);
                *e.get_mut(&c).expect("c in support") += i;
                let rhs = FlagMonomialLabel::new(n, e)?;
                let rhs_reg = if rhs.is_pure() {
                    None
                } else {
                    Some(ev.register(&rhs).ok_or_else(|| Error::LabelNotFound(rhs.to_string()))?)
                };
                instances.push(KeyInstance { lhs: m.clone(), rhs, c, b_exp: i, lhs_reg: reg, rhs_reg });
            }
        }
        Ok(KeyEqnChecker { ev, instances })
    }

    pub fn instances(&self) -> &[KeyInstance] {
        &self.instances
    }

    pub fn evaluator(&self) -> &Arc<ConfAEvaluator> {
        &self.ev
    }

    /// Instances violated by the fan-chart point `base` with boundary
    /// distances `a`.
    pub fn violations(&self, base: &[Rational], a: &[Rational]) -> Result<Vec<&KeyInstance>> {
        let k = self.ev.k() as i64;
        let per_k: Vec<Rational> = a.iter().map(|x| x / q(k, 1)).collect();
        let d: BigInt = common_denominator(base.iter().chain(per_k.iter()));
        let scale = |x: &Rational| -> Result<i128> {
            (x.numer() * (&d / x.denom()))
                .to_i128()
                .ok_or_else(|| Error::InvalidParameters("value too large for scaled check".into()))
        };
        let scaled: Vec<i128> = base.iter().map(scale).collect::<Result<_>>()?;
        let a_k: Vec<i128> = per_k.iter().map(scale).collect::<Result<_>>()?;
        let regs = self.ev.eval_scaled(&scaled);
        Ok(self
            .instances
            .iter()
            .filter(|ins| {
                let rhs = ins.rhs_reg.map_or(0, |r| regs[r]);
                regs[ins.lhs_reg] != rhs + ins.b_exp as i128 * a_k[ins.c - 1]
            })
            .collect())
    }

    pub fn holds(&self, base: &[Rational], a: &[Rational]) -> Result<bool> {
        Ok(self.violations(base, a)?.is_empty())
    }
}
