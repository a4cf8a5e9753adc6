//! Comparison of a tropical point with the lattices of a positive lift.

use super::config::config_from_flags;
use super::ftrop::{f_trop_certified, valuation_minimizing_check, PosConfigReport};
use super::lattice::{lattice_distance, LatticeRep};
use crate::error::{Error, Result};
use crate::points::{chart_triangulation, lift_to_series, to_fan_chart, TropPoint};
use crate::semifield::rational_to_json;
use serde_json::{json, Value};

#[derive(Clone, Debug)]
pub struct OracleReport {
    pub hive: bool,
    pub independent: bool,
    pub posconfig: PosConfigReport,
    /// Chart labels whose coordinate differs from the searched value.
    pub coordinate_mismatches: Vec<String>,
    /// Pairs `(p, q, i)` where the edge function differs from `ω_{k-i} · d`.
    pub edge_mismatches: Vec<String>,
    pub max_bound: u32,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.hive
            && self.independent
            && self.posconfig.passed()
            && self.coordinate_mismatches.is_empty()
            && self.edge_mismatches.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "passed": self.passed(),
            "hive": self.hive,
            "independent": self.independent,
            "posconfig_checked": self.posconfig.checked,
            "not_minimizing": self.posconfig.not_minimizing,
            "not_positive": self.posconfig.not_positive,
            "coordinate_mismatches": self.coordinate_mismatches,
            "edge_mismatches": self.edge_mismatches,
            "max_bound": self.max_bound,
        })
    }
}

/// Builds the lattices of the monomial lift of `x` and checks the
/// posconfig conditions on the triangles of its chart, every chart
/// coordinate against the searched value, and every edge function against
/// the lattice distance.
pub fn building_oracle(x: &TropPoint, max_bound: u32) -> Result<OracleReport> {
    let k = x
        .chart
        .labels()
        .iter()
        .find_map(|l| l.as_flag().map(|m| m.k()))
        .ok_or_else(|| Error::ChartMismatch(x.chart.chart_id().to_string()))?;
    let x = to_fan_chart(x, k)?;
    let cfg = config_from_flags(&lift_to_series(&x), k)?;
    let lats = &cfg.lattices;
    let tri = chart_triangulation(&x.chart).ok_or_else(|| Error::ChartMismatch(x.chart.chart_id().to_string()))?;
    let posconfig = valuation_minimizing_check(lats, tri.triangles(), max_bound)?;
    let mut used = 1;
    let mut coordinate_mismatches = Vec::new();
    for (l, v) in x.chart.labels().iter().zip(&x.coords) {
        let m = l.as_flag().ok_or_else(|| Error::ChartMismatch(format!("label {l} is not a flag function")))?;
        let (trio, exps): (Vec<&LatticeRep>, Vec<u32>) = m.exps().iter().map(|(&p, &e)| (&lats[p - 1], e)).unzip();
        let (value, b) = f_trop_certified(&trio, &exps, max_bound)?;
        used = used.max(b);
        if &value != v {
            coordinate_mismatches.push(format!("{l}: chart {v}, search {value}"));
        }
    }
    let n = lats.len();
    let mut edge_mismatches = Vec::new();
    for p in 1..=n {
        for r in p + 1..=n {
            let d = lattice_distance(&lats[p - 1], &lats[r - 1])?;
            for i in 1..k as u32 {
                let (value, b) = f_trop_certified(&[&lats[p - 1], &lats[r - 1]], &[i, k as u32 - i], max_bound)?;
                used = used.max(b);
                let expect = d.omega(k - i as usize);
                if value != expect {
                    edge_mismatches.push(format!(
                        "({p},{r},{i}): search {}, distance {}",
                        rational_to_json(&value),
                        rational_to_json(&expect)
                    ));
                }
            }
        }
    }
    Ok(OracleReport {
        hive: cfg.hive,
        independent: cfg.independent,
        posconfig,
        coordinate_mismatches,
        edge_mismatches,
        max_bound: used,
    })
}
