use serde::Serialize;

use crate::error::Result;
use crate::sigma::{m_tame_witness, tame_requirement, ConeUnion, NonTameWitness};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisReport {
    pub c: usize,
    pub n: usize,
    pub requirement: usize,
    pub holds: bool,
    pub verdict: String,
    /// Degrees `j` with `vb_j` guaranteed finite (`0..=n` when the hypothesis holds).
    pub guaranteed_finite: Vec<usize>,
    /// Least `m` for which `N/N′ ⊗ ℚ` is not `m`-tame.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fails_at_m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<NonTameWitness>,
}

/// Checks `2(c(n−1)+1)`-tameness of the module whose `Σ^c` is `sc`.
///
/// Tameness is monotone in `m`, so failure is reported at the least failing `m`.
pub fn hypothesis_report(c: usize, n: usize, sc: &ConeUnion) -> Result<HypothesisReport> {
    let requirement = tame_requirement(c, n);
    let mut report = HypothesisReport {
        c,
        n,
        requirement,
        holds: true,
        verdict: format!("vb_j finite for j ≤ {n}"),
        guaranteed_finite: (0..=n).collect(),
        fails_at_m: None,
        witness: None,
    };
    if m_tame_witness(sc, requirement)?.is_none() {
        return Ok(report);
    }
    for m in 2..=requirement {
        if let Some(w) = m_tame_witness(sc, m)? {
            report.holds = false;
            report.verdict = format!("hypothesis fails: not {m}-tame");
            report.guaranteed_finite.clear();
            report.fails_at_m = Some(m);
            report.witness = Some(w);
            break;
        }
    }
    Ok(report)
}
