use serde::Serialize;

use super::koszul::koszul_dims;
use super::module::{power_subgroup, QModuleFD};
use crate::error::{domain, Error, Result};
use crate::filtration::induced_homology_action;
use crate::linalg::{binomial, RatMatrix};
use crate::nilgroup::NilpotentAction;

/// `lcm(1, …, 8)`: every root of unity of order ≤ 8 becomes 1 in `Q^840`.
pub const REFERENCE_INDEX: u64 = 840;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanTerm {
    pub p: usize,
    pub q: usize,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub m: u64,
    pub total: usize,
    pub terms: Vec<ScanTerm>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanVerdict {
    /// Every scanned entry is at most the reference entry.
    pub bounded: bool,
    pub reference_m: u64,
    pub reference_total: usize,
}

/// `Σ_p dim H_p(Q^m, H_{j−p}(N, ℚ))` for `m = 1..=m_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub j: usize,
    pub m_range: (u64, u64),
    pub rows: Vec<ScanRow>,
    pub observed_sup: usize,
    pub verdict: ScanVerdict,
}

impl ScanReport {
    pub fn totals(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.total).collect()
    }

    pub fn is_constant(&self) -> bool {
        self.rows.windows(2).all(|w| w[0].total == w[1].total)
    }
}

fn row(modules: &[QModuleFD], j: usize, m: u64) -> Result<ScanRow> {
    let mut terms = Vec::new();
    for (q, module) in modules.iter().enumerate().take(j + 1) {
        let p = j - q;
        let dims = koszul_dims(&power_subgroup(module, m)?);
        terms.push(ScanTerm { p, q, dim: dims.get(p).copied().unwrap_or(0) });
    }
    terms.sort_by_key(|t| t.p);
    Ok(ScanRow { m, total: terms.iter().map(|t| t.dim).sum(), terms })
}

/// Scans the `E²` totals of `Q^m ⋉ N` over `m = 1..=m_max`, with
/// `H_q(N, ℚ)` carrying the action induced by `act` (class ≤ 2).
pub fn vb_scan(act: &NilpotentAction, j: usize, m_max: u64) -> Result<ScanReport> {
    if m_max == 0 {
        return domain("m_max must be at least 1");
    }
    if act.target.class > 2 {
        return Err(Error::Unsupported(format!(
            "class {}: homology with its action is only computed for class ≤ 2",
            act.target.class
        )));
    }
    if act.num_generators() == 0 {
        return domain("the acting group needs at least one generator");
    }
    let modules = (0..=j)
        .map(|q| {
            let mats: Vec<RatMatrix> = induced_homology_action(act, q)?;
            QModuleFD::new(mats[0].rows(), mats)
        })
        .collect::<Result<Vec<_>>>()?;
    let rows = (1..=m_max).map(|m| row(&modules, j, m)).collect::<Result<Vec<_>>>()?;
    let reference = row(&modules, j, REFERENCE_INDEX)?;
    let observed_sup = rows.iter().map(|r| r.total).max().unwrap_or(0);
    let verdict = ScanVerdict {
        bounded: observed_sup <= reference.total,
        reference_m: REFERENCE_INDEX,
        reference_total: reference.total,
    };
    Ok(ScanReport { j, m_range: (1, m_max), rows, observed_sup, verdict })
}

/// `C(h, j)`, the bound `dim H_j(G, ℚ) ≤ C(h(G), j)` in terms of Hirsch length.
pub fn hirsch_bound(h: usize, j: usize) -> usize {
    binomial(h, j)
}
