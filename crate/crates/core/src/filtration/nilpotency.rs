use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::linalg::{Rat, RatMatrix};
use crate::nilgroup::NilpotentAction;
use crate::spectral::equivariant_page_free;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ActionNilpotencyReport {
    pub operators: Vec<RatMatrix>,
    pub nilpotent: bool,
    /// Least `k ≥ 1` such that every product of `k` factors `g_i − 1` vanishes.
    pub class: Option<usize>,
}

/// Decides whether commuting operators act nilpotently, i.e. the `g_i − 1`
/// are jointly nilpotent.
///
/// Iterates `T_0 = V`, `T_{k+1} = Σ_i (g_i − 1) T_k`; the chain strictly
/// descends until it stalls or reaches zero, so it stops within `dim V` steps.
pub fn is_nilpotent_action(ops: &[RatMatrix]) -> Result<ActionNilpotencyReport> {
    let dim = ops.first().map_or(0, RatMatrix::rows);
    if ops.iter().any(|g| g.rows() != dim || g.cols() != dim) {
        return Err(Error::Shape("operators must be square of a common size".into()));
    }
    for (i, a) in ops.iter().enumerate() {
        for b in &ops[i + 1..] {
            if (a * b) != (b * a) {
                return domain("operators do not commute");
            }
        }
    }
    let shifted: Vec<RatMatrix> = ops.iter().map(RatMatrix::minus_identity).collect();
    let mut current: Vec<Vec<Rat>> = RatMatrix::identity(dim).image_basis();
    let mut k = 0;
    let (nilpotent, class) = loop {
        k += 1;
        let images: Vec<Vec<Rat>> = shifted.iter().flat_map(|s| current.iter().map(move |t| s.mul_vec(t))).collect();
        let next = RatMatrix::from_columns(dim, &images).image_basis();
        if next.is_empty() {
            break (true, Some(k));
        }
        if next.len() == current.len() {
            break (false, None);
        }
        current = next;
    };
    Ok(ActionNilpotencyReport { operators: ops.to_vec(), nilpotent, class })
}

/// Matrices of the generators of `act` on `H_j(N, ℚ)`, block diagonal over
/// the associated graded `⊕_i E³_{i, j−i}` (blocks in increasing `i`).
///
/// Requires class ≤ 2, where `E³ = E^∞`.
pub fn induced_homology_action(act: &NilpotentAction, j: usize) -> Result<Vec<RatMatrix>> {
    if act.target.class > 2 {
        return Err(Error::Unsupported(format!(
            "class {}: the action on homology would need differentials beyond d²",
            act.target.class
        )));
    }
    let page = equivariant_page_free(act)?;
    let actions = page.actions().expect("equivariant page carries actions");
    let mut blocks: Vec<Vec<RatMatrix>> = vec![Vec::new(); act.num_generators()];
    for i in 0..=j {
        let q = j - i;
        if page.cell(i, q).is_none() {
            continue;
        }
        let sq = page.e3_subquotient(i, q)?;
        for (g, mats) in actions[&(i, q)].iter().zip(blocks.iter_mut()) {
            mats.push(sq.induced(g)?);
        }
    }
    Ok(blocks.iter().map(|b| block_diagonal(b)).collect())
}

fn block_diagonal(blocks: &[RatMatrix]) -> RatMatrix {
    let n: usize = blocks.iter().map(RatMatrix::rows).sum();
    let mut out = RatMatrix::zeros(n, n);
    let mut offset = 0;
    for b in blocks {
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                out.set(offset + i, offset + j, b.get(i, j).clone());
            }
        }
        offset += b.rows();
    }
    out
}
