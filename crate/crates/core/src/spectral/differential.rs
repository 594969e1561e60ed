//! The `d²` differential of the LHS spectral sequence of a central extension.
//!
//! On `E²_{p,q} = Λ^p(Q⊗ℚ) ⊗ Λ^q(A⊗ℚ)` the differential is
//!
//! ```text
//! d²(e_{i_1}∧…∧e_{i_p} ⊗ a) = Σ_{k<l} (−1)^{k+l−1} e_{i_1}∧…ê_{i_k}…ê_{i_l}…∧e_{i_p} ⊗ ρ(e_{i_k}∧e_{i_l}) ∧ a
//! ```
//!
//! with positions `k, l` counted from 1 and `ρ` the commutator pairing. For
//! `p = 2` this is `x ⊗ a ↦ (ρ ∩ x) ∧ a`; for free nilpotent groups of class 2
//! the pairing is the identity and the formula is the Kuzmin–Semenov one.

use num_traits::Zero;

use crate::error::Result;
use crate::linalg::basis::{subsets, wedge_insert};
use crate::linalg::{binomial, rat, BasisIndex, RatMatrix};
use crate::nilgroup::CentralExtension;

/// Contracts the `Λ^p` factor against the 2-form `pairing` and wedges the
/// result into the `Λ^q` factor: `Λ^p ℚ^n ⊗ Λ^q ℚ^a → Λ^{p−2} ℚ^n ⊗ Λ^{q+1} ℚ^a`.
///
/// `pairing` is `a × C(n, 2)`. Bases are left-major products of sorted subsets.
pub(crate) fn contract_and_wedge(pairing: &RatMatrix, n: usize, a: usize, p: usize, q: usize) -> RatMatrix {
    let src_dim = binomial(n, p) * binomial(a, q);
    if p < 2 {
        return RatMatrix::zeros(0, src_dim);
    }
    let src_left = subsets(n, p);
    let src_right = subsets(a, q);
    let tgt_left = BasisIndex::exterior(n, p - 2);
    let tgt_right = BasisIndex::exterior(a, q + 1);
    let pairs = BasisIndex::exterior(n, 2);
    let mut out = RatMatrix::zeros(tgt_left.len() * tgt_right.len(), src_dim);
    for (li, set) in src_left.iter().enumerate() {
        for k in 0..p {
            for l in k + 1..p {
                // 0-based positions: (−1)^{(k+1)+(l+1)−1}
                let sign = if (k + l + 1) % 2 == 0 { 1 } else { -1 };
                let rest: Vec<usize> =
                    set.iter().enumerate().filter(|&(i, _)| i != k && i != l).map(|(_, &x)| x).collect();
                let rest_idx = tgt_left.position(&rest).expect("subset of a subset");
                let pair_col = pairs.position(&[set[k], set[l]]).expect("sorted pair");
                for t in 0..a {
                    let coeff = pairing.get(t, pair_col);
                    if coeff.is_zero() {
                        continue;
                    }
                    for (ri, wedge) in src_right.iter().enumerate() {
                        let Some((merged, s)) = wedge_insert(t, wedge) else { continue };
                        let row = rest_idx * tgt_right.len() + tgt_right.position(&merged).expect("subset");
                        let col = li * src_right.len() + ri;
                        out.add_to(row, col, &(coeff * rat(sign * s)));
                    }
                }
            }
        }
    }
    out
}

/// Matrix of `d²_{p,q} : E²_{p,q} → E²_{p−2,q+1}` for a central extension.
///
/// For `p < 2` the target cell does not exist and the result is the `0 × dim`
/// zero map.
pub fn d2_central(ext: &CentralExtension, p: usize, q: usize) -> Result<RatMatrix> {
    ext.validate()?;
    Ok(contract_and_wedge(&ext.pairing.to_rat(), ext.q_rank(), ext.a_rank(), p, q))
}

/// Kuzmin–Semenov differential for the free nilpotent group of class 2 and
/// rank `r`: `Λ^p V ⊗ Λ^q W → Λ^{p−2} V ⊗ Λ^{q+1} W` with `V = ℚ^r`,
/// `W = Λ²V` and `[a_k, a_l] ↦ a_k ∧ a_l`.
pub fn d2_ks(r: usize, p: usize, q: usize) -> RatMatrix {
    let w = binomial(r, 2);
    contract_and_wedge(&RatMatrix::identity(w), r, w, p, q)
}
