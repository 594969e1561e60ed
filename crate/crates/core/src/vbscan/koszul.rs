//! `H_*(ℤⁿ, M)` via the Koszul complex `Λ^p ℚⁿ ⊗ M` with
//! `d(e_I ⊗ x) = Σ_k (−1)^k e_{I∖i_k} ⊗ (g_{i_k} − 1)x`.

use num_traits::Zero;

use super::module::QModuleFD;
use crate::linalg::basis::subsets;
use crate::linalg::{binomial, BasisIndex, Rat, RatMatrix};

/// Matrix of `d_p : Λ^p ⊗ M → Λ^{p−1} ⊗ M` (zero rows for `p = 0`).
pub fn koszul_differential(module: &QModuleFD, p: usize) -> RatMatrix {
    let (n, d) = (module.rank(), module.dim());
    let src = subsets(n, p);
    if p == 0 {
        return RatMatrix::zeros(0, d * src.len());
    }
    let tgt = BasisIndex::exterior(n, p - 1);
    let shifted: Vec<RatMatrix> = module.generators().iter().map(RatMatrix::minus_identity).collect();
    let mut out = RatMatrix::zeros(tgt.len() * d, src.len() * d);
    for (si, set) in src.iter().enumerate() {
        for (k, &g) in set.iter().enumerate() {
            let rest: Vec<usize> = set.iter().copied().filter(|&x| x != g).collect();
            let ti = tgt.position(&rest).expect("subset");
            let sign = if k % 2 == 0 { Rat::from_integer(1.into()) } else { Rat::from_integer((-1).into()) };
            for a in 0..d {
                for b in 0..d {
                    let x = shifted[g].get(a, b);
                    if !x.is_zero() {
                        out.add_to(ti * d + a, si * d + b, &(x * &sign));
                    }
                }
            }
        }
    }
    out
}

/// `dim H_p(ℤⁿ, M)`.
pub fn koszul_homology(module: &QModuleFD, p: usize) -> usize {
    let n = module.rank();
    if p > n {
        return 0;
    }
    let chain = binomial(n, p) * module.dim();
    let out = koszul_differential(module, p).rank();
    let inc = if p < n { koszul_differential(module, p + 1).rank() } else { 0 };
    chain - out - inc
}

/// `dim H_p(ℤⁿ, M)` for `p = 0..=n`, sharing differential ranks.
pub fn koszul_dims(module: &QModuleFD) -> Vec<usize> {
    let n = module.rank();
    let ranks: Vec<usize> =
        (0..=n + 1).map(|p| if p == 0 || p > n { 0 } else { koszul_differential(module, p).rank() }).collect();
    (0..=n).map(|p| binomial(n, p) * module.dim() - ranks[p] - ranks[p + 1]).collect()
}
