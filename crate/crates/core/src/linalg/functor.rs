//! Exterior and tensor power functors on matrices.

use super::basis::subsets;
use super::matrix::RatMatrix;

/// Matrix of `Λ^k M : Λ^k ℚ^cols → Λ^k ℚ^rows` in sorted-subset bases.
///
/// The entry at `(I, J)` is the minor of `M` on rows `I` and columns `J`.
/// When `k` exceeds both dimensions the result is `0 × 0`.
pub fn exterior_power_map(m: &RatMatrix, k: usize) -> RatMatrix {
    let row_sets = subsets(m.rows(), k);
    let col_sets = subsets(m.cols(), k);
    let mut out = RatMatrix::zeros(row_sets.len(), col_sets.len());
    for (a, rs) in row_sets.iter().enumerate() {
        for (b, cs) in col_sets.iter().enumerate() {
            out.set(a, b, m.submatrix(rs, cs).determinant());
        }
    }
    out
}

/// `s`-fold Kronecker power; `s = 0` gives the `1 × 1` identity.
pub fn tensor_power_map(m: &RatMatrix, s: usize) -> RatMatrix {
    (0..s).fold(RatMatrix::identity(1), |acc, _| acc.kron(m))
}
