//! Benchmark fixtures.

use vbetti_core::linalg::IntMatrix;
use vbetti_core::nilgroup::{FreeNilpotentSpec, NilpotentAction};
use vbetti_core::sigma::{sigma_complement_principal, ConeUnion, LaurentPoly};

/// Deterministic dense integer matrix with entries in `-5..=5`.
pub fn dense_int_matrix(rows: usize, cols: usize) -> IntMatrix {
    let mut state = 0x2545_f491_u64;
    let data: Vec<Vec<i64>> = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    ((state >> 33) % 11) as i64 - 5
                })
                .collect()
        })
        .collect();
    let refs: Vec<&[i64]> = data.iter().map(Vec::as_slice).collect();
    IntMatrix::from_i64(&refs)
}

pub fn free_class2(rank: usize) -> FreeNilpotentSpec {
    FreeNilpotentSpec::new(rank, 2).expect("valid spec")
}

/// The Anosov automorphism `[[2,1],[1,1]]` acting on the Heisenberg group.
pub fn heisenberg_anosov() -> NilpotentAction {
    NilpotentAction::new(free_class2(2), vec![IntMatrix::from_i64(&[&[2, 1], &[1, 1]])]).expect("valid action")
}

/// `Σ^c` of `1 + t + s`, three rays.
pub fn triangle_complement() -> ConeUnion {
    let f = LaurentPoly::from_int_terms(2, &[(1, &[0, 0]), (1, &[1, 0]), (1, &[0, 1])]).expect("valid polynomial");
    sigma_complement_principal(&f).expect("nonzero polynomial")
}

/// `Σ^c` of `1 + t + s + t s + t² s⁻¹`, a larger fan.
pub fn pentagon_complement() -> ConeUnion {
    let f = LaurentPoly::from_int_terms(2, &[(1, &[0, 0]), (1, &[1, 0]), (1, &[0, 1]), (1, &[1, 1]), (1, &[2, -1])])
        .expect("valid polynomial");
    sigma_complement_principal(&f).expect("nonzero polynomial")
}
