use num_traits::Zero;
use serde::Serialize;

use super::cone::{Cone, ConeUnion};
use super::lp::{feasible_point, Constraint, Relation};
use crate::error::{domain, Result};
use crate::linalg::{format_rat, Rat};

/// `m` nonzero directions of `Σ^c` summing to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonTameWitness {
    /// Index into the union's cones for each vector.
    pub cones: Vec<usize>,
    pub vectors: Vec<Vec<Rat>>,
}

impl Serialize for NonTameWitness {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out {
            cones: Vec<usize>,
            vectors: Vec<Vec<String>>,
        }
        let vectors = self.vectors.iter().map(|v| v.iter().map(format_rat).collect()).collect();
        Out { cones: self.cones.clone(), vectors }.serialize(s)
    }
}

/// `2(c(n−1)+1)`, the tameness needed for `vb_j` to be finite for `j ≤ n`
/// when `N` has class `c`.
pub fn tame_requirement(c: usize, n: usize) -> usize {
    2 * (c * n.saturating_sub(1) + 1)
}

/// `k`-subsets of `0..n` in lexicographic order.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    crate::linalg::basis::subsets(n, k)
}

fn split(vectors: &mut Vec<Vec<Rat>>, cones: &mut Vec<usize>, m: usize) {
    // v = (v/k) + … + (v/k) keeps the sum and the cone
    let parts = m - vectors.len() + 1;
    let k = Rat::from_integer((parts as i64).into());
    let first: Vec<Rat> = vectors[0].iter().map(|x| x / &k).collect();
    vectors[0] = first.clone();
    for _ in 1..parts {
        vectors.insert(0, first.clone());
        cones.insert(0, cones[0]);
    }
}

/// Searches for nonzero `v₁, …, v_m ∈ Σ^c` with `v₁ + … + v_m = 0`.
///
/// A cone with nonzero lineality space holds some `±v` and fails already at
/// `m = 2`. In a pointed cone nonzero vectors never sum to zero, so vectors
/// from a common cone can be merged: a solution exists iff some set `T` of
/// `min(m, #cones)` cones admits `v_i ∈ C_i`, not all zero, with `Σ v_i = 0`.
/// `Σ_i 1ᵀG_i v_i ≥ 1` normalizes "not all zero" (exact for pointed cones),
/// so each `T` is one exact LP. Shorter solutions are padded by splitting a
/// vector into equal parts.
pub fn m_tame_witness(sc: &ConeUnion, m: usize) -> Result<Option<NonTameWitness>> {
    if m < 2 {
        return domain(format!("tameness is defined for m ≥ 2, got {m}"));
    }
    let Some(n) = sc.dim() else { return Ok(None) };
    let cones: Vec<(usize, &Cone)> = sc.cones().iter().enumerate().filter(|(_, c)| !c.is_trivial()).collect();
    for &(ci, cone) in &cones {
        if let Some(v) = cone.lineality_element() {
            let neg: Vec<Rat> = v.iter().map(|x| -x).collect();
            let mut vectors = vec![v, neg];
            let mut idx = vec![ci, ci];
            split(&mut vectors, &mut idx, m);
            return Ok(Some(NonTameWitness { cones: idx, vectors }));
        }
    }
    let size = m.min(cones.len());
    for choice in subsets(cones.len(), size) {
        let total = size * n;
        let mut cons: Vec<Constraint> = Vec::new();
        let mut normal = vec![Rat::zero(); total];
        for (slot, &k) in choice.iter().enumerate() {
            let cone = cones[k].1;
            cons.extend(cone.constraints(slot * n, total));
            for row in cone.inequalities() {
                for (d, x) in row.iter().enumerate() {
                    normal[slot * n + d] += x;
                }
            }
        }
        cons.push(Constraint::new(normal, Relation::Ge, Rat::from_integer(1.into())));
        for d in 0..n {
            let mut coeffs = vec![Rat::zero(); total];
            for slot in 0..size {
                coeffs[slot * n + d] = Rat::from_integer(1.into());
            }
            cons.push(Constraint::new(coeffs, Relation::Eq, Rat::zero()));
        }
        if let Some(x) = feasible_point(&cons, total) {
            let mut vectors = Vec::new();
            let mut idx = Vec::new();
            for (slot, v) in x.chunks(n).enumerate() {
                if v.iter().any(|t| !t.is_zero()) {
                    vectors.push(v.to_vec());
                    idx.push(cones[choice[slot]].0);
                }
            }
            split(&mut vectors, &mut idx, m);
            return Ok(Some(NonTameWitness { cones: idx, vectors }));
        }
    }
    Ok(None)
}

/// Whether every `m` nonzero directions summing to zero include one in `Σ`,
/// where `sc` describes `Σ^c`.
pub fn m_tame(sc: &ConeUnion, m: usize) -> Result<bool> {
    Ok(m_tame_witness(sc, m)?.is_none())
}
