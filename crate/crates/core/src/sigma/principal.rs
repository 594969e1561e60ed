//! Σ-complements of cyclic modules `ℚ[ℤⁿ]/(f)`.
//!
//! `[v] ∉ Σ` exactly when `⟨v, ·⟩` attains its minimum over `supp f` at two
//! or more points, i.e. when the minimizing face of the Newton polytope has at
//! least two vertices.

use serde::Serialize;

use super::cone::{Cone, ConeUnion};
use super::laurent::{CyclicModuleSpec, LaurentPoly};
use super::lp::{feasible_point, Constraint, Relation};
use crate::error::{domain, Result};
use crate::linalg::Rat;

fn int_vec(a: &[i64]) -> Vec<Rat> {
    a.iter().map(|&x| Rat::from_integer(x.into())).collect()
}

fn in_hull(p: &[i64], others: &[&Vec<i64>]) -> bool {
    let k = others.len();
    if k == 0 {
        return false;
    }
    let mut cons = Vec::new();
    for (d, &target) in p.iter().enumerate() {
        let row = others.iter().map(|q| Rat::from_integer(q[d].into())).collect();
        cons.push(Constraint::new(row, Relation::Eq, Rat::from_integer(target.into())));
    }
    cons.push(Constraint::new(vec![Rat::from_integer(1.into()); k], Relation::Eq, Rat::from_integer(1.into())));
    for i in 0..k {
        let mut e = vec![Rat::from_integer(0.into()); k];
        e[i] = Rat::from_integer(1.into());
        cons.push(Constraint::new(e, Relation::Ge, Rat::from_integer(0.into())));
    }
    feasible_point(&cons, k).is_some()
}

/// Vertices of the convex hull of `supp f`, in lexicographic order.
pub fn newton_polytope(f: &LaurentPoly) -> Result<Vec<Vec<i64>>> {
    if f.is_zero() {
        return domain("the zero polynomial has no Newton polytope");
    }
    let support = f.support();
    Ok(support
        .iter()
        .enumerate()
        .filter(|&(i, p)| {
            let others: Vec<&Vec<i64>> = support.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, q)| q).collect();
            !in_hull(p, &others)
        })
        .map(|(_, p)| p.clone())
        .collect())
}

/// `Σ^c` of `ℚ[ℤⁿ]/(f)` as the union, over vertex pairs `p, q`, of the cones
/// `{v : ⟨v, p − q⟩ = 0, ⟨v, u − p⟩ ≥ 0 for all vertices u}`.
pub fn sigma_complement_principal(f: &LaurentPoly) -> Result<ConeUnion> {
    let vertices = newton_polytope(f)?;
    let n = f.nvars();
    let mut cones = Vec::new();
    for (i, p) in vertices.iter().enumerate() {
        for q in &vertices[i + 1..] {
            let diff: Vec<i64> = p.iter().zip(q).map(|(a, b)| a - b).collect();
            let ge = vertices
                .iter()
                .filter(|u| *u != p && *u != q)
                .map(|u| int_vec(&u.iter().zip(p).map(|(a, b)| a - b).collect::<Vec<_>>()))
                .collect();
            cones.push(Cone::new(n, vec![int_vec(&diff)], ge)?);
        }
    }
    Ok(ConeUnion::new(cones)?.canonical())
}

/// `Σ^c` of a cyclic module, when an exact description is available.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum SigmaComplement {
    Exact {
        cones: ConeUnion,
    },
    /// Non-principal ideal: only direction-wise witness search applies.
    Unresolved {
        generators: usize,
    },
}

impl SigmaComplement {
    pub fn exact(&self) -> Option<&ConeUnion> {
        match self {
            Self::Exact { cones } => Some(cones),
            Self::Unresolved { .. } => None,
        }
    }
}

/// `I = 0` gives the whole sphere, a unit in `I` gives `A = 0` and the empty
/// set, and a principal ideal is handled by [`sigma_complement_principal`].
pub fn sigma_complement(spec: &CyclicModuleSpec) -> Result<SigmaComplement> {
    spec.validate()?;
    let cones = if spec.ideal.is_empty() {
        ConeUnion::whole(spec.nvars)
    } else if spec.ideal.iter().any(LaurentPoly::is_unit) {
        ConeUnion::empty()
    } else if let [f] = spec.ideal.as_slice() {
        sigma_complement_principal(f)?
    } else {
        return Ok(SigmaComplement::Unresolved { generators: spec.ideal.len() });
    };
    Ok(SigmaComplement::Exact { cones })
}
