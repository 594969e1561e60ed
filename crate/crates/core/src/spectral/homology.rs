use num_bigint::BigInt;
use serde::Serialize;

use super::page::Page;
use crate::error::{domain, Result};
use crate::linalg::basis::subsets;
use crate::linalg::{binomial, rat, BasisIndex, IntMatrix, RatMatrix};
use crate::nilgroup::{AbelianFG, FreeNilpotentSpec};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellDims {
    pub p: usize,
    pub q: usize,
    pub e2: usize,
    pub e3: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellTorsion {
    pub p: usize,
    pub q: usize,
    pub free_rank: usize,
    #[serde(serialize_with = "serialize_ints")]
    pub torsion: Vec<BigInt>,
}

/// Integral `E³` data. Per-cell torsion is exact; the aggregate is the direct
/// sum of the cells, which is `H_j(N, ℤ)` for free nilpotent groups of class 2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IntegralHomology {
    pub free_rank: usize,
    #[serde(serialize_with = "serialize_ints")]
    pub torsion: Vec<BigInt>,
    pub per_cell: Vec<CellTorsion>,
}

fn serialize_ints<S: serde::Serializer>(xs: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(xs.iter().map(|x| x.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyResult {
    pub j: usize,
    pub rational_dimension: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub integral: Option<IntegralHomology>,
    pub provenance: Vec<CellDims>,
}

/// `H_j(A, ℚ) ≅ Λ^j(A ⊗ ℚ)`.
pub fn abelian_homology(a: &AbelianFG, j: usize) -> HomologyResult {
    let dim = binomial(a.rank, j);
    HomologyResult {
        j,
        rational_dimension: dim,
        integral: None,
        provenance: vec![CellDims { p: j, q: 0, e2: dim, e3: dim }],
    }
}

fn provenance(page: &Page, j: usize) -> Vec<CellDims> {
    (0..=j).map(|p| CellDims { p, q: j - p, e2: page.dim(p, j - p), e3: page.e3_dim(p, j - p) }).collect()
}

/// Sum of `E³` dimensions along the antidiagonal `p + q = j`.
///
/// For a general central extension this is only an upper bound for
/// `dim H_j(G, ℚ)`, since higher differentials are not computed.
pub fn e3_homology(page: &Page, j: usize) -> HomologyResult {
    let provenance = provenance(page, j);
    HomologyResult { j, rational_dimension: provenance.iter().map(|c| c.e3).sum(), integral: None, provenance }
}

fn integral_cells(page: &Page, j: usize) -> Result<IntegralHomology> {
    let mut per_cell = Vec::new();
    for p in 0..=j {
        let q = j - p;
        if page.dim(p, q) == 0 {
            continue;
        }
        // ker d_out is saturated, so the torsion of E³ is the torsion of coker d_in
        let torsion = match q.checked_sub(1).and_then(|q1| page.differential(p + 2, q1)) {
            Some(d) => IntMatrix::from_rat(d)?.smith_normal_form().torsion(),
            None => Vec::new(),
        };
        per_cell.push(CellTorsion { p, q, free_rank: page.e3_dim(p, q), torsion });
    }
    let mut torsion: Vec<BigInt> = per_cell.iter().flat_map(|c| c.torsion.iter().cloned()).collect();
    torsion.sort();
    Ok(IntegralHomology { free_rank: per_cell.iter().map(|c| c.free_rank).sum(), torsion, per_cell })
}

/// `H_j` of the free nilpotent group of rank `r` and class 2 via `E³ = E^∞`.
pub fn homology_free_nilpotent_c2(r: usize, j: usize, integral: bool) -> Result<HomologyResult> {
    let page = Page::free_nilpotent(&FreeNilpotentSpec::new(r, 2)?)?;
    let mut result = e3_homology(&page, j);
    if integral {
        result.integral = Some(integral_cells(&page, j)?);
    }
    Ok(result)
}

/// Rational Betti numbers `b_0 … b_h` of a free nilpotent group of class ≤ 2.
pub fn betti_numbers(spec: &FreeNilpotentSpec) -> Result<Vec<usize>> {
    let page = Page::free_nilpotent(spec)?;
    let h = spec.hirsch_length();
    Ok((0..=h).map(|j| page.e3_total(j)).collect())
}

/// Graded pieces of `H₂(N, ℚ)` for a free nilpotent group of class 2:
/// `F₁H₂ ≅ (V ⊗ N′) / ⟨x⊗[y,z] + y⊗[z,x] + z⊗[x,y]⟩` and
/// `F₂H₂/F₁H₂ ≅ ker(Λ²V → N′)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct H2Pieces {
    pub f1_dim: usize,
    pub f2_over_f1_dim: usize,
}

impl H2Pieces {
    pub fn total(&self) -> usize {
        self.f1_dim + self.f2_over_f1_dim
    }
}

pub fn h2_class2(spec: &FreeNilpotentSpec) -> Result<H2Pieces> {
    spec.validate()?;
    if spec.class != 2 {
        return domain(format!("H₂ pieces need class 2, got class {}", spec.class));
    }
    let r = spec.rank;
    let commutators = BasisIndex::exterior(r, 2);
    let w = commutators.len();
    // [x, y] in the basis {[x_i, x_j] : i < j}
    let bracket = |x: usize, y: usize| -> (usize, i64) {
        if x < y {
            (commutators.position(&[x, y]).unwrap(), 1)
        } else {
            (commutators.position(&[y, x]).unwrap(), -1)
        }
    };
    let triples = subsets(r, 3);
    let mut relations = RatMatrix::zeros(r * w, triples.len());
    for (col, t) in triples.iter().enumerate() {
        let (x, y, z) = (t[0], t[1], t[2]);
        for (v, (a, b)) in [(x, (y, z)), (y, (z, x)), (z, (x, y))] {
            let (k, s) = bracket(a, b);
            relations.add_to(v * w + k, col, &rat(s));
        }
    }
    let f1_dim = r * w - relations.rank();
    // Λ²V → N′, x∧y ↦ [x, y], is the identity in these bases
    let commutator_map = RatMatrix::identity(w);
    let f2_over_f1_dim = w - commutator_map.rank();
    Ok(H2Pieces { f1_dim, f2_over_f1_dim })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_binomials() {
        assert_eq!(abelian_homology(&AbelianFG::free(3), 2).rational_dimension, 3);
        assert_eq!(abelian_homology(&AbelianFG::free(4), 2).rational_dimension, 6);
        assert_eq!(abelian_homology(&AbelianFG::new(2, vec![2]).unwrap(), 3).rational_dimension, 0);
    }

    #[test]
    fn heisenberg_betti() {
        let spec = FreeNilpotentSpec::new(2, 2).unwrap();
        assert_eq!(betti_numbers(&spec).unwrap(), vec![1, 2, 2, 1]);
    }

    #[test]
    fn low_degrees() {
        for r in 1..=4 {
            assert_eq!(homology_free_nilpotent_c2(r, 0, false).unwrap().rational_dimension, 1);
            assert_eq!(homology_free_nilpotent_c2(r, 1, false).unwrap().rational_dimension, r);
        }
    }

    #[test]
    fn heisenberg_integral_is_torsion_free() {
        for j in 0..=3 {
            let h = homology_free_nilpotent_c2(2, j, true).unwrap();
            let int = h.integral.unwrap();
            assert!(int.torsion.is_empty());
            assert_eq!(int.free_rank, h.rational_dimension);
        }
    }

    #[test]
    fn h2_pieces() {
        let p = h2_class2(&FreeNilpotentSpec::new(2, 2).unwrap()).unwrap();
        assert_eq!(p, H2Pieces { f1_dim: 2, f2_over_f1_dim: 0 });
        let p = h2_class2(&FreeNilpotentSpec::new(3, 2).unwrap()).unwrap();
        assert_eq!(p.f2_over_f1_dim, 0);
        assert_eq!(p.f1_dim, 8);
        for r in 2..=4 {
            let spec = FreeNilpotentSpec::new(r, 2).unwrap();
            let b2 = homology_free_nilpotent_c2(r, 2, false).unwrap().rational_dimension;
            assert_eq!(h2_class2(&spec).unwrap().total(), b2);
        }
        assert!(h2_class2(&FreeNilpotentSpec::new(3, 3).unwrap()).is_err());
    }
}
