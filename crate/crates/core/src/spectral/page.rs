use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::differential::{contract_and_wedge, d2_ks};
use crate::error::{Error, Result};
use crate::linalg::{binomial, BasisIndex, RatMatrix, Subquotient};
use crate::nilgroup::{CentralExtension, FreeNilpotentSpec};

/// Basis of a cell `Λ^p(Q⊗ℚ) ⊗ Λ^q(A⊗ℚ)`: pairs of subsets, left-major.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellBasis {
    pub left: BasisIndex,
    pub right: BasisIndex,
}

impl CellBasis {
    pub fn len(&self) -> usize {
        self.left.len() * self.right.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn labels(&self) -> Vec<(Vec<usize>, Vec<usize>)> {
        let mut out = Vec::with_capacity(self.len());
        for l in self.left.labels() {
            for r in self.right.labels() {
                out.push((l.clone(), r.clone()));
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub dim: usize,
    pub basis: CellBasis,
}

/// One page of the homological LHS spectral sequence of a central extension.
///
/// Differentials map `(p, q) → (p−2, q+1)` and are stored for every cell with
/// `p ≥ 2`. `actions`, when present, holds the matrices of the acting
/// generators on each cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Page {
    degree_bound: usize,
    cells: BTreeMap<(usize, usize), Cell>,
    differentials: BTreeMap<(usize, usize), RatMatrix>,
    actions: Option<BTreeMap<(usize, usize), Vec<RatMatrix>>>,
}

impl Page {
    fn build(n: usize, a: usize, pairing: &RatMatrix) -> Self {
        let mut cells = BTreeMap::new();
        let mut differentials = BTreeMap::new();
        for p in 0..=n {
            for q in 0..=a {
                let basis = CellBasis { left: BasisIndex::exterior(n, p), right: BasisIndex::exterior(a, q) };
                cells.insert((p, q), Cell { dim: basis.len(), basis });
                if p >= 2 && q < a {
                    differentials.insert((p, q), contract_and_wedge(pairing, n, a, p, q));
                }
            }
        }
        Self { degree_bound: n + a, cells, differentials, actions: None }
    }

    /// The `E²` page with `E²_{p,q} = H_p(Q,ℚ) ⊗ Λ^q(A⊗ℚ)`; torsion in `Q`
    /// and `A` is invisible over ℚ.
    pub fn e2(ext: &CentralExtension) -> Result<Self> {
        ext.validate()?;
        Ok(Self::build(ext.q_rank(), ext.a_rank(), &ext.pairing.to_rat()))
    }

    /// The `E²` page of `γ₂N ↣ N ↠ N/γ₂N` for the free nilpotent group of
    /// class 2 (Kuzmin–Semenov differentials), or the abelian page for class 1.
    pub fn free_nilpotent(spec: &FreeNilpotentSpec) -> Result<Self> {
        spec.validate()?;
        match spec.class {
            1 => Ok(Self::build(spec.rank, 0, &RatMatrix::zeros(0, binomial(spec.rank, 2)))),
            2 => {
                let r = spec.rank;
                let w = binomial(r, 2);
                let mut page = Self::build(r, w, &RatMatrix::zeros(w, w));
                for (&(p, q), d) in page.differentials.iter_mut() {
                    *d = d2_ks(r, p, q);
                }
                Ok(page)
            }
            c => Err(Error::Unsupported(format!("class {c}: only class ≤ 2 pages have known differentials"))),
        }
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn cell(&self, p: usize, q: usize) -> Option<&Cell> {
        self.cells.get(&(p, q))
    }

    pub fn cells(&self) -> impl Iterator<Item = (&(usize, usize), &Cell)> {
        self.cells.iter()
    }

    pub fn dim(&self, p: usize, q: usize) -> usize {
        self.cells.get(&(p, q)).map_or(0, |c| c.dim)
    }

    /// `d²_{p,q}`, or `None` when the target cell is absent.
    pub fn differential(&self, p: usize, q: usize) -> Option<&RatMatrix> {
        self.differentials.get(&(p, q))
    }

    pub fn differentials(&self) -> impl Iterator<Item = (&(usize, usize), &RatMatrix)> {
        self.differentials.iter()
    }

    pub fn actions(&self) -> Option<&BTreeMap<(usize, usize), Vec<RatMatrix>>> {
        self.actions.as_ref()
    }

    pub(crate) fn set_actions(&mut self, actions: BTreeMap<(usize, usize), Vec<RatMatrix>>) {
        self.actions = Some(actions);
    }

    fn rank_out(&self, p: usize, q: usize) -> usize {
        self.differential(p, q).map_or(0, RatMatrix::rank)
    }

    fn rank_in(&self, p: usize, q: usize) -> usize {
        if q == 0 {
            return 0;
        }
        self.differential(p + 2, q - 1).map_or(0, RatMatrix::rank)
    }

    /// `dim E³_{p,q} = dim E²_{p,q} − rank d²_{p,q} − rank d²_{p+2,q−1}`.
    pub fn e3_dim(&self, p: usize, q: usize) -> usize {
        self.dim(p, q) - self.rank_out(p, q) - self.rank_in(p, q)
    }

    /// `ker d²_{p,q} / im d²_{p+2,q−1}` with an explicit quotient basis.
    pub fn e3_subquotient(&self, p: usize, q: usize) -> Result<Subquotient> {
        let dim = self.dim(p, q);
        let kernel = match self.differential(p, q) {
            Some(d) => d.kernel_basis(),
            None => RatMatrix::identity(dim).image_basis(),
        };
        let image = match q.checked_sub(1).and_then(|q1| self.differential(p + 2, q1)) {
            Some(d) => d.image_basis(),
            None => Vec::new(),
        };
        Subquotient::new(dim, &kernel, &image)
    }

    /// Checks `d² ∘ d² = 0` on every composable pair.
    pub fn d_squared_vanishes(&self) -> bool {
        self.differentials.iter().all(|(&(p, q), d)| match self.differential(p - 2, q + 1) {
            Some(next) => (next * d).is_zero(),
            None => true,
        })
    }

    /// Total `E³` dimension in degree `j`.
    pub fn e3_total(&self, j: usize) -> usize {
        (0..=j).map(|p| self.e3_dim(p, j - p)).sum()
    }
}

#[derive(Serialize, Deserialize)]
struct CellJson {
    p: usize,
    q: usize,
    dim: usize,
    basis: Vec<(Vec<usize>, Vec<usize>)>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    action: Option<Vec<RatMatrix>>,
}

#[derive(Serialize, Deserialize)]
struct DifferentialJson {
    p: usize,
    q: usize,
    target: (usize, usize),
    matrix: RatMatrix,
}

#[derive(Serialize, Deserialize)]
struct PageJson {
    degree_bound: usize,
    cells: Vec<CellJson>,
    differentials: Vec<DifferentialJson>,
}

impl Serialize for Page {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let cells = self
            .cells
            .iter()
            .map(|(&(p, q), c)| CellJson {
                p,
                q,
                dim: c.dim,
                basis: c.basis.labels(),
                action: self.actions.as_ref().and_then(|a| a.get(&(p, q)).cloned()),
            })
            .collect();
        let differentials = self
            .differentials
            .iter()
            .map(|(&(p, q), m)| DifferentialJson { p, q, target: (p - 2, q + 1), matrix: m.clone() })
            .collect();
        PageJson { degree_bound: self.degree_bound, cells, differentials }.serialize(s)
    }
}
