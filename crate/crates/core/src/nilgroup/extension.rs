use serde::{Deserialize, Serialize};

use super::abelian::AbelianFG;
use super::free::FreeNilpotentSpec;
use crate::error::{domain, Result};
use crate::linalg::{binomial, IntMatrix};

/// Central extension `A ↣ G ↠ Q` described by its commutator pairing
/// `Λ²(Q/torsion) → A/torsion`.
///
/// Column `(i, j)` (`i < j`, lexicographic) holds the coordinates of the
/// commutator `[x̃_i, x̃_j]` of lifts of the `i`-th and `j`-th generators of
/// `Q`; this realizes `ρ ∩ −` on `H₂(Q, ℤ) ≅ Λ²Q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralExtension {
    pub q: AbelianFG,
    pub a: AbelianFG,
    pub pairing: IntMatrix,
}

impl CentralExtension {
    pub fn new(q: AbelianFG, a: AbelianFG, pairing: IntMatrix) -> Result<Self> {
        let ext = Self { q, a, pairing };
        ext.validate()?;
        Ok(ext)
    }

    pub fn validate(&self) -> Result<()> {
        self.q.validate()?;
        self.a.validate()?;
        let (rows, cols) = (self.pairing.rows(), self.pairing.cols());
        if cols != binomial(self.q.rank, 2) || rows != self.a.rank {
            return domain(format!(
                "pairing must be {}x{} for Q of rank {} and A of rank {}, got {rows}x{cols}",
                self.a.rank,
                binomial(self.q.rank, 2),
                self.q.rank,
                self.a.rank
            ));
        }
        Ok(())
    }

    pub fn q_rank(&self) -> usize {
        self.q.rank
    }

    pub fn a_rank(&self) -> usize {
        self.a.rank
    }

    /// `γ₂ N ↣ N ↠ N/γ₂ N` for a free nilpotent group of class 2.
    ///
    /// `A` gets the basis `[x_i, x_j]` (`i < j`), so the pairing is the
    /// identity. The Hall basis uses `[x_j, x_i]` instead; the two bases differ
    /// by an overall sign, which leaves every matrix of an induced action
    /// unchanged.
    pub fn from_free_class2(spec: &FreeNilpotentSpec) -> Result<Self> {
        spec.validate()?;
        if spec.class != 2 {
            return domain(format!("expected class 2, got class {}", spec.class));
        }
        let w = binomial(spec.rank, 2);
        Self::new(AbelianFG::free(spec.rank), AbelianFG::free(w), IntMatrix::identity(w))
    }
}

impl CentralExtension {
    /// `γ_c N ↣ N ↠ N/γ_c N` for free nilpotent groups of class at most 2;
    /// class 1 gives the split extension with trivial kernel.
    pub fn for_free_nilpotent(spec: &FreeNilpotentSpec) -> Result<Self> {
        match spec.class {
            1 => Self::new(AbelianFG::free(spec.rank), AbelianFG::free(0), IntMatrix::zeros(0, binomial(spec.rank, 2))),
            2 => Self::from_free_class2(spec),
            c => domain(format!("class {c} is not a central extension of an abelian group")),
        }
    }
}

/// The integral Heisenberg group as `ℤ ↣ H ↠ ℤ²`.
pub fn heisenberg() -> CentralExtension {
    CentralExtension { q: AbelianFG::free(2), a: AbelianFG::free(1), pairing: IntMatrix::from_i64(&[&[1]]) }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heisenberg_shape() {
        let h = heisenberg();
        assert!(h.validate().is_ok());
        assert_eq!((h.q_rank(), h.a_rank()), (2, 1));
        assert_eq!(h.pairing.rank(), 1);
    }

    #[test]
    fn heisenberg_is_free_class_two_on_two_generators() {
        let spec = FreeNilpotentSpec::new(2, 2).unwrap();
        assert_eq!(CentralExtension::from_free_class2(&spec).unwrap(), heisenberg());
    }

    #[test]
    fn pairing_shape_checked() {
        let bad = CentralExtension::new(AbelianFG::free(3), AbelianFG::free(1), IntMatrix::zeros(1, 2));
        assert!(bad.is_err());
        assert!(CentralExtension::from_free_class2(&FreeNilpotentSpec::new(2, 3).unwrap()).is_err());
    }
}
