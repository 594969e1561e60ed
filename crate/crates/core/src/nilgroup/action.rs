use serde::{Deserialize, Serialize};

use super::free::FreeNilpotentSpec;
use super::hall::HallBasis;
use crate::error::{domain, Error, Result};
use crate::linalg::IntMatrix;

/// Action of `ℤⁿ` on a free nilpotent group, given on `N/N′ ≅ ℤ^r` by `n`
/// pairwise commuting unimodular matrices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NilpotentAction {
    pub target: FreeNilpotentSpec,
    pub generators: Vec<IntMatrix>,
}

pub(crate) fn check_commuting(mats: &[IntMatrix]) -> Result<()> {
    for (i, a) in mats.iter().enumerate() {
        for b in &mats[i + 1..] {
            if a.mul(b)? != b.mul(a)? {
                return domain("generator matrices do not commute");
            }
        }
    }
    Ok(())
}

impl NilpotentAction {
    pub fn new(target: FreeNilpotentSpec, generators: Vec<IntMatrix>) -> Result<Self> {
        let act = Self { target, generators };
        act.validate()?;
        Ok(act)
    }

    pub fn validate(&self) -> Result<()> {
        self.target.validate()?;
        let r = self.target.rank;
        for (i, g) in self.generators.iter().enumerate() {
            if g.rows() != r || g.cols() != r {
                return Err(Error::Shape(format!("generator {i} must be {r}x{r}")));
            }
            if !g.is_unimodular() {
                return domain(format!("generator {i} is not invertible over ℤ"));
            }
        }
        check_commuting(&self.generators)
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    /// Trivial action of `ℤⁿ` on the given group.
    pub fn trivial(target: FreeNilpotentSpec, n: usize) -> Self {
        Self { target, generators: vec![IntMatrix::identity(target.rank); n] }
    }
}

/// Matrices of the generators on `γ_w / γ_{w+1}` in the Hall basis.
pub fn induced_action_on_quotient(act: &NilpotentAction, w: usize) -> Result<Vec<IntMatrix>> {
    act.validate()?;
    if w == 0 || w > act.target.class {
        return domain(format!("layer {w} outside 1..={}", act.target.class));
    }
    if w == 1 {
        return Ok(act.generators.clone());
    }
    let basis = HallBasis::new(&act.target)?;
    act.generators.iter().map(|g| basis.induced_layer_map(g, w)).collect()
}
