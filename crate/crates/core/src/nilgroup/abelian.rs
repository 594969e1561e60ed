use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

/// Finitely generated abelian group `ℤ^rank ⊕ ⊕ ℤ/d_i` with `d_1 | d_2 | …`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianFG {
    pub rank: usize,
    #[serde(default)]
    pub invariant_factors: Vec<u64>,
}

impl AbelianFG {
    pub fn new(rank: usize, invariant_factors: Vec<u64>) -> Result<Self> {
        let g = Self { rank, invariant_factors };
        g.validate()?;
        Ok(g)
    }

    pub fn free(rank: usize) -> Self {
        Self { rank, invariant_factors: Vec::new() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.invariant_factors.iter().any(|&d| d < 2) {
            return domain("invariant factors must be at least 2");
        }
        if self.invariant_factors.windows(2).any(|w| w[1] % w[0] != 0) {
            return domain("invariant factors must divide one another in order");
        }
        Ok(())
    }

    pub fn is_free(&self) -> bool {
        self.invariant_factors.is_empty()
    }
}
