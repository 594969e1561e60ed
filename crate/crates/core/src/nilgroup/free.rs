use serde::{Deserialize, Serialize};

use super::abelian::AbelianFG;
use super::hall::witt_number;
use crate::error::{domain, Result};

/// Free nilpotent group of rank `r` and class `c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FreeNilpotentSpec {
    pub rank: usize,
    pub class: usize,
}

impl FreeNilpotentSpec {
    pub fn new(rank: usize, class: usize) -> Result<Self> {
        let s = Self { rank, class };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        if self.rank == 0 || self.class == 0 {
            return domain("free nilpotent groups need rank ≥ 1 and class ≥ 1");
        }
        Ok(())
    }

    /// Hirsch length: the sum of the Witt numbers of all layers.
    pub fn hirsch_length(&self) -> usize {
        (1..=self.class).map(|w| witt_number(self.rank, w)).sum()
    }

    /// The free nilpotent group one class lower (`N / γ_c N`).
    pub fn quotient_by_last_term(&self) -> Option<Self> {
        (self.class > 1).then_some(Self { rank: self.rank, class: self.class - 1 })
    }
}

/// `γ_w N / γ_{w+1} N` for `w = 1..=c`: free abelian of Witt rank.
pub fn lower_central_quotients(spec: &FreeNilpotentSpec) -> Vec<AbelianFG> {
    (1..=spec.class).map(|w| AbelianFG::free(witt_number(spec.rank, w))).collect()
}
