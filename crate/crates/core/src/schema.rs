//! JSON input schema for groups shared by the command-line tools.
//!
//! ```json
//! {"type": "free_nilpotent", "rank": 2, "class": 2}
//! {"type": "central_extension", "q_rank": 2, "a_rank": 1, "pairing": [[1]]}
//! {"type": "action", "group": {"type": "free_nilpotent", "rank": 2, "class": 2},
//!  "generators": [[[2, 1], [1, 1]]]}
//! ```
//!
//! A pairing is `a_rank × C(q_rank, 2)`; column `(i, j)`, `i < j` in
//! lexicographic order, gives `[x̃_i, x̃_j]` in the basis of `A`. Optional
//! `q_torsion` / `a_torsion` list invariant factors of the torsion parts.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::linalg::IntMatrix;
use crate::nilgroup::{AbelianFG, CentralExtension, FreeNilpotentSpec, NilpotentAction};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupSpec {
    FreeNilpotent {
        rank: usize,
        class: usize,
    },
    CentralExtension {
        q_rank: usize,
        a_rank: usize,
        pairing: Vec<Vec<i64>>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        q_torsion: Vec<u64>,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        a_torsion: Vec<u64>,
    },
    Action {
        group: Box<GroupSpec>,
        generators: Vec<Vec<Vec<i64>>>,
    },
}

/// A validated group description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Group {
    FreeNilpotent(FreeNilpotentSpec),
    Extension(CentralExtension),
    Action(NilpotentAction),
}

fn int_matrix(rows: usize, cols: usize, data: &[Vec<i64>]) -> Result<IntMatrix> {
    if data.len() != rows || data.iter().any(|r| r.len() != cols) {
        return domain(format!("expected a {rows}x{cols} integer matrix"));
    }
    let refs: Vec<&[i64]> = data.iter().map(Vec::as_slice).collect();
    Ok(if rows == 0 { IntMatrix::zeros(0, cols) } else { IntMatrix::from_i64(&refs) })
}

impl GroupSpec {
    pub fn resolve(&self) -> Result<Group> {
        match self {
            Self::FreeNilpotent { rank, class } => Ok(Group::FreeNilpotent(FreeNilpotentSpec::new(*rank, *class)?)),
            Self::CentralExtension { q_rank, a_rank, pairing, q_torsion, a_torsion } => {
                let cols = crate::linalg::binomial(*q_rank, 2);
                let ext = CentralExtension::new(
                    AbelianFG::new(*q_rank, q_torsion.clone())?,
                    AbelianFG::new(*a_rank, a_torsion.clone())?,
                    int_matrix(*a_rank, cols, pairing)?,
                )?;
                Ok(Group::Extension(ext))
            }
            Self::Action { group, generators } => {
                let Group::FreeNilpotent(target) = group.resolve()? else {
                    return domain("actions are supported on free nilpotent groups only");
                };
                let r = target.rank;
                let mats = generators.iter().map(|g| int_matrix(r, r, g)).collect::<Result<Vec<_>>>()?;
                Ok(Group::Action(NilpotentAction::new(target, mats)?))
            }
        }
    }
}
