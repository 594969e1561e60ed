//! Pages carrying the action of an abelian group of automorphisms.

use std::collections::BTreeMap;

use super::page::Page;
use crate::error::{domain, Error, Result};
use crate::linalg::{exterior_power_map, IntMatrix, RatMatrix};
use crate::nilgroup::action::check_commuting;
use crate::nilgroup::{induced_action_on_quotient, CentralExtension, NilpotentAction};

/// Automorphisms of a central extension, given on `Q` and on `A`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionAction {
    pub q_generators: Vec<IntMatrix>,
    pub a_generators: Vec<IntMatrix>,
}

impl ExtensionAction {
    /// The action of a [`NilpotentAction`] on `γ_c N ↣ N ↠ N/γ_c N` (class ≤ 2).
    pub fn from_nilpotent_action(act: &NilpotentAction) -> Result<(CentralExtension, Self)> {
        let ext = CentralExtension::for_free_nilpotent(&act.target)?;
        let a_generators = if act.target.class == 2 {
            induced_action_on_quotient(act, 2)?
        } else {
            vec![IntMatrix::zeros(0, 0); act.num_generators()]
        };
        Ok((ext, Self { q_generators: act.generators.clone(), a_generators }))
    }

    fn validate(&self, ext: &CentralExtension) -> Result<()> {
        if self.q_generators.len() != self.a_generators.len() {
            return domain("action needs the same number of generators on Q and on A");
        }
        for (g, h) in self.q_generators.iter().zip(&self.a_generators) {
            if g.rows() != ext.q_rank() || !g.is_square() || h.rows() != ext.a_rank() || !h.is_square() {
                return Err(Error::Shape("action matrices do not match the ranks of Q and A".into()));
            }
            if !g.is_unimodular() || !h.is_unimodular() {
                return domain("action matrices must be invertible over ℤ");
            }
        }
        check_commuting(&self.q_generators)?;
        check_commuting(&self.a_generators)
    }
}

/// The `E²` page of `ext` with each cell carrying `Λ^p g_Q ⊗ Λ^q g_A`.
///
/// Fails with [`Error::NotEquivariant`] naming the first cell (in `(p, q)`
/// order) where the action does not commute with `d²`.
pub fn equivariant_page(ext: &CentralExtension, action: &ExtensionAction) -> Result<Page> {
    action.validate(ext)?;
    let mut page = Page::e2(ext)?;
    attach_actions(&mut page, action)?;
    Ok(page)
}

/// Equivariant page of a free nilpotent group of class ≤ 2.
pub fn equivariant_page_free(act: &NilpotentAction) -> Result<Page> {
    act.validate()?;
    let (ext, action) = ExtensionAction::from_nilpotent_action(act)?;
    let mut page = Page::free_nilpotent(&act.target)?;
    debug_assert_eq!(page, Page::e2(&ext)?);
    attach_actions(&mut page, &action)?;
    Ok(page)
}

fn attach_actions(page: &mut Page, action: &ExtensionAction) -> Result<()> {
    let mut actions = BTreeMap::new();
    let cells: Vec<(usize, usize)> = page.cells().map(|(&k, _)| k).collect();
    for &(p, q) in &cells {
        let mats: Vec<RatMatrix> = action
            .q_generators
            .iter()
            .zip(&action.a_generators)
            .map(|(g, h)| exterior_power_map(&g.to_rat(), p).kron(&exterior_power_map(&h.to_rat(), q)))
            .collect();
        actions.insert((p, q), mats);
    }
    for (&(p, q), d) in page.differentials() {
        for (src, tgt) in actions[&(p, q)].iter().zip(&actions[&(p - 2, q + 1)]) {
            if (d * src) != (tgt * d) {
                return Err(Error::NotEquivariant { p, q });
            }
        }
    }
    page.set_actions(actions);
    Ok(())
}
