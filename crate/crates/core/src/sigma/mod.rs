//! Σ-invariant complements of cyclic `ℚ[ℤⁿ]`-modules as rational cone
//! unions, exact `m`-tameness, and finite generation of tensor powers.

pub mod cone;
pub mod fg;
pub mod laurent;
pub mod lp;
pub mod principal;
pub mod tame;
pub mod witness;

pub use cone::{Cone, ConeUnion};
pub use fg::{
    characteristic_polynomial, finite_dimensional_is_fully_tame, tensor_power_fg_check, FgCheck, FullyTameCertificate,
};
pub use laurent::{CyclicModuleSpec, LaurentPoly, ValuationVector};
pub use principal::{newton_polytope, sigma_complement, sigma_complement_principal, SigmaComplement};
pub use tame::{m_tame, m_tame_witness, tame_requirement, NonTameWitness};
pub use witness::{l1_ball, sigma_witness_search, Witness, WitnessOutcome, WitnessTerm};
