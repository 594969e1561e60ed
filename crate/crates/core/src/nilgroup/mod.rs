//! Groups the computations run on: finitely generated abelian groups, free
//! nilpotent groups through their Hall bases, and central extensions.

pub mod abelian;
pub mod action;
pub mod extension;
pub mod free;
pub mod hall;

pub use abelian::AbelianFG;
pub use action::{induced_action_on_quotient, NilpotentAction};
pub use extension::{heisenberg, CentralExtension};
pub use free::{lower_central_quotients, FreeNilpotentSpec};
pub use hall::{hall_basis, witt_number, BasicCommutator, Bracket, HallBasis};
