//! Tensor-degree filtration certificates and nilpotency of induced actions.

pub mod certificate;
pub mod nilpotency;

pub use certificate::{bound, filtration_certificate, FiltrationCertificate, Layer, Verdict};
pub use nilpotency::{induced_homology_action, is_nilpotent_action, ActionNilpotencyReport};
