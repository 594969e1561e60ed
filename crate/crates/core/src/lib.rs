//! Exact homology of finitely generated nilpotent groups through
//! Lyndon–Hochschild–Serre spectral sequences, tensor-degree filtration
//! certificates, Σ-invariants with exact `m`-tameness, and virtual Betti
//! scans over finite-index subgroups.
//!
//! All arithmetic is exact over ℤ and ℚ.

pub mod error;
pub mod filtration;
pub mod linalg;
pub mod nilgroup;
pub mod schema;
pub mod sigma;
pub mod spectral;
pub mod vbscan;

pub use error::{Error, Result};
pub use linalg::{IntMatrix, Rat, RatMatrix};
pub use nilgroup::{CentralExtension, FreeNilpotentSpec, NilpotentAction};
pub use schema::{Group, GroupSpec};
pub use sigma::{ConeUnion, CyclicModuleSpec, LaurentPoly, ValuationVector};
pub use spectral::Page;
pub use vbscan::QModuleFD;
