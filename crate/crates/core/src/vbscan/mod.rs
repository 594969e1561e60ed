//! Homology of finite-index subgroups `Q^m ⋉ N` through Koszul complexes,
//! the Hirsch-length bound, and the tameness hypothesis report.

pub mod hypothesis;
pub mod koszul;
pub mod module;
pub mod scan;

pub use hypothesis::{hypothesis_report, HypothesisReport};
pub use koszul::{koszul_differential, koszul_dims, koszul_homology};
pub use module::{power_subgroup, QModuleFD};
pub use scan::{hirsch_bound, vb_scan, ScanReport, ScanRow, ScanTerm, ScanVerdict, REFERENCE_INDEX};
