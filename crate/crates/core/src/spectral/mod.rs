//! LHS spectral sequences of central extensions over ℚ.

pub mod differential;
pub mod equivariant;
pub mod homology;
pub mod page;

pub use differential::{d2_central, d2_ks};
pub use equivariant::{equivariant_page, equivariant_page_free, ExtensionAction};
pub use homology::{
    abelian_homology, betti_numbers, e3_homology, h2_class2, homology_free_nilpotent_c2, CellDims, CellTorsion,
    H2Pieces, HomologyResult, IntegralHomology,
};
pub use page::{Cell, CellBasis, Page};
