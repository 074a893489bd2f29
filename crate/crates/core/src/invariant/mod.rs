//! The volume cocycle, shadow colorings and their state sums.
//!
//! For a base meridian `w`, `vol^w(z, x, y)` is the signed volume of a
//! chain of four ideal tetrahedra on the fixed points of `w`, `z`, `x`,
//! `y` and their products. A shadow coloring assigns it to each crossing,
//! signed by the crossing, and the sum over crossings is always `−V`, `0`
//! or `+V`.

mod cocycle;
mod coloring;
mod document;
mod enumerate;
mod phi;
mod survey;

pub use cocycle::{
    cocycle_residuals, cocycle_tetrahedra, cocycle_vol, six_term_defect, CocycleResiduals,
};
pub use coloring::{
    boltzmann_weight, check_coloring, crossing_residual, extend_regions, natural_coloring,
    step_color, validate_coloring, ShadowColoring, Violation,
};
pub use document::ColoringDocument;
pub use enumerate::{enumerate_colorings, ArcColorings, ColoringIter};
pub use phi::{classify, nearest_multiple, phi, PhiResult, LATTICE_TOL};
pub use survey::{
    default_base_meridian, reference_volume, survey, symmetry_report, Detection, DetectionStatus,
    KSurvey, SymmetryReport, Witness,
};
