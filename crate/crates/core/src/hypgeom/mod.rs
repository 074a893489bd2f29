//! Boundary geometry of hyperbolic 3-space: points of the Riemann sphere,
//! Möbius maps, cross-ratios, the Bloch–Wigner dilogarithm and signed
//! volumes of ideal tetrahedra.

mod dilog;
mod moebius;
mod point;
mod tetrahedron;

pub use dilog::{bloch_wigner, bloch_wigner_point, BLOCH_WIGNER_MAX};
pub use moebius::MoebiusMap;
pub use point::{BoundaryPoint, ComplexRepr};
pub use tetrahedron::{cross_ratio, ideal_tet_volume, IdealTetrahedron};

/// Entrywise tolerance for equality in `PSL(2, C)`.
pub const MATRIX_TOL: f64 = 1e-9;
/// Tolerance on `|tr² − 4|` for parabolicity.
pub const PARABOLIC_TOL: f64 = 1e-9;
/// Chordal tolerance for coincidence of boundary points.
pub const POINT_TOL: f64 = 1e-9;

/// Free functions mirroring the method API.
pub fn moebius_compose(m: &MoebiusMap, n: &MoebiusMap) -> MoebiusMap {
    m.compose(n)
}

pub fn moebius_inverse(m: &MoebiusMap) -> MoebiusMap {
    m.inverse()
}

pub fn moebius_apply(m: &MoebiusMap, p: BoundaryPoint) -> BoundaryPoint {
    m.apply(p)
}

pub fn is_parabolic(m: &MoebiusMap, tol: f64) -> bool {
    m.is_parabolic(tol)
}

pub fn parabolic_fixed_point(m: &MoebiusMap) -> crate::Result<BoundaryPoint> {
    m.parabolic_fixed_point()
}
