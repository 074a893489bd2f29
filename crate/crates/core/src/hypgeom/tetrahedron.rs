use serde::{Deserialize, Serialize};

use super::dilog::bloch_wigner_point;
use super::{BoundaryPoint, POINT_TOL};

/// Cross-ratio `((v3 − v0)(v2 − v1)) / ((v2 − v0)(v3 − v1))`, computed in
/// homogeneous coordinates so that a vertex at `∞` needs no special case.
///
/// Degenerate inputs give degenerate values: a repeated vertex yields
/// `0`, `1` or `∞`.
pub fn cross_ratio(
    v0: BoundaryPoint,
    v1: BoundaryPoint,
    v2: BoundaryPoint,
    v3: BoundaryPoint,
) -> BoundaryPoint {
    let same = |p: &BoundaryPoint, q: &BoundaryPoint| p.approx_eq(q, POINT_TOL);
    if same(&v2, &v3) || same(&v0, &v1) {
        return BoundaryPoint::finite(1.0, 0.0);
    }
    if same(&v0, &v3) || same(&v1, &v2) {
        return BoundaryPoint::finite(0.0, 0.0);
    }
    if same(&v0, &v2) || same(&v1, &v3) {
        return BoundaryPoint::Infinity;
    }
    let h = [
        v0.homogeneous(),
        v1.homogeneous(),
        v2.homogeneous(),
        v3.homogeneous(),
    ];
    let det = |i: usize, j: usize| h[i].0 * h[j].1 - h[j].0 * h[i].1;
    BoundaryPoint::from_homogeneous(det(3, 0) * det(2, 1), det(2, 0) * det(3, 1))
}

/// An ordered ideal tetrahedron. Vertex order carries the orientation.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdealTetrahedron {
    pub vertices: [BoundaryPoint; 4],
}

impl IdealTetrahedron {
    pub fn new(v0: BoundaryPoint, v1: BoundaryPoint, v2: BoundaryPoint, v3: BoundaryPoint) -> Self {
        IdealTetrahedron {
            vertices: [v0, v1, v2, v3],
        }
    }

    pub fn is_degenerate(&self) -> bool {
        let v = &self.vertices;
        (0..4).any(|i| (i + 1..4).any(|j| v[i].approx_eq(&v[j], POINT_TOL)))
    }

    pub fn cross_ratio(&self) -> BoundaryPoint {
        let [v0, v1, v2, v3] = self.vertices;
        cross_ratio(v0, v1, v2, v3)
    }

    /// Signed hyperbolic volume `D(cross_ratio)`; exactly 0 when two
    /// vertices coincide.
    pub fn volume(&self) -> f64 {
        if self.is_degenerate() {
            return 0.0;
        }
        bloch_wigner_point(self.cross_ratio())
    }
}

/// Signed volume of the ideal tetrahedron with the given ordered vertices.
pub fn ideal_tet_volume(t: &IdealTetrahedron) -> f64 {
    t.volume()
}
