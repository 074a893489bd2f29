use std::ops::Mul;

use num_complex::Complex64;

use super::{BoundaryPoint, PARABOLIC_TOL};
use crate::error::{Error, Result};

/// Grid used by [`MoebiusMap::dedup_key`].
const KEY_GRID: f64 = 1e7;

/// An element of `PSL(2, C)`: a determinant-one matrix `[[a, b], [c, d]]`
/// taken up to global sign, acting on the Riemann sphere by
/// `p ↦ (a p + b) / (c p + d)`.
#[derive(Clone, Copy, Debug)]
pub struct MoebiusMap {
    a: Complex64,
    b: Complex64,
    c: Complex64,
    d: Complex64,
}

fn c64(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

impl MoebiusMap {
    pub const IDENTITY: MoebiusMap = MoebiusMap {
        a: Complex64::new(1.0, 0.0),
        b: Complex64::new(0.0, 0.0),
        c: Complex64::new(0.0, 0.0),
        d: Complex64::new(1.0, 0.0),
    };

    /// Builds the map and rescales it to determinant one.
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Result<Self> {
        let det = a * d - b * c;
        let scale = a.norm().max(b.norm()).max(c.norm()).max(d.norm()).max(1.0);
        if !det.re.is_finite() || !det.im.is_finite() || det.norm() < 1e-12 * scale * scale {
            return Err(Error::BadMatrix(det.norm()));
        }
        Ok(MoebiusMap { a, b, c, d }.normalized())
    }

    pub fn from_rows(rows: [[Complex64; 2]; 2]) -> Result<Self> {
        Self::new(rows[0][0], rows[0][1], rows[1][0], rows[1][1])
    }

    fn normalized(self) -> Self {
        let s = (self.a * self.d - self.b * self.c).sqrt();
        MoebiusMap {
            a: self.a / s,
            b: self.b / s,
            c: self.c / s,
            d: self.d / s,
        }
    }

    pub fn entries(&self) -> [Complex64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn rows(&self) -> [[Complex64; 2]; 2] {
        [[self.a, self.b], [self.c, self.d]]
    }

    pub fn det(&self) -> Complex64 {
        self.a * self.d - self.b * self.c
    }

    pub fn trace(&self) -> Complex64 {
        self.a + self.d
    }

    /// Largest entry modulus, at least 1. Tolerances scale with it.
    pub fn scale(&self) -> f64 {
        self.entries().iter().fold(1.0_f64, |m, z| m.max(z.norm()))
    }

    /// Matrix product `self · other`, renormalized.
    pub fn compose(&self, other: &MoebiusMap) -> MoebiusMap {
        MoebiusMap {
            a: self.a * other.a + self.b * other.c,
            b: self.a * other.b + self.b * other.d,
            c: self.c * other.a + self.d * other.c,
            d: self.c * other.b + self.d * other.d,
        }
        .normalized()
    }

    pub fn inverse(&self) -> MoebiusMap {
        MoebiusMap {
            a: self.d,
            b: -self.b,
            c: -self.c,
            d: self.a,
        }
    }

    /// Conjugate `other⁻¹ · self · other`.
    pub fn conjugate_by(&self, other: &MoebiusMap) -> MoebiusMap {
        other.inverse().compose(self).compose(other)
    }

    pub fn apply(&self, p: BoundaryPoint) -> BoundaryPoint {
        let (x, y) = p.homogeneous();
        BoundaryPoint::from_homogeneous(self.a * x + self.b * y, self.c * x + self.d * y)
    }

    /// Equality in `PSL(2, C)`: `min(‖M − N‖∞, ‖M + N‖∞)` below `tol`,
    /// with `tol` scaled by the larger entry size once entries exceed 1.
    pub fn approx_eq(&self, other: &MoebiusMap, tol: f64) -> bool {
        self.distance(other) < tol * self.scale().max(other.scale())
    }

    /// Sign-invariant entrywise sup distance.
    pub fn distance(&self, other: &MoebiusMap) -> f64 {
        let (mut minus, mut plus) = (0.0_f64, 0.0_f64);
        for (x, y) in self.entries().iter().zip(other.entries().iter()) {
            minus = minus.max((x - y).norm());
            plus = plus.max((x + y).norm());
        }
        minus.min(plus)
    }

    pub fn is_identity(&self, tol: f64) -> bool {
        self.approx_eq(&MoebiusMap::IDENTITY, tol)
    }

    pub fn is_parabolic(&self, tol: f64) -> bool {
        let tr = self.trace();
        let s = self.scale();
        (tr * tr - c64(4.0)).norm() < tol * s * s && !self.is_identity(tol)
    }

    /// The unique boundary fixed point of a parabolic map.
    pub fn parabolic_fixed_point(&self) -> Result<BoundaryPoint> {
        if !self.is_parabolic(PARABOLIC_TOL) {
            return Err(Error::NotParabolic);
        }
        // Kernel of M - λI with λ = tr/2, read off the larger row.
        let half = (self.a - self.d) * 0.5;
        let row_lower = (half, self.c);
        let row_upper = (self.b, -half);
        let (p, q) = if self.c.norm() >= self.b.norm() {
            row_lower
        } else {
            row_upper
        };
        Ok(BoundaryPoint::from_homogeneous(p, q))
    }

    /// Hashable key: sign-normalized entries rounded to a 1e-7 grid. Equal
    /// keys imply equality at roughly that precision; callers confirm with
    /// [`MoebiusMap::approx_eq`].
    pub fn dedup_key(&self) -> [i64; 8] {
        let sign = self
            .entries()
            .iter()
            .find(|z| z.norm() > 1e-6)
            .map(|z| {
                if z.re > 1e-7 || (z.re >= -1e-7 && z.im > 0.0) {
                    1.0
                } else {
                    -1.0
                }
            })
            .unwrap_or(1.0);
        let mut key = [0_i64; 8];
        for (i, z) in self.entries().iter().enumerate() {
            key[2 * i] = (sign * z.re * KEY_GRID).round() as i64;
            key[2 * i + 1] = (sign * z.im * KEY_GRID).round() as i64;
        }
        key
    }
}

impl Mul for MoebiusMap {
    type Output = MoebiusMap;

    fn mul(self, rhs: MoebiusMap) -> MoebiusMap {
        self.compose(&rhs)
    }
}

impl<'a> Mul<&'a MoebiusMap> for &'a MoebiusMap {
    type Output = MoebiusMap;

    fn mul(self, rhs: &'a MoebiusMap) -> MoebiusMap {
        self.compose(rhs)
    }
}
