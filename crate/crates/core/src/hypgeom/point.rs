use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Homogeneous coordinates whose second component is this small relative to
/// the first are read as the point at infinity.
const HOMOGENEOUS_EPS: f64 = 1e-12;

/// A point of the Riemann sphere `C ∪ {∞}`, the ideal boundary of the
/// upper half-space model of hyperbolic 3-space.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum BoundaryPoint {
    Finite(Complex64),
    Infinity,
}

impl BoundaryPoint {
    pub fn finite(re: f64, im: f64) -> Self {
        Self::from_complex(Complex64::new(re, im))
    }

    /// Non-finite input collapses to [`BoundaryPoint::Infinity`].
    pub fn from_complex(z: Complex64) -> Self {
        if z.re.is_finite() && z.im.is_finite() {
            BoundaryPoint::Finite(z)
        } else {
            BoundaryPoint::Infinity
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, BoundaryPoint::Infinity)
    }

    pub fn as_complex(&self) -> Option<Complex64> {
        match *self {
            BoundaryPoint::Finite(z) => Some(z),
            BoundaryPoint::Infinity => None,
        }
    }

    /// A representative `(p, q)` with `self = p / q`.
    pub fn homogeneous(&self) -> (Complex64, Complex64) {
        match *self {
            BoundaryPoint::Finite(z) => (z, Complex64::new(1.0, 0.0)),
            BoundaryPoint::Infinity => (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)),
        }
    }

    pub fn from_homogeneous(p: Complex64, q: Complex64) -> Self {
        if q.norm() <= HOMOGENEOUS_EPS * p.norm() {
            BoundaryPoint::Infinity
        } else {
            Self::from_complex(p / q)
        }
    }

    /// Chordal distance on the unit sphere; 2 for antipodal points.
    pub fn chordal_distance(&self, other: &BoundaryPoint) -> f64 {
        let (p1, q1) = self.homogeneous();
        let (p2, q2) = other.homogeneous();
        let n1 = (p1.norm_sqr() + q1.norm_sqr()).sqrt();
        let n2 = (p2.norm_sqr() + q2.norm_sqr()).sqrt();
        2.0 * (p1 * q2 - p2 * q1).norm() / (n1 * n2)
    }

    /// `Infinity` only equals itself exactly; finite points (and very large
    /// finite points against `Infinity`) compare by chordal distance.
    pub fn approx_eq(&self, other: &BoundaryPoint, tol: f64) -> bool {
        match (self, other) {
            (BoundaryPoint::Infinity, BoundaryPoint::Infinity) => true,
            _ => self.chordal_distance(other) < tol,
        }
    }
}

impl From<Complex64> for BoundaryPoint {
    fn from(z: Complex64) -> Self {
        Self::from_complex(z)
    }
}

impl fmt::Display for BoundaryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundaryPoint::Infinity => write!(f, "inf"),
            BoundaryPoint::Finite(z) => {
                let prec = f.precision().unwrap_or(6);
                if z.im < 0.0 {
                    write!(f, "{:.*}-{:.*}i", prec, z.re, prec, -z.im)
                } else {
                    write!(f, "{:.*}+{:.*}i", prec, z.re, prec, z.im)
                }
            }
        }
    }
}

/// Serde form of a complex number: `[re, im]`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComplexRepr(pub [f64; 2]);

impl From<Complex64> for ComplexRepr {
    fn from(z: Complex64) -> Self {
        ComplexRepr([z.re, z.im])
    }
}

impl From<ComplexRepr> for Complex64 {
    fn from(c: ComplexRepr) -> Self {
        Complex64::new(c.0[0], c.0[1])
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum PointRepr {
    Pair([f64; 2]),
    Tag(String),
}

impl Serialize for BoundaryPoint {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            BoundaryPoint::Finite(z) => PointRepr::Pair([z.re, z.im]).serialize(serializer),
            BoundaryPoint::Infinity => PointRepr::Tag("inf".to_string()).serialize(serializer),
        }
    }
}

impl<'de> Deserialize<'de> for BoundaryPoint {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        match PointRepr::deserialize(deserializer)? {
            PointRepr::Pair([re, im]) if re.is_finite() && im.is_finite() => {
                Ok(BoundaryPoint::finite(re, im))
            }
            PointRepr::Pair(_) => Err(serde::de::Error::custom("non-finite coordinate")),
            PointRepr::Tag(s) if s == "inf" => Ok(BoundaryPoint::Infinity),
            PointRepr::Tag(s) => Err(serde::de::Error::custom(format!(
                "expected [re, im] or \"inf\", got {s:?}"
            ))),
        }
    }
}
