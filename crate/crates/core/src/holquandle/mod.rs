//! The knot quandle realized through a holonomy representation.
//!
//! Elements are group words together with their parabolic images in
//! `PSL(2, C)`. Two elements are equal when their matrices agree up to
//! sign, whatever their words. The operation is conjugation,
//! `a ∗ b = b⁻¹ a b`, and the fixed point of `a ∗ b` is `b⁻¹(a∞)`.

mod pool;
mod rep;
mod word;

use serde::Serialize;

use crate::hypgeom::{BoundaryPoint, MoebiusMap, MATRIX_TOL};

pub use pool::{enumerate_conjugates, ConjugatePool};
pub use rep::{
    load_holonomy, relation_residual, HolonomyDocument, HolonomyRep, MatrixRepr, Orientation,
};
pub use word::{GroupWord, Letter};

#[derive(Clone, Debug)]
pub struct QuandleElement {
    word: GroupWord,
    matrix: MoebiusMap,
    fixed_point: BoundaryPoint,
}

impl QuandleElement {
    pub(crate) fn from_parts(
        word: GroupWord,
        matrix: MoebiusMap,
        fixed_point: BoundaryPoint,
    ) -> Self {
        QuandleElement {
            word,
            matrix,
            fixed_point,
        }
    }

    pub fn word(&self) -> &GroupWord {
        &self.word
    }

    pub fn matrix(&self) -> &MoebiusMap {
        &self.matrix
    }

    pub fn fixed_point(&self) -> BoundaryPoint {
        self.fixed_point
    }

    /// `self ∗ b = b⁻¹ · self · b`.
    pub fn op(&self, b: &QuandleElement) -> QuandleElement {
        QuandleElement {
            word: self.word.conjugate_by(&b.word),
            matrix: self.matrix.conjugate_by(&b.matrix),
            fixed_point: b.matrix.inverse().apply(self.fixed_point),
        }
    }

    /// The unique `c` with `c ∗ b = self`, namely `b · self · b⁻¹`.
    pub fn op_inv(&self, b: &QuandleElement) -> QuandleElement {
        QuandleElement {
            word: self.word.conjugate_by(&b.word.inverse()),
            matrix: self.matrix.conjugate_by(&b.matrix.inverse()),
            fixed_point: b.matrix.apply(self.fixed_point),
        }
    }

    pub fn approx_eq(&self, other: &QuandleElement, tol: f64) -> bool {
        self.matrix.approx_eq(&other.matrix, tol)
    }
}

/// Equality up to sign at the default matrix tolerance.
impl PartialEq for QuandleElement {
    fn eq(&self, other: &Self) -> bool {
        self.approx_eq(other, MATRIX_TOL)
    }
}

impl Serialize for QuandleElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.word.to_string())
    }
}

pub fn quandle_op(a: &QuandleElement, b: &QuandleElement) -> QuandleElement {
    a.op(b)
}

pub fn quandle_op_inv(a: &QuandleElement, b: &QuandleElement) -> QuandleElement {
    a.op_inv(b)
}

pub fn evaluate(h: &HolonomyRep, w: &GroupWord) -> crate::Result<MoebiusMap> {
    h.evaluate(w)
}
