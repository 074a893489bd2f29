use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{GroupWord, QuandleElement};
use crate::diagram::{ArcId, Diagram, Sign, WirtingerRelation};
use crate::error::{Error, Result};
use crate::hypgeom::{MoebiusMap, MATRIX_TOL, PARABOLIC_TOL};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    #[default]
    Standard,
    Reversed,
}

impl Orientation {
    pub fn label(self) -> &'static str {
        match self {
            Orientation::Standard => "standard",
            Orientation::Reversed => "reversed",
        }
    }
}

/// `[[a, b], [c, d]]` with each entry as `[re, im]`.
pub type MatrixRepr = [[[f64; 2]; 2]; 2];

/// JSON form of a holonomy representation.
///
/// `arc_labels` maps arc ids to words. It may be omitted when there are as
/// many generators as arcs, in which case the labeling is searched for.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HolonomyDocument {
    pub generators: Vec<String>,
    pub matrices: BTreeMap<String, MatrixRepr>,
    #[serde(default)]
    pub orientation: Orientation,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub volume: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arc_labels: Option<BTreeMap<String, String>>,
}

impl HolonomyDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// A holonomy representation validated against a diagram.
///
/// Generator matrices are the positive meridians of the quandle. For a
/// reversed representation they are meridians of the reversed knot, named
/// `x^-1` and so on; their inverses satisfy the diagram's relations.
#[derive(Clone, Debug)]
pub struct HolonomyRep {
    generators: Vec<String>,
    matrices: Vec<MoebiusMap>,
    orientation: Orientation,
    volume: Option<f64>,
    arc_labels: Vec<GroupWord>,
}

fn to_matrix(m: &MatrixRepr) -> Result<MoebiusMap> {
    let c = |e: [f64; 2]| Complex64::new(e[0], e[1]);
    MoebiusMap::new(c(m[0][0]), c(m[0][1]), c(m[1][0]), c(m[1][1]))
}

/// Relative residual of one Wirtinger relation for the given arc matrices.
pub fn relation_residual(rel: &WirtingerRelation, arc: impl Fn(ArcId) -> MoebiusMap) -> f64 {
    let (g_in, g_out, g_over) = (arc(rel.under_in), arc(rel.under_out), arc(rel.over));
    let expected = match rel.sign {
        Sign::Positive => g_in.conjugate_by(&g_over),
        Sign::Negative => g_in.conjugate_by(&g_over.inverse()),
    };
    expected.distance(&g_out) / expected.scale().max(g_out.scale())
}

/// Builds and validates a representation. Generators must be parabolic and,
/// under the arc labeling, satisfy every Wirtinger relation of `d` up to
/// sign.
pub fn load_holonomy(doc: &HolonomyDocument, d: &Diagram) -> Result<HolonomyRep> {
    if doc.generators.is_empty() {
        return Err(Error::InvalidInput(
            "holonomy document lists no generators".into(),
        ));
    }
    let mut matrices = Vec::with_capacity(doc.generators.len());
    for (i, name) in doc.generators.iter().enumerate() {
        if doc.generators[..i].contains(name) {
            return Err(Error::InvalidInput(format!(
                "generator `{name}` listed twice"
            )));
        }
        let m = doc
            .matrices
            .get(name)
            .ok_or_else(|| Error::InvalidInput(format!("no matrix for generator `{name}`")))?;
        let m = to_matrix(m)?;
        if !m.is_parabolic(PARABOLIC_TOL) {
            return Err(Error::GeneratorNotParabolic(name.clone()));
        }
        matrices.push(m);
    }
    if let Some(v) = doc.volume {
        if !(v.is_finite() && v > 0.0) {
            return Err(Error::InvalidInput(format!(
                "declared volume {v} is not positive"
            )));
        }
    }
    let mut rep = HolonomyRep {
        generators: doc.generators.clone(),
        matrices,
        orientation: doc.orientation,
        volume: doc.volume,
        arc_labels: Vec::new(),
    };
    rep.arc_labels = match &doc.arc_labels {
        Some(labels) => rep.parse_labels(labels, d)?,
        None => rep.search_labels(d)?,
    };
    Ok(rep)
}

impl HolonomyRep {
    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn declared_volume(&self) -> Option<f64> {
        self.volume
    }

    /// Word assigned to each arc by the Wirtinger labeling.
    pub fn arc_labels(&self) -> &[GroupWord] {
        &self.arc_labels
    }

    pub fn generator_matrix(&self, name: &str) -> Result<MoebiusMap> {
        self.generators
            .iter()
            .position(|g| g == name)
            .map(|i| self.matrices[i])
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    /// Ordered product of generator matrices and inverses along the word.
    pub fn evaluate(&self, w: &GroupWord) -> Result<MoebiusMap> {
        let mut m = MoebiusMap::IDENTITY;
        for l in w.letters() {
            let g = self.generator_matrix(&l.generator)?;
            m = m.compose(&if l.inverse { g.inverse() } else { g });
        }
        Ok(m)
    }

    pub fn parse_word(&self, text: &str) -> Result<GroupWord> {
        GroupWord::parse(text, &self.generators)
    }

    /// The quandle element named by a word; it must evaluate to a parabolic.
    pub fn element(&self, w: &GroupWord) -> Result<QuandleElement> {
        let m = self.evaluate(w)?;
        let fixed_point = m.parabolic_fixed_point().map_err(|_| {
            Error::InvalidColoring(format!("`{w}` does not evaluate to a parabolic element"))
        })?;
        Ok(QuandleElement::from_parts(w.clone(), m, fixed_point))
    }

    pub fn element_from_str(&self, text: &str) -> Result<QuandleElement> {
        self.element(&self.parse_word(text)?)
    }

    pub fn generator_elements(&self) -> Vec<QuandleElement> {
        self.generators
            .iter()
            .map(|g| {
                self.element(&GroupWord::generator(g.clone()))
                    .expect("generators are validated as parabolic")
            })
            .collect()
    }

    /// Meridian matrix of an arc in the diagram's own orientation.
    fn meridian(&self, w: &GroupWord) -> Result<MoebiusMap> {
        let m = self.evaluate(w)?;
        Ok(match self.orientation {
            Orientation::Standard => m,
            Orientation::Reversed => m.inverse(),
        })
    }

    /// First relation failing for the labeling, with its residual.
    fn worst_relation(&self, d: &Diagram, arcs: &[MoebiusMap]) -> Option<(usize, f64)> {
        d.wirtinger_relations()
            .iter()
            .map(|rel| (rel.crossing, relation_residual(rel, |a| arcs[a])))
            .filter(|&(_, r)| !(r < MATRIX_TOL))
            .max_by(|a, b| a.1.total_cmp(&b.1))
    }

    fn parse_labels(
        &self,
        labels: &BTreeMap<String, String>,
        d: &Diagram,
    ) -> Result<Vec<GroupWord>> {
        let mut words = vec![None; d.n_arcs()];
        for (key, text) in labels {
            let arc: usize = key
                .trim()
                .parse()
                .ok()
                .filter(|&a| a < d.n_arcs())
                .ok_or_else(|| Error::InvalidInput(format!("`{key}` is not an arc id")))?;
            words[arc] = Some(self.parse_word(text)?);
        }
        let words: Vec<GroupWord> = words
            .into_iter()
            .enumerate()
            .map(|(a, w)| w.ok_or_else(|| Error::InvalidInput(format!("arc {a} has no label"))))
            .collect::<Result<_>>()?;
        let arcs = words
            .iter()
            .map(|w| self.meridian(w))
            .collect::<Result<Vec<_>>>()?;
        if let Some((crossing, residual)) = self.worst_relation(d, &arcs) {
            return Err(Error::RelationViolated { crossing, residual });
        }
        Ok(words)
    }

    /// Tries every bijection from generators to arcs, in lexicographic
    /// order of generator indices, and keeps the first that satisfies all
    /// relations.
    fn search_labels(&self, d: &Diagram) -> Result<Vec<GroupWord>> {
        let n = d.n_arcs();
        if self.generators.len() != n {
            return Err(Error::NoArcLabeling(format!(
                "{} generators for {} arcs; supply arc_labels",
                self.generators.len(),
                n
            )));
        }
        let meridians: Vec<MoebiusMap> = (0..n)
            .map(|i| self.meridian(&GroupWord::generator(self.generators[i].clone())))
            .collect::<Result<_>>()?;
        let mut best: Option<(usize, f64)> = None;
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            let arcs: Vec<MoebiusMap> = perm.iter().map(|&g| meridians[g]).collect();
            match self.worst_relation(d, &arcs) {
                None => {
                    return Ok(perm
                        .iter()
                        .map(|&g| GroupWord::generator(self.generators[g].clone()))
                        .collect())
                }
                Some(v) => {
                    if best.is_none_or(|b| v.1 < b.1) {
                        best = Some(v);
                    }
                }
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        let (crossing, residual) = best.unwrap_or((0, f64::INFINITY));
        Err(Error::RelationViolated { crossing, residual })
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn permutations_in_lexicographic_order() {
        let mut p = vec![0, 1, 2];
        let mut seen = vec![p.clone()];
        while next_permutation(&mut p) {
            seen.push(p.clone());
        }
        assert_eq!(seen.len(), 6);
        assert_eq!(seen[1], vec![0, 2, 1]);
        assert_eq!(seen[5], vec![2, 1, 0]);
    }
}
