use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{extend_regions, ShadowColoring};
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::holquandle::{HolonomyRep, Orientation, QuandleElement};

/// JSON form of a shadow coloring: words for the base meridian, each arc
/// and each region, and the orientation of the representation the words
/// refer to.
///
/// `regions` may list only some regions; the rest are then extended from
/// the lowest listed one and every listed color is checked later by
/// validation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ColoringDocument {
    #[serde(default)]
    pub orientation: Orientation,
    pub base_meridian: String,
    pub arcs: BTreeMap<usize, String>,
    pub regions: BTreeMap<usize, String>,
}

impl ColoringDocument {
    pub fn from_coloring(s: &ShadowColoring, w: &QuandleElement, orientation: Orientation) -> Self {
        let words = |v: &[QuandleElement]| {
            v.iter()
                .enumerate()
                .map(|(i, e)| (i, e.word().to_string()))
                .collect()
        };
        ColoringDocument {
            orientation,
            base_meridian: w.word().to_string(),
            arcs: words(&s.arcs),
            regions: words(&s.regions),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Evaluates every word through `h`. Does not validate the coloring.
    pub fn resolve(
        &self,
        d: &Diagram,
        h: &HolonomyRep,
    ) -> Result<(ShadowColoring, QuandleElement)> {
        if self.orientation != h.orientation() {
            return Err(Error::InvalidColoring(format!(
                "coloring is for a {} representation, got a {} one",
                self.orientation.label(),
                h.orientation().label()
            )));
        }
        let w = h.element_from_str(&self.base_meridian)?;
        if let Some(&a) = self.arcs.keys().find(|&&a| a >= d.n_arcs()) {
            return Err(Error::InvalidColoring(format!("no arc {a}")));
        }
        if let Some(&r) = self.regions.keys().find(|&&r| r >= d.n_regions()) {
            return Err(Error::InvalidColoring(format!("no region {r}")));
        }
        let arcs = (0..d.n_arcs())
            .map(|a| match self.arcs.get(&a) {
                Some(text) => h.element_from_str(text),
                None => Err(Error::InvalidColoring(format!("arc {a} has no color"))),
            })
            .collect::<Result<Vec<_>>>()?;
        let (&first, text) = self
            .regions
            .iter()
            .next()
            .ok_or_else(|| Error::InvalidColoring("no region colors".into()))?;
        let regions = if self.regions.len() == d.n_regions() {
            self.regions
                .values()
                .map(|t| h.element_from_str(t))
                .collect::<Result<Vec<_>>>()?
        } else {
            let mut regions = extend_regions(d, &arcs, first, &h.element_from_str(text)?)?;
            for (&r, t) in &self.regions {
                regions[r] = h.element_from_str(t)?;
            }
            regions
        };
        Ok((ShadowColoring { arcs, regions }, w))
    }
}
