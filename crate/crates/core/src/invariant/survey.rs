use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{enumerate_colorings, natural_coloring, phi, ColoringDocument, ShadowColoring};
use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::holquandle::{
    enumerate_conjugates, ConjugatePool, HolonomyRep, Orientation, QuandleElement,
};

/// Colorings are evaluated in parallel in batches of this size.
const CHUNK: usize = 512;

/// The first coloring found with a given `k`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub index: usize,
    pub k: i32,
    pub phi: f64,
    pub coloring: ColoringDocument,
}

/// Attained multiples of the volume over a bounded set of colorings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KSurvey {
    pub base_meridian: String,
    pub volume: f64,
    pub pool_size: usize,
    pub colorings: usize,
    pub truncated: bool,
    /// Number of colorings per `k`, keyed `-1`, `0`, `1`.
    pub counts: BTreeMap<i32, usize>,
    pub max_residual: f64,
    pub witnesses: BTreeMap<i32, Witness>,
    pub phis: Vec<f64>,
}

impl KSurvey {
    pub fn count(&self, k: i32) -> usize {
        self.counts.get(&k).copied().unwrap_or(0)
    }

    /// The `k` values with at least one coloring.
    pub fn attained(&self) -> Vec<i32> {
        self.counts
            .iter()
            .filter(|(_, &n)| n > 0)
            .map(|(&k, _)| k)
            .collect()
    }
}

/// The volume from the document, or else the state sum of the natural
/// coloring based at the first generator.
pub fn reference_volume(d: &Diagram, h: &HolonomyRep) -> Result<f64> {
    if let Some(v) = h.declared_volume() {
        return Ok(v);
    }
    let w = default_base_meridian(h);
    let s = natural_coloring(d, h, 0, &w)?;
    let total: f64 = (0..d.n_crossings())
        .map(|c| super::boltzmann_weight(d, &s, c, &w))
        .sum();
    if total.abs() < 1e-3 {
        return Err(Error::InvalidInput(
            "natural coloring has zero state sum; declare a volume".into(),
        ));
    }
    Ok(total.abs())
}

/// The first declared generator.
pub fn default_base_meridian(h: &HolonomyRep) -> QuandleElement {
    h.generator_elements().swap_remove(0)
}

/// Evaluates the state sum of every coloring from `enumerate_colorings`
/// and tallies the classes. The first coloring off the lattice aborts the
/// run with `OutOfLattice`.
pub fn survey(
    d: &Diagram,
    orientation: Orientation,
    pool: &ConjugatePool,
    w: &QuandleElement,
    volume: f64,
    cap: usize,
    tol: f64,
) -> Result<KSurvey> {
    let mut out = KSurvey {
        base_meridian: w.word().to_string(),
        volume,
        pool_size: pool.len(),
        colorings: 0,
        truncated: false,
        counts: [(-1, 0), (0, 0), (1, 0)].into_iter().collect(),
        max_residual: 0.0,
        witnesses: BTreeMap::new(),
        phis: Vec::new(),
    };
    let mut iter = enumerate_colorings(d, pool, cap);
    loop {
        let chunk: Vec<ShadowColoring> = iter.by_ref().take(CHUNK).collect::<Result<_>>()?;
        if chunk.is_empty() {
            break;
        }
        let results: Vec<_> = chunk
            .par_iter()
            .map(|s| phi(d, s, w, volume, tol))
            .collect();
        for (s, r) in chunk.iter().zip(results) {
            let r = r?;
            let index = out.colorings;
            out.colorings += 1;
            *out.counts.entry(r.k).or_default() += 1;
            out.max_residual = out.max_residual.max(r.residual);
            out.phis.push(r.phi);
            out.witnesses.entry(r.k).or_insert_with(|| Witness {
                index,
                k: r.k,
                phi: r.phi,
                coloring: ColoringDocument::from_coloring(s, w, orientation),
            });
        }
    }
    out.truncated = iter.truncated();
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DetectionStatus {
    Detected,
    NotDetectedWithinBound,
}

impl DetectionStatus {
    pub fn label(self) -> &'static str {
        match self {
            DetectionStatus::Detected => "detected",
            DetectionStatus::NotDetectedWithinBound => "not detected within bound",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Detection {
    pub status: DetectionStatus,
    pub witness: Option<Witness>,
}

impl Detection {
    fn from_survey(s: &KSurvey, k: i32) -> Self {
        let witness = s.witnesses.get(&k).cloned();
        Detection {
            status: if witness.is_some() {
                DetectionStatus::Detected
            } else {
                DetectionStatus::NotDetectedWithinBound
            },
            witness,
        }
    }

    pub fn detected(&self) -> bool {
        self.status == DetectionStatus::Detected
    }
}

/// Bounded symmetry search.
///
/// A coloring by the knot's own quandle with state sum `−V` shows the knot
/// is negatively amphicheiral. Colorings by the quandle of the reversed
/// knot with `+V` or `−V` show invertibility or positive amphicheirality.
/// A flag that is not detected only means the bounded search found no
/// witness.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SymmetryReport {
    pub depth: usize,
    pub cap: usize,
    pub volume: f64,
    pub standard: KSurvey,
    pub reversed: Option<KSurvey>,
    pub negatively_amphicheiral: Detection,
    pub invertible: Option<Detection>,
    pub positively_amphicheiral: Option<Detection>,
}

pub fn symmetry_report(
    d: &Diagram,
    h_std: &HolonomyRep,
    h_rev: Option<&HolonomyRep>,
    depth: usize,
    cap: usize,
    tol: f64,
) -> Result<SymmetryReport> {
    let volume = reference_volume(d, h_std)?;
    let std_pool = enumerate_conjugates(h_std, depth);
    let standard = survey(
        d,
        h_std.orientation(),
        &std_pool,
        &default_base_meridian(h_std),
        volume,
        cap,
        tol,
    )?;
    let reversed = match h_rev {
        Some(h) => {
            let pool = enumerate_conjugates(h, depth);
            Some(survey(
                d,
                h.orientation(),
                &pool,
                &default_base_meridian(h),
                volume,
                cap,
                tol,
            )?)
        }
        None => None,
    };
    Ok(SymmetryReport {
        depth,
        cap,
        volume,
        negatively_amphicheiral: Detection::from_survey(&standard, -1),
        invertible: reversed.as_ref().map(|s| Detection::from_survey(s, 1)),
        positively_amphicheiral: reversed.as_ref().map(|s| Detection::from_survey(s, -1)),
        standard,
        reversed,
    })
}
