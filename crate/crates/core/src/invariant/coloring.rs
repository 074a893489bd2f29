use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use super::cocycle_vol;
use crate::diagram::{ArcId, CrossingId, Diagram, RegionId, Sign, WalkDirection, WalkStep};
use crate::error::{Error, Result};
use crate::holquandle::{HolonomyRep, Orientation, QuandleElement};
use crate::hypgeom::MATRIX_TOL;

/// Quandle colors on every arc and region of a diagram.
///
/// Crossing rule: at a positive crossing the outgoing under-arc is the
/// incoming one acted on by the over-arc, `out = in ∗ over`; at a negative
/// crossing `in = out ∗ over`. Region rule: across an arc colored `a`, the
/// front region is `back ∗ a`.
#[derive(Clone, Debug, Serialize)]
pub struct ShadowColoring {
    pub arcs: Vec<QuandleElement>,
    pub regions: Vec<QuandleElement>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    Shape {
        expected_arcs: usize,
        expected_regions: usize,
        arcs: usize,
        regions: usize,
    },
    Crossing {
        crossing: CrossingId,
        residual: f64,
    },
    Region {
        edge: usize,
        arc: ArcId,
        back: RegionId,
        front: RegionId,
        residual: f64,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Shape {
                expected_arcs,
                expected_regions,
                arcs,
                regions,
            } => write!(
                f,
                "expected {expected_arcs} arc and {expected_regions} region colors, got {arcs} and {regions}"
            ),
            Violation::Crossing { crossing, residual } => {
                write!(f, "crossing {crossing}: crossing rule fails (residual {residual:.3e})")
            }
            Violation::Region {
                edge,
                arc,
                back,
                front,
                residual,
            } => write!(
                f,
                "edge {edge} of arc {arc}: region {front} is not region {back} acted on by the arc (residual {residual:.3e})"
            ),
        }
    }
}

/// Distance between `a` and `b` relative to their size, where `a` came from
/// conjugating by `by`; conjugation loses precision with the square of the
/// conjugator's entries.
pub(crate) fn rule_residual(a: &QuandleElement, b: &QuandleElement, by: &QuandleElement) -> f64 {
    let (m, n) = (a.matrix(), b.matrix());
    let s = by.matrix().scale();
    m.distance(n) / (m.scale().max(n.scale()) * s * s)
}

/// Residual of the crossing rule at `c`; zero up to rounding when it holds.
pub fn crossing_residual(d: &Diagram, arcs: &[QuandleElement], c: CrossingId) -> f64 {
    let f = d.crossing_frame(c);
    let (i, o, over) = (
        &arcs[f.under_in_arc],
        &arcs[f.under_out_arc],
        &arcs[f.over_arc],
    );
    match f.sign {
        Sign::Positive => rule_residual(&i.op(over), o, over),
        Sign::Negative => rule_residual(&o.op(over), i, over),
    }
}

/// All violations of the crossing and region rules; empty when valid.
pub fn validate_coloring(d: &Diagram, s: &ShadowColoring) -> Vec<Violation> {
    if s.arcs.len() != d.n_arcs() || s.regions.len() != d.n_regions() {
        return vec![Violation::Shape {
            expected_arcs: d.n_arcs(),
            expected_regions: d.n_regions(),
            arcs: s.arcs.len(),
            regions: s.regions.len(),
        }];
    }
    let mut out = Vec::new();
    for c in 0..d.n_crossings() {
        let r = crossing_residual(d, &s.arcs, c);
        if !(r < MATRIX_TOL) {
            out.push(Violation::Crossing {
                crossing: c,
                residual: r,
            });
        }
    }
    for (i, e) in d.edges().iter().enumerate() {
        let expected = s.regions[e.back].op(&s.arcs[e.arc]);
        let r = rule_residual(&expected, &s.regions[e.front], &s.arcs[e.arc]);
        if !(r < MATRIX_TOL) {
            out.push(Violation::Region {
                edge: i + 1,
                arc: e.arc,
                back: e.back,
                front: e.front,
                residual: r,
            });
        }
    }
    out
}

/// [`validate_coloring`] as a `Result`, with every violation in the message.
pub fn check_coloring(d: &Diagram, s: &ShadowColoring) -> Result<()> {
    let v = validate_coloring(d, s);
    if v.is_empty() {
        return Ok(());
    }
    let msg = v
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join("; ");
    Err(Error::InvalidColoring(msg))
}

/// Applies one dual-graph step to a region color.
pub fn step_color(
    color: &QuandleElement,
    step: &WalkStep,
    arcs: &[QuandleElement],
) -> QuandleElement {
    match step.direction {
        WalkDirection::WithNormal => color.op(&arcs[step.arc]),
        WalkDirection::AgainstNormal => color.op_inv(&arcs[step.arc]),
    }
}

/// Colors every region from one base color by the region rule, checking
/// that every edge agrees.
pub fn extend_regions(
    d: &Diagram,
    arcs: &[QuandleElement],
    base_region: RegionId,
    base_color: &QuandleElement,
) -> Result<Vec<QuandleElement>> {
    if base_region >= d.n_regions() {
        return Err(Error::InvalidInput(format!("no region {base_region}")));
    }
    if arcs.len() != d.n_arcs() {
        return Err(Error::InvalidColoring(format!(
            "{} arc colors for {} arcs",
            arcs.len(),
            d.n_arcs()
        )));
    }
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); d.n_regions()];
    for (i, e) in d.edges().iter().enumerate() {
        incident[e.back].push(i);
        incident[e.front].push(i);
    }
    let mut colors: Vec<Option<QuandleElement>> = vec![None; d.n_regions()];
    colors[base_region] = Some(base_color.clone());
    let mut queue = VecDeque::from([base_region]);
    while let Some(r) = queue.pop_front() {
        let here = colors[r].clone().expect("queued regions are colored");
        for &i in &incident[r] {
            let e = d.edges()[i];
            let (other, color) = if e.back == r {
                (e.front, here.op(&arcs[e.arc]))
            } else {
                (e.back, here.op_inv(&arcs[e.arc]))
            };
            match &colors[other] {
                Some(existing) => {
                    if !(rule_residual(existing, &color, &arcs[e.arc]) < MATRIX_TOL) {
                        return Err(Error::InconsistentExtension { arc: e.arc });
                    }
                }
                None => {
                    colors[other] = Some(color);
                    queue.push_back(other);
                }
            }
        }
    }
    colors
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Disconnected("dual graph is not connected".into()))
}

/// Arcs colored by their Wirtinger generators, regions extended from
/// `base_color` at `base_region`.
pub fn natural_coloring(
    d: &Diagram,
    h: &HolonomyRep,
    base_region: RegionId,
    base_color: &QuandleElement,
) -> Result<ShadowColoring> {
    if h.orientation() == Orientation::Reversed {
        return Err(Error::InvalidInput(
            "the natural coloring needs a representation of the diagram's own orientation".into(),
        ));
    }
    let arcs = h
        .arc_labels()
        .iter()
        .map(|w| h.element(w))
        .collect::<Result<Vec<_>>>()?;
    let regions = extend_regions(d, &arcs, base_region, base_color)?;
    let s = ShadowColoring { arcs, regions };
    check_coloring(d, &s)?;
    Ok(s)
}

/// `ε(c) · vol^w(r, x, y)` with `r` the source region, `x` the under-arc
/// bordering it and `y` the over-arc.
pub fn boltzmann_weight(d: &Diagram, s: &ShadowColoring, c: CrossingId, w: &QuandleElement) -> f64 {
    let f = d.crossing_frame(c);
    let r = &s.regions[f.source_region];
    let x = &s.arcs[f.source_under_arc()];
    let y = &s.arcs[f.over_arc];
    f.sign.as_f64() * cocycle_vol(w, r, x, y)
}
