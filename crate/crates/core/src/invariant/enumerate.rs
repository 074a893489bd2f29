use super::coloring::rule_residual;
use super::{extend_regions, ShadowColoring};
use crate::diagram::{Diagram, Sign};
use crate::error::Result;
use crate::holquandle::{ConjugatePool, QuandleElement};
use crate::hypgeom::MATRIX_TOL;

/// An arc whose color is fixed by two earlier arcs at some crossing.
#[derive(Clone, Copy, Debug)]
struct Forcing {
    /// The already-colored under-arc and the over-arc.
    other: usize,
    over: usize,
    /// Whether the target is `other ∗ over` (else `other ∗⁻¹ over`).
    forward: bool,
}

#[derive(Clone, Copy, Debug)]
struct Check {
    under_in: usize,
    under_out: usize,
    over: usize,
    sign: Sign,
}

#[derive(Clone, Debug, Default)]
struct LevelPlan {
    forcing: Option<Forcing>,
    checks: Vec<Check>,
}

fn plan(d: &Diagram) -> Vec<LevelPlan> {
    let mut levels = vec![LevelPlan::default(); d.n_arcs()];
    for f in d.crossing_frames() {
        let (i, o, y) = (f.under_in_arc, f.under_out_arc, f.over_arc);
        let top = i.max(o).max(y);
        levels[top].checks.push(Check {
            under_in: i,
            under_out: o,
            over: y,
            sign: f.sign,
        });
        if levels[top].forcing.is_some() || y == top {
            continue;
        }
        // out = in ∗ over at positive crossings, in = out ∗ over at negative.
        let forcing = if o == top && i < top {
            Forcing {
                other: i,
                over: y,
                forward: f.sign == Sign::Positive,
            }
        } else if i == top && o < top {
            Forcing {
                other: o,
                over: y,
                forward: f.sign == Sign::Negative,
            }
        } else {
            continue;
        };
        levels[top].forcing = Some(forcing);
    }
    levels
}

#[derive(Clone, Copy, Debug)]
enum Cursor {
    Scan(usize),
    Forced(Option<usize>),
}

/// Arc colorings with colors drawn from a pool, as pool indices, in
/// lexicographic order over arcs by id.
pub struct ArcColorings<'a> {
    d: &'a Diagram,
    pool: &'a ConjugatePool,
    plan: Vec<LevelPlan>,
    assign: Vec<usize>,
    cursors: Vec<Cursor>,
    level: usize,
    done: bool,
}

impl<'a> ArcColorings<'a> {
    pub fn new(d: &'a Diagram, pool: &'a ConjugatePool) -> Self {
        let n = d.n_arcs();
        let mut it = ArcColorings {
            d,
            pool,
            plan: plan(d),
            assign: vec![0; n],
            cursors: vec![Cursor::Scan(0); n],
            level: 0,
            done: pool.is_empty() || n == 0,
        };
        if !it.done {
            it.cursors[0] = it.start_cursor(0);
        }
        it
    }

    fn element(&self, arc: usize) -> &QuandleElement {
        self.pool.get(self.assign[arc])
    }

    fn start_cursor(&self, level: usize) -> Cursor {
        match self.plan[level].forcing {
            None => Cursor::Scan(0),
            Some(f) => {
                let (other, over) = (self.element(f.other), self.element(f.over));
                let target = if f.forward {
                    other.op(over)
                } else {
                    other.op_inv(over)
                };
                Cursor::Forced(self.pool.find(target.matrix()))
            }
        }
    }

    fn next_candidate(&mut self, level: usize) -> Option<usize> {
        match &mut self.cursors[level] {
            Cursor::Scan(next) if *next < self.pool.len() => {
                *next += 1;
                Some(*next - 1)
            }
            Cursor::Scan(_) => None,
            Cursor::Forced(slot) => slot.take(),
        }
    }

    fn checks_pass(&self, level: usize) -> bool {
        self.plan[level].checks.iter().all(|c| {
            let over = self.element(c.over);
            let (from, to) = match c.sign {
                Sign::Positive => (c.under_in, c.under_out),
                Sign::Negative => (c.under_out, c.under_in),
            };
            rule_residual(&self.element(from).op(over), self.element(to), over) < MATRIX_TOL
        })
    }

    pub fn diagram(&self) -> &Diagram {
        self.d
    }
}

impl Iterator for ArcColorings<'_> {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let last = self.assign.len() - 1;
        while !self.done {
            let level = self.level;
            match self.next_candidate(level) {
                None => {
                    if level == 0 {
                        self.done = true;
                    } else {
                        self.level -= 1;
                    }
                }
                Some(c) => {
                    self.assign[level] = c;
                    if !self.checks_pass(level) {
                        continue;
                    }
                    if level == last {
                        return Some(self.assign.clone());
                    }
                    self.level += 1;
                    self.cursors[level + 1] = self.start_cursor(level + 1);
                }
            }
        }
        None
    }
}

/// Shadow colorings whose arc colors and base-region color (region 0) lie
/// in the pool, other regions extended by the region rule. Order: arc
/// colorings lexicographically, then base colors in pool order. Stops after
/// `cap` colorings and records whether any were left over.
pub struct ColoringIter<'a> {
    arcs: ArcColorings<'a>,
    current: Option<Vec<QuandleElement>>,
    base: usize,
    cap: usize,
    emitted: usize,
    truncated: bool,
}

impl<'a> ColoringIter<'a> {
    pub fn truncated(&self) -> bool {
        self.truncated
    }

    pub fn emitted(&self) -> usize {
        self.emitted
    }

    fn advance(&mut self) -> Option<Result<ShadowColoring>> {
        let pool = self.arcs.pool;
        if self.current.is_none() || self.base >= pool.len() {
            let idx = self.arcs.next()?;
            self.current = Some(idx.iter().map(|&i| pool.get(i).clone()).collect());
            self.base = 0;
        }
        let arcs = self.current.as_ref().expect("set above");
        let base = pool.get(self.base);
        self.base += 1;
        Some(
            extend_regions(self.arcs.d, arcs, 0, base).map(|regions| ShadowColoring {
                arcs: arcs.clone(),
                regions,
            }),
        )
    }
}

impl Iterator for ColoringIter<'_> {
    type Item = Result<ShadowColoring>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.emitted >= self.cap {
            if !self.truncated && self.advance().is_some() {
                self.truncated = true;
            }
            return None;
        }
        let item = self.advance()?;
        self.emitted += 1;
        Some(item)
    }
}

pub fn enumerate_colorings<'a>(
    d: &'a Diagram,
    pool: &'a ConjugatePool,
    cap: usize,
) -> ColoringIter<'a> {
    ColoringIter {
        arcs: ArcColorings::new(d, pool),
        current: None,
        base: 0,
        cap,
        emitted: 0,
        truncated: false,
    }
}
