//! Oriented knot diagrams from PD codes.
//!
//! A PD code lists each crossing as `X(a, b, c, d)`: the four edge labels
//! read counterclockwise starting at the incoming under-edge `a`. Edges are
//! labelled `1..=2n` along the orientation, so the outgoing under-edge is
//! `c = a + 1` and the over-strand runs from whichever of `b`, `d` is
//! followed (mod `2n`) by the other.
//!
//! Every arc carries a normal pointing to the left of its orientation. The
//! region on that side is its *front*, the other its *back*. With this
//! choice the strand passing under a positive crossing moves along the
//! over-arc's normal.

mod pd;
mod walk;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use pd::parse_pd;
pub use walk::{region_walk, WalkDirection, WalkStep};

pub type ArcId = usize;
pub type RegionId = usize;
pub type CrossingId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i32 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn as_f64(self) -> f64 {
        self.value() as f64
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// Which side of an arc a region lies on, relative to the arc's normal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Back,
    Front,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Crossing {
    /// Edge labels counterclockwise from the incoming under-edge.
    pub pd: [usize; 4],
    pub sign: Sign,
}

impl Crossing {
    pub fn under_in_edge(&self) -> usize {
        self.pd[0]
    }

    pub fn under_out_edge(&self) -> usize {
        self.pd[2]
    }

    pub fn over_in_edge(&self) -> usize {
        match self.sign {
            Sign::Positive => self.pd[3],
            Sign::Negative => self.pd[1],
        }
    }

    pub fn over_out_edge(&self) -> usize {
        match self.sign {
            Sign::Positive => self.pd[1],
            Sign::Negative => self.pd[3],
        }
    }

    fn over_out_slot(&self) -> usize {
        match self.sign {
            Sign::Positive => 1,
            Sign::Negative => 3,
        }
    }
}

/// A maximal run of edges not interrupted by an under-crossing.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Arc {
    pub edges: Vec<usize>,
}

/// A face of the diagram on `S²`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Region {
    /// Boundary arcs in traversal order, with the side this region is on.
    pub boundary: Vec<(ArcId, Side)>,
    /// Boundary edge labels in the same order.
    pub edges: Vec<usize>,
}

/// The two regions separated by an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeSides {
    pub arc: ArcId,
    pub back: RegionId,
    pub front: RegionId,
}

/// Local data at a crossing used for colorings and Boltzmann weights.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CrossingFrame {
    pub crossing: CrossingId,
    pub under_in_arc: ArcId,
    pub under_out_arc: ArcId,
    pub over_arc: ArcId,
    /// The corner region on the back side of both the over-arc and the
    /// under-strand.
    pub source_region: RegionId,
    pub sign: Sign,
}

impl CrossingFrame {
    /// The under-arc adjacent to the source region: the incoming one at a
    /// positive crossing, the outgoing one at a negative crossing.
    pub fn source_under_arc(&self) -> ArcId {
        match self.sign {
            Sign::Positive => self.under_in_arc,
            Sign::Negative => self.under_out_arc,
        }
    }

    /// The other under-arc, on the front side of the over-arc.
    pub fn target_under_arc(&self) -> ArcId {
        match self.sign {
            Sign::Positive => self.under_out_arc,
            Sign::Negative => self.under_in_arc,
        }
    }
}

/// `g(under_out) = g(over)⁻¹ g(under_in) g(over)` at a positive crossing,
/// `g(under_out) = g(over) g(under_in) g(over)⁻¹` at a negative one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WirtingerRelation {
    pub crossing: CrossingId,
    pub under_in: ArcId,
    pub under_out: ArcId,
    pub over: ArcId,
    pub sign: Sign,
}

#[derive(Clone, Debug)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    arcs: Vec<Arc>,
    regions: Vec<Region>,
    /// Indexed by `edge label - 1`.
    edges: Vec<EdgeSides>,
    /// Region of the sector between slot `i` and slot `i + 1`.
    corners: Vec<[RegionId; 4]>,
}

impl Diagram {
    /// The crossingless diagram: one arc, two regions.
    pub fn unknot() -> Diagram {
        Diagram {
            crossings: Vec::new(),
            arcs: vec![Arc { edges: vec![1] }],
            regions: vec![
                Region {
                    boundary: vec![(0, Side::Back)],
                    edges: vec![1],
                },
                Region {
                    boundary: vec![(0, Side::Front)],
                    edges: vec![1],
                },
            ],
            edges: vec![EdgeSides {
                arc: 0,
                back: 0,
                front: 1,
            }],
            corners: Vec::new(),
        }
    }

    /// Builds a diagram from validated crossings.
    pub(crate) fn from_crossings(crossings: Vec<Crossing>) -> Result<Diagram> {
        let n = crossings.len();
        if n == 0 {
            return Ok(Diagram::unknot());
        }
        let n_edges = 2 * n;
        let next = |e: usize| e % n_edges + 1;

        // Head of each edge: the crossing where it ends, and whether it ends
        // there as the under-strand.
        let mut head_under = vec![None; n_edges + 1];
        // Tail slot of each edge.
        let mut tail = vec![(usize::MAX, usize::MAX); n_edges + 1];
        for (ci, x) in crossings.iter().enumerate() {
            head_under[x.under_in_edge()] = Some(true);
            head_under[x.over_in_edge()] = Some(false);
            tail[x.under_out_edge()] = (ci, 2);
            tail[x.over_out_edge()] = (ci, x.over_out_slot());
        }
        if head_under[1..].iter().any(Option::is_none)
            || tail[1..].iter().any(|t| t.0 == usize::MAX)
        {
            return Err(Error::Disconnected(
                "some edge has no head or no tail crossing".into(),
            ));
        }

        let mut starts: Vec<usize> = crossings.iter().map(Crossing::under_out_edge).collect();
        starts.sort_unstable();
        let mut arc_of_edge = vec![usize::MAX; n_edges + 1];
        let mut arcs = Vec::with_capacity(n);
        for (arc_id, &start) in starts.iter().enumerate() {
            let mut edges = Vec::new();
            let mut e = start;
            loop {
                if arc_of_edge[e] != usize::MAX {
                    return Err(Error::Disconnected(format!("edge {e} lies on two arcs")));
                }
                arc_of_edge[e] = arc_id;
                edges.push(e);
                if head_under[e] == Some(true) {
                    break;
                }
                e = next(e);
            }
            arcs.push(Arc { edges });
        }

        // Slot occurrences of each label.
        let mut occurrences: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n_edges + 1];
        for (ci, x) in crossings.iter().enumerate() {
            for (slot, &e) in x.pd.iter().enumerate() {
                occurrences[e].push((ci, slot));
            }
        }
        let other_end = |ci: usize, slot: usize| -> (usize, usize) {
            let occ = &occurrences[crossings[ci].pd[slot]];
            if occ[0] == (ci, slot) {
                occ[1]
            } else {
                occ[0]
            }
        };

        // Faces: corner (X, i) is followed by corner (Y, j) where slot j of Y
        // is the far end of the edge in slot i + 1 of X.
        let mut corners = vec![[usize::MAX; 4]; n];
        let mut regions = Vec::new();
        for ci in 0..n {
            for i in 0..4 {
                if corners[ci][i] != usize::MAX {
                    continue;
                }
                let region_id = regions.len();
                let mut boundary = Vec::new();
                let mut edges = Vec::new();
                let (mut x, mut s) = (ci, i);
                while corners[x][s] == usize::MAX {
                    corners[x][s] = region_id;
                    let out_slot = (s + 1) % 4;
                    let e = crossings[x].pd[out_slot];
                    // Walking outward along e; the face is on our right.
                    let leaving_along_orientation = tail[e] == (x, out_slot);
                    let side = if leaving_along_orientation {
                        Side::Back
                    } else {
                        Side::Front
                    };
                    boundary.push((arc_of_edge[e], side));
                    edges.push(e);
                    let (y, j) = other_end(x, out_slot);
                    x = y;
                    s = j;
                }
                if (x, s) != (ci, i) {
                    return Err(Error::Disconnected("face traversal did not close".into()));
                }
                regions.push(Region { boundary, edges });
            }
        }
        if regions.len() != n + 2 {
            return Err(Error::Disconnected(format!(
                "{} faces for {} crossings (expected {})",
                regions.len(),
                n,
                n + 2
            )));
        }

        let edges = (1..=n_edges)
            .map(|e| {
                let (ci, slot) = tail[e];
                EdgeSides {
                    arc: arc_of_edge[e],
                    back: corners[ci][(slot + 3) % 4],
                    front: corners[ci][slot],
                }
            })
            .collect();

        Ok(Diagram {
            crossings,
            arcs,
            regions,
            edges,
            corners,
        })
    }

    pub fn n_crossings(&self) -> usize {
        self.crossings.len()
    }

    pub fn n_arcs(&self) -> usize {
        self.arcs.len()
    }

    pub fn n_regions(&self) -> usize {
        self.regions.len()
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn regions(&self) -> &[Region] {
        &self.regions
    }

    /// Edge sides indexed by `label - 1`.
    pub fn edges(&self) -> &[EdgeSides] {
        &self.edges
    }

    pub fn arc_of_edge(&self, label: usize) -> ArcId {
        self.edges[label - 1].arc
    }

    /// Regions of the four sectors at a crossing, counterclockwise from the
    /// sector between the incoming under-edge and the next slot.
    pub fn corner_regions(&self, c: CrossingId) -> [RegionId; 4] {
        self.corners[c]
    }

    pub fn crossing_sign(&self, c: CrossingId) -> Sign {
        self.crossings[c].sign
    }

    pub fn writhe(&self) -> i32 {
        self.crossings.iter().map(|x| x.sign.value()).sum()
    }

    pub fn crossing_frame(&self, c: CrossingId) -> CrossingFrame {
        let x = &self.crossings[c];
        let source_corner = match x.sign {
            Sign::Positive => 0,
            Sign::Negative => 1,
        };
        CrossingFrame {
            crossing: c,
            under_in_arc: self.arc_of_edge(x.under_in_edge()),
            under_out_arc: self.arc_of_edge(x.under_out_edge()),
            over_arc: self.arc_of_edge(x.over_in_edge()),
            source_region: self.corners[c][source_corner],
            sign: x.sign,
        }
    }

    pub fn crossing_frames(&self) -> Vec<CrossingFrame> {
        (0..self.n_crossings())
            .map(|c| self.crossing_frame(c))
            .collect()
    }

    pub fn wirtinger_relations(&self) -> Vec<WirtingerRelation> {
        self.crossing_frames()
            .into_iter()
            .map(|f| WirtingerRelation {
                crossing: f.crossing,
                under_in: f.under_in_arc,
                under_out: f.under_out_arc,
                over: f.over_arc,
                sign: f.sign,
            })
            .collect()
    }

    /// Mirror image: every quadruple read clockwise. All signs flip.
    pub fn mirror(&self) -> Result<Diagram> {
        if self.crossings.is_empty() {
            return Ok(Diagram::unknot());
        }
        let crossings = self
            .crossings
            .iter()
            .map(|x| {
                let [a, b, c, d] = x.pd;
                Crossing {
                    pd: [a, d, c, b],
                    sign: x.sign.flipped(),
                }
            })
            .collect();
        Diagram::from_crossings(crossings)
    }

    /// The same diagram with the orientation reversed; edge `e` becomes
    /// `2n + 1 - e`. Signs are unchanged.
    pub fn reversed(&self) -> Result<Diagram> {
        if self.crossings.is_empty() {
            return Ok(Diagram::unknot());
        }
        let n_edges = 2 * self.crossings.len();
        let relabel = |e: usize| n_edges + 1 - e;
        let crossings = self
            .crossings
            .iter()
            .map(|x| {
                let [a, b, c, d] = x.pd;
                Crossing {
                    pd: [relabel(c), relabel(d), relabel(a), relabel(b)],
                    sign: x.sign,
                }
            })
            .collect();
        Diagram::from_crossings(crossings)
    }

    pub fn to_pd_string(&self) -> String {
        self.crossings
            .iter()
            .map(|x| format!("X({},{},{},{})", x.pd[0], x.pd[1], x.pd[2], x.pd[3]))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn export(&self) -> DiagramExport {
        DiagramExport {
            pd: self.to_pd_string(),
            writhe: self.writhe(),
            crossings: self
                .crossing_frames()
                .into_iter()
                .map(|f| CrossingExport {
                    id: f.crossing,
                    pd: self.crossings[f.crossing].pd,
                    sign: f.sign.value(),
                    under_in_arc: f.under_in_arc,
                    under_out_arc: f.under_out_arc,
                    over_arc: f.over_arc,
                    source_region: f.source_region,
                    corner_regions: self.corners[f.crossing],
                })
                .collect(),
            arcs: self
                .arcs
                .iter()
                .enumerate()
                .map(|(id, a)| ArcExport {
                    id,
                    edges: a.edges.clone(),
                })
                .collect(),
            regions: self
                .regions
                .iter()
                .enumerate()
                .map(|(id, r)| RegionExport {
                    id,
                    boundary: r
                        .boundary
                        .iter()
                        .map(|&(arc, side)| BoundaryExport { arc, side })
                        .collect(),
                })
                .collect(),
        }
    }
}

/// JSON form of a diagram, with stable integer ids.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct DiagramExport {
    pub pd: String,
    pub writhe: i32,
    pub crossings: Vec<CrossingExport>,
    pub arcs: Vec<ArcExport>,
    pub regions: Vec<RegionExport>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CrossingExport {
    pub id: CrossingId,
    pub pd: [usize; 4],
    pub sign: i32,
    pub under_in_arc: ArcId,
    pub under_out_arc: ArcId,
    pub over_arc: ArcId,
    pub source_region: RegionId,
    pub corner_regions: [RegionId; 4],
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ArcExport {
    pub id: ArcId,
    pub edges: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct RegionExport {
    pub id: RegionId,
    pub boundary: Vec<BoundaryExport>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct BoundaryExport {
    pub arc: ArcId,
    pub side: Side,
}
