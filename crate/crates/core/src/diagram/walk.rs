use std::collections::VecDeque;

use serde::Serialize;

use super::{ArcId, Diagram, RegionId};

/// Whether a step crosses an arc in the direction of its normal (back to
/// front) or against it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WalkDirection {
    WithNormal,
    AgainstNormal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WalkStep {
    pub from: RegionId,
    pub to: RegionId,
    pub arc: ArcId,
    pub direction: WalkDirection,
}

/// A shortest path of arc crossings from `from` to `to` in the dual graph.
/// Ties are broken by edge label, so the result is deterministic.
pub fn region_walk(diagram: &Diagram, from: RegionId, to: RegionId) -> Option<Vec<WalkStep>> {
    let n = diagram.n_regions();
    if from >= n || to >= n {
        return None;
    }
    let mut adjacency: Vec<Vec<WalkStep>> = vec![Vec::new(); n];
    for sides in diagram.edges() {
        adjacency[sides.back].push(WalkStep {
            from: sides.back,
            to: sides.front,
            arc: sides.arc,
            direction: WalkDirection::WithNormal,
        });
        adjacency[sides.front].push(WalkStep {
            from: sides.front,
            to: sides.back,
            arc: sides.arc,
            direction: WalkDirection::AgainstNormal,
        });
    }

    let mut parent: Vec<Option<WalkStep>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(r) = queue.pop_front() {
        if r == to {
            break;
        }
        for step in &adjacency[r] {
            if !seen[step.to] {
                seen[step.to] = true;
                parent[step.to] = Some(*step);
                queue.push_back(step.to);
            }
        }
    }
    if !seen[to] {
        return None;
    }
    let mut path = Vec::new();
    let mut r = to;
    while r != from {
        let step = parent[r]?;
        path.push(step);
        r = step.from;
    }
    path.reverse();
    Some(path)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;

    #[test]
    fn walks_reach_every_region_within_five_steps() {
        let d = parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap();
        for a in 0..d.n_regions() {
            for b in 0..d.n_regions() {
                let path = region_walk(&d, a, b).unwrap();
                assert!(path.len() <= 5);
                let mut r = a;
                for s in &path {
                    assert_eq!(s.from, r);
                    r = s.to;
                }
                assert_eq!(r, b);
            }
        }
        assert!(region_walk(&d, 0, 99).is_none());
    }

    #[test]
    fn steps_respect_edge_sides() {
        let d = parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap();
        for s in region_walk(&d, 0, d.n_regions() - 1).unwrap() {
            let ok = d.edges().iter().any(|e| {
                e.arc == s.arc
                    && match s.direction {
                        WalkDirection::WithNormal => (e.back, e.front) == (s.from, s.to),
                        WalkDirection::AgainstNormal => (e.front, e.back) == (s.from, s.to),
                    }
            });
            assert!(ok, "{s:?}");
        }
    }
}
