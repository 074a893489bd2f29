use std::collections::HashMap;

use super::{GroupWord, HolonomyRep, Letter, QuandleElement};
use crate::hypgeom::{MoebiusMap, MATRIX_TOL};

/// A finite window into the knot quandle: conjugates of the generators,
/// deduplicated by matrix, in order of discovery.
#[derive(Clone, Debug, Default)]
pub struct ConjugatePool {
    elements: Vec<QuandleElement>,
    index: HashMap<[i64; 8], Vec<usize>>,
}

impl ConjugatePool {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_elements(elements: impl IntoIterator<Item = QuandleElement>) -> Self {
        let mut pool = Self::new();
        for e in elements {
            pool.insert(e);
        }
        pool
    }

    /// Position of an element with this matrix, if present.
    pub fn find(&self, m: &MoebiusMap) -> Option<usize> {
        self.index
            .get(&m.dedup_key())?
            .iter()
            .copied()
            .find(|&i| self.elements[i].matrix().approx_eq(m, MATRIX_TOL))
    }

    /// Adds the element unless an equal one is present; returns its index
    /// and whether it was new.
    pub fn insert(&mut self, e: QuandleElement) -> (usize, bool) {
        if let Some(i) = self.find(e.matrix()) {
            return (i, false);
        }
        let i = self.elements.len();
        self.index
            .entry(e.matrix().dedup_key())
            .or_default()
            .push(i);
        self.elements.push(e);
        (i, true)
    }

    pub fn elements(&self) -> &[QuandleElement] {
        &self.elements
    }

    pub fn get(&self, i: usize) -> &QuandleElement {
        &self.elements[i]
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, e: &QuandleElement) -> bool {
        self.find(e.matrix()).is_some()
    }
}

/// All `g⁻¹ x g` for generators `x` and words `g` of length at most
/// `depth`, depth by depth. Generators come first in declared order.
pub fn enumerate_conjugates(h: &HolonomyRep, depth: usize) -> ConjugatePool {
    let generators = h.generator_elements();
    let letters: Vec<QuandleElement> = h
        .generators()
        .iter()
        .flat_map(|g| [Letter::new(g.clone(), false), Letter::new(g.clone(), true)])
        .map(|l| {
            let w = GroupWord::from_letters([l]);
            let m = h.evaluate(&w).expect("letters name known generators");
            // Only the word and matrix of a conjugator matter.
            QuandleElement::from_parts(w, m, crate::hypgeom::BoundaryPoint::Infinity)
        })
        .collect();

    let mut pool = ConjugatePool::from_elements(generators);
    let mut frontier: Vec<usize> = (0..pool.len()).collect();
    for _ in 0..depth {
        let mut next = Vec::new();
        for &i in &frontier {
            for l in &letters {
                let e = pool.get(i).op(l);
                let (j, new) = pool.insert(e);
                if new {
                    next.push(j);
                }
            }
        }
        frontier = next;
    }
    pool
}
