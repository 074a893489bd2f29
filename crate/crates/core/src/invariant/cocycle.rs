use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::holquandle::QuandleElement;
use crate::hypgeom::IdealTetrahedron;

/// The four ordered ideal tetrahedra whose signed volumes make up
/// `vol^w(z, x, y)`.
pub fn cocycle_tetrahedra(
    w: &QuandleElement,
    z: &QuandleElement,
    x: &QuandleElement,
    y: &QuandleElement,
) -> [IdealTetrahedron; 4] {
    let zx = z.op(x);
    let zxy = zx.op(y);
    let xy = x.op(y);
    let zy = z.op(y);
    let w0 = w.fixed_point();
    let (x0, y0, xy0) = (x.fixed_point(), y.fixed_point(), xy.fixed_point());
    [
        IdealTetrahedron::new(w0, z.fixed_point(), x0, y0),
        IdealTetrahedron::new(w0, zx.fixed_point(), y0, x0),
        IdealTetrahedron::new(w0, zxy.fixed_point(), xy0, y0),
        IdealTetrahedron::new(w0, zy.fixed_point(), y0, xy0),
    ]
}

/// `vol^w(z, x, y)`: the algebraic volume of the four-tetrahedron chain
/// based at `w∞`. Exactly zero when `x = y`.
pub fn cocycle_vol(
    w: &QuandleElement,
    z: &QuandleElement,
    x: &QuandleElement,
    y: &QuandleElement,
) -> f64 {
    if x == y {
        return 0.0;
    }
    cocycle_tetrahedra(w, z, x, y)
        .iter()
        .map(|t| t.volume())
        .sum()
}

/// Largest violations of the two cocycle conditions over random samples.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct CocycleResiduals {
    /// `max |θ(r, x, x)|`.
    pub degenerate: f64,
    /// `max` over quadruples of the defect in the six-term relation.
    pub six_term: f64,
    pub samples: usize,
}

impl CocycleResiduals {
    pub fn max(&self) -> f64 {
        self.degenerate.max(self.six_term)
    }
}

/// Defect of the six-term relation
/// `θ(r,x,y) + θ(r∗y, x∗y, z) + θ(r,y,z) = θ(r∗x, y, z) + θ(r,x,z) + θ(r∗z, x∗z, y∗z)`.
pub fn six_term_defect(
    w: &QuandleElement,
    r: &QuandleElement,
    x: &QuandleElement,
    y: &QuandleElement,
    z: &QuandleElement,
) -> f64 {
    let th = |r: &QuandleElement, a: &QuandleElement, b: &QuandleElement| cocycle_vol(w, r, a, b);
    let lhs = th(r, x, y) + th(&r.op(y), &x.op(y), z) + th(r, y, z);
    let rhs = th(&r.op(x), y, z) + th(r, x, z) + th(&r.op(z), &x.op(z), &y.op(z));
    (lhs - rhs).abs()
}

/// Samples `(r, x, y, z)` uniformly from `pool` with a seeded generator and
/// reports the worst residuals of both cocycle conditions.
pub fn cocycle_residuals(
    w: &QuandleElement,
    pool: &[QuandleElement],
    samples: usize,
    seed: u64,
) -> CocycleResiduals {
    let mut out = CocycleResiduals {
        samples,
        ..Default::default()
    };
    if pool.is_empty() {
        return out;
    }
    let mut rng = StdRng::seed_from_u64(seed);
    let mut pick = || &pool[rng.gen_range(0..pool.len())];
    for _ in 0..samples {
        let (r, x, y, z) = (pick(), pick(), pick(), pick());
        out.degenerate = out.degenerate.max(cocycle_vol(w, r, x, x).abs());
        out.six_term = out.six_term.max(six_term_defect(w, r, x, y, z));
    }
    out
}
