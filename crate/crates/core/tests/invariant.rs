use std::sync::OnceLock;

use proptest::prelude::*;
use qvol::diagram::{region_walk, Diagram};
use qvol::fixtures::{fig8_diagram, fig8_holonomy, fig8_r2_diagram, fig8_r2_holonomy, FIG8_VOLUME};
use qvol::holquandle::{enumerate_conjugates, ConjugatePool};
use qvol::invariant::{
    cocycle_residuals, cocycle_vol, enumerate_colorings, phi, six_term_defect, step_color,
    validate_coloring, ShadowColoring,
};

struct Setup {
    d: Diagram,
    pool: ConjugatePool,
    colorings: Vec<ShadowColoring>,
}

fn setup() -> &'static Setup {
    static S: OnceLock<Setup> = OnceLock::new();
    S.get_or_init(|| {
        let d = fig8_diagram();
        let pool = enumerate_conjugates(&fig8_holonomy(), 1);
        let colorings = enumerate_colorings(&d, &pool, 100_000)
            .collect::<Result<Vec<_>, _>>()
            .unwrap();
        Setup { d, pool, colorings }
    })
}

#[test]
fn depth_one_colorings_are_valid() {
    let s = setup();
    assert!(!s.colorings.is_empty());
    for c in &s.colorings {
        assert!(validate_coloring(&s.d, c).is_empty());
    }
}

#[test]
fn sampled_cocycle_residuals() {
    let pool = enumerate_conjugates(&fig8_holonomy(), 2);
    let w = &pool.elements()[0];
    let r = cocycle_residuals(w, pool.elements(), 200, 7);
    assert_eq!(r.samples, 200);
    assert!(r.max() < 1e-9, "{r:?}");
}

#[test]
fn r2_diagram_colorings_stay_on_the_lattice() {
    let d = fig8_r2_diagram();
    let h = fig8_r2_holonomy();
    let pool = enumerate_conjugates(&h, 1);
    let w = &pool.elements()[0];
    for s in enumerate_colorings(&d, &pool, 20_000) {
        let r = phi(&d, &s.unwrap(), w, FIG8_VOLUME, 1e-6).unwrap();
        assert!(r.residual < 1e-6);
    }
}

fn coloring() -> impl Strategy<Value = usize> {
    0..setup().colorings.len()
}

fn element() -> impl Strategy<Value = usize> {
    0..setup().pool.len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn state_sum_is_a_multiple_of_the_volume(i in coloring(), w in element()) {
        let s = setup();
        let w = s.pool.get(w);
        let r = phi(&s.d, &s.colorings[i], w, FIG8_VOLUME, 1e-6);
        prop_assert!(r.is_ok(), "{r:?}");
        let r = r.unwrap();
        prop_assert!((r.phi - r.k as f64 * FIG8_VOLUME).abs() < 1e-6);
    }

    #[test]
    fn cocycle_conditions(w in element(), r in element(), x in element(), y in element(), z in element()) {
        let p = &setup().pool;
        let (w, r, x, y, z) = (p.get(w), p.get(r), p.get(x), p.get(y), p.get(z));
        prop_assert_eq!(cocycle_vol(w, r, x, x), 0.0);
        prop_assert!(six_term_defect(w, r, x, y, z) < 1e-9);
    }

    #[test]
    fn region_colors_do_not_depend_on_the_path(i in coloring(), a in 0..6usize, b in 0..6usize, via in 0..6usize) {
        let s = setup();
        let c = &s.colorings[i];
        let walk = |from: usize, to: usize, start| {
            region_walk(&s.d, from, to).unwrap().iter().fold(start, |col, step| step_color(&col, step, &c.arcs))
        };
        let direct = walk(a, b, c.regions[a].clone());
        let detour = walk(via, b, walk(a, via, c.regions[a].clone()));
        prop_assert!(direct == c.regions[b]);
        prop_assert!(detour == c.regions[b]);
    }
}
