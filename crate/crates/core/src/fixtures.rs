//! Built-in figure-eight knot data.
//!
//! A 4-crossing diagram and a 6-crossing diagram of the same knot (one
//! extra Reidemeister II move), holonomy representations of `K` and of
//! `-K`, and four shadow colorings of the 4-crossing diagram. Their state
//! sums are `+V` and `−V` for the quandle of `K` with base `w`, then `+V`
//! and `−V` for the quandle of `-K` with base `x^-1`.

use crate::diagram::{parse_pd, Diagram};
use crate::holquandle::{load_holonomy, HolonomyDocument, HolonomyRep};
use crate::Result;

pub const FIG8_PD: &str = include_str!("../fixtures/fig8.pd");
pub const FIG8_R2_PD: &str = include_str!("../fixtures/fig8_r2.pd");
pub const FIG8_HOLONOMY: &str = include_str!("../fixtures/fig8_holonomy.json");
pub const FIG8_HOLONOMY_REVERSED: &str = include_str!("../fixtures/fig8_holonomy_reversed.json");
pub const FIG8_R2_HOLONOMY: &str = include_str!("../fixtures/fig8_r2_holonomy.json");

/// Coloring documents for the 4-crossing diagram. The first two use the
/// standard representation, the last two the reversed one.
pub const FIG8_COLORINGS: [&str; 4] = [
    include_str!("../fixtures/fig8_coloring_1.json"),
    include_str!("../fixtures/fig8_coloring_2.json"),
    include_str!("../fixtures/fig8_coloring_3.json"),
    include_str!("../fixtures/fig8_coloring_4.json"),
];

/// Hyperbolic volume of the figure-eight complement, `2 D(e^{iπ/3})`.
pub const FIG8_VOLUME: f64 = 2.029_883_212_819_307_4;

pub fn fig8_diagram() -> Diagram {
    parse_pd(FIG8_PD).expect("embedded PD code is valid")
}

pub fn fig8_r2_diagram() -> Diagram {
    parse_pd(FIG8_R2_PD).expect("embedded PD code is valid")
}

fn load(doc: &str, d: &Diagram) -> Result<HolonomyRep> {
    load_holonomy(&HolonomyDocument::from_json(doc)?, d)
}

pub fn fig8_holonomy() -> HolonomyRep {
    load(FIG8_HOLONOMY, &fig8_diagram()).expect("embedded holonomy is valid")
}

pub fn fig8_holonomy_reversed() -> HolonomyRep {
    load(FIG8_HOLONOMY_REVERSED, &fig8_diagram()).expect("embedded holonomy is valid")
}

pub fn fig8_r2_holonomy() -> HolonomyRep {
    load(FIG8_R2_HOLONOMY, &fig8_r2_diagram()).expect("embedded holonomy is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::holquandle::{enumerate_conjugates, Orientation};
    use crate::hypgeom::bloch_wigner;
    use num_complex::Complex64;

    #[test]
    fn volume_constant() {
        let d = 2.0 * bloch_wigner(Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_3));
        assert!((d - FIG8_VOLUME).abs() < 1e-15);
    }

    #[test]
    fn representations_load() {
        let h = fig8_holonomy();
        assert_eq!(h.orientation(), Orientation::Standard);
        let labels: Vec<String> = h.arc_labels().iter().map(|w| w.to_string()).collect();
        assert_eq!(labels, ["y", "z", "w", "x"]);
        let r = fig8_holonomy_reversed();
        assert_eq!(r.orientation(), Orientation::Reversed);
        assert_eq!(fig8_r2_holonomy().arc_labels().len(), 6);
    }

    #[test]
    fn coloring_documents_land_on_the_expected_multiple() {
        use crate::invariant::{check_coloring, phi, ColoringDocument};
        let d = fig8_diagram();
        let reps = [fig8_holonomy(), fig8_holonomy_reversed()];
        for (i, (text, k)) in FIG8_COLORINGS.iter().zip([1, -1, 1, -1]).enumerate() {
            let h = &reps[i / 2];
            let doc = ColoringDocument::from_json(text).unwrap();
            let (s, w) = doc.resolve(&d, h).unwrap();
            check_coloring(&d, &s).unwrap();
            let r = phi(&d, &s, &w, FIG8_VOLUME, 1e-9).unwrap();
            assert_eq!(r.k, k, "coloring {}", i + 1);
        }
    }

    #[test]
    fn pool_sizes() {
        for h in [fig8_holonomy(), fig8_holonomy_reversed()] {
            let sizes: Vec<usize> = (0..3).map(|k| enumerate_conjugates(&h, k).len()).collect();
            assert_eq!(sizes, [4, 16, 68]);
        }
    }
}
