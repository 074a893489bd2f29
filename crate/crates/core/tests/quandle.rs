use std::sync::OnceLock;

use proptest::prelude::*;
use qvol::fixtures::{fig8_holonomy, fig8_holonomy_reversed};
use qvol::holquandle::{enumerate_conjugates, GroupWord, HolonomyRep, Letter, QuandleElement};

fn pool() -> &'static [QuandleElement] {
    static POOL: OnceLock<Vec<QuandleElement>> = OnceLock::new();
    POOL.get_or_init(|| {
        enumerate_conjugates(&fig8_holonomy(), 2)
            .elements()
            .to_vec()
    })
}

/// Equality with a tolerance that grows with the size of the entries
/// involved; conjugation by large matrices loses relative precision.
fn close(a: &QuandleElement, b: &QuandleElement, by: &[&QuandleElement]) -> bool {
    let s: f64 = by.iter().map(|e| e.matrix().scale().powi(2)).product();
    a.approx_eq(b, 1e-10 * s.max(1.0))
}

fn idx() -> impl Strategy<Value = usize> {
    0..68usize
}

#[test]
fn idempotent_on_the_whole_pool() {
    assert_eq!(pool().len(), 68);
    for a in pool() {
        assert!(close(&a.op(a), a, &[a]), "{}", a.word());
    }
}

#[test]
fn every_element_is_parabolic_with_matching_fixed_point() {
    for a in pool() {
        assert!(a.matrix().is_parabolic(1e-7 * a.matrix().scale().powi(2)));
        let fp = a.matrix().parabolic_fixed_point().unwrap();
        assert!(fp.chordal_distance(&a.fixed_point()) < 1e-8, "{}", a.word());
    }
}

#[test]
fn reversed_pool_has_the_same_size() {
    assert_eq!(enumerate_conjugates(&fig8_holonomy_reversed(), 2).len(), 68);
}

fn word(h: &HolonomyRep) -> impl Strategy<Value = GroupWord> {
    let gens = h.generators().to_vec();
    prop::collection::vec((0..gens.len(), any::<bool>()), 0..6).prop_map(move |v| {
        GroupWord::from_letters(
            v.into_iter()
                .map(|(g, inv)| Letter::new(gens[g].clone(), inv)),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn right_multiplication_is_invertible(a in idx(), b in idx()) {
        let (a, b) = (&pool()[a], &pool()[b]);
        prop_assert!(close(&a.op(b).op_inv(b), a, &[b, b]));
        prop_assert!(close(&a.op_inv(b).op(b), a, &[b, b]));
    }

    #[test]
    fn right_self_distributive(a in idx(), b in idx(), c in idx()) {
        let (a, b, c) = (&pool()[a], &pool()[b], &pool()[c]);
        let lhs = a.op(b).op(c);
        let rhs = a.op(c).op(&b.op(c));
        prop_assert!(close(&lhs, &rhs, &[b, c, c]), "{} {} {}", a.word(), b.word(), c.word());
    }

    #[test]
    fn fixed_points_are_equivariant(a in idx(), b in idx()) {
        let (a, b) = (&pool()[a], &pool()[b]);
        let moved = b.matrix().inverse().apply(a.fixed_point());
        let fp = a.op(b).matrix().parabolic_fixed_point().unwrap();
        prop_assert!(fp.chordal_distance(&moved) < 1e-8);
    }

    #[test]
    fn evaluation_is_a_homomorphism(u in word(&fig8_holonomy()), v in word(&fig8_holonomy())) {
        let h = fig8_holonomy();
        let uv = h.evaluate(&u.concat(&v)).unwrap();
        let (mu, mv) = (h.evaluate(&u).unwrap(), h.evaluate(&v).unwrap());
        let prod = mu.compose(&mv);
        prop_assert!(uv.approx_eq(&prod, 1e-9 * mu.scale() * mv.scale()));
        let inv = h.evaluate(&u.inverse()).unwrap();
        prop_assert!(inv.compose(&mu).is_identity(1e-9 * mu.scale().powi(2)));
    }

    #[test]
    fn words_print_and_parse_back(u in word(&fig8_holonomy())) {
        let h = fig8_holonomy();
        let text = u.to_string();
        prop_assert_eq!(h.parse_word(&text).unwrap(), u);
    }
}
