//! Property tests for the exact arithmetic layers: ring axioms of the sparse
//! polynomials, canonical text round trips, and content normalization.

use hopfgen::poly::{Monomial, MonomialOrder, Poly, PolyRing};
use hopfgen::scalar;

use proptest::prelude::*;

fn ring() -> PolyRing {
    PolyRing::new(
        vec!["x".into(), "y".into(), "z".into()],
        MonomialOrder::DegRevLex,
    )
}

fn arb_poly() -> impl Strategy<Value = Poly> {
    let term = (
        prop::collection::vec(0u16..4, 3),
        -9i64..=9,
        1i64..=3,
    );
    prop::collection::vec(term, 0..6).prop_map(|terms| {
        let r = ring();
        r.from_terms(
            terms
                .into_iter()
                .map(|(exps, num, den)| (Monomial { exps }, scalar::ratio(num, den)))
                .collect(),
        )
    })
}

proptest! {
    #[test]
    fn addition_is_commutative_and_associative(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
        let r = ring();
        prop_assert_eq!(r.add(&a, &b), r.add(&b, &a));
        prop_assert_eq!(r.add(&r.add(&a, &b), &c), r.add(&a, &r.add(&b, &c)));
    }

    #[test]
    fn multiplication_is_commutative_associative_distributive(
        a in arb_poly(),
        b in arb_poly(),
        c in arb_poly(),
    ) {
        let r = ring();
        prop_assert_eq!(r.mul(&a, &b), r.mul(&b, &a));
        prop_assert_eq!(r.mul(&r.mul(&a, &b), &c), r.mul(&a, &r.mul(&b, &c)));
        prop_assert_eq!(
            r.mul(&a, &r.add(&b, &c)),
            r.add(&r.mul(&a, &b), &r.mul(&a, &c))
        );
    }

    #[test]
    fn subtraction_of_self_is_zero(a in arb_poly()) {
        let r = ring();
        prop_assert!(r.sub(&a, &a).is_zero());
    }

    #[test]
    fn render_parse_round_trip(a in arb_poly()) {
        let r = ring();
        let text = r.render(&a);
        prop_assert_eq!(r.parse(&text).unwrap(), a);
    }

    #[test]
    fn content_normalization_is_idempotent_and_proportional(a in arb_poly()) {
        let r = ring();
        let n = r.content_normalize(&a);
        prop_assert_eq!(r.content_normalize(&n), n.clone());
        // normalization preserves the zero set: a is a scalar multiple of n
        if let (Some((_, ca)), Some((_, cn))) = (a.lead(), n.lead()) {
            let factor = ca / cn;
            prop_assert_eq!(r.scale(&n, &factor), a);
        }
    }

    #[test]
    fn scalar_render_parse_round_trip(num in -1000i64..1000, den in 1i64..60) {
        let s = scalar::ratio(num, den);
        prop_assert_eq!(scalar::parse(&scalar::render(&s)).unwrap(), s);
    }
}
