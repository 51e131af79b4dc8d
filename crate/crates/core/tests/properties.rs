//! Randomized invariants over generated objects.

use arcorder::moves::{down_moves, up_moves};
use arcorder::{
    delta_hom, diagram_of_object, hom_leq, hom_obj, stratum_dim, test_set, Indecomposable, S2Object,
};
use proptest::prelude::*;

fn indecomposable() -> impl Strategy<Value = Indecomposable> {
    prop_oneof![
        (1u32..8).prop_map(Indecomposable::P0),
        (1u32..8).prop_map(Indecomposable::P1),
        (2u32..8).prop_map(Indecomposable::P2),
        (3u32..8)
            .prop_flat_map(|m| (Just(m), 1..m - 1))
            .prop_map(|(m, r)| Indecomposable::B2 { m, r }),
    ]
}

fn object() -> impl Strategy<Value = S2Object> {
    prop::collection::vec(indecomposable(), 0..5).prop_map(|v| S2Object::new(v).unwrap())
}

proptest! {
    #[test]
    fn display_round_trips(x in object()) {
        let back: S2Object = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn diagram_round_trips(x in object()) {
        let (beta, gamma) = x.object_type();
        prop_assert_eq!(diagram_of_object(&x).to_object(&beta, &gamma).unwrap(), x);
    }

    #[test]
    fn hom_is_additive(a in object(), b in object(), c in object()) {
        prop_assert_eq!(hom_obj(&a.sum(&b), &c), hom_obj(&a, &c) + hom_obj(&b, &c));
        prop_assert_eq!(hom_obj(&c, &a.sum(&b)), hom_obj(&c, &a) + hom_obj(&c, &b));
    }

    #[test]
    fn hom_order_is_reflexive(x in object()) {
        prop_assert!(hom_leq(&x, &x).unwrap());
    }

    #[test]
    fn down_moves_are_inverted_by_up_moves(x in object()) {
        let (beta, gamma) = x.object_type();
        let d = diagram_of_object(&x);
        for (mv, lower) in down_moves(&d) {
            prop_assert!(up_moves(&lower).iter().any(|(m, upper)| *m == mv && *upper == d));
            let y = lower.to_object(&beta, &gamma).unwrap();
            prop_assert!(stratum_dim(&y) > stratum_dim(&x));
            prop_assert!(hom_leq(&y, &x).unwrap());
            for t in test_set(&beta) {
                prop_assert_eq!(delta_hom(&y, &x, t).unwrap(), i64::from(mv.region(&t)));
            }
        }
    }

    #[test]
    fn type_is_consistent(x in object()) {
        let (beta, gamma) = x.object_type();
        prop_assert!(beta.contains(&gamma));
        prop_assert_eq!(beta.weight(), gamma.weight() + x.alpha().weight());
    }
}
