//! Property tests over randomly generated transformation semigroups.
//! Generators of degree <= 3 keep the closures at desk scale (at most
//! the 27 elements of the full transformation monoid on three points).

use proptest::collection::vec;
use proptest::prelude::*;

use sgcat::greens::{d_class_preorder, greens_data};
use sgcat::localstruct::{
    divisor_product, divisor_product_witness_sweep, local_divisor, schutzenberger_group, Side,
};
use sgcat::permgroup::perm_groups_isomorphic;
use sgcat::semigroup::{generate_from_transformations, Semigroup, Transformation};

fn arb_transformation(degree: usize) -> impl Strategy<Value = Transformation> {
    vec(0..degree, degree).prop_map(|imgs| Transformation::new(imgs).unwrap())
}

fn arb_semigroup() -> impl Strategy<Value = Semigroup> {
    (2..=3usize)
        .prop_flat_map(|degree| vec(arb_transformation(degree), 1..=3))
        .prop_map(|gens| generate_from_transformations(&gens).unwrap().0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generated_tables_are_associative(sg in arb_semigroup()) {
        let rows: Vec<Vec<usize>> = (0..sg.order())
            .map(|i| (0..sg.order()).map(|j| sg.mul(i, j)).collect())
            .collect();
        prop_assert!(Semigroup::from_table(rows, None).is_ok());
    }

    #[test]
    fn opposite_is_an_involution(sg in arb_semigroup()) {
        prop_assert_eq!(sg.opposite().opposite(), sg);
    }

    #[test]
    fn local_units_operator_is_idempotent(sg in arb_semigroup()) {
        if sg.idempotents().is_empty() {
            return Ok(());
        }
        let (lu, _) = sg.local_units_subsemigroup().unwrap();
        let (lu2, emb) = lu.local_units_subsemigroup().unwrap();
        prop_assert_eq!(lu2.order(), lu.order());
        prop_assert_eq!(emb, (0..lu.order()).collect::<Vec<_>>());
    }

    #[test]
    fn mutual_preorder_means_equal_ideals(sg in arb_semigroup()) {
        let g = greens_data(&sg);
        for s in sg.elements() {
            for t in sg.elements() {
                let both = g.le_r.le(s, t) && g.le_r.le(t, s);
                prop_assert_eq!(both, sg.right_ideal(s) == sg.right_ideal(t));
            }
        }
    }

    #[test]
    fn d_class_preorder_is_a_partial_order(sg in arb_semigroup()) {
        let p = d_class_preorder(&sg);
        prop_assert!(p.order.is_reflexive());
        prop_assert!(p.order.is_transitive());
        prop_assert!(p.order.is_antisymmetric());
    }

    #[test]
    fn schutzenberger_action_is_free_and_transitive(sg in arb_semigroup()) {
        let g = greens_data(&sg);
        for s in sg.elements() {
            let h = g.h_class_of(s);
            let left = schutzenberger_group(&sg, s, Side::Left);
            prop_assert_eq!(left.order(), h.len());
        }
    }

    #[test]
    fn left_and_right_schutzenberger_groups_isomorphic(sg in arb_semigroup()) {
        // One representative element per D-class keeps the case cheap.
        let g = greens_data(&sg);
        for cls in &g.d_classes {
            let s = cls[0];
            let l = schutzenberger_group(&sg, s, Side::Left);
            let r = schutzenberger_group(&sg, s, Side::Right);
            prop_assert!(perm_groups_isomorphic(&l, &r).unwrap());
        }
    }

    #[test]
    fn divisor_product_is_witness_independent(sg in arb_semigroup()) {
        for s in sg.elements() {
            let d = local_divisor(&sg, s);
            for &u in &d.carrier {
                for &v in &d.carrier {
                    let sweep = divisor_product_witness_sweep(&sg, s, u, v);
                    prop_assert_eq!(sweep.len(), 1);
                    prop_assert_eq!(sweep[0], divisor_product(&sg, s, u, v));
                }
            }
        }
    }

    #[test]
    fn regular_d_classes_are_exactly_the_idempotent_ones(sg in arb_semigroup()) {
        let g = greens_data(&sg);
        for (c, cls) in g.d_classes.iter().enumerate() {
            if g.d_regular[c] {
                prop_assert!(cls.iter().all(|&s| sg.is_regular(s)));
            } else {
                prop_assert!(cls.iter().all(|&s| !sg.is_idempotent(s)));
            }
        }
    }
}
