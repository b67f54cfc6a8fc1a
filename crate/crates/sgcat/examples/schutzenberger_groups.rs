//! Schützenberger groups of H-classes, local monoids at idempotents,
//! and local divisors at arbitrary elements, with their relationships:
//! the automorphism group of D(S) at s is the Schützenberger group, the
//! endomorphism monoid at s is the local divisor, and the divisor's
//! unit group is again the Schützenberger group.

use sgcat::cat::build_schutzcat;
use sgcat::fixtures;
use sgcat::greens::greens_data;
use sgcat::iso::monoids_isomorphic;
use sgcat::localstruct::{local_divisor, local_monoid, schutzenberger_group, Side};
use sgcat::permgroup::perm_groups_isomorphic;

fn main() {
    let t2 = fixtures::t2();
    let g = greens_data(&t2);
    let d = build_schutzcat(&t2);

    for s in t2.elements() {
        let h: Vec<String> = g.h_class_of(s).iter().map(|&x| t2.name(x)).collect();
        let left = schutzenberger_group(&t2, s, Side::Left);
        let right = schutzenberger_group(&t2, s, Side::Right);
        println!(
            "element {}: H = {{{}}}, left group order {}, right group order {}",
            t2.name(s),
            h.join(" "),
            left.order(),
            right.order()
        );
        assert!(perm_groups_isomorphic(&left, &right).unwrap());
        assert_eq!(left.order(), g.h_class_of(s).len()); // free and transitive

        let auto = d.automorphism_group_at(s);
        assert_eq!(auto, left);

        let div = local_divisor(&t2, s);
        let (endo, _) = d.endomorphism_monoid_at(s);
        assert!(monoids_isomorphic(&endo, &div.monoid).unwrap());
        assert!(perm_groups_isomorphic(&div.unit_group(), &left).unwrap());
    }
    println!("all element-level identifications verified on t2");
    println!();

    // Local monoids at idempotents: e·S·e with identity e.
    let b2 = fixtures::b2();
    let (m, carrier) = local_monoid(&b2, 0).unwrap();
    let names: Vec<String> = carrier.iter().map(|&x| b2.name(x)).collect();
    println!(
        "local monoid of b2 at e11: carrier {{{}}}, order {}",
        names.join(" "),
        m.order()
    );

    // At a non-idempotent the divisor is a genuine quotient structure:
    // for c21 = {x, x2} the divisor at x is the two-element semilattice
    // with identity x, even though x is not idempotent in c21.
    let c21 = fixtures::c21();
    let div = local_divisor(&c21, 0);
    println!(
        "local divisor of c21 at x: carrier {:?}, identity position {:?}",
        div.carrier,
        div.monoid.identity()
    );
    assert!(monoids_isomorphic(&div.monoid, &fixtures::u1()).unwrap());
    println!("it is isomorphic to the semilattice u1 (a divisor, not a submonoid)");
}
