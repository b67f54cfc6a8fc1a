//! General finite-category machinery on top of K(S) and D(S):
//! opposites and the duality with the opposite semigroup, functor law
//! checking, equivalence search, and the J-order on arrows.

use sgcat::cat::{build_karoubi, build_schutzcat, categories_payload_equal, Payload};
use sgcat::fixtures;
use sgcat::functor::{
    check_functor, enumerate_equivalences, find_equivalence, Functor, DEFAULT_SEARCH_BUDGET,
};
use sgcat::greens::greens_data;

fn main() {
    // Duality: D(S)^op = D(S^op) under the relabeling (s,u,t) -> (t,u,s).
    for (name, sg) in fixtures::all_named() {
        let d = build_schutzcat(&sg);
        let dual = build_schutzcat(&sg.opposite());
        assert!(categories_payload_equal(&d.opposite(), &dual));
        println!("{name}: D(S)^op = D(S^op) checked");
    }
    println!();

    // Functor checking reports the first violated law. Sending every
    // arrow to the non-identity endomorphism (1, 0, 1) of the object 1
    // keeps endpoints consistent but breaks identity preservation.
    let k = build_karoubi(&fixtures::u1());
    let non_identity = k.by_triple(0, 1, 0).unwrap();
    let bad = Functor {
        ob_map: vec![0, 0],
        mor_map: vec![non_identity; k.morphism_count()],
    };
    match check_functor(&k, &k, &bad) {
        Err(e) => println!("broken functor rejected: {e}"),
        Ok(()) => unreachable!(),
    }

    // Equivalence search: K(triv) and K(rb22) are equivalent, K(u1) is
    // equivalent to neither.
    let kt = build_karoubi(&fixtures::triv());
    let kr = build_karoubi(&fixtures::rb22());
    let ku = build_karoubi(&fixtures::u1());
    assert!(find_equivalence(&kt, &kr, DEFAULT_SEARCH_BUDGET)
        .unwrap()
        .is_some());
    assert!(find_equivalence(&ku, &kt, DEFAULT_SEARCH_BUDGET)
        .unwrap()
        .is_none());
    println!("K(triv) ~ K(rb22); K(u1) is not equivalent to K(triv)");

    let selfs = enumerate_equivalences(
        &build_karoubi(&fixtures::t2()),
        &build_karoubi(&fixtures::t2()),
        DEFAULT_SEARCH_BUDGET,
        usize::MAX,
    )
    .unwrap();
    println!("K(t2) has {} self-equivalences", selfs.len());
    println!();

    // The J-order on arrows of D(S) mirrors the J-order of middles.
    let t2 = fixtures::t2();
    let d = build_schutzcat(&t2);
    let g = greens_data(&t2);
    let mut checked = 0usize;
    for m1 in 0..d.morphism_count() {
        for m2 in 0..d.morphism_count() {
            let Payload::Triple(_, u1, _) = d.morphism(m1).payload else {
                unreachable!()
            };
            let Payload::Triple(_, u2, _) = d.morphism(m2).payload else {
                unreachable!()
            };
            assert_eq!(d.j_order_arrows(m1, m2), g.le_j.le(u1, u2));
            checked += 1;
        }
    }
    println!("arrow J-order matches element J-order on {checked} pairs in D(t2)");
}
