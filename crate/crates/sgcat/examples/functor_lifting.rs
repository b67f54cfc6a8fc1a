//! Lifting an equivalence of Karoubi envelopes to the Schützenberger
//! categories. The lift F̂ fixes a family of idempotent units e_s, f_s
//! with e_s·s·f_s = s, sends an object s to the middle of F(e_s, s, f_s),
//! and is a good functor: an equivalence reflecting regularity and the
//! J-order on objects.

use sgcat::cat::SemigroupCategories;
use sgcat::fixtures;
use sgcat::functor::{find_equivalence, is_equivalence, DEFAULT_SEARCH_BUDGET};
use sgcat::lift::{
    is_good_functor, lift_functor_canonical, local_unit_families, middle_projection_is_semifunctor,
    reflects_j_order_on_objects, reflects_regularity,
};

fn main() {
    let src = SemigroupCategories::build(fixtures::rb22());
    let dst = SemigroupCategories::build(fixtures::triv());

    let fam = local_unit_families(&src.semigroup).unwrap();
    println!(
        "unit family for rb22: e = {:?}, f = {:?}",
        fam.left, fam.right
    );

    let f = find_equivalence(&src.karoubi, &dst.karoubi, DEFAULT_SEARCH_BUDGET)
        .unwrap()
        .expect("K(rb22) and K(triv) are equivalent");
    println!(
        "found equivalence K(rb22) -> K(triv) on {} objects",
        f.ob_map.len()
    );

    let lifted = lift_functor_canonical(&src, &dst, &f).unwrap();
    println!(
        "lifted functor D(rb22) -> D(triv): {} objects -> {{{}}}, restriction matches: {}",
        lifted.functor.ob_map.len(),
        lifted.functor.ob_map[0],
        lifted.restriction_matches
    );

    let report = is_good_functor(&src, &dst, &lifted.functor);
    println!("good: {}", report.good);
    println!(
        "equivalence on D-level: {}",
        is_equivalence(&src.schutzcat, &dst.schutzcat, &lifted.functor)
    );
    println!(
        "reflects regularity: {}",
        reflects_regularity(&src, &dst, &lifted.functor)
    );
    println!(
        "reflects J-order on objects: {}",
        reflects_j_order_on_objects(&src, &dst, &lifted.functor)
    );
    println!();

    // Middle projection is a semi-functor on K(S) but not on D(S) in
    // general; t2 provides a counterexample.
    let t2 = SemigroupCategories::build(fixtures::t2());
    println!(
        "middle projection on K(t2) is a semi-functor: {}",
        middle_projection_is_semifunctor(&t2.karoubi, &t2.semigroup)
    );
    println!(
        "middle projection on D(t2) is a semi-functor: {}",
        middle_projection_is_semifunctor(&t2.schutzcat, &t2.semigroup)
    );
}
