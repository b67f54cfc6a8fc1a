//! Invariants of a semigroup action detected through the Karoubi
//! envelope: the poset P(Q) of cyclic LU(S)-subsets, the labeled
//! D-class orders with and without ranks, and how an equivalence of
//! actions transports them.

use sgcat::action::{
    action_is_faithful, action_poset, actions_equivalent, induced_poset_iso, presheaf_on_karoubi,
    validate_action,
};
use sgcat::cat::build_karoubi;
use sgcat::fixtures;
use sgcat::functor::DEFAULT_SEARCH_BUDGET;
use sgcat::labeled::{
    labeled_dl_of_lu, labeled_dq, labeled_dq_of_lu, labeled_preorders_isomorphic,
};
use sgcat::{dot, report};

fn main() {
    let u1 = fixtures::u1();
    let chain = fixtures::u1_chain_action();
    println!("u1 acting on {{p, q}} with p·0 = q:");
    println!("faithful: {}", action_is_faithful(&u1, &chain));

    let poset = action_poset(&u1, &chain);
    println!("P(Q) classes (cyclic LU-subsets): {:?}", poset.cyclic_sets);
    print!("{}", dot::action_poset(&poset));

    let dq = labeled_dq(&u1, &chain);
    for (i, l) in dq.labels.iter().enumerate() {
        println!(
            "D{i}: regular={} |G|={} rank={:?}",
            l.regular,
            l.group.order(),
            l.rank
        );
    }
    println!();

    // The same action with the states swapped is equivalent; the
    // witness transports P(Q) and the rank-labeled order.
    let swapped = validate_action(&u1, vec![vec![0, 0], vec![1, 0]]).unwrap();
    let k = build_karoubi(&u1);
    let pa = presheaf_on_karoubi(&k, &chain);
    let pb = presheaf_on_karoubi(&k, &swapped);
    let witness = actions_equivalent(&k, &pa, &k, &pb, DEFAULT_SEARCH_BUDGET)
        .unwrap()
        .expect("relabeled action is equivalent");
    println!("found an equivalence witness (functor + natural isomorphism)");

    let poset_b = action_poset(&u1, &swapped);
    let map = induced_poset_iso(&k, &pa, &witness, &poset, &poset_b).unwrap();
    println!("induced poset isomorphism (class -> class): {map:?}");

    let dq_a = labeled_dq_of_lu(&u1, &chain);
    let dq_b = labeled_dq_of_lu(&u1, &swapped);
    println!(
        "rank-labeled orders of LU agree: {}",
        labeled_preorders_isomorphic(&dq_a, &dq_b).unwrap()
    );
    println!();

    // A pair the invariants tell apart.
    let rz2 = fixtures::rz2();
    let a = labeled_dl_of_lu(&u1);
    let b = labeled_dl_of_lu(&rz2);
    println!(
        "u1 vs rz2: labeled D-class orders isomorphic: {} ({} vs {} nodes)",
        labeled_preorders_isomorphic(&a, &b).unwrap(),
        a.labels.len(),
        b.labels.len()
    );
    println!();

    // The full report the CLI renders for an action.
    print!("{}", report::invariants(&u1, &chain, "u1").render_text());
}
