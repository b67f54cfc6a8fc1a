//! The Karoubi envelope K(S): objects are idempotents, a morphism from
//! f to e is a triple (e, s, f) with s in eSf. K(S) is the full
//! subcategory of the Schützenberger category D(S) on the idempotents,
//! and the inclusion K(S) -> D(S) is an equivalence exactly when S is
//! regular.

use sgcat::cat::{build_karoubi, build_schutzcat, categories_payload_equal};
use sgcat::fixtures;
use sgcat::functor::{is_equivalence, Functor};

fn main() {
    for (name, sg) in fixtures::all_named() {
        let k = build_karoubi(&sg);
        let d = build_schutzcat(&sg);
        println!(
            "{name}: K has {} objects / {} morphisms",
            k.object_count(),
            k.morphism_count()
        );

        // Hom-set cardinalities |eSf|.
        for a in k.objects() {
            let row: Vec<String> = k.objects().map(|b| k.hom(a, b).len().to_string()).collect();
            println!("   hom({}, -) = [{}]", k.object_name(a), row.join(" "));
        }

        // K(S) is the idempotent full subcategory of D(S).
        let idem_objects: Vec<usize> = sg
            .idempotents()
            .iter()
            .map(|&e| d.object_by_tag(e).unwrap())
            .collect();
        let sub = d.full_subcategory(&idem_objects);
        assert!(categories_payload_equal(&sub.category, &k));

        // The inclusion is an equivalence iff S is regular.
        let inclusion = Functor {
            ob_map: idem_objects,
            mor_map: k
                .morphisms()
                .iter()
                .map(|m| d.by_payload(&m.payload).unwrap())
                .collect(),
        };
        let regular = sg.elements().all(|s| sg.is_regular(s));
        let equivalence = is_equivalence(&k, &d, &inclusion);
        assert_eq!(equivalence, regular);
        println!("   inclusion K -> D is an equivalence: {equivalence} (S regular: {regular})");
        println!();
    }
}
