//! The Schützenberger category D(S): objects are all elements, a
//! morphism from t to s is a triple (s, u, t) with u in sS1 ∩ S1t.
//! Hom-set sizes are ideal intersections, isomorphism is Green's
//! R-and-L criterion, objects are isomorphic iff D-equivalent, and the
//! whole thing matches the brute-force S-set morphism oracle.

use sgcat::cat::{build_schutzcat, Payload};
use sgcat::fixtures;
use sgcat::greens::greens_data;
use sgcat::sset::{enumerate_sset_morphisms, is_inner};

fn main() {
    let t2 = fixtures::t2();
    let d = build_schutzcat(&t2);
    let g = greens_data(&t2);

    println!(
        "D(t2): {} objects, {} morphisms",
        d.object_count(),
        d.morphism_count()
    );
    for t in d.objects() {
        for s in d.objects() {
            let right = t2.right_ideal(s);
            let left = t2.left_ideal(t);
            let expected = right.iter().filter(|u| left.contains(u)).count();
            assert_eq!(d.hom(t, s).len(), expected);
        }
    }
    println!("hom-set sizes equal |sS1 ∩ S1t| everywhere");

    // Isomorphism via inverse search matches the R/L criterion.
    for m in 0..d.morphism_count() {
        let Payload::Triple(s, u, t) = d.morphism(m).payload else {
            unreachable!()
        };
        let criterion = g.r_class[s] == g.r_class[u] && g.l_class[u] == g.l_class[t];
        assert_eq!(d.is_isomorphism(m), criterion);
    }
    println!("isomorphisms are exactly the triples with s R u L t");

    for a in d.objects() {
        for b in d.objects() {
            assert_eq!(d.objects_isomorphic(a, b), g.d_class[a] == g.d_class[b]);
        }
    }
    println!("objects are isomorphic iff the elements are D-equivalent");

    let sk = d.skeleton();
    println!(
        "skeleton: {} objects (one per D-class)",
        sk.sub.category.object_count()
    );

    // Cross-check against abstract S-set morphisms between principal
    // right ideals: t2 is regular, so every morphism is inner and the
    // inner morphisms match the hom-sets of D(S).
    for s in t2.elements() {
        for t in t2.elements() {
            let oracle = enumerate_sset_morphisms(&t2, t, s);
            assert!(oracle.iter().all(|f| is_inner(&t2, f)));
            assert_eq!(oracle.len(), d.hom(t, s).len());
        }
    }
    println!("S-set morphism oracle agrees with the category hom-sets");
}
