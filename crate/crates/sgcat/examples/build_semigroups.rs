//! Constructing semigroups: from an explicit multiplication table and
//! by closing a set of transformations under composition.

use sgcat::semigroup::{generate_from_transformations, Semigroup, Transformation};

fn main() {
    // The two-element semilattice from its table.
    let u1 = Semigroup::from_table(
        vec![vec![0, 1], vec![1, 1]],
        Some(vec!["1".into(), "0".into()]),
    )
    .unwrap();
    println!("from table:\n{u1}");
    println!("identity: {:?}", u1.identity().map(|e| u1.name(e)));
    println!();

    // The full transformation monoid on two points, generated by the
    // swap and one constant. Elements act on the right: s·t means
    // "apply s, then t".
    let swap = Transformation::new(vec![1, 0]).unwrap();
    let c0 = Transformation::new(vec![0, 0]).unwrap();
    let (t2, reps) = generate_from_transformations(&[swap, c0]).unwrap();
    println!("closure of {{swap, const-0}} has order {}", t2.order());
    for (i, rep) in reps.iter().enumerate() {
        println!("  element {i} acts as {rep} (rank {})", rep.rank());
    }
    println!();

    println!("idempotents: {:?}", t2.idempotents());
    println!(
        "regular elements: {:?}",
        t2.elements()
            .filter(|&s| t2.is_regular(s))
            .collect::<Vec<_>>()
    );
    let (lu, embedding) = t2.local_units_subsemigroup().unwrap();
    println!(
        "local units subsemigroup: order {} {:?}",
        lu.order(),
        embedding
    );

    // The opposite semigroup transposes the table.
    let rz2 = Semigroup::from_table(vec![vec![0, 1], vec![0, 1]], None).unwrap();
    let lz2 = rz2.opposite();
    println!();
    println!("right-zero: a·b = {}", rz2.mul(0, 1));
    println!("its opposite (left-zero): a·b = {}", lz2.mul(0, 1));
}
