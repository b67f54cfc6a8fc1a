//! The end-to-end comparison pipeline: decide whether two semigroups
//! have equivalent Karoubi envelopes; if so, lift the equivalence to
//! the Schützenberger categories and verify it is good; either way,
//! compare the labeled D-class orders of the local-unit subsemigroups.

use sgcat::fixtures;
use sgcat::report::compare;

fn main() {
    let budget = 1_000_000;
    let pairs = [("triv", "rb22"), ("u1", "rz2"), ("t2", "t2"), ("n2", "c21")];
    for (l, r) in pairs {
        let left = fixtures::load(l).unwrap();
        let right = fixtures::load(r).unwrap();
        let rep = compare(&left, &right, l, r, budget).unwrap();
        print!("{}", rep.render_text());
        println!("---");
    }
}
