//! Green's relations of a fixture: principal ideals, the R/L/H/D class
//! partitions, regularity of D-classes, and the ordered set of
//! D-classes as a DOT diagram.

use sgcat::fixtures;
use sgcat::greens::{d_class_preorder, greens_data};
use sgcat::{dot, semigroup::Semigroup};

fn show(sg: &Semigroup, name: &str) {
    println!("== {name} ==");
    let g = greens_data(sg);
    for s in sg.elements() {
        println!(
            "  {}: sS1 = {:?}, S1s = {:?}",
            sg.name(s),
            sg.right_ideal(s),
            sg.left_ideal(s)
        );
    }
    println!(
        "  classes: {} R, {} L, {} H, {} D",
        g.r_classes.len(),
        g.l_classes.len(),
        g.h_classes.len(),
        g.d_classes.len()
    );
    for (c, cls) in g.d_classes.iter().enumerate() {
        let members: Vec<String> = cls.iter().map(|&s| sg.name(s)).collect();
        println!(
            "  D{c} = {{{}}} regular={}",
            members.join(" "),
            g.d_regular[c]
        );
    }
    println!();
}

fn main() {
    show(&fixtures::t2(), "t2");
    show(&fixtures::n2(), "n2");
    show(&fixtures::b2(), "b2");

    println!("DOT rendering of the D-class order of b2:");
    print!("{}", dot::dclass_hasse(&d_class_preorder(&fixtures::b2())));
}
