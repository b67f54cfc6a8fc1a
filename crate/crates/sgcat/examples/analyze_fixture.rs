//! Full structural summary of one fixture semigroup.
//!
//! Usage: cargo run --example analyze_fixture [-- <fixture>]
//! Fixtures: triv, u1, rz2, n2, c21, t2, rb22, b2.

use sgcat::{fixtures, report};

fn main() {
    let name = std::env::args().nth(1).unwrap_or_else(|| "t2".to_string());
    let sg = match fixtures::load(&name) {
        Ok(sg) => sg,
        Err(e) => {
            eprintln!("cannot load fixture `{name}`: {e}");
            std::process::exit(2);
        }
    };
    print!("{}", report::analyze(&sg, &name).render_text());
}
