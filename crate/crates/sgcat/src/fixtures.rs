//! The canonical fixture corpus.
//!
//! Eight small semigroups ship with the crate as versioned JSON files
//! under `fixtures/` and are compiled in, so the library works without
//! a filesystem layout. Setting `SGCAT_FIXTURES` to a directory makes
//! the loaders read `<dir>/<name>.json` instead.

use crate::action::SAction;
use crate::error::{Error, Result};
use crate::io::SemigroupFile;
use crate::semigroup::Semigroup;

/// Names of the canonical fixtures, in corpus order.
pub const NAMES: [&str; 8] = ["triv", "u1", "rz2", "n2", "c21", "t2", "rb22", "b2"];

const EMBEDDED: [(&str, &str); 8] = [
    ("triv", include_str!("../fixtures/triv.json")),
    ("u1", include_str!("../fixtures/u1.json")),
    ("rz2", include_str!("../fixtures/rz2.json")),
    ("n2", include_str!("../fixtures/n2.json")),
    ("c21", include_str!("../fixtures/c21.json")),
    ("t2", include_str!("../fixtures/t2.json")),
    ("rb22", include_str!("../fixtures/rb22.json")),
    ("b2", include_str!("../fixtures/b2.json")),
];

/// Loads a canonical fixture by name (case-insensitive).
///
/// With `SGCAT_FIXTURES` set, reads `<dir>/<name>.json`; otherwise uses
/// the embedded copy.
pub fn load(name: &str) -> Result<Semigroup> {
    let key = name.to_ascii_lowercase();
    if let Ok(dir) = std::env::var("SGCAT_FIXTURES") {
        let path = std::path::Path::new(&dir).join(format!("{key}.json"));
        let text = std::fs::read_to_string(&path)
            .map_err(|e| Error::Parse(format!("fixture {key}: {e}")))?;
        let file: SemigroupFile =
            serde_json::from_str(&text).map_err(|e| Error::Parse(format!("fixture {key}: {e}")))?;
        return file.build();
    }
    let text = EMBEDDED
        .iter()
        .find(|(n, _)| *n == key)
        .map(|(_, t)| *t)
        .ok_or_else(|| Error::Parse(format!("no such fixture: {name}")))?;
    let file: SemigroupFile = serde_json::from_str(text).expect("embedded fixture parses");
    file.build()
}

fn builtin(name: &str) -> Semigroup {
    let text = EMBEDDED
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| *t)
        .expect("known fixture");
    let file: SemigroupFile = serde_json::from_str(text).expect("embedded fixture parses");
    file.build().expect("embedded fixture is valid")
}

/// The trivial semigroup.
pub fn triv() -> Semigroup {
    builtin("triv")
}

/// The two-element semilattice: identity `1` and zero `0`.
pub fn u1() -> Semigroup {
    builtin("u1")
}

/// The right-zero semigroup on two elements (`x·y = y`).
pub fn rz2() -> Semigroup {
    builtin("rz2")
}

/// The null semigroup `{a, z}` with all products `z`.
pub fn n2() -> Semigroup {
    builtin("n2")
}

/// The monogenic semigroup `{x, x²}` with `x³ = x²`.
pub fn c21() -> Semigroup {
    builtin("c21")
}

/// The full transformation monoid on two points:
/// `id`, `sigma` (swap), `c0`, `c1` (constants).
pub fn t2() -> Semigroup {
    builtin("t2")
}

/// The 2×2 rectangular band, `e_ij · e_kl = e_il`.
pub fn rb22() -> Semigroup {
    builtin("rb22")
}

/// The five-element Brandt semigroup of 2×2 matrix units with zero.
pub fn b2() -> Semigroup {
    builtin("b2")
}

/// All eight canonical fixtures in corpus order.
pub fn all() -> Vec<Semigroup> {
    NAMES.iter().map(|n| builtin(n)).collect()
}

/// All fixtures with their names.
pub fn all_named() -> Vec<(&'static str, Semigroup)> {
    NAMES.iter().map(|&n| (n, builtin(n))).collect()
}

/// The natural action of the `t2` fixture on the two points.
pub fn t2_point_action() -> SAction {
    // q·id = q, q·sigma = swap, q·c0 = 0, q·c1 = 1.
    SAction::from_rows(vec![vec![0, 1, 0, 1], vec![1, 0, 0, 1]])
}

/// The chain action of `u1` on `{p, q}`: `p·0 = q`, everything else fixed.
pub fn u1_chain_action() -> SAction {
    SAction::from_rows(vec![vec![0, 1], vec![1, 1]])
}

/// The column action of `rb22` on `{p, q}`: `q·e_ij = point j`.
pub fn rb22_column_action() -> SAction {
    SAction::from_rows(vec![vec![0, 1, 0, 1], vec![0, 1, 0, 1]])
}

/// The unique action of `triv` on a single point.
pub fn triv_point_action() -> SAction {
    SAction::from_rows(vec![vec![0]])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_fixtures_validate() {
        let all = all_named();
        assert_eq!(all.len(), 8);
        for (name, sg) in &all {
            assert!(sg.order() >= 1, "{name} empty");
        }
    }

    #[test]
    fn fixture_identities() {
        assert_eq!(triv().identity(), Some(0));
        assert_eq!(u1().identity(), Some(0));
        assert_eq!(t2().identity(), Some(0));
        assert_eq!(rz2().identity(), None);
        assert_eq!(n2().identity(), None);
        assert_eq!(c21().identity(), None);
        assert_eq!(rb22().identity(), None);
        assert_eq!(b2().identity(), None);
    }

    #[test]
    fn load_by_name_matches_builtin() {
        for name in NAMES {
            let sg = load(name).unwrap();
            assert_eq!(sg, builtin(name));
        }
        assert!(load("nonesuch").is_err());
    }
}
