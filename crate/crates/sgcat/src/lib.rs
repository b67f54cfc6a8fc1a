//! Finite semigroups, their Karoubi envelope `K(S)` and Schützenberger
//! category `D(S)`, and the structural data attached to them: Green's
//! relations, Schützenberger groups, local monoids and local divisors,
//! functor lifting from `K` to `D`, and the invariants of semigroup
//! actions (the poset of an action and labeled D-class orders).
//!
//! Everything is explicit and desk-scale: semigroups are multiplication
//! tables, categories are finite sets of triples with a composition
//! table, all claims are checkable by enumeration.
//!
//! Start with the runnable examples (`cargo run --example
//! karoubi_envelope`, `analyze_fixture`, `functor_lifting`,
//! `action_invariants`, ...) or with [`fixtures`] and
//! [`cat::SemigroupCategories`].

pub mod action;
pub mod cat;
pub mod dot;
pub mod error;
pub mod fixtures;
pub mod functor;
pub mod greens;
pub mod io;
pub mod iso;
pub mod labeled;
pub mod lift;
pub mod localstruct;
pub mod permgroup;
pub mod report;
pub mod semigroup;
pub mod sset;

pub use error::{Error, Result};
pub use semigroup::{generate_from_transformations, Semigroup, Transformation};
