use thiserror::Error;

/// Errors produced by the algebraic layers of the crate.
///
/// File- and CLI-level failures (I/O, JSON syntax) are handled by the
/// binary; everything here is a structural or validation failure on
/// already-parsed data.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty multiplication table")]
    EmptyTable,

    #[error("multiplication table is not square: row {row} has length {len}, expected {order}")]
    NotSquare {
        row: usize,
        len: usize,
        order: usize,
    },

    #[error("table entry out of range: table[{row}][{col}] = {value}, order is {order}")]
    OutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },

    #[error("associativity fails at ({i}, {j}, {k}): ({i}·{j})·{k} != {i}·({j}·{k})")]
    NonAssociative { i: usize, j: usize, k: usize },

    #[error("empty generator set")]
    EmptyGeneratorSet,

    #[error(
        "generators have mixed degrees: expected {expected}, generator {index} has degree {found}"
    )]
    DegreeMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },

    #[error("transformation image {value} out of range for degree {degree}")]
    BadTransformation { value: usize, degree: usize },

    #[error("semigroup has no idempotents, so the local-units subsemigroup is empty")]
    EmptyLocalUnits,

    #[error("element {0} is not idempotent")]
    NotIdempotent(usize),

    #[error("element {0} has no idempotent local units (LU(S) != S)")]
    NoLocalUnits(usize),

    #[error("structure of order {order} exceeds the isomorphism-search cap {cap}")]
    SizeCapExceeded { order: usize, cap: usize },

    #[error("search budget of {budget} nodes exceeded")]
    SearchBudgetExceeded { budget: u64 },

    #[error("not a functor: {0}")]
    InvalidFunctor(String),

    #[error("not a natural transformation: {0}")]
    InvalidNaturalTransformation(String),

    #[error("action axiom fails at (q={q}, s={s}, t={t}): (q·s)·t != q·(s·t)")]
    ActionAxiomViolation { q: usize, s: usize, t: usize },

    #[error("invalid equivalence witness: {0}")]
    WitnessInvalid(String),

    #[error("unknown element selector `{0}`")]
    UnknownElement(String),

    #[error("cannot read input: {0}")]
    Parse(String),

    #[error("morphism triple ({0}, {1}, {2}) does not belong to the category")]
    NoSuchMorphism(usize, usize, usize),

    #[error("category data is inconsistent: {0}")]
    MalformedCategory(String),
}

pub type Result<T> = std::result::Result<T, Error>;
