use thiserror::Error;

use crate::lattice::ValidationReport;

#[derive(Debug, Error)]
pub enum LatticeError {
    #[error("invalid diagram: {0}")]
    Invalid(ValidationReport),

    #[error("element {0} out of range (n = {1})")]
    OutOfRange(usize, usize),

    #[error("elements {0} and {1} are comparable")]
    Comparable(usize, usize),

    #[error("element {0} is the top")]
    IsTop(usize),

    #[error("element {element} has {covers} upper covers; star operations need a slim semimodular context")]
    NotSlimSemimodularContext { element: usize, covers: usize },

    #[error("{0}")]
    Precondition(String),

    #[error("lattice is already modular (no upper-adjacent pairs)")]
    AlreadyModular,

    #[error("upper-adjacent pair with top {top} is not maximal")]
    PairNotMaximal { top: usize },

    #[error("pair not in lattice: {0}")]
    PairNotInLattice(String),

    #[error("not a 4-cell: {0}")]
    NotFourCell(String),

    #[error("position {position} out of range (max {max})")]
    PositionOutOfRange { position: usize, max: usize },

    #[error("no doubly irreducible element on the {0} boundary")]
    NoDoublyIrreducible(&'static str),

    #[error("not distributive")]
    NotDistributive,

    #[error("no grid decomposition found for a distributive lattice: {0}")]
    NoDecomposition(String),

    #[error("search too large: {estimate} candidates exceed the bound {bound}")]
    SearchTooLarge { estimate: u128, bound: u128 },

    #[error("map error: {0}")]
    Map(String),

    /// A statement proved for these lattices failed on concrete input.
    #[error("lemma violated ({lemma}): {detail}")]
    LemmaViolation { lemma: &'static str, detail: String },

    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
}

pub type Result<T> = std::result::Result<T, LatticeError>;

pub(crate) fn violation(lemma: &'static str, detail: impl Into<String>) -> LatticeError {
    LatticeError::LemmaViolation {
        lemma,
        detail: detail.into(),
    }
}
