use thiserror::Error;

use crate::digraph::Vertex;

/// Errors raised while building or transforming digraphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DigraphError {
    #[error("a digraph needs at least one vertex")]
    Empty,
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("arc ({0}, {1}) has an endpoint outside 0..{2}")]
    OutOfRange(Vertex, Vertex, usize),
    #[error("group needs at least one cyclic factor")]
    NoFactors,
    #[error("cyclic factor must be positive, got {0}")]
    BadModulus(usize),
    #[error("identity in connection set")]
    IdentityInConnectionSet,
    #[error("connection element {0:?} does not match factors {1:?}")]
    BadElement(Vec<usize>, Vec<usize>),
    #[error("extension multiplicity must be positive")]
    ZeroMultiplicity,
    #[error("not strongly connected: no path from {0} to {1}")]
    NotStronglyConnected(Vertex, Vertex),
    #[error("acyclic digraph has no girth")]
    Acyclic,
    #[error("underlying graph is not complete multipartite: {0} and {1} are non-adjacent, {1} and {2} are non-adjacent, but {0} and {2} are adjacent")]
    NotMultipartite(Vertex, Vertex, Vertex),
    #[error("underlying graph has fewer than two parts")]
    TooFewParts,
    #[error("isomorphism search limited to {limit} vertices, got {n}")]
    IsoTooLarge { n: usize, limit: usize },
    #[error("isomorphism search exceeded its budget of {0} nodes")]
    IsoBudget(u64),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Errors raised by relation-partition and scheme operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SchemeError {
    #[error("relation 0 is not the diagonal")]
    DiagonalAxiom,
    #[error("relation {0} is empty")]
    EmptyRelation(usize),
    #[error("relations do not partition all ordered pairs")]
    PartitionAxiom,
    #[error("transpose of relation {0} is not a relation")]
    ConverseAxiom(usize),
    #[error("intersection number p[{}][{}][{}] not constant: {:?} gives {}, {:?} gives {}", .0.i, .0.j, .0.l, .0.first, .0.first_count, .0.second, .0.second_count)]
    Constancy(Box<crate::scheme::ConstancyFailure>),
    #[error("relation index {0} out of range")]
    BadIndex(usize),
    #[error("index set {0:?} is not closed")]
    NotClosed(Vec<usize>),
    #[error("classes of the closed subset have unequal sizes {0} and {1}")]
    UnequalClasses(usize, usize),
    #[error("partition belongs to a digraph on {0} vertices, not {1}")]
    SizeMismatch(usize, usize),
    #[error(transparent)]
    Digraph(#[from] DigraphError),
}

/// Crate-level error for the verification, classification and search layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Digraph(#[from] DigraphError),
    #[error(transparent)]
    Scheme(#[from] SchemeError),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("not doubly regular: {0}")]
    NotDoublyRegular(Box<crate::team::RegularityFailure>),
    #[error("base digraph rejected: {0}")]
    Validation(String),
    /// An instance contradicting one of the classification theorems.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
    #[error("unknown builtin {0:?}")]
    UnknownBuiltin(String),
    #[error("search budget exceeded: {0}")]
    Budget(String),
    #[error("{0}")]
    Arithmetic(String),
}

impl Error {
    pub fn is_theorem_violation(&self) -> bool {
        matches!(self, Error::TheoremViolation(_))
    }
}
