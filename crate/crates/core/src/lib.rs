//! Weakly distance-regular digraphs and doubly regular team semicomplete
//! multipartite digraphs: construction, exact verification and classification.
//!
//! * [`digraph`]: digraphs, two-way distances, products, part detection, isomorphism.
//! * [`scheme`]: association-scheme axioms, intersection numbers, closed subsets, quotients.
//! * [`wdrd`]: the weak distance-regularity predicate and the arc-type set `T`.
//! * [`team`]: edge/arc split, double regularity, Type I/II/III classification.
//! * [`family`]: the five families of semicomplete multipartite commutative WDRDs.
//! * [`search`]: exhaustive abelian Cayley digraph search and the counting oracle.

pub mod corpus;
pub mod digraph;
pub mod error;
pub mod family;
pub mod matrix;
pub mod scheme;
pub mod search;
pub mod team;
pub mod wdrd;

pub use digraph::{Digraph, TeamStructure, TwoWayPartition, Vertex};
pub use error::{DigraphError, Error, SchemeError};
pub use scheme::{AssociationScheme, RelationPartition};
pub use wdrd::{verify_wdrd, WdrdReport};

/// Exact integer matrices, used for adjacency algebra.
pub type IntMatrix = matrix::Matrix<i64>;
/// Exact rational matrices.
pub type RatMatrix = matrix::Matrix<num_rational::Ratio<i64>>;
/// Exact rational scalar.
pub type Rational = num_rational::Ratio<i64>;

/// Version string embedded in serialized reports.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
