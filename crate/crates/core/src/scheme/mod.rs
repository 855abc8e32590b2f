//! Association schemes over relation partitions.
//!
//! A [`RelationPartition`] splits `X × X` into relations `R_0, .., R_d`.
//! [`intersection_tensor`] checks the scheme axioms and computes
//! `p[i][j][l] = |R_i(x) ∩ R_{j*}(y)|` for `(x, y) ∈ R_l`, i.e. the number of
//! `z` with `(x, z) ∈ R_i` and `(z, y) ∈ R_j`.

mod closed;
mod tensor;

use serde::Serialize;

pub use closed::{closure, fibers, is_closed, is_primitive, quotient, ClosedSubset};
pub use tensor::{
    check_lemma21, intersection_tensor, verify_scheme, AssociationScheme, ConstancyFailure, Lemma21Violation,
    SchemeFailure, SchemeReport,
};

use crate::digraph::{TwoWayPartition, Vertex};
use crate::error::SchemeError;
use crate::IntMatrix;

/// A partition of all ordered pairs of `0..n` into indexed relations.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationPartition {
    n: usize,
    count: usize,
    #[serde(skip)]
    cell: Vec<usize>,
    /// Two-way distance labels when the partition comes from a digraph.
    labels: Option<Vec<(usize, usize)>>,
}

impl RelationPartition {
    /// `cell[x * n + y]` is the relation index of `(x, y)`; indices must be
    /// exactly `0..=d`, each used at least once.
    pub fn from_cells(n: usize, cell: Vec<usize>) -> Result<Self, SchemeError> {
        if cell.len() != n * n {
            return Err(SchemeError::PartitionAxiom);
        }
        let count = cell.iter().max().map_or(0, |m| m + 1);
        let mut used = vec![false; count];
        for &c in &cell {
            used[c] = true;
        }
        if let Some(i) = used.iter().position(|u| !u) {
            return Err(SchemeError::EmptyRelation(i));
        }
        Ok(Self { n, count, cell, labels: None })
    }

    /// Builds from explicit pair lists; every ordered pair must occur exactly once.
    pub fn from_relations(n: usize, relations: &[Vec<(Vertex, Vertex)>]) -> Result<Self, SchemeError> {
        let mut cell = vec![usize::MAX; n * n];
        for (i, rel) in relations.iter().enumerate() {
            if rel.is_empty() {
                return Err(SchemeError::EmptyRelation(i));
            }
            for &(x, y) in rel {
                if x >= n || y >= n || cell[x * n + y] != usize::MAX {
                    return Err(SchemeError::PartitionAxiom);
                }
                cell[x * n + y] = i;
            }
        }
        if cell.contains(&usize::MAX) {
            return Err(SchemeError::PartitionAxiom);
        }
        Ok(Self { n, count: relations.len(), cell, labels: None })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of relations `d + 1`.
    pub fn relation_count(&self) -> usize {
        self.count
    }

    pub fn labels(&self) -> Option<&[(usize, usize)]> {
        self.labels.as_deref()
    }

    pub fn class_of(&self, x: Vertex, y: Vertex) -> usize {
        self.cell[x * self.n + y]
    }

    /// Pairs of relation `i` in lexicographic order.
    pub fn pairs(&self, i: usize) -> Vec<(Vertex, Vertex)> {
        let n = self.n;
        (0..n * n).filter(|&c| self.cell[c] == i).map(|c| (c / n, c % n)).collect()
    }

    pub fn adjacency(&self, i: usize) -> IntMatrix {
        IntMatrix::from_fn(self.n, |x, y| i64::from(self.class_of(x, y) == i))
    }

    /// Checks axioms 1–3 and returns the converse map `i ↦ i*`.
    pub fn check_axioms(&self) -> Result<Vec<usize>, SchemeError> {
        let n = self.n;
        for x in 0..n {
            for y in 0..n {
                if (self.class_of(x, y) == 0) != (x == y) {
                    return Err(SchemeError::DiagonalAxiom);
                }
            }
        }
        let mut converse = vec![usize::MAX; self.count];
        for x in 0..n {
            for y in 0..n {
                let (i, j) = (self.class_of(x, y), self.class_of(y, x));
                if converse[i] == usize::MAX {
                    converse[i] = j;
                } else if converse[i] != j {
                    return Err(SchemeError::ConverseAxiom(i));
                }
            }
        }
        Ok(converse)
    }
}

impl From<&TwoWayPartition> for RelationPartition {
    fn from(p: &TwoWayPartition) -> Self {
        Self {
            n: p.order(),
            count: p.class_count(),
            cell: p.cells().to_vec(),
            labels: Some(p.labels().to_vec()),
        }
    }
}
