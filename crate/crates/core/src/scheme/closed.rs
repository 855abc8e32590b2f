use std::collections::BTreeSet;

use serde::Serialize;

use super::{intersection_tensor, AssociationScheme, RelationPartition};
use crate::digraph::{Digraph, TwoWayPartition, Vertex};
use crate::error::SchemeError;

/// A set of relation indices containing 0 with `R_{i*} R_j ⊆ F` for all
/// `i, j ∈ F`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosedSubset {
    indices: BTreeSet<usize>,
}

impl ClosedSubset {
    pub fn indices(&self) -> &BTreeSet<usize> {
        &self.indices
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.contains(&i)
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

/// Smallest closed subset containing `seed`.
pub fn closure(s: &AssociationScheme, seed: &[usize]) -> Result<ClosedSubset, SchemeError> {
    let d = s.rank();
    if let Some(&bad) = seed.iter().find(|&&i| i >= d) {
        return Err(SchemeError::BadIndex(bad));
    }
    let mut set: BTreeSet<usize> = seed.iter().copied().collect();
    set.insert(0);
    loop {
        let mut next = set.clone();
        for &i in &set {
            next.insert(s.converse(i));
            for &j in &set {
                next.extend((0..d).filter(|&l| s.p(s.converse(i), j, l) > 0));
            }
        }
        if next == set {
            return Ok(ClosedSubset { indices: set });
        }
        set = next;
    }
}

pub fn is_closed(s: &AssociationScheme, indices: &[usize]) -> bool {
    let set: BTreeSet<usize> = indices.iter().copied().collect();
    set.contains(&0)
        && set.iter().all(|&i| i < s.rank())
        && set.iter().all(|&i| set.iter().all(|&j| (0..s.rank()).all(|l| s.p(s.converse(i), j, l) == 0 || set.contains(&l))))
}

/// Every non-diagonal relation generates the whole scheme.
pub fn is_primitive(s: &AssociationScheme) -> bool {
    (1..s.rank()).all(|i| closure(s, &[i]).map(|c| c.len() == s.rank()).unwrap_or(false))
}

/// The classes `F(x) = {y | (x, y) ∈ ∪F}` of a closed subset, ordered by
/// their smallest vertex.
pub fn fibers(partition: &RelationPartition, f: &ClosedSubset) -> Vec<Vec<Vertex>> {
    let n = partition.order();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for x in 0..n {
        if seen[x] {
            continue;
        }
        let class: Vec<Vertex> = (0..n).filter(|&y| f.contains(partition.class_of(x, y))).collect();
        for &y in &class {
            seen[y] = true;
        }
        out.push(class);
    }
    out
}

/// Quotient digraph `g / F`: one vertex per class `F(x)` (numbered by
/// smallest member), with an arc between distinct classes whenever some arc
/// of `g` joins them. Arcs inside a class are dropped.
pub fn quotient(g: &Digraph, partition: &TwoWayPartition, indices: &[usize]) -> Result<(Digraph, Vec<Vec<Vertex>>), SchemeError> {
    if partition.order() != g.order() {
        return Err(SchemeError::SizeMismatch(partition.order(), g.order()));
    }
    let rel = RelationPartition::from(partition);
    let scheme = intersection_tensor(&rel)?;
    if !is_closed(&scheme, indices) {
        return Err(SchemeError::NotClosed(indices.to_vec()));
    }
    let f = ClosedSubset { indices: indices.iter().copied().collect() };
    let classes = fibers(&rel, &f);
    if let Some(c) = classes.iter().find(|c| c.len() != classes[0].len()) {
        return Err(SchemeError::UnequalClasses(classes[0].len(), c.len()));
    }
    let mut class_of = vec![0; g.order()];
    for (k, c) in classes.iter().enumerate() {
        for &v in c {
            class_of[v] = k;
        }
    }
    let arcs = g.arcs().map(|(x, y)| (class_of[x], class_of[y])).filter(|(a, b)| a != b);
    let q = Digraph::new(classes.len(), arcs)?;
    Ok((q, classes))
}
