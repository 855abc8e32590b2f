use serde::Serialize;

use super::{Digraph, Vertex};
use crate::error::DigraphError;

/// Parts of a digraph whose underlying graph is complete multipartite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TeamStructure {
    /// Parts ordered by their smallest vertex; each part sorted.
    pub parts: Vec<Vec<Vertex>>,
    pub sizes: Vec<usize>,
    /// Common part size when all parts agree.
    pub equal_size: Option<usize>,
    /// Some part has a single vertex (the semicomplete case when all do).
    pub has_singleton_part: bool,
    #[serde(skip)]
    part_of: Vec<usize>,
}

impl TeamStructure {
    pub fn part_count(&self) -> usize {
        self.parts.len()
    }

    pub fn part_of(&self, v: Vertex) -> usize {
        self.part_of[v]
    }

    /// `(m, r)` when all parts have a common size `r ≥ 2`.
    pub fn team_shape(&self) -> Option<(usize, usize)> {
        self.equal_size.filter(|&r| r >= 2).map(|r| (self.parts.len(), r))
    }

    /// Every part has at least two vertices.
    pub fn is_multipartite(&self) -> bool {
        !self.has_singleton_part
    }
}

/// Detects the parts of the underlying complete multipartite graph, i.e. the
/// classes of the non-adjacency relation.
pub fn multipartite_structure(g: &Digraph) -> Result<TeamStructure, DigraphError> {
    let n = g.order();
    let mut part_of = vec![usize::MAX; n];
    let mut parts: Vec<Vec<Vertex>> = Vec::new();
    for x in 0..n {
        if part_of[x] != usize::MAX {
            continue;
        }
        let class: Vec<Vertex> = (0..n).filter(|&y| y == x || !g.adjacent(x, y)).collect();
        for &y in &class {
            if part_of[y] != usize::MAX {
                // y is non-adjacent to x but already sits in an earlier part
                // whose representative is adjacent to x.
                let rep = parts[part_of[y]][0];
                return Err(DigraphError::NotMultipartite(x, y, rep));
            }
        }
        // Every pair inside the class must be non-adjacent too.
        for (a, &y) in class.iter().enumerate() {
            for &z in &class[a + 1..] {
                if g.adjacent(y, z) {
                    return Err(DigraphError::NotMultipartite(y, x, z));
                }
            }
        }
        for &y in &class {
            part_of[y] = parts.len();
        }
        parts.push(class);
    }
    if parts.len() < 2 {
        return Err(DigraphError::TooFewParts);
    }
    let sizes: Vec<usize> = parts.iter().map(Vec::len).collect();
    let equal_size = sizes.iter().all(|&s| s == sizes[0]).then_some(sizes[0]);
    let has_singleton_part = sizes.contains(&1);
    Ok(TeamStructure { parts, sizes, equal_size, has_singleton_part, part_of })
}
