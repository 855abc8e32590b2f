use std::collections::VecDeque;

use serde::Serialize;

use super::{Digraph, Vertex};
use crate::error::DigraphError;

/// Distance sentinel for unreachable targets.
pub const UNREACHABLE: usize = usize::MAX;

/// Directed distances `d[x][y]` by breadth-first search from every vertex.
pub fn distance_matrix(g: &Digraph) -> Vec<Vec<usize>> {
    (0..g.order()).map(|s| bfs(g, s)).collect()
}

fn bfs(g: &Digraph, source: Vertex) -> Vec<usize> {
    let mut dist = vec![UNREACHABLE; g.order()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    while let Some(x) = queue.pop_front() {
        for &y in g.out_neighbors(x) {
            if dist[y] == UNREACHABLE {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    dist
}

fn bfs_backward(g: &Digraph, target: Vertex) -> Vec<usize> {
    let mut dist = vec![UNREACHABLE; g.order()];
    dist[target] = 0;
    let mut queue = VecDeque::from([target]);
    while let Some(x) = queue.pop_front() {
        for &y in g.in_neighbors(x) {
            if dist[y] == UNREACHABLE {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    dist
}

/// Partition of all ordered vertex pairs by two-way distance
/// `(d(x,y), d(y,x))`.
///
/// Classes are indexed in lexicographic order of their labels, so class 0 is
/// always `(0,0)`, the diagonal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwoWayPartition {
    n: usize,
    labels: Vec<(usize, usize)>,
    #[serde(skip)]
    cell: Vec<usize>,
}

impl TwoWayPartition {
    pub fn order(&self) -> usize {
        self.n
    }

    /// Class labels in canonical order.
    pub fn labels(&self) -> &[(usize, usize)] {
        &self.labels
    }

    pub fn class_count(&self) -> usize {
        self.labels.len()
    }

    /// Index of the class containing `(x, y)`.
    pub fn class_of(&self, x: Vertex, y: Vertex) -> usize {
        self.cell[x * self.n + y]
    }

    /// Two-way distance of `(x, y)`.
    pub fn label_of(&self, x: Vertex, y: Vertex) -> (usize, usize) {
        self.labels[self.class_of(x, y)]
    }

    pub fn index_of(&self, label: (usize, usize)) -> Option<usize> {
        self.labels.binary_search(&label).ok()
    }

    pub fn contains(&self, label: (usize, usize)) -> bool {
        self.index_of(label).is_some()
    }

    /// Pairs of class `i`, lexicographically ordered.
    pub fn class_pairs(&self, i: usize) -> Vec<(Vertex, Vertex)> {
        let n = self.n;
        (0..n * n).filter(|&c| self.cell[c] == i).map(|c| (c / n, c % n)).collect()
    }

    pub fn class_size(&self, i: usize) -> usize {
        self.cell.iter().filter(|&&c| c == i).count()
    }

    /// Row-major class index of every ordered pair.
    pub fn cells(&self) -> &[usize] {
        &self.cell
    }

    /// Index of the class `(b, a)` for class `(a, b)`.
    pub fn converse_index(&self, i: usize) -> usize {
        let (a, b) = self.labels[i];
        self.index_of((b, a)).expect("partition is converse closed")
    }
}

/// Computes the two-way distance partition of a strongly connected digraph.
pub fn two_way_partition(g: &Digraph) -> Result<TwoWayPartition, DigraphError> {
    let n = g.order();
    let fwd = distance_matrix(g);
    // Backward search from every vertex gives d(y, x) as a row indexed by y.
    let back: Vec<Vec<usize>> = (0..n).map(|x| bfs_backward(g, x)).collect();
    for x in 0..n {
        for y in 0..n {
            if fwd[x][y] == UNREACHABLE {
                return Err(DigraphError::NotStronglyConnected(x, y));
            }
            debug_assert_eq!(back[y][x], fwd[x][y]);
        }
    }
    let mut labels: Vec<(usize, usize)> =
        (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).map(|(x, y)| (fwd[x][y], back[x][y])).collect();
    let raw = labels.clone();
    labels.sort_unstable();
    labels.dedup();
    let cell = raw.iter().map(|l| labels.binary_search(l).expect("label present")).collect();
    Ok(TwoWayPartition { n, labels, cell })
}

/// Length of a shortest circuit.
pub fn girth(g: &Digraph) -> Result<usize, DigraphError> {
    let mut best = UNREACHABLE;
    for v in 0..g.order() {
        let dist = bfs(g, v);
        for &u in g.in_neighbors(v) {
            if dist[u] != UNREACHABLE {
                best = best.min(dist[u] + 1);
            }
        }
        if best == 2 {
            break;
        }
    }
    if best == UNREACHABLE {
        Err(DigraphError::Acyclic)
    } else {
        Ok(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{build_digraph, cayley_cyclic};

    #[test]
    fn c4_partition() {
        let p = two_way_partition(&Digraph::cycle(4).unwrap()).unwrap();
        assert_eq!(p.labels(), &[(0, 0), (1, 3), (2, 2), (3, 1)]);
        assert!((0..4).all(|i| p.class_size(i) == 4));
        assert_eq!(p.label_of(0, 1), (1, 3));
        assert_eq!(p.converse_index(1), 3);
    }

    #[test]
    fn path_is_not_strongly_connected() {
        let g = build_digraph(2, &[(0, 1)]).unwrap();
        assert_eq!(two_way_partition(&g), Err(DigraphError::NotStronglyConnected(1, 0)));
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&Digraph::cycle(4).unwrap()), Ok(4));
        assert_eq!(girth(&cayley_cyclic(6, &[1, 2]).unwrap()), Ok(3));
        assert_eq!(girth(&build_digraph(2, &[(0, 1), (1, 0)]).unwrap()), Ok(2));
        assert_eq!(girth(&build_digraph(3, &[(0, 1), (1, 2)]).unwrap()), Err(DigraphError::Acyclic));
    }
}
