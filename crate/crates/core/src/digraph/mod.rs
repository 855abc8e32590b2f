//! Finite loop-free digraphs and the constructions used throughout the crate.
//!
//! Vertices are `0..n`. Products use row-major encoding: the pair `(x, u)` of
//! `g ∘ h` is vertex `x * h.order() + u`. Cayley digraphs on a product of
//! cyclic groups encode an element `(e_0, .., e_{k-1})` the same way, with the
//! first factor most significant.

mod distance;
mod format;
mod iso;
mod structure;

use std::collections::BTreeSet;

pub use distance::{distance_matrix, girth, two_way_partition, TwoWayPartition, UNREACHABLE};
pub use format::{DigraphJson, Format};
pub use iso::{is_isomorphic, is_isomorphic_with, IsoConfig, VertexMap};
pub use structure::{multipartite_structure, TeamStructure};

use crate::error::DigraphError;

pub type Vertex = usize;

/// A finite digraph with no loops and no repeated arcs.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out: Vec<Vec<Vertex>>,
    inn: Vec<Vec<Vertex>>,
    adj: Vec<bool>,
    arc_count: usize,
}

impl Digraph {
    /// Validates and deduplicates an arc list.
    pub fn new<I>(n: usize, arcs: I) -> Result<Self, DigraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if n == 0 {
            return Err(DigraphError::Empty);
        }
        let mut adj = vec![false; n * n];
        for (x, y) in arcs {
            if x >= n || y >= n {
                return Err(DigraphError::OutOfRange(x, y, n));
            }
            if x == y {
                return Err(DigraphError::Loop(x));
            }
            adj[x * n + y] = true;
        }
        Ok(Self::from_adjacency(n, adj))
    }

    fn from_adjacency(n: usize, adj: Vec<bool>) -> Self {
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        let mut arc_count = 0;
        for x in 0..n {
            for y in 0..n {
                if adj[x * n + y] {
                    out[x].push(y);
                    inn[y].push(x);
                    arc_count += 1;
                }
            }
        }
        Self { n, out, inn, adj, arc_count }
    }

    /// Builds from a predicate on ordered pairs; the diagonal is never queried.
    pub fn from_fn(n: usize, mut is_arc: impl FnMut(Vertex, Vertex) -> bool) -> Result<Self, DigraphError> {
        if n == 0 {
            return Err(DigraphError::Empty);
        }
        let mut adj = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                if x != y && is_arc(x, y) {
                    adj[x * n + y] = true;
                }
            }
        }
        Ok(Self::from_adjacency(n, adj))
    }

    /// The digraph on `n` vertices with no arcs.
    pub fn edgeless(n: usize) -> Result<Self, DigraphError> {
        Self::new(n, std::iter::empty())
    }

    /// Every ordered pair of distinct vertices is an arc.
    pub fn complete(n: usize) -> Result<Self, DigraphError> {
        Self::from_fn(n, |_, _| true)
    }

    /// Directed cycle `0 → 1 → … → n-1 → 0`.
    pub fn cycle(n: usize) -> Result<Self, DigraphError> {
        Self::new(n, (0..n).map(|x| (x, (x + 1) % n)))
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    pub fn has_arc(&self, x: Vertex, y: Vertex) -> bool {
        self.adj[x * self.n + y]
    }

    /// Adjacent in at least one direction.
    pub fn adjacent(&self, x: Vertex, y: Vertex) -> bool {
        self.has_arc(x, y) || self.has_arc(y, x)
    }

    pub fn out_neighbors(&self, x: Vertex) -> &[Vertex] {
        &self.out[x]
    }

    pub fn in_neighbors(&self, x: Vertex) -> &[Vertex] {
        &self.inn[x]
    }

    pub fn out_degree(&self, x: Vertex) -> usize {
        self.out[x].len()
    }

    pub fn in_degree(&self, x: Vertex) -> usize {
        self.inn[x].len()
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.out.iter().enumerate().flat_map(|(x, ys)| ys.iter().map(move |&y| (x, y)))
    }

    pub fn reverse(&self) -> Self {
        Self::from_fn(self.n, |x, y| self.has_arc(y, x)).expect("order is positive")
    }

    /// Relabels vertex `v` as `map[v]`; `map` must be a permutation.
    pub fn relabel(&self, map: &[Vertex]) -> Self {
        assert_eq!(map.len(), self.n);
        Self::new(self.n, self.arcs().map(|(x, y)| (map[x], map[y]))).expect("relabeling keeps arcs valid")
    }

    /// Subdigraph induced on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[Vertex]) -> Result<Self, DigraphError> {
        Self::from_fn(vertices.len(), |a, b| self.has_arc(vertices[a], vertices[b]))
    }

    /// True when some pair of opposite arcs exists.
    pub fn has_symmetric_pair(&self) -> bool {
        self.arcs().any(|(x, y)| self.has_arc(y, x))
    }

    /// Underlying graph is complete: every pair of distinct vertices is adjacent.
    pub fn is_semicomplete(&self) -> bool {
        (0..self.n).all(|x| (x + 1..self.n).all(|y| self.adjacent(x, y)))
    }

    /// Every vertex can reach every other vertex.
    pub fn is_strongly_connected(&self) -> bool {
        let reach = |adj: &[Vec<Vertex>]| {
            let mut seen = vec![false; self.n];
            let mut stack = vec![0];
            seen[0] = true;
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            seen.into_iter().all(|s| s)
        };
        reach(&self.out) && reach(&self.inn)
    }
}

/// Validated construction from an arc list.
pub fn build_digraph(n: usize, arcs: &[(Vertex, Vertex)]) -> Result<Digraph, DigraphError> {
    Digraph::new(n, arcs.iter().copied())
}

/// Element index of `e` in the group `Z_{m_0} × … × Z_{m_{k-1}}`.
pub fn group_index(factors: &[usize], e: &[usize]) -> usize {
    factors.iter().zip(e).fold(0, |acc, (&m, &c)| acc * m + c)
}

/// Components of the element with index `idx`.
pub fn group_element(factors: &[usize], mut idx: usize) -> Vec<usize> {
    let mut e = vec![0; factors.len()];
    for (slot, &m) in e.iter_mut().zip(factors).rev() {
        *slot = idx % m;
        idx /= m;
    }
    e
}

/// Cayley digraph of a finite abelian group given as cyclic factors, with
/// arcs `x → x + s` for every `s` in the connection set.
pub fn cayley(factors: &[usize], connection: &[Vec<usize>]) -> Result<Digraph, DigraphError> {
    if factors.is_empty() {
        return Err(DigraphError::NoFactors);
    }
    if let Some(&m) = factors.iter().find(|&&m| m == 0) {
        return Err(DigraphError::BadModulus(m));
    }
    let mut set = BTreeSet::new();
    for s in connection {
        if s.len() != factors.len() || s.iter().zip(factors).any(|(&c, &m)| c >= m) {
            return Err(DigraphError::BadElement(s.clone(), factors.to_vec()));
        }
        if s.iter().all(|&c| c == 0) {
            return Err(DigraphError::IdentityInConnectionSet);
        }
        set.insert(s.clone());
    }
    let n: usize = factors.iter().product();
    let mut arcs = Vec::with_capacity(n * set.len());
    for x in 0..n {
        let ex = group_element(factors, x);
        for s in &set {
            let ey: Vec<usize> = ex.iter().zip(s).zip(factors).map(|((&a, &b), &m)| (a + b) % m).collect();
            arcs.push((x, group_index(factors, &ey)));
        }
    }
    Digraph::new(n, arcs)
}

/// Cayley digraph of the cyclic group `Z_m`.
pub fn cayley_cyclic(m: usize, connection: &[usize]) -> Result<Digraph, DigraphError> {
    let conn: Vec<Vec<usize>> = connection.iter().map(|&s| vec![s]).collect();
    cayley(&[m], &conn)
}

/// Lexicographic product `g ∘ h`: `(x,u) → (y,v)` iff `x → y` in `g`, or
/// `x = y` and `u → v` in `h`.
pub fn lexicographic_product(g: &Digraph, h: &Digraph) -> Digraph {
    let m = h.order();
    Digraph::from_fn(g.order() * m, |a, b| {
        let (x, u) = (a / m, a % m);
        let (y, v) = (b / m, b % m);
        g.has_arc(x, y) || (x == y && h.has_arc(u, v))
    })
    .expect("product of non-empty digraphs is non-empty")
}

/// The `n`-coclique extension `g ∘ K̄_n`.
pub fn coclique_extension(g: &Digraph, n: usize) -> Result<Digraph, DigraphError> {
    if n == 0 {
        return Err(DigraphError::ZeroMultiplicity);
    }
    Ok(lexicographic_product(g, &Digraph::edgeless(n)?))
}
