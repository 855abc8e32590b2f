//! Team semicomplete multipartite digraphs: the edge/arc split, double
//! regularity and the Type I/II/III classification.
//!
//! Throughout, `A0` is the adjacency matrix of the edge graph (symmetric arc
//! pairs) and `A1` that of the pure arcs.

mod bridge;
mod classify;

use serde::ser::{Serialize, SerializeMap, Serializer};

pub use bridge::{bridge_instances, BridgeInstance};
pub use classify::{
    analyze_pair, arc_count_violations, classify_type, edge_count_violations, BlockRelation, PairCase, PairEvidence,
    PairWitness, TeamCountViolation, TypeClassification, Verdict,
};

use crate::digraph::{multipartite_structure, Digraph, TeamStructure, Vertex};
use crate::error::Error;
use crate::{IntMatrix, Rational};

/// The symmetric part and the pure-arc part of a digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeArcSplit {
    /// Symmetric pairs, both directions kept.
    pub edge_graph: Digraph,
    /// Arcs whose reverse is not an arc.
    pub arc_digraph: Digraph,
}

pub fn edge_arc_split(g: &Digraph) -> EdgeArcSplit {
    let n = g.order();
    let edge_graph = Digraph::from_fn(n, |x, y| g.has_arc(x, y) && g.has_arc(y, x)).expect("order is positive");
    let arc_digraph = Digraph::from_fn(n, |x, y| g.has_arc(x, y) && !g.has_arc(y, x)).expect("order is positive");
    EdgeArcSplit { edge_graph, arc_digraph }
}

/// The five classes of ordered pairs in a team digraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PairClass {
    Equal,
    Arc,
    ReverseArc,
    Edge,
    SamePart,
}

impl PairClass {
    pub const ALL: [PairClass; 5] = [Self::Equal, Self::Arc, Self::ReverseArc, Self::Edge, Self::SamePart];

    pub fn of(g: &Digraph, x: Vertex, y: Vertex) -> Self {
        match (x == y, g.has_arc(x, y), g.has_arc(y, x)) {
            (true, _, _) => Self::Equal,
            (_, true, true) => Self::Edge,
            (_, true, false) => Self::Arc,
            (_, false, true) => Self::ReverseArc,
            (_, false, false) => Self::SamePart,
        }
    }
}

/// Why a digraph is not doubly regular.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RegularityFailure {
    /// Out- or in-valency differs from the out-valency `k` of vertex 0.
    Irregular { vertex: Vertex, out_degree: usize, in_degree: usize, k: usize },
    /// `A_i A_j` is not constant on a pair class.
    NonConstant {
        product: (u8, u8),
        class: PairClass,
        first: (Vertex, Vertex),
        second: (Vertex, Vertex),
        first_count: u64,
        second_count: u64,
    },
    /// `A_i A_j` with `i + j > 0` has a nonzero diagonal.
    NonzeroDiagonal { product: (u8, u8), count: u64 },
    /// `A0 A1` and `A1 A0` give different coefficients on a class.
    ProductMismatch { class: PairClass, count_01: u64, count_10: u64 },
}

impl std::fmt::Display for RegularityFailure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Irregular { vertex, out_degree, in_degree, k } => {
                write!(f, "vertex {vertex} has out-degree {out_degree} and in-degree {in_degree}, expected {k}")
            }
            Self::NonConstant { product, class, first, second, first_count, second_count } => write!(
                f,
                "A{}A{} on {class:?} pairs: {first:?} gives {first_count}, {second:?} gives {second_count}",
                product.0, product.1
            ),
            Self::NonzeroDiagonal { product, count } => {
                write!(f, "A{}A{} has diagonal entry {count}", product.0, product.1)
            }
            Self::ProductMismatch { class, count_01, count_10 } => {
                write!(f, "A0A1 gives {count_01} but A1A0 gives {count_10} on {class:?} pairs")
            }
        }
    }
}

/// Coefficients `t, α_s, β_s, γ_s, η_s` for `s = 0, 1, 2`.
///
/// A coefficient whose pair class is empty is 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DoublyRegularParams {
    pub m: usize,
    pub r: usize,
    pub k: usize,
    pub t: u64,
    pub alpha: [u64; 3],
    pub beta: [u64; 3],
    pub gamma: [u64; 3],
    pub eta: [u64; 3],
}

impl DoublyRegularParams {
    /// `β₁ + β₂ − α₁ − α₂`.
    pub fn delta(&self) -> i64 {
        let c = |v: u64| v as i64;
        c(self.beta[1]) + c(self.beta[2]) - c(self.alpha[1]) - c(self.alpha[2])
    }

    fn coefficient(&self, s: usize, class: PairClass) -> u64 {
        match class {
            PairClass::Equal => u64::from(s == 0) * self.t,
            PairClass::Arc => self.alpha[s],
            PairClass::ReverseArc => self.beta[s],
            PairClass::Edge => self.gamma[s],
            PairClass::SamePart => self.eta[s],
        }
    }
}

impl Serialize for DoublyRegularParams {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(16))?;
        map.serialize_entry("m", &self.m)?;
        map.serialize_entry("r", &self.r)?;
        map.serialize_entry("k", &self.k)?;
        map.serialize_entry("t", &self.t)?;
        for (name, values) in [("alpha", &self.alpha), ("beta", &self.beta), ("gamma", &self.gamma), ("eta", &self.eta)] {
            for (s, v) in values.iter().enumerate() {
                map.serialize_entry(&format!("{name}_{s}"), v)?;
            }
        }
        map.end()
    }
}

/// Equal part size `r ≥ 2` required.
pub(crate) fn team_structure(g: &Digraph) -> Result<(TeamStructure, usize, usize), Error> {
    let s = multipartite_structure(g)?;
    match s.team_shape() {
        Some((m, r)) => Ok((s, m, r)),
        None => Err(Error::Precondition("equal part sizes r ≥ 2 required".into())),
    }
}

fn adjacency(n: usize, f: impl Fn(Vertex, Vertex) -> bool) -> IntMatrix {
    IntMatrix::from_fn(n, |x, y| i64::from(f(x, y)))
}

/// Tests double regularity and extracts the coefficient table.
pub fn doubly_regular_params(g: &Digraph) -> Result<DoublyRegularParams, Error> {
    let (_, m, r) = team_structure(g)?;
    let fail = |f: RegularityFailure| Error::NotDoublyRegular(Box::new(f));
    let n = g.order();
    let k = g.out_degree(0);
    for v in 0..n {
        if g.out_degree(v) != k || g.in_degree(v) != k {
            return Err(fail(RegularityFailure::Irregular { vertex: v, out_degree: g.out_degree(v), in_degree: g.in_degree(v), k }));
        }
    }
    let a0 = adjacency(n, |x, y| g.has_arc(x, y) && g.has_arc(y, x));
    let a1 = adjacency(n, |x, y| g.has_arc(x, y) && !g.has_arc(y, x));
    let a = [&a0, &a1];
    let mut coeff: [[Option<u64>; 5]; 4] = [[None; 5]; 4];
    for (slot, (i, j)) in [(0u8, 0u8), (0, 1), (1, 0), (1, 1)].into_iter().enumerate() {
        let prod = a[i as usize].matmul(a[j as usize]);
        let mut first: [Option<((Vertex, Vertex), u64)>; 5] = [None; 5];
        for x in 0..n {
            for y in 0..n {
                let class = PairClass::of(g, x, y);
                let count = prod[(x, y)] as u64;
                match first[class as usize] {
                    None => first[class as usize] = Some(((x, y), count)),
                    Some((p, c)) if c != count => {
                        return Err(fail(RegularityFailure::NonConstant {
                            product: (i, j),
                            class,
                            first: p,
                            second: (x, y),
                            first_count: c,
                            second_count: count,
                        }))
                    }
                    Some(_) => {}
                }
            }
        }
        for class in PairClass::ALL {
            coeff[slot][class as usize] = first[class as usize].map(|(_, c)| c);
        }
    }
    // Only the s = 0 product may have a nonzero diagonal.
    for (slot, product) in [(1, (0, 1)), (2, (1, 0)), (3, (1, 1))] {
        if let Some(count) = coeff[slot][0].filter(|&c| c != 0) {
            return Err(fail(RegularityFailure::NonzeroDiagonal { product, count }));
        }
    }
    for class in PairClass::ALL {
        let (c01, c10) = (coeff[1][class as usize].unwrap_or(0), coeff[2][class as usize].unwrap_or(0));
        if c01 != c10 {
            return Err(fail(RegularityFailure::ProductMismatch { class, count_01: c01, count_10: c10 }));
        }
    }
    let get = |slot: usize, class: PairClass| coeff[slot][class as usize].unwrap_or(0);
    let row = |class| [get(0, class), get(1, class), get(3, class)];
    Ok(DoublyRegularParams {
        m,
        r,
        k,
        t: get(0, PairClass::Equal),
        alpha: row(PairClass::Arc),
        beta: row(PairClass::ReverseArc),
        gamma: row(PairClass::Edge),
        eta: row(PairClass::SamePart),
    })
}

/// Checks `A_i A_j` entry by entry against the coefficient table.
pub fn params_reproduce(g: &Digraph, p: &DoublyRegularParams) -> bool {
    let n = g.order();
    let a0 = adjacency(n, |x, y| g.has_arc(x, y) && g.has_arc(y, x));
    let a1 = adjacency(n, |x, y| g.has_arc(x, y) && !g.has_arc(y, x));
    let a = [&a0, &a1];
    [(0, 0), (0, 1), (1, 0), (1, 1)].into_iter().all(|(i, j)| {
        let prod = a[i].matmul(a[j]);
        (0..n).all(|x| (0..n).all(|y| prod[(x, y)] as u64 == p.coefficient(i + j, PairClass::of(g, x, y))))
    })
}

/// The `(α, β, γ)` of a doubly regular team tournament, where `A² = αA +
/// βAᵀ + γ(J − I − A − Aᵀ)`. Equals `(α₂, β₂, η₂)` of the general table.
pub fn tournament_params(g: &Digraph) -> Result<(u64, u64, u64), Error> {
    team_structure(g)?;
    if g.has_symmetric_pair() {
        return Err(Error::Precondition("team tournament has no edges".into()));
    }
    let p = doubly_regular_params(g)?;
    Ok((p.alpha[2], p.beta[2], p.eta[2]))
}

/// The Type II tournament parameters `((k−2)l/4, (k−2)l/4, l²(k−1)/(4(l−1)))`
/// for `k` parts of size `l`.
pub fn type2_formula(k: usize, l: usize) -> Result<(u64, u64, u64), Error> {
    if k < 2 || l < 2 {
        return Err(Error::Precondition("k, l ≥ 2 required".into()));
    }
    let (k, l) = (k as i64, l as i64);
    let ab = Rational::new((k - 2) * l, 4);
    let g = Rational::new(l * l * (k - 1), 4 * (l - 1));
    let int = |q: Rational, name: &str| {
        if q.is_integer() {
            Ok(q.to_integer() as u64)
        } else {
            Err(Error::Arithmetic(format!("{name} = {q} is not an integer")))
        }
    };
    Ok((int(ab, "alpha")?, int(ab, "beta")?, int(g, "gamma")?))
}

/// The Type II condition for team tournaments: `β = α`, `r` even, and every
/// vertex has exactly `r/2` out-neighbours in each other part.
pub fn jg14_type2_check(g: &Digraph) -> Result<bool, Error> {
    let (alpha, beta, _) = tournament_params(g)?;
    let (s, m, r) = team_structure(g)?;
    if alpha != beta || r % 2 != 0 {
        return Ok(false);
    }
    let balanced = (0..g.order()).all(|x| {
        let mut counts = vec![0usize; m];
        for &y in g.out_neighbors(x) {
            counts[s.part_of(y)] += 1;
        }
        (0..m).filter(|&i| i != s.part_of(x)).all(|i| counts[i] == r / 2)
    });
    Ok(balanced)
}
