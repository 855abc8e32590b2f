use rayon::prelude::*;
use serde::Serialize;

use super::RelationPartition;
use crate::digraph::Vertex;
use crate::error::SchemeError;

/// Two pairs of relation `l` with different counts `|R_i(x) ∩ R_{j*}(y)|`.
///
/// The reported witness is the first in the order (l, second pair, i, j);
/// `first` is always the lexicographically smallest pair of `R_l`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstancyFailure {
    pub i: usize,
    pub j: usize,
    pub l: usize,
    pub first: (Vertex, Vertex),
    pub second: (Vertex, Vertex),
    pub first_count: u64,
    pub second_count: u64,
}

impl ConstancyFailure {
    fn key(&self) -> (usize, (Vertex, Vertex), usize, usize) {
        (self.l, self.second, self.i, self.j)
    }
}

/// A verified association scheme with its intersection numbers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociationScheme {
    partition: RelationPartition,
    converse: Vec<usize>,
    tensor: Vec<Vec<Vec<u64>>>,
    valencies: Vec<u64>,
}

impl AssociationScheme {
    pub fn order(&self) -> usize {
        self.partition.order()
    }

    /// Number of relations, `d + 1`.
    pub fn rank(&self) -> usize {
        self.converse.len()
    }

    pub fn partition(&self) -> &RelationPartition {
        &self.partition
    }

    pub fn converse(&self, i: usize) -> usize {
        self.converse[i]
    }

    pub fn converse_map(&self) -> &[usize] {
        &self.converse
    }

    /// `p_{i,j}^l`.
    pub fn p(&self, i: usize, j: usize, l: usize) -> u64 {
        self.tensor[i][j][l]
    }

    pub fn tensor(&self) -> &[Vec<Vec<u64>>] {
        &self.tensor
    }

    pub fn valency(&self, i: usize) -> u64 {
        self.valencies[i]
    }

    pub fn valencies(&self) -> &[u64] {
        &self.valencies
    }

    /// Overwrites one intersection number, leaving valencies untouched.
    /// Meant for exercising the identity checker on inconsistent data.
    pub fn set_p(&mut self, i: usize, j: usize, l: usize, value: u64) {
        self.tensor[i][j][l] = value;
    }

    pub fn is_commutative(&self) -> bool {
        let d = self.rank();
        (0..d).all(|i| (0..d).all(|j| (0..d).all(|l| self.tensor[i][j][l] == self.tensor[j][i][l])))
    }

    pub fn is_symmetric(&self) -> bool {
        self.converse.iter().enumerate().all(|(i, &c)| i == c)
    }

    /// Relation labels when the scheme comes from a two-way distance partition.
    pub fn labels(&self) -> Option<&[(usize, usize)]> {
        self.partition.labels()
    }

    pub fn index_of(&self, label: (usize, usize)) -> Option<usize> {
        self.labels()?.iter().position(|&l| l == label)
    }

    /// Serializable view: `n`, `classes`, `converse`, `tensor`, `valencies`.
    pub fn to_json(&self) -> serde_json::Value {
        let classes: Vec<Vec<[Vertex; 2]>> =
            (0..self.rank()).map(|i| self.partition.pairs(i).into_iter().map(|(x, y)| [x, y]).collect()).collect();
        let mut v = serde_json::json!({
            "n": self.order(),
            "classes": classes,
            "converse": self.converse,
            "tensor": self.tensor,
            "valencies": self.valencies,
        });
        if let Some(labels) = self.labels() {
            v["labels"] = serde_json::json!(labels);
        }
        v
    }

    pub(crate) fn from_parts(partition: RelationPartition, converse: Vec<usize>, tensor: Vec<Vec<Vec<u64>>>) -> Self {
        let valencies = (0..converse.len()).map(|i| tensor[i][converse[i]][0]).collect();
        Self { partition, converse, tensor, valencies }
    }
}

/// Checks the scheme axioms and computes intersection numbers through the
/// adjacency-matrix products `A_i A_j = Σ_l p_{i,j}^l A_l`.
pub fn intersection_tensor(partition: &RelationPartition) -> Result<AssociationScheme, SchemeError> {
    let converse = partition.check_axioms()?;
    let d = partition.relation_count();
    let adj: Vec<_> = (0..d).map(|i| partition.adjacency(i)).collect();
    let members: Vec<Vec<(Vertex, Vertex)>> = (0..d).map(|l| partition.pairs(l)).collect();

    let rows: Vec<Result<Vec<Vec<u64>>, ConstancyFailure>> = (0..d)
        .into_par_iter()
        .map(|i| {
            let mut row = vec![vec![0u64; d]; d];
            let mut worst: Option<ConstancyFailure> = None;
            for j in 0..d {
                let prod = adj[i].matmul(&adj[j]);
                for (l, pairs) in members.iter().enumerate() {
                    let first = pairs[0];
                    let value = prod[first] as u64;
                    row[j][l] = value;
                    if let Some(&second) = pairs.iter().find(|&&p| prod[p] as u64 != value) {
                        let fail = ConstancyFailure {
                            i,
                            j,
                            l,
                            first,
                            second,
                            first_count: value,
                            second_count: prod[second] as u64,
                        };
                        if worst.as_ref().is_none_or(|w| fail.key() < w.key()) {
                            worst = Some(fail);
                        }
                        break;
                    }
                }
            }
            worst.map_or(Ok(row), Err)
        })
        .collect();

    let mut tensor = Vec::with_capacity(d);
    let mut failure: Option<ConstancyFailure> = None;
    for row in rows {
        match row {
            Ok(r) => tensor.push(r),
            Err(f) => {
                if failure.as_ref().is_none_or(|w| f.key() < w.key()) {
                    failure = Some(f);
                }
            }
        }
    }
    if let Some(f) = failure {
        return Err(SchemeError::Constancy(Box::new(f)));
    }
    Ok(AssociationScheme::from_parts(partition.clone(), converse, tensor))
}

/// Why a partition is not a scheme.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SchemeFailure {
    Axiom { message: String },
    Constancy(ConstancyFailure),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SchemeReport {
    pub is_scheme: bool,
    pub is_commutative: bool,
    pub is_symmetric: bool,
    pub failure_witness: Option<SchemeFailure>,
}

/// Runs the axioms, then derives the symmetry and commutativity flags.
pub fn verify_scheme(partition: &RelationPartition) -> (SchemeReport, Option<AssociationScheme>) {
    match intersection_tensor(partition) {
        Ok(s) => (
            SchemeReport {
                is_scheme: true,
                is_commutative: s.is_commutative(),
                is_symmetric: s.is_symmetric(),
                failure_witness: None,
            },
            Some(s),
        ),
        Err(e) => {
            let witness = match e {
                SchemeError::Constancy(f) => SchemeFailure::Constancy(*f),
                other => SchemeFailure::Axiom { message: other.to_string() },
            };
            (
                SchemeReport {
                    is_scheme: false,
                    is_commutative: false,
                    is_symmetric: false,
                    failure_witness: Some(witness),
                },
                None,
            )
        }
    }
}

/// A failed instance of one of the four standard intersection-number identities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma21Violation {
    /// 1: `k_i k_j = Σ_l p_{ij}^l k_l`; 2: `p_{ij}^l k_l = p_{l,j*}^i k_i = p_{i*,l}^j k_j`;
    /// 3: `Σ_j p_{ij}^l = k_i`; 4: `Σ_r p_{il}^r p_{mr}^j = Σ_t p_{mi}^t p_{tl}^j`.
    pub identity: u8,
    pub indices: Vec<usize>,
    pub lhs: u128,
    pub rhs: u128,
}

/// Every violated instance of the four identities; empty for a consistent tensor.
pub fn check_lemma21(s: &AssociationScheme) -> Vec<Lemma21Violation> {
    let d = s.rank();
    let p = |i: usize, j: usize, l: usize| u128::from(s.p(i, j, l));
    let k = |i: usize| u128::from(s.valency(i));
    let star = |i: usize| s.converse(i);
    let mut out = Vec::new();
    let mut push = |identity, indices: Vec<usize>, lhs, rhs| {
        if lhs != rhs {
            out.push(Lemma21Violation { identity, indices, lhs, rhs });
        }
    };
    for i in 0..d {
        for j in 0..d {
            let rhs = (0..d).map(|l| p(i, j, l) * k(l)).sum();
            push(1, vec![i, j], k(i) * k(j), rhs);
        }
    }
    for i in 0..d {
        for j in 0..d {
            for l in 0..d {
                let a = p(i, j, l) * k(l);
                push(2, vec![i, j, l], a, p(l, star(j), i) * k(i));
                push(2, vec![i, j, l], a, p(star(i), l, j) * k(j));
            }
        }
    }
    for i in 0..d {
        for l in 0..d {
            let lhs = (0..d).map(|j| p(i, j, l)).sum();
            push(3, vec![i, l], lhs, k(i));
        }
    }
    for i in 0..d {
        for l in 0..d {
            for m in 0..d {
                for j in 0..d {
                    let lhs = (0..d).map(|r| p(i, l, r) * p(m, r, j)).sum();
                    let rhs = (0..d).map(|t| p(m, i, t) * p(t, l, j)).sum();
                    push(4, vec![i, l, m, j], lhs, rhs);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{build_digraph, cayley_cyclic, two_way_partition, Digraph};

    fn scheme_of(g: &Digraph) -> Result<AssociationScheme, SchemeError> {
        intersection_tensor(&RelationPartition::from(&two_way_partition(g).unwrap()))
    }

    #[test]
    fn c4_tensor() {
        let s = scheme_of(&Digraph::cycle(4).unwrap()).unwrap();
        let i13 = s.index_of((1, 3)).unwrap();
        let i22 = s.index_of((2, 2)).unwrap();
        assert_eq!(s.p(i13, i13, i22), 1);
        assert_eq!(s.valencies(), &[1, 1, 1, 1]);
        assert_eq!(s.converse_map(), &[0, 3, 2, 1]);
        assert!(s.is_commutative());
        assert!(!s.is_symmetric());
    }

    #[test]
    fn z6_group_scheme() {
        let s = scheme_of(&cayley_cyclic(6, &[1, 2]).unwrap()).unwrap();
        assert_eq!(s.rank(), 6);
        assert!(s.tensor().iter().flatten().flatten().all(|&v| v <= 1));
    }

    #[test]
    fn five_arc_failure() {
        let g = build_digraph(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        match scheme_of(&g) {
            Err(SchemeError::Constancy(f)) => {
                // Frozen from the brute-force oracle: l = (0,0), pairs (0,0)/(1,1),
                // i = (1,2), j = (2,1).
                assert_eq!((f.i, f.j, f.l), (1, 3, 0));
                assert_eq!((f.first, f.second), ((0, 0), (1, 1)));
                assert_eq!((f.first_count, f.second_count), (1, 0));
            }
            other => panic!("expected a constancy failure, got {other:?}"),
        }
    }

    #[test]
    fn verify_flags() {
        let (r, _) = verify_scheme(&RelationPartition::from(&two_way_partition(&Digraph::complete(3).unwrap()).unwrap()));
        assert!(r.is_scheme && r.is_symmetric && r.is_commutative);
        let g = build_digraph(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let (r, s) = verify_scheme(&RelationPartition::from(&two_way_partition(&g).unwrap()));
        assert!(!r.is_scheme && s.is_none());
        assert!(matches!(r.failure_witness, Some(SchemeFailure::Constancy(_))));
    }

    #[test]
    fn identities_on_c4_and_corruption() {
        let mut s = scheme_of(&Digraph::cycle(4).unwrap()).unwrap();
        assert!(check_lemma21(&s).is_empty());
        let (i13, i22) = (s.index_of((1, 3)).unwrap(), s.index_of((2, 2)).unwrap());
        s.set_p(i13, i13, i22, 2);
        let v = check_lemma21(&s);
        assert!(v.iter().any(|v| v.identity == 1 && v.indices == vec![i13, i13]));
    }

    #[test]
    fn one_point_scheme() {
        let s = scheme_of(&Digraph::edgeless(1).unwrap()).unwrap();
        assert_eq!(s.rank(), 1);
        assert!(check_lemma21(&s).is_empty());
    }
}
