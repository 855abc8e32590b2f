use crate::digraph::{Digraph, TwoWayPartition};
use crate::error::SchemeError;
use crate::scheme::{AssociationScheme, ConstancyFailure, RelationPartition};

/// Intersection numbers by direct counting over `(x, z, y)`, sharing no
/// matrix code with [`crate::scheme::intersection_tensor`]. Failures are
/// reported with the same witness order: relation `l`, then the failing pair,
/// then `(i, j)`.
pub fn oracle_p_numbers(g: &Digraph, partition: &TwoWayPartition) -> Result<AssociationScheme, SchemeError> {
    if partition.order() != g.order() {
        return Err(SchemeError::SizeMismatch(partition.order(), g.order()));
    }
    let rel = RelationPartition::from(partition);
    let converse = rel.check_axioms()?;
    let n = rel.order();
    let d = rel.relation_count();
    let mut tensor = vec![vec![vec![0u64; d]; d]; d];
    for l in 0..d {
        let mut reference: Option<((usize, usize), Vec<u64>)> = None;
        for x in 0..n {
            for y in 0..n {
                if rel.class_of(x, y) != l {
                    continue;
                }
                let mut counts = vec![0u64; d * d];
                for z in 0..n {
                    counts[rel.class_of(x, z) * d + rel.class_of(z, y)] += 1;
                }
                match &reference {
                    None => reference = Some(((x, y), counts)),
                    Some((first, want)) => {
                        if let Some(c) = (0..d * d).find(|&c| counts[c] != want[c]) {
                            return Err(SchemeError::Constancy(Box::new(ConstancyFailure {
                                i: c / d,
                                j: c % d,
                                l,
                                first: *first,
                                second: (x, y),
                                first_count: want[c],
                                second_count: counts[c],
                            })));
                        }
                    }
                }
            }
        }
        let (_, counts) = reference.expect("relations are nonempty");
        for i in 0..d {
            for j in 0..d {
                tensor[i][j][l] = counts[i * d + j];
            }
        }
    }
    Ok(AssociationScheme::from_parts(rel, converse, tensor))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{build_digraph, cayley_cyclic, two_way_partition};
    use crate::scheme::intersection_tensor;

    fn both(g: &Digraph) -> (Result<AssociationScheme, SchemeError>, Result<AssociationScheme, SchemeError>) {
        let p = two_way_partition(g).unwrap();
        (oracle_p_numbers(g, &p), intersection_tensor(&RelationPartition::from(&p)))
    }

    #[test]
    fn c4_agrees() {
        let (a, b) = both(&Digraph::cycle(4).unwrap());
        let a = a.unwrap();
        assert_eq!(a, b.unwrap());
        for j in 0..4 {
            for l in 0..4 {
                assert_eq!(a.p(0, j, l), u64::from(j == l));
            }
        }
    }

    #[test]
    fn z6_agrees() {
        let (a, b) = both(&cayley_cyclic(6, &[1, 2]).unwrap());
        assert_eq!(a.unwrap(), b.unwrap());
    }

    #[test]
    fn five_arc_failure_agrees() {
        let g = build_digraph(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let (a, b) = both(&g);
        assert!(a.is_err());
        assert_eq!(a, b);
    }
}
