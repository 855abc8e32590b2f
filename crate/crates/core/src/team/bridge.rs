//! From 4-class schemes with one non-symmetric pair to team digraphs.

use crate::digraph::{Digraph, Vertex};
use crate::scheme::AssociationScheme;

/// A labelling `R1, R3, R4` of a 4-class scheme with `R1ᵀ = R2` the only
/// non-symmetric pair, `(X, R4)` disconnected and `(X, R1 ∪ R3)` strongly
/// connected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BridgeInstance {
    pub r1: usize,
    pub r3: usize,
    pub r4: usize,
    /// `R0 ∪ R4` is an equivalence relation, so its classes are the parts
    /// of `(X, R1 ∪ R3)`.
    pub r4_is_equivalence: bool,
    pub digraph: Digraph,
}

fn relation_digraph(s: &AssociationScheme, rels: &[usize]) -> Digraph {
    let p = s.partition();
    Digraph::from_fn(s.order(), |x, y| rels.contains(&p.class_of(x, y))).expect("scheme order is positive")
}

fn connected(g: &Digraph) -> bool {
    let mut seen = vec![false; g.order()];
    let mut stack: Vec<Vertex> = vec![0];
    seen[0] = true;
    while let Some(x) = stack.pop() {
        for &y in g.out_neighbors(x).iter().chain(g.in_neighbors(x)) {
            if !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    seen.iter().all(|&b| b)
}

/// Every labelling of `s` meeting the hypotheses; empty when `s` does not
/// have the right shape.
pub fn bridge_instances(s: &AssociationScheme) -> Vec<BridgeInstance> {
    if s.rank() != 5 {
        return Vec::new();
    }
    let nonsym: Vec<usize> = (1..5).filter(|&i| s.converse(i) != i).collect();
    let sym: Vec<usize> = (1..5).filter(|&i| s.converse(i) == i).collect();
    if nonsym.len() != 2 || sym.len() != 2 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for &r1 in &nonsym {
        for (r3, r4) in [(sym[0], sym[1]), (sym[1], sym[0])] {
            if connected(&relation_digraph(s, &[r4])) {
                continue;
            }
            let digraph = relation_digraph(s, &[r1, r3]);
            if digraph.is_strongly_connected() {
                let r4_is_equivalence = (0..5).all(|l| l == 0 || l == r4 || s.p(r4, r4, l) == 0);
                out.push(BridgeInstance { r1, r3, r4, r4_is_equivalence, digraph });
            }
        }
    }
    out
}
