use serde::Serialize;

use super::{doubly_regular_params, team_structure, DoublyRegularParams};
use crate::digraph::{Digraph, TeamStructure, Vertex};
use crate::error::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "Type-I")]
    TypeI,
    #[serde(rename = "Type-II")]
    TypeII,
    #[serde(rename = "Type-III")]
    TypeIII,
}

/// How a part pair looks in a Type I digraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BlockRelation {
    Edges,
    IToJ,
    JToI,
}

/// The Type III pattern matched by a part pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "case")]
pub enum PairCase {
    /// `V_i × V_j` are all edges.
    #[serde(rename = "i")]
    AllEdges,
    /// `split` (one of the two parts) is `prime ∪ double_prime` with
    /// `prime → other` and `other → double_prime` all arcs.
    #[serde(rename = "ii")]
    OneSided { split: usize, other: usize, prime: Vec<Vertex>, double_prime: Vec<Vertex> },
    /// Edges on `V_i'×V_j'` and `V_i''×V_j''`, arcs `V_i' → V_j''` and `V_j' → V_i''`.
    #[serde(rename = "iii")]
    Crossed { i_prime: Vec<Vertex>, i_double_prime: Vec<Vertex>, j_prime: Vec<Vertex>, j_double_prime: Vec<Vertex> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PairEvidence {
    Block { relation: BlockRelation },
    Balanced { c_ij: usize, c_ji: usize, e_ij: usize },
    Mixed(PairCase),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairWitness {
    pub i: usize,
    pub j: usize,
    #[serde(flatten)]
    pub evidence: PairEvidence,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TypeClassification {
    pub verdict: Verdict,
    /// `β₁ + β₂ − α₁ − α₂`, or `None` when there are no pure arcs.
    pub delta: Option<i64>,
    pub delta_indeterminate: bool,
    #[serde(flatten)]
    pub params: DoublyRegularParams,
    pub pairs: Vec<PairWitness>,
    /// Type I only: the semicomplete digraph on the parts.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub base: Option<Digraph>,
}

fn is_edge(g: &Digraph, x: Vertex, y: Vertex) -> bool {
    g.has_arc(x, y) && g.has_arc(y, x)
}

fn is_pure_arc(g: &Digraph, x: Vertex, y: Vertex) -> bool {
    g.has_arc(x, y) && !g.has_arc(y, x)
}

/// `|A_j⁺(x)|` and `|E_j(x)|` for every vertex and part.
struct PartCounts {
    arcs: Vec<Vec<usize>>,
    edges: Vec<Vec<usize>>,
}

impl PartCounts {
    fn new(g: &Digraph, s: &TeamStructure) -> Self {
        let n = g.order();
        let m = s.part_count();
        let mut arcs = vec![vec![0; m]; n];
        let mut edges = vec![vec![0; m]; n];
        for x in 0..n {
            for &y in g.out_neighbors(x) {
                if g.has_arc(y, x) {
                    edges[x][s.part_of(y)] += 1;
                } else {
                    arcs[x][s.part_of(y)] += 1;
                }
            }
        }
        Self { arcs, edges }
    }
}

/// Matches a part pair against the Type III patterns, trying (i), (iii)
/// and then (ii).
pub fn analyze_pair(g: &Digraph, vi: &[Vertex], vj: &[Vertex]) -> Option<PairCase> {
    let all = |a: &[Vertex], b: &[Vertex], f: &dyn Fn(Vertex, Vertex) -> bool| a.iter().all(|&x| b.iter().all(|&y| f(x, y)));
    let edge = |x, y| is_edge(g, x, y);
    let arc = |x, y| is_pure_arc(g, x, y);
    if all(vi, vj, &edge) {
        return Some(PairCase::AllEdges);
    }

    let (ip, ipp): (Vec<Vertex>, Vec<Vertex>) = vi.iter().partition(|&&x| vj.iter().any(|&y| arc(x, y)));
    let (jpp, jp): (Vec<Vertex>, Vec<Vertex>) = vj.iter().partition(|&&y| ip.iter().any(|&x| arc(x, y)));
    if [&ip, &ipp, &jp, &jpp].iter().all(|v| !v.is_empty())
        && all(&ip, &jp, &edge)
        && all(&ipp, &jpp, &edge)
        && all(&ip, &jpp, &arc)
        && all(&jp, &ipp, &arc)
    {
        return Some(PairCase::Crossed { i_prime: ip, i_double_prime: ipp, j_prime: jp, j_double_prime: jpp });
    }

    let one_sided = |a: &[Vertex], b: &[Vertex]| {
        let (prime, double_prime): (Vec<Vertex>, Vec<Vertex>) = a.iter().partition(|&&x| b.iter().all(|&y| arc(x, y)));
        let ok = !prime.is_empty() && !double_prime.is_empty() && all(b, &double_prime, &arc);
        ok.then_some((prime, double_prime))
    };
    if let Some((prime, double_prime)) = one_sided(vi, vj) {
        return Some(PairCase::OneSided { split: 0, other: 1, prime, double_prime });
    }
    one_sided(vj, vi).map(|(prime, double_prime)| PairCase::OneSided { split: 1, other: 0, prime, double_prime })
}

fn violation(msg: String) -> Error {
    Error::TheoremViolation(msg)
}

/// Classifies a doubly regular team digraph by `Δ = β₁ + β₂ − α₁ − α₂` and
/// verifies the structure that goes with it on every part pair.
pub fn classify_type(g: &Digraph) -> Result<TypeClassification, Error> {
    let params = doubly_regular_params(g)?;
    let (s, m, r) = team_structure(g)?;
    let counts = PartCounts::new(g, &s);
    let has_arcs = counts.arcs.iter().flatten().any(|&c| c > 0);
    let delta = params.delta();
    let verdict = if !has_arcs || delta == 0 {
        Verdict::TypeII
    } else if delta == r as i64 {
        Verdict::TypeI
    } else if r % 2 == 0 && delta == (r / 2) as i64 {
        Verdict::TypeIII
    } else {
        return Err(violation(format!("delta = {delta} is not one of 0, {}, {r} (r = {r})", r as f64 / 2.0)));
    };
    let part_pairs = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j)));
    let mut pairs = Vec::new();
    let mut base = None;
    match verdict {
        Verdict::TypeI => {
            let mut arcs = Vec::new();
            for (i, j) in part_pairs {
                let (vi, vj) = (&s.parts[i], &s.parts[j]);
                let all = |f: &dyn Fn(Vertex, Vertex) -> bool| vi.iter().all(|&x| vj.iter().all(|&y| f(x, y)));
                let relation = if all(&|x, y| is_edge(g, x, y)) {
                    arcs.extend([(i, j), (j, i)]);
                    BlockRelation::Edges
                } else if all(&|x, y| is_pure_arc(g, x, y)) {
                    arcs.push((i, j));
                    BlockRelation::IToJ
                } else if all(&|x, y| is_pure_arc(g, y, x)) {
                    arcs.push((j, i));
                    BlockRelation::JToI
                } else {
                    return Err(violation(format!("Type I digraph has mixed parts {i} and {j}")));
                };
                pairs.push(PairWitness { i, j, evidence: PairEvidence::Block { relation } });
            }
            base = Some(Digraph::new(m, arcs)?);
        }
        Verdict::TypeII => {
            let constant = |table: &Vec<Vec<usize>>, i: usize, j: usize| {
                let v = table[s.parts[i][0]][j];
                s.parts[i].iter().all(|&x| table[x][j] == v).then_some(v)
            };
            for (i, j) in part_pairs {
                let cij = constant(&counts.arcs, i, j);
                let cji = constant(&counts.arcs, j, i);
                let eij = constant(&counts.edges, i, j);
                let eji = constant(&counts.edges, j, i);
                match (cij, cji, eij, eji) {
                    (Some(c_ij), Some(c_ji), Some(e_ij), Some(e_ji)) if c_ij == c_ji && e_ij == e_ji && 2 * c_ij + e_ij == r => {
                        pairs.push(PairWitness { i, j, evidence: PairEvidence::Balanced { c_ij, c_ji, e_ij } });
                    }
                    _ => {
                        return Err(violation(format!(
                            "Type II balance fails on parts {i}, {j}: c_ij {cij:?}, c_ji {cji:?}, e_ij {eij:?}, e_ji {eji:?}, r {r}"
                        )))
                    }
                }
            }
        }
        Verdict::TypeIII => {
            for (i, j) in part_pairs {
                match analyze_pair(g, &s.parts[i], &s.parts[j]) {
                    Some(case) => {
                        let case = match case {
                            PairCase::OneSided { split, other, prime, double_prime } => {
                                let idx = [i, j];
                                PairCase::OneSided { split: idx[split], other: idx[other], prime, double_prime }
                            }
                            c => c,
                        };
                        pairs.push(PairWitness { i, j, evidence: PairEvidence::Mixed(case) });
                    }
                    None => return Err(violation(format!("Type III pattern fails on parts {i}, {j}"))),
                }
            }
        }
    }
    Ok(TypeClassification {
        verdict,
        delta: has_arcs.then_some(delta),
        delta_indeterminate: !has_arcs,
        params,
        pairs,
        base,
    })
}

/// A vertex or arc where an edge/arc counting identity fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TeamCountViolation {
    pub kind: &'static str,
    pub x: Vertex,
    pub y: Vertex,
    pub lhs: i64,
    pub rhs: i64,
}

/// Pairs `x ∈ V_i`, `y ∈ V_j` (`i ≠ j`) with `|E_j(x)| ≠ |E_i(y)|`.
pub fn edge_count_violations(g: &Digraph) -> Result<Vec<TeamCountViolation>, Error> {
    let (s, _, _) = team_structure(g)?;
    let counts = PartCounts::new(g, &s);
    let n = g.order();
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let (i, j) = (s.part_of(x), s.part_of(y));
            if i != j && counts.edges[x][j] != counts.edges[y][i] {
                out.push(TeamCountViolation {
                    kind: "edge_count",
                    x,
                    y,
                    lhs: counts.edges[x][j] as i64,
                    rhs: counts.edges[y][i] as i64,
                });
            }
        }
    }
    Ok(out)
}

/// Arcs `x → y` with `|A_j⁺(x)| − |A_i⁺(y)| ≠ Δ`, and edges with
/// `|A_j⁺(x)| ≠ |A_i⁺(y)|`.
pub fn arc_count_violations(g: &Digraph, params: &DoublyRegularParams) -> Result<Vec<TeamCountViolation>, Error> {
    let (s, _, _) = team_structure(g)?;
    let counts = PartCounts::new(g, &s);
    let delta = params.delta();
    let mut out = Vec::new();
    for (x, y) in g.arcs() {
        let (i, j) = (s.part_of(x), s.part_of(y));
        let lhs = counts.arcs[x][j] as i64 - counts.arcs[y][i] as i64;
        let (kind, rhs) = if g.has_arc(y, x) { ("edge_arc_balance", 0) } else { ("arc_difference", delta) };
        if lhs != rhs {
            out.push(TeamCountViolation { kind, x, y, lhs, rhs });
        }
    }
    Ok(out)
}
