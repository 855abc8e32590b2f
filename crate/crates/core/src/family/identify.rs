use serde::Serialize;

use super::{catalog_name, check_family4_base, family1, family2, family3, family4, family5};
use crate::digraph::{girth, is_isomorphic, multipartite_structure, two_way_partition, Digraph, TwoWayPartition, VertexMap};
use crate::error::{Error, SchemeError};
use crate::scheme::quotient;
use crate::team::tournament_params;
use crate::wdrd::analyze;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct FamilyParams {
    /// Extension multiplicity (families 1, 3, 4) or `l` (family 2).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    /// Team shape `(k, l)` of a family 4 base or `(k, m)` of a family 5 digraph.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub girth: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tournament_params: Option<(u64, u64, u64)>,
}

/// A verified family membership: rebuilding the family member from `base`
/// and `params` gives a digraph isomorphic to the input via `iso_map`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyMatch {
    pub family: u8,
    pub params: FamilyParams,
    pub base: Digraph,
    /// Catalog name of the base, or `"anonymous"`.
    pub base_id: String,
    /// `iso_map[v]` is the input vertex matching vertex `v` of the rebuilt digraph.
    pub iso_map: VertexMap,
}

impl FamilyMatch {
    /// Applies the family constructor to `base` and `params`.
    pub fn rebuild(&self) -> Result<Digraph, Error> {
        let mult = match self.family {
            2 => self.params.l,
            5 => Some(1),
            _ => self.params.n,
        };
        Candidate { family: self.family, mult: mult.unwrap_or(0), base: self.base.clone() }.build()
    }
}

struct Candidate {
    family: u8,
    mult: usize,
    base: Digraph,
}

impl Candidate {
    fn build(&self) -> Result<Digraph, Error> {
        match self.family {
            1 => family1(self.mult),
            2 => family2(self.mult, &self.base),
            3 => family3(self.mult, &self.base),
            4 => family4(self.mult, &self.base),
            _ => family5(&self.base),
        }
    }

    fn params(&self) -> Result<FamilyParams, Error> {
        let mut p = FamilyParams::default();
        match self.family {
            1 | 3 => p.n = Some(self.mult),
            2 => {
                p.l = Some(self.mult);
                p.girth = Some(girth(&self.base)?);
            }
            4 => {
                let (k, l) = check_family4_base(&self.base)?;
                p.n = Some(self.mult);
                (p.k, p.l) = (Some(k), Some(l));
                p.tournament_params = Some(tournament_params(&self.base)?);
            }
            _ => {
                let s = multipartite_structure(&self.base)?;
                let (k, m) = s.team_shape().expect("family 5 members have equal parts");
                (p.k, p.m) = (Some(k), Some(m));
            }
        }
        Ok(p)
    }
}

/// Quotient by the closed subset generated by `labels`, with the class size.
fn fiber_split(g: &Digraph, p: &TwoWayPartition, labels: &[(usize, usize)]) -> Result<Option<(Digraph, usize)>, Error> {
    let mut idx = vec![0];
    for &label in labels {
        match p.index_of(label) {
            Some(i) => idx.push(i),
            None => return Ok(None),
        }
    }
    match quotient(g, p, &idx) {
        Ok((q, classes)) => Ok(Some((q, classes[0].len()))),
        Err(SchemeError::NotClosed(_) | SchemeError::UnequalClasses(..)) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

/// Splits off the `(s,s)` fibers, or keeps `g` whole with multiplicity 1.
fn split_or_whole(g: &Digraph, p: &TwoWayPartition, s: usize) -> Result<(Digraph, usize), Error> {
    Ok(fiber_split(g, p, &[(s, s)])?.unwrap_or_else(|| (g.clone(), 1)))
}

fn candidates(g: &Digraph, p: &TwoWayPartition, t: &[usize]) -> Result<Vec<Candidate>, Error> {
    let c = |family, mult, base| Candidate { family, mult, base };
    let mut out = Vec::new();
    match t {
        [2, 3] => {
            out.push(c(5, 1, g.clone()));
            if let Some((sigma, n)) = fiber_split(g, p, &[(2, 2)])? {
                out.push(c(2, n, sigma));
            }
        }
        [q] if *q == 3 || *q == 4 => {
            let (sigma, n) = split_or_whole(g, p, *q)?;
            if sigma.is_semicomplete() {
                out.push(c(2, n, sigma));
            } else {
                out.push(c(4, n, sigma));
            }
        }
        [3, 4] => {
            let (sigma, n) = split_or_whole(g, p, 3)?;
            out.push(c(1, n, sigma.clone()));
            let sp = two_way_partition(&sigma)?;
            if let Some((base, 4)) = fiber_split(&sigma, &sp, &[(1, 3), (3, 1), (2, 2)])? {
                out.push(c(3, n, base));
            }
        }
        _ => {}
    }
    Ok(out)
}

/// Recognises which family a semicomplete multipartite commutative WDRD
/// belongs to. Families are tried in a fixed order per arc-type set and the
/// first rebuild isomorphic to `g` wins.
pub fn identify(g: &Digraph) -> Result<FamilyMatch, Error> {
    let s = multipartite_structure(g).map_err(|e| Error::Precondition(e.to_string()))?;
    if !s.is_multipartite() {
        return Err(Error::Precondition("part sizes ≥ 2 required".into()));
    }
    let a = analyze(g);
    if !(a.report.is_wdrd && a.report.is_commutative) {
        return Err(Error::Precondition("not a commutative weakly distance-regular digraph".into()));
    }
    let p = a.partition.expect("strongly connected");
    let t: Vec<usize> = a.report.t_set.iter().copied().collect();
    let mut reasons = Vec::new();
    for cand in candidates(g, &p, &t)? {
        if cand.family == 1 && is_isomorphic(&cand.base, &super::builtin_digraph("cay_z6_12")?)?.is_none() {
            reasons.push("family 1: base is not Cay(Z6, {1,2})".to_string());
            continue;
        }
        let rebuilt = match cand.build() {
            Ok(d) => d,
            Err(e @ Error::TheoremViolation(_)) => return Err(e),
            Err(e) => {
                reasons.push(format!("family {}: {e}", cand.family));
                continue;
            }
        };
        let Some(iso_map) = is_isomorphic(&rebuilt, g)? else {
            reasons.push(format!("family {}: rebuilt digraph is not isomorphic", cand.family));
            continue;
        };
        let base_id = catalog_name(&cand.base)?.unwrap_or("anonymous").to_string();
        return Ok(FamilyMatch { family: cand.family, params: cand.params()?, base: cand.base, base_id, iso_map });
    }
    Err(Error::TheoremViolation(format!("no family matches (T = {t:?}): {}", reasons.join("; "))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{cayley_cyclic, coclique_extension};
    use crate::family::paley;

    fn check(g: &Digraph, family: u8) -> FamilyMatch {
        let m = identify(g).unwrap();
        assert_eq!(m.family, family);
        assert_eq!(&m.rebuild().unwrap().relabel(&m.iso_map), g);
        m
    }

    #[test]
    fn z6_extension() {
        let g = coclique_extension(&cayley_cyclic(6, &[1, 2]).unwrap(), 2).unwrap();
        let m = check(&g, 1);
        assert_eq!(m.params.n, Some(2));
        assert_eq!(m.base_id, "cay_z6_12");
        assert_eq!(check(&cayley_cyclic(6, &[1, 2]).unwrap(), 1).params.n, Some(1));
    }

    #[test]
    fn c3_extension() {
        let g = coclique_extension(&Digraph::cycle(3).unwrap(), 3).unwrap();
        let m = check(&g, 2);
        assert_eq!((m.params.l, m.params.girth), (Some(3), Some(3)));
        assert_eq!(m.base_id, "c3");
    }

    #[test]
    fn girth_two_extension() {
        let g = coclique_extension(&cayley_cyclic(4, &[1, 2]).unwrap(), 2).unwrap();
        let m = check(&g, 2);
        assert_eq!((m.params.l, m.params.girth), (Some(2), Some(2)));
        assert_eq!(m.base_id, "cay_z4_12");
    }

    #[test]
    fn c4_cases() {
        let m = check(&Digraph::cycle(4).unwrap(), 4);
        assert_eq!((m.params.n, m.params.k, m.params.l), (Some(1), Some(2), Some(2)));
        assert_eq!(m.params.tournament_params, Some((0, 0, 1)));
        let m = check(&coclique_extension(&Digraph::cycle(4).unwrap(), 3).unwrap(), 4);
        assert_eq!(m.params.n, Some(3));
    }

    #[test]
    fn paley_times_c4() {
        let g = crate::family::family3(1, &paley(7).unwrap()).unwrap();
        let m = check(&g, 3);
        assert_eq!(m.base_id, "paley7");
        let g = crate::family::family3(2, &Digraph::cycle(3).unwrap()).unwrap();
        assert_eq!(check(&g, 3).params.n, Some(2));
    }

    #[test]
    fn preconditions() {
        assert_eq!(identify(&Digraph::cycle(3).unwrap()), Err(Error::Precondition("part sizes ≥ 2 required".into())));
        let all_edges = coclique_extension(&Digraph::complete(3).unwrap(), 2).unwrap();
        assert!(matches!(identify(&all_edges), Err(Error::Precondition(_))));
    }
}
