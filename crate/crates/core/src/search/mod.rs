//! Exhaustive search over Cayley digraphs of small abelian groups.
//!
//! Groups are taken up to isomorphism by their invariant factors
//! `d_1 | d_2 | … | d_k`. Connection sets are bitmasks over the non-identity
//! elements, bit `e − 1` standing for element index `e`.

mod oracle;

use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

pub use oracle::oracle_p_numbers;

use crate::digraph::{cayley, group_element, group_index, multipartite_structure, Digraph, TeamStructure};
use crate::error::Error;
use crate::family::{identify, FamilyMatch};
use crate::team::{classify_type, doubly_regular_params, DoublyRegularParams, TypeClassification};
use crate::wdrd::{is_admissible_t_set, verify_wdrd, WdrdReport};

/// Default limit on the number of connection sets examined.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Predicate {
    /// Strongly connected, semicomplete multipartite with parts of size ≥ 2,
    /// and a commutative WDRD.
    #[default]
    Default,
    /// A doubly regular team semicomplete multipartite digraph.
    DoublyRegularTeam,
    /// Any weakly distance-regular digraph.
    AnyWdrd,
}

impl FromStr for Predicate {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "default" => Ok(Self::Default),
            "doubly-regular-team" => Ok(Self::DoublyRegularTeam),
            "any-wdrd" => Ok(Self::AnyWdrd),
            _ => Err(format!("unknown predicate {s:?} (default, doubly-regular-team, any-wdrd)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_order: usize,
    pub predicate: Predicate,
    /// Skip `S` when `−S` has a smaller mask.
    pub reduced: bool,
    pub budget: u64,
}

impl SearchConfig {
    pub fn new(max_order: usize, predicate: Predicate) -> Self {
        Self { max_order, predicate, reduced: false, budget: DEFAULT_BUDGET }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchHit {
    pub factors: Vec<usize>,
    pub mask: u64,
    pub connection: Vec<Vec<usize>>,
    pub digraph: Digraph,
    pub report: WdrdReport,
    pub structure: Option<TeamStructure>,
    pub doubly_regular: Option<DoublyRegularParams>,
    pub classification: Option<TypeClassification>,
    pub family: Option<FamilyMatch>,
    /// Contradictions with the classification theorems found on this hit.
    pub findings: Vec<String>,
}

impl SearchHit {
    pub fn has_theorem_violation(&self) -> bool {
        !self.findings.is_empty()
    }
}

/// Invariant-factor lists of all abelian groups of order `n`, shortest first.
pub fn abelian_groups(n: usize) -> Vec<Vec<usize>> {
    fn chains(rest: usize, prev: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 1 {
            out.push(acc.clone());
            return;
        }
        for d in (2..=rest).filter(|d| rest.is_multiple_of(*d) && d.is_multiple_of(prev)) {
            acc.push(d);
            chains(rest / d, d, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    chains(n, 1, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

fn connection_from_mask(factors: &[usize], mask: u64) -> Vec<Vec<usize>> {
    (0..64).filter(|b| mask >> b & 1 == 1).map(|b| group_element(factors, b as usize + 1)).collect()
}

fn negated_mask(factors: &[usize], mask: u64) -> u64 {
    connection_from_mask(factors, mask).iter().fold(0, |acc, e| {
        let neg: Vec<usize> = e.iter().zip(factors).map(|(&c, &m)| (m - c) % m).collect();
        acc | 1 << (group_index(factors, &neg) - 1)
    })
}

/// Number of connection sets a search would examine.
pub fn candidate_count(max_order: usize) -> u64 {
    (2..=max_order).map(|n| abelian_groups(n).len() as u64 * ((1u64 << (n - 1)) - 1)).sum()
}

fn evaluate(factors: &[usize], mask: u64, predicate: Predicate) -> Result<Option<SearchHit>, Error> {
    let connection = connection_from_mask(factors, mask);
    let g = cayley(factors, &connection)?;
    let structure = multipartite_structure(&g).ok();
    let team = structure.as_ref().is_some_and(|s| s.team_shape().is_some());
    let accepted = match predicate {
        Predicate::Default => {
            g.is_strongly_connected() && structure.as_ref().is_some_and(|s| s.is_multipartite()) && {
                let r = verify_wdrd(&g);
                r.is_wdrd && r.is_commutative
            }
        }
        Predicate::DoublyRegularTeam => team && doubly_regular_params(&g).is_ok(),
        Predicate::AnyWdrd => g.is_strongly_connected() && verify_wdrd(&g).is_wdrd,
    };
    if !accepted {
        return Ok(None);
    }
    let report = verify_wdrd(&g);
    let mut findings = Vec::new();
    let doubly_regular = if team { doubly_regular_params(&g).ok() } else { None };
    let classification = match doubly_regular {
        Some(_) => match classify_type(&g) {
            Ok(c) => Some(c),
            Err(e) => {
                findings.push(e.to_string());
                None
            }
        },
        None => None,
    };
    let multipartite = structure.as_ref().is_some_and(|s| s.is_multipartite());
    let family = if multipartite && report.is_wdrd && report.is_commutative {
        if !is_admissible_t_set(&report.t_set) {
            findings.push(format!("arc-type set {:?} is not admissible", report.t_set));
        }
        match identify(&g) {
            Ok(m) => Some(m),
            Err(e) => {
                findings.push(e.to_string());
                None
            }
        }
    } else {
        None
    };
    Ok(Some(SearchHit {
        factors: factors.to_vec(),
        mask,
        connection,
        digraph: g,
        report,
        structure,
        doubly_regular,
        classification,
        family,
        findings,
    }))
}

/// All hits in canonical order: group order, then invariant factors, then mask.
pub fn enumerate_cayley(cfg: &SearchConfig) -> Result<Vec<SearchHit>, Error> {
    let total = candidate_count(cfg.max_order);
    if cfg.max_order > 64 || total > cfg.budget {
        return Err(Error::Budget(format!("{total} connection sets up to order {} exceed budget {}", cfg.max_order, cfg.budget)));
    }
    let mut hits = Vec::new();
    for n in 2..=cfg.max_order {
        for factors in abelian_groups(n) {
            let masks: Vec<u64> = (1..1u64 << (n - 1))
                .filter(|&m| !cfg.reduced || negated_mask(&factors, m) >= m)
                .collect();
            let found: Vec<Result<Option<SearchHit>, Error>> =
                masks.par_iter().map(|&m| evaluate(&factors, m, cfg.predicate)).collect();
            for h in found {
                hits.extend(h?);
            }
        }
    }
    Ok(hits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{cayley_cyclic, is_isomorphic};

    #[test]
    fn groups() {
        assert_eq!(abelian_groups(16), vec![vec![16], vec![2, 8], vec![4, 4], vec![2, 2, 4], vec![2, 2, 2, 2]]);
        assert_eq!(abelian_groups(12), vec![vec![12], vec![2, 6]]);
        assert_eq!(abelian_groups(7), vec![vec![7]]);
        assert_eq!(abelian_groups(8), vec![vec![8], vec![2, 4], vec![2, 2, 2]]);
        assert_eq!(abelian_groups(36), vec![vec![36], vec![2, 18], vec![3, 12], vec![6, 6]]);
    }

    #[test]
    fn negation() {
        // In Z_6, {1} ↦ {5}.
        assert_eq!(negated_mask(&[6], 0b1), 0b10000);
        assert_eq!(negated_mask(&[2, 2], 0b111), 0b111);
    }

    #[test]
    fn small_orders() {
        assert!(enumerate_cayley(&SearchConfig::new(3, Predicate::Default)).unwrap().is_empty());
        let hits = enumerate_cayley(&SearchConfig::new(6, Predicate::Default)).unwrap();
        let has = |g: &Digraph| hits.iter().any(|h| is_isomorphic(&h.digraph, g).unwrap().is_some());
        let c4 = Digraph::cycle(4).unwrap();
        let z6 = cayley_cyclic(6, &[1, 2]).unwrap();
        assert!(has(&c4) && has(&c4.reverse()) && has(&z6) && has(&z6.reverse()));
        assert!(hits.iter().all(|h| h.findings.is_empty() && h.family.is_some()));
    }

    #[test]
    fn reduced_mode_drops_converses() {
        let mut cfg = SearchConfig::new(6, Predicate::Default);
        let full = enumerate_cayley(&cfg).unwrap();
        cfg.reduced = true;
        let reduced = enumerate_cayley(&cfg).unwrap();
        assert!(reduced.len() < full.len());
        assert!(reduced.iter().all(|h| full.contains(h)));
    }

    #[test]
    fn doubly_regular_predicate() {
        let hits = enumerate_cayley(&SearchConfig::new(8, Predicate::DoublyRegularTeam)).unwrap();
        assert!(hits.iter().any(|h| h.factors == [4] && h.mask == 0b001));
    }

    #[test]
    fn budget() {
        let mut cfg = SearchConfig::new(20, Predicate::Default);
        assert!(matches!(enumerate_cayley(&cfg), Err(Error::Budget(_))));
        cfg.budget = 10;
        cfg.max_order = 6;
        assert!(matches!(enumerate_cayley(&cfg), Err(Error::Budget(_))));
    }

    #[test]
    fn predicate_names() {
        assert_eq!("doubly-regular-team".parse(), Ok(Predicate::DoublyRegularTeam));
        assert!("x".parse::<Predicate>().is_err());
    }
}
