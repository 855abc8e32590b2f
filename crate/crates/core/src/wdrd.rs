//! The weak distance-regularity predicate.
//!
//! A digraph is weakly distance-regular when it is strongly connected and its
//! two-way distance partition is a non-symmetric association scheme.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::digraph::{two_way_partition, Digraph, TeamStructure, TwoWayPartition, Vertex};
use crate::error::{DigraphError, Error};
use crate::scheme::{verify_scheme, AssociationScheme, RelationPartition, SchemeFailure};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassInfo {
    pub label: (usize, usize),
    pub size: usize,
    /// `k_i`, present when the partition is a scheme.
    pub valency: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WdrdReport {
    pub n: usize,
    pub strongly_connected: bool,
    pub is_scheme: bool,
    pub is_nonsymmetric: bool,
    pub is_wdrd: bool,
    pub is_commutative: bool,
    pub t_set: BTreeSet<usize>,
    /// True when `t_set` was computed although the scheme check failed.
    pub t_set_informational: bool,
    pub class_labels: Vec<ClassInfo>,
    pub unreachable_pair: Option<(Vertex, Vertex)>,
    pub scheme_failure: Option<SchemeFailure>,
}

/// Everything computed while verifying a digraph.
#[derive(Debug, Clone)]
pub struct WdrdAnalysis {
    pub report: WdrdReport,
    pub partition: Option<TwoWayPartition>,
    pub scheme: Option<AssociationScheme>,
}

pub fn verify_wdrd(g: &Digraph) -> WdrdReport {
    analyze(g).report
}

/// Runs the full verification and keeps the partition and scheme.
pub fn analyze(g: &Digraph) -> WdrdAnalysis {
    let n = g.order();
    let partition = match two_way_partition(g) {
        Ok(p) => p,
        Err(DigraphError::NotStronglyConnected(x, y)) => {
            let report = WdrdReport {
                n,
                strongly_connected: false,
                is_scheme: false,
                is_nonsymmetric: false,
                is_wdrd: false,
                is_commutative: false,
                t_set: BTreeSet::new(),
                t_set_informational: true,
                class_labels: Vec::new(),
                unreachable_pair: Some((x, y)),
                scheme_failure: None,
            };
            return WdrdAnalysis { report, partition: None, scheme: None };
        }
        Err(e) => unreachable!("two-way partition only fails on connectivity: {e}"),
    };
    let (sr, scheme) = verify_scheme(&RelationPartition::from(&partition));
    let is_nonsymmetric = partition.labels().iter().any(|&(a, b)| a != b);
    let class_labels = partition
        .labels()
        .iter()
        .enumerate()
        .map(|(i, &label)| ClassInfo {
            label,
            size: partition.class_size(i),
            valency: scheme.as_ref().map(|s| s.valency(i)),
        })
        .collect();
    let report = WdrdReport {
        n,
        strongly_connected: true,
        is_scheme: sr.is_scheme,
        is_nonsymmetric,
        is_wdrd: sr.is_scheme && is_nonsymmetric,
        is_commutative: sr.is_commutative,
        t_set: arc_type_set(&partition),
        t_set_informational: !sr.is_scheme,
        class_labels,
        unreachable_pair: None,
        scheme_failure: sr.failure_witness,
    };
    WdrdAnalysis { report, partition: Some(partition), scheme }
}

/// `T = {q | (1, q-1) is a two-way distance}`.
pub fn arc_type_set(partition: &TwoWayPartition) -> BTreeSet<usize> {
    partition.labels().iter().filter(|&&(a, _)| a == 1).map(|&(_, b)| b + 1).collect()
}

/// The admissible arc-type sets of a semicomplete multipartite commutative WDRD.
pub const ADMISSIBLE_T_SETS: [&[usize]; 4] = [&[3], &[4], &[3, 4], &[2, 3]];

pub fn is_admissible_t_set(t: &BTreeSet<usize>) -> bool {
    ADMISSIBLE_T_SETS.iter().any(|a| a.len() == t.len() && a.iter().all(|q| t.contains(q)))
}

/// Checks that `T` is one of `{3}`, `{4}`, `{3,4}`, `{2,3}`.
pub fn check_t_constraint(report: &WdrdReport, structure: &TeamStructure) -> Result<bool, Error> {
    if !(report.is_wdrd && report.is_commutative) {
        return Err(Error::Precondition("digraph is not a commutative weakly distance-regular digraph".into()));
    }
    if !structure.is_multipartite() {
        return Err(Error::Precondition("part sizes ≥ 2 required".into()));
    }
    Ok(is_admissible_t_set(&report.t_set))
}
