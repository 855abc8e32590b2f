//! Acceptance suite: one PASS/FAIL line per criterion, exact integer checks.
//!
//! Runs without the libtest harness so the lines are always printed; the
//! process exits non-zero when any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use wdrd_core::corpus::corpus;
use wdrd_core::digraph::{coclique_extension, girth, is_isomorphic, multipartite_structure, two_way_partition, Digraph};
use wdrd_core::family::{builtin_digraph, family2, family3, identify};
use wdrd_core::scheme::{check_lemma21, intersection_tensor, quotient, RelationPartition};
use wdrd_core::search::{enumerate_cayley, oracle_p_numbers, Predicate, SearchConfig, SearchHit};
use wdrd_core::team::{
    arc_count_violations, bridge_instances, classify_type, doubly_regular_params, edge_count_violations,
    jg14_type2_check, tournament_params, type2_formula, PairEvidence, Verdict,
};
use wdrd_core::wdrd::{analyze, check_t_constraint};
use wdrd_core::{verify_wdrd, AssociationScheme};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn b(name: &str) -> Digraph {
    builtin_digraph(name).expect("catalog name")
}

fn valency(g: &Digraph, label: (usize, usize)) -> Option<u64> {
    verify_wdrd(g).class_labels.iter().find(|c| c.label == label).and_then(|c| c.valency)
}

fn hits(predicate: Predicate, max_order: usize) -> &'static [SearchHit] {
    static DEFAULT: OnceLock<Vec<SearchHit>> = OnceLock::new();
    static DOUBLY: OnceLock<Vec<SearchHit>> = OnceLock::new();
    static ANY: OnceLock<Vec<SearchHit>> = OnceLock::new();
    let cell = match predicate {
        Predicate::Default => &DEFAULT,
        Predicate::DoublyRegularTeam => &DOUBLY,
        Predicate::AnyWdrd => &ANY,
    };
    cell.get_or_init(|| enumerate_cayley(&SearchConfig::new(max_order, predicate)).expect("search within budget"))
}

/// Schemes attached to corpus digraphs and to WDRD search hits.
fn corpus_schemes() -> Vec<(String, AssociationScheme)> {
    let mut out = Vec::new();
    let named = corpus().expect("corpus builds");
    let found = hits(Predicate::AnyWdrd, 12).iter().map(|h| (format!("cayley{:?}#{}", h.factors, h.mask), h.digraph.clone()));
    for (name, g) in named.into_iter().chain(found) {
        if let Some(s) = analyze(&g).scheme {
            out.push((name, s));
        }
    }
    out
}

fn criterion1() -> Outcome {
    let g = b("cay_z6_12");
    let r = verify_wdrd(&g);
    ensure!(r.is_wdrd && r.is_commutative && r.n == 6, "not a commutative WDRD on 6 vertices: {r:?}");
    ensure!(r.class_labels.len() == 6, "{} classes", r.class_labels.len());
    ensure!(r.class_labels.iter().all(|c| c.valency == Some(1)), "valencies {:?}", r.class_labels);
    for label in [(1, 2), (1, 3), (2, 2)] {
        ensure!(valency(&g, label) == Some(1), "k{label:?} = {:?}", valency(&g, label));
    }
    let m = identify(&g).map_err(|e| e.to_string())?;
    ensure!(m.family == 1 && m.params.n == Some(1), "identified as {m:?}");
    Ok("6 classes of valency 1; family 1 with n = 1".into())
}

fn criterion2() -> Outcome {
    let c4 = b("c4");
    let t = tournament_params(&c4).map_err(|e| e.to_string())?;
    let f = type2_formula(2, 2).map_err(|e| e.to_string())?;
    ensure!(t == (0, 0, 1) && t == f, "tournament params {t:?}, formula {f:?}");
    ensure!(jg14_type2_check(&c4) == Ok(true), "Type II check failed");
    let c = classify_type(&c4).map_err(|e| e.to_string())?;
    ensure!(c.verdict == Verdict::TypeII && c.delta == Some(0), "{:?} delta {:?}", c.verdict, c.delta);
    let balanced = c.pairs.iter().all(|p| p.evidence == PairEvidence::Balanced { c_ij: 1, c_ji: 1, e_ij: 0 });
    ensure!(balanced && c.pairs.len() == 1, "pairs {:?}", c.pairs);
    Ok("(α,β,γ) = (0,0,1); Type II, Δ = 0, c = 1".into())
}

fn criterion3() -> Outcome {
    let c3 = b("c3");
    let g = family2(2, &c3).map_err(|e| e.to_string())?;
    let p = two_way_partition(&g).map_err(|e| e.to_string())?;
    ensure!(p.labels() == [(0, 0), (1, 2), (2, 1), (3, 3)], "labels {:?}", p.labels());
    // k parts of size m: k_{1,2} = (k−1)m/2, k_{3,3} = m−1.
    let (k, m) = (3u64, 2u64);
    ensure!(valency(&g, (1, 2)) == Some((k - 1) * m / 2), "k(1,2) = {:?}", valency(&g, (1, 2)));
    ensure!(valency(&g, (3, 3)) == Some(m - 1), "k(3,3) = {:?}", valency(&g, (3, 3)));
    let i33 = p.index_of((3, 3)).expect("class present");
    let (q, _) = quotient(&g, &p, &[0, i33]).map_err(|e| e.to_string())?;
    ensure!(is_isomorphic(&q, &c3).map_err(|e| e.to_string())?.is_some(), "quotient {q:?} is not C3");
    Ok("k(1,2) = 2, k(3,3) = 1, quotient ≅ C3".into())
}

fn criterion4() -> Outcome {
    let sigma = b("paley7");
    let g = family3(1, &sigma).map_err(|e| e.to_string())?;
    ensure!(g.order() == 28, "order {}", g.order());
    let r = verify_wdrd(&g);
    ensure!(r.is_wdrd, "not a WDRD: {:?}", r.scheme_failure);
    let labels = |d: &Digraph| -> BTreeSet<(usize, usize)> {
        two_way_partition(d).expect("strongly connected").labels().iter().copied().collect()
    };
    let union: BTreeSet<_> = labels(&sigma).union(&labels(&b("c4"))).copied().collect();
    ensure!(labels(&g) == union, "labels {:?} vs union {:?}", labels(&g), union);
    Ok(format!("28 vertices, {} classes = union of both factors", union.len()))
}

fn criterion5() -> Outcome {
    let base = b("cay_z4_12");
    let g = coclique_extension(&base, 2).map_err(|e| e.to_string())?;
    let p = doubly_regular_params(&g).map_err(|e| e.to_string())?;
    ensure!(p.t == 2 && p.beta[1] == 2 && p.gamma[2] == 2 && p.eta[0] == 2, "params {p:?}");
    let others = [p.alpha, [p.beta[0], 0, p.beta[2]], [p.gamma[0], p.gamma[1], 0], [0, p.eta[1], p.eta[2]]];
    ensure!(others.iter().flatten().all(|&v| v == 0), "non-zero extra coefficient in {p:?}");
    let c = classify_type(&g).map_err(|e| e.to_string())?;
    ensure!(c.verdict == Verdict::TypeI && c.delta == Some(2) && p.r == 2, "{:?} delta {:?}", c.verdict, c.delta);
    let m = identify(&g).map_err(|e| e.to_string())?;
    ensure!(m.family == 2 && m.params.l == Some(2), "identified as family {} {:?}", m.family, m.params);
    ensure!(m.base.is_semicomplete() && girth(&m.base) == Ok(2), "base is not semicomplete of girth 2");
    Ok("t = 2, β₁ = 2, γ₂ = 2, η₀ = 2; Type I, Δ = r = 2; family 2, l = 2".into())
}

fn criterion6() -> Outcome {
    let mut compared = 0;
    let mut failures = 0;
    for (name, g) in corpus().map_err(|e| e.to_string())? {
        if g.order() > 32 {
            continue;
        }
        let Ok(p) = two_way_partition(&g) else { continue };
        let matrix = intersection_tensor(&RelationPartition::from(&p));
        let direct = oracle_p_numbers(&g, &p);
        ensure!(matrix == direct, "{name}: routes disagree: {matrix:?} vs {direct:?}");
        compared += 1;
        failures += usize::from(matrix.is_err());
    }
    Ok(format!("{compared} digraphs agree ({failures} with identical failing class)"))
}

fn criterion7() -> Outcome {
    let mut checked = 0;
    for (name, s) in corpus_schemes() {
        let v = check_lemma21(&s);
        ensure!(v.is_empty(), "{name}: {:?}", v[0]);
        checked += 1;
    }
    for h in hits(Predicate::Default, 12) {
        let s = analyze(&h.digraph).scheme.ok_or("hit without scheme")?;
        ensure!(check_lemma21(&s).is_empty(), "hit {:?} #{}", h.factors, h.mask);
        checked += 1;
    }
    Ok(format!("{checked} schemes without violations"))
}

fn criterion8() -> Outcome {
    let found = enumerate_cayley(&SearchConfig::new(12, Predicate::Default)).map_err(|e| e.to_string())?;
    ensure!(!found.is_empty(), "no hits");
    let present = |g: &Digraph| {
        let r = g.reverse();
        found.iter().any(|h| [g, &r].iter().any(|t| is_isomorphic(&h.digraph, t).ok().flatten().is_some()))
    };
    ensure!(present(&b("c4")), "C4 missing");
    ensure!(present(&b("cay_z6_12")), "Cay(Z6,{{1,2}}) missing");
    let mut families = BTreeSet::new();
    for h in &found {
        let s = multipartite_structure(&h.digraph).map_err(|e| e.to_string())?;
        ensure!(check_t_constraint(&h.report, &s) == Ok(true), "hit {:?} #{}: T = {:?}", h.factors, h.mask, h.report.t_set);
        ensure!(h.findings.is_empty(), "hit {:?} #{}: {:?}", h.factors, h.mask, h.findings);
        let m = h.family.as_ref().ok_or(format!("hit {:?} #{} unidentified", h.factors, h.mask))?;
        families.insert(m.family);
    }
    Ok(format!("{} hits, all with admissible T and identified (families {families:?})", found.len()))
}

fn criterion9() -> Outcome {
    let pool = hits(Predicate::DoublyRegularTeam, 12).iter().chain(hits(Predicate::Default, 12).iter().filter(|h| h.doubly_regular.is_some()));
    let mut checked = 0;
    for h in pool {
        let tag = format!("{:?} #{}", h.factors, h.mask);
        let g = &h.digraph;
        let p = doubly_regular_params(g).map_err(|e| format!("{tag}: {e}"))?;
        let e = edge_count_violations(g).map_err(|e| e.to_string())?;
        ensure!(e.is_empty(), "{tag}: edge counts {:?}", e[0]);
        let a = arc_count_violations(g, &p).map_err(|e| e.to_string())?;
        ensure!(a.is_empty(), "{tag}: arc counts {:?}", a[0]);
        let c = classify_type(g).map_err(|e| format!("{tag}: {e}"))?;
        if let Some(d) = c.delta {
            let r = p.r as i64;
            ensure!(d == 0 || d == r || 2 * d == r, "{tag}: delta {d} with r = {r}");
        }
        checked += 1;
    }
    ensure!(checked > 0, "no doubly regular hits");
    Ok(format!("{checked} doubly regular hits satisfy the counting identities and Δ ∈ {{0, r/2, r}}"))
}

fn criterion10() -> Outcome {
    let mut total = 0;
    let mut proper = 0;
    let mut bad = Vec::new();
    let mut bad_proper = 0;
    for (name, s) in corpus_schemes() {
        for inst in bridge_instances(&s) {
            total += 1;
            proper += usize::from(inst.r4_is_equivalence);
            let outcome = classify_type(&inst.digraph);
            let good = matches!(&outcome, Ok(c) if c.verdict != Verdict::TypeIII);
            bad_proper += usize::from(!good && inst.r4_is_equivalence);
            match outcome {
                Ok(_) if good => {}
                Ok(c) => bad.push(format!("{name} (R1,R3,R4) = ({},{},{}): {:?}", inst.r1, inst.r3, inst.r4, c.verdict)),
                Err(e) => bad.push(format!(
                    "{name} (R1,R3,R4) = ({},{},{}), R0∪R4 equivalence: {}: {e}",
                    inst.r1, inst.r3, inst.r4, inst.r4_is_equivalence
                )),
            }
        }
    }
    ensure!(total > 0, "no scheme meets the hypotheses");
    ensure!(
        bad.is_empty(),
        "{} of {total} labellings are not Type I/II; {bad_proper} of the {proper} with R0∪R4 an equivalence fail; first: {}",
        bad.len(),
        bad[0]
    );
    Ok(format!("{total} labellings, all Type I or II"))
}

fn main() -> ExitCode {
    let criteria: [(u8, &str, fn() -> Outcome, u64); 10] = [
        (1, "Cay(Z6,{1,2}) is a commutative WDRD in family 1", criterion1, 1),
        (2, "C4 tournament parameters and Type II", criterion2, 1),
        (3, "C3∘K̄2 classes, valencies and quotient", criterion3, 1),
        (4, "Paley7∘C4 is a WDRD with united classes", criterion4, 5),
        (5, "Cay(Z4,{1,2})∘K̄2 double regularity, Type I, family 2", criterion5, 1),
        (6, "matrix and counting routes agree", criterion6, 30),
        (7, "intersection-number identities", criterion7, 300),
        (8, "search to order 12: admissible T and identification", criterion8, 300),
        (9, "team counting identities and Δ", criterion9, 300),
        (10, "4-class bridge labellings are Type I or II", criterion10, 300),
    ];
    let mut failed = 0;
    for (id, title, run, limit) in criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let late = elapsed > Duration::from_secs(limit);
        let (status, detail) = match (&result, late) {
            (Ok(d), false) => ("PASS", d.clone()),
            (Ok(d), true) => ("FAIL", format!("{d}; exceeded {limit} s")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        failed += usize::from(status == "FAIL");
        println!("criterion {id:>2} {status} [{:.3} s] {title}: {detail}", elapsed.as_secs_f64());
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
