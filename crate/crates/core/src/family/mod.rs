//! The five families of semicomplete multipartite commutative weakly
//! distance-regular digraphs, a catalog of named bases, and recognition.
//!
//! 1. `Cay(Z6, {1,2}) ∘ K̄_n`
//! 2. `Σ ∘ K̄_l`, `Σ` a semicomplete commutative WDRD of girth 2 or 3, `l ≥ 2`
//! 3. `(Σ ∘ C4) ∘ K̄_n`, `Σ` a semicomplete WDRD of girth 3
//! 4. `D ∘ K̄_n`, `D` a doubly regular `(k,l)`-team tournament of Type II
//!    with parameters `((k−2)l/4, (k−2)l/4, l²(k−1)/(4(l−1)))`
//! 5. a doubly regular team semicomplete multipartite digraph of Type II

mod catalog;
mod identify;

pub use catalog::{builtin, builtin_digraph, catalog_name, paley, Builtin, CATALOG};
pub use identify::{identify, FamilyMatch, FamilyParams};

use crate::digraph::{coclique_extension, girth, lexicographic_product, multipartite_structure, Digraph};
use crate::error::Error;
use crate::team::{classify_type, jg14_type2_check, team_structure, tournament_params, type2_formula, Verdict};
use crate::wdrd::verify_wdrd;

fn require(ok: bool, what: &str) -> Result<(), Error> {
    if ok {
        Ok(())
    } else {
        Err(Error::Validation(what.to_string()))
    }
}

/// Every family member is a semicomplete multipartite commutative WDRD.
fn finish(family: u8, g: Digraph) -> Result<Digraph, Error> {
    let r = verify_wdrd(&g);
    if !(r.is_wdrd && r.is_commutative) {
        return Err(Error::TheoremViolation(format!("family {family} output is not a commutative weakly distance-regular digraph")));
    }
    match multipartite_structure(&g) {
        Ok(s) if s.is_multipartite() => Ok(g),
        _ => Err(Error::TheoremViolation(format!("family {family} output is not semicomplete multipartite"))),
    }
}

fn positive(n: usize) -> Result<(), Error> {
    if n == 0 {
        Err(Error::Precondition("n ≥ 1 required".into()))
    } else {
        Ok(())
    }
}

/// Checks that `sigma` is a semicomplete WDRD with girth in `girths`; also
/// commutative when `commutative` is set.
fn check_semicomplete_base(sigma: &Digraph, girths: &[usize], commutative: bool) -> Result<usize, Error> {
    require(sigma.is_semicomplete(), "base is not semicomplete")?;
    let r = verify_wdrd(sigma);
    require(r.is_wdrd, "base is not weakly distance-regular")?;
    require(!commutative || r.is_commutative, "base is not commutative")?;
    let gi = girth(sigma)?;
    require(girths.contains(&gi), &format!("base girth {gi} not in {girths:?}"))?;
    Ok(gi)
}

pub fn family1(n: usize) -> Result<Digraph, Error> {
    positive(n)?;
    finish(1, coclique_extension(&builtin_digraph("cay_z6_12")?, n)?)
}

pub fn family2(l: usize, sigma: &Digraph) -> Result<Digraph, Error> {
    if l < 2 {
        return Err(Error::Precondition("l ≥ 2 required".into()));
    }
    check_semicomplete_base(sigma, &[2, 3], true)?;
    finish(2, coclique_extension(sigma, l)?)
}

pub fn family3(n: usize, sigma: &Digraph) -> Result<Digraph, Error> {
    positive(n)?;
    check_semicomplete_base(sigma, &[3], false)?;
    let product = lexicographic_product(sigma, &Digraph::cycle(4)?);
    finish(3, coclique_extension(&product, n)?)
}

/// Validates a family 4 base and returns its team shape `(k, l)`.
pub fn check_family4_base(d: &Digraph) -> Result<(usize, usize), Error> {
    let params = tournament_params(d).map_err(|e| Error::Validation(format!("tournament parameters: {e}")))?;
    let (_, k, l) = team_structure(d)?;
    let expected = type2_formula(k, l).map_err(|e| Error::Validation(format!("parameter formula: {e}")))?;
    require(params == expected, &format!("parameters {params:?} differ from {expected:?}"))?;
    require(jg14_type2_check(d)?, "tournament is not of Type II")?;
    Ok((k, l))
}

pub fn family4(n: usize, d: &Digraph) -> Result<Digraph, Error> {
    positive(n)?;
    check_family4_base(d)?;
    finish(4, coclique_extension(d, n)?)
}

/// Validates a family 5 member: doubly regular, Type II and weakly
/// distance-regular.
pub fn check_family5(d: &Digraph) -> Result<(), Error> {
    let c = classify_type(d).map_err(|e| match e {
        Error::TheoremViolation(_) => e,
        other => Error::Validation(format!("double regularity: {other}")),
    })?;
    require(c.verdict == Verdict::TypeII, "not of Type II")?;
    require(verify_wdrd(d).is_wdrd, "not weakly distance-regular")
}

pub fn family5(d: &Digraph) -> Result<Digraph, Error> {
    check_family5(d)?;
    finish(5, d.clone())
}
