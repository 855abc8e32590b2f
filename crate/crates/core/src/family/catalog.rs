use crate::digraph::{cayley_cyclic, is_isomorphic, Digraph};
use crate::error::Error;
use crate::wdrd::{verify_wdrd, WdrdReport};

/// A named digraph with its verification report.
#[derive(Debug, Clone)]
pub struct Builtin {
    pub name: String,
    pub digraph: Digraph,
    pub report: WdrdReport,
}

/// Fixed names tried, in order, when naming a recovered base.
pub const CATALOG: [&str; 8] = ["c3", "c4", "cay_z6_12", "cay_z4_12", "paley7", "paley11", "complete2", "complete3"];

fn is_prime(q: usize) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// The Paley tournament on `Z_q` with the nonzero squares as connection set.
pub fn paley(q: usize) -> Result<Digraph, Error> {
    if !is_prime(q) || q % 4 != 3 {
        return Err(Error::Precondition(format!("paley needs a prime q ≡ 3 (mod 4), got {q}")));
    }
    let mut residues: Vec<usize> = (1..q).map(|x| x * x % q).collect();
    residues.sort_unstable();
    residues.dedup();
    Ok(cayley_cyclic(q, &residues)?)
}

pub fn builtin_digraph(name: &str) -> Result<Digraph, Error> {
    let unknown = || Error::UnknownBuiltin(name.to_string());
    let g = match name {
        "c3" => Digraph::cycle(3)?,
        "c4" => Digraph::cycle(4)?,
        "cay_z6_12" => cayley_cyclic(6, &[1, 2])?,
        "cay_z4_12" => cayley_cyclic(4, &[1, 2])?,
        _ => {
            if let Some(q) = name.strip_prefix("paley") {
                paley(q.parse().map_err(|_| unknown())?)?
            } else if let Some(m) = name.strip_prefix("complete") {
                let m: usize = m.parse().map_err(|_| unknown())?;
                if m < 2 {
                    return Err(Error::Precondition("complete digraph needs m ≥ 2".into()));
                }
                Digraph::complete(m)?
            } else {
                return Err(unknown());
            }
        }
    };
    Ok(g)
}

pub fn builtin(name: &str) -> Result<Builtin, Error> {
    let digraph = builtin_digraph(name)?;
    let report = verify_wdrd(&digraph);
    Ok(Builtin { name: name.to_string(), digraph, report })
}

/// The first catalog name whose digraph is isomorphic to `g`.
pub fn catalog_name(g: &Digraph) -> Result<Option<&'static str>, Error> {
    for name in CATALOG {
        let h = builtin_digraph(name)?;
        if h.order() == g.order() && h.arc_count() == g.arc_count() && is_isomorphic(g, &h)?.is_some() {
            return Ok(Some(name));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::two_way_partition;

    #[test]
    fn names() {
        assert_eq!(builtin_digraph("c4").unwrap(), cayley_cyclic(4, &[1]).unwrap());
        assert_eq!(builtin_digraph("paley3").unwrap(), Digraph::cycle(3).unwrap());
        assert!(matches!(builtin_digraph("paley5"), Err(Error::Precondition(_))));
        assert!(matches!(builtin_digraph("paley15"), Err(Error::Precondition(_))));
        assert!(matches!(builtin_digraph("nope"), Err(Error::UnknownBuiltin(_))));
        assert!(matches!(builtin_digraph("completex"), Err(Error::UnknownBuiltin(_))));
    }

    #[test]
    fn paley7() {
        let b = builtin("paley7").unwrap();
        assert_eq!(b.digraph, cayley_cyclic(7, &[1, 2, 4]).unwrap());
        assert_eq!(two_way_partition(&b.digraph).unwrap().labels(), &[(0, 0), (1, 2), (2, 1)]);
        assert!(b.report.is_wdrd);
    }

    #[test]
    fn catalog_lookup() {
        let g = Digraph::cycle(4).unwrap().relabel(&[2, 0, 3, 1]);
        assert_eq!(catalog_name(&g).unwrap(), Some("c4"));
        assert_eq!(catalog_name(&Digraph::cycle(5).unwrap()).unwrap(), None);
    }
}
