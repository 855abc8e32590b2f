//! The named digraphs shipped with the crate: catalog entries, family
//! members and a few non-examples.

use crate::digraph::{build_digraph, cayley, cayley_cyclic, coclique_extension, Digraph};
use crate::error::Error;
use crate::family::{builtin_digraph, family1, family2, family3, family4, family5};

/// `(name, digraph)` pairs in a fixed order.
pub fn corpus() -> Result<Vec<(String, Digraph)>, Error> {
    let mut out: Vec<(String, Digraph)> = Vec::new();
    let mut add = |name: String, g: Digraph| out.push((name, g));
    for name in ["c3", "c4", "cay_z6_12", "cay_z4_12", "paley3", "paley7", "paley11", "complete2", "complete3"] {
        add(name.to_string(), builtin_digraph(name)?);
    }
    for n in 1..=5 {
        add(format!("family1(n={n})"), family1(n)?);
    }
    for (base, ls) in [("c3", 2..=4), ("cay_z4_12", 2..=4), ("paley7", 2..=3), ("paley11", 2..=2)] {
        for l in ls {
            add(format!("family2(l={l},{base})"), family2(l, &builtin_digraph(base)?)?);
        }
    }
    for (base, ns) in [("c3", 1..=2), ("paley7", 1..=1), ("paley11", 1..=1)] {
        for n in ns {
            add(format!("family3(n={n},{base})"), family3(n, &builtin_digraph(base)?)?);
        }
    }
    for n in 1..=4 {
        add(format!("family4(n={n},c4)"), family4(n, &builtin_digraph("c4")?)?);
    }
    add("family5(c4)".into(), family5(&builtin_digraph("c4")?)?);
    add("five_arc".into(), build_digraph(4, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])?);
    add("cay_z8_123".into(), cayley_cyclic(8, &[1, 2, 3])?);
    add("cay_z2z4".into(), cayley(&[2, 4], &[vec![0, 1], vec![1, 0], vec![1, 1]])?);
    add("complete3_ext2".into(), coclique_extension(&Digraph::complete(3)?, 2)?);
    for m in 5..=8 {
        add(format!("cycle{m}"), Digraph::cycle(m)?);
    }
    Ok(out)
}
