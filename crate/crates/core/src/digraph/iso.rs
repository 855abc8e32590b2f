//! Digraph isomorphism by individualization and colour refinement.
//!
//! Both digraphs are coloured jointly (as one disjoint union) so colour ids
//! are comparable across them. Initial colours come from out-degree,
//! in-degree and the multiset of two-way distances to all other vertices;
//! refinement splits colours by the multisets of out- and in-neighbour
//! colours until stable. The search individualizes one vertex of the
//! smallest non-singleton cell of `g` against each candidate of `h` and
//! refines again, so leaves are discrete colourings that fix the map.

use std::collections::BTreeMap;

use super::distance::distance_matrix;
use super::{Digraph, Vertex};
use crate::error::DigraphError;

/// `map[v]` is the image in `h` of vertex `v` of `g`.
pub type VertexMap = Vec<Vertex>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IsoConfig {
    pub max_vertices: usize,
    /// Upper bound on individualization steps.
    pub max_nodes: u64,
}

impl Default for IsoConfig {
    fn default() -> Self {
        Self { max_vertices: 128, max_nodes: 1_000_000 }
    }
}

/// Finds an arc-preserving bijection from `g` onto `h`, if one exists.
pub fn is_isomorphic(g: &Digraph, h: &Digraph) -> Result<Option<VertexMap>, DigraphError> {
    is_isomorphic_with(g, h, &IsoConfig::default())
}

pub fn is_isomorphic_with(g: &Digraph, h: &Digraph, cfg: &IsoConfig) -> Result<Option<VertexMap>, DigraphError> {
    let n = g.order();
    if n.max(h.order()) > cfg.max_vertices {
        return Err(DigraphError::IsoTooLarge { n: n.max(h.order()), limit: cfg.max_vertices });
    }
    if n != h.order() || g.arc_count() != h.arc_count() {
        return Ok(None);
    }
    let mut search = Search { g, h, n, nodes: 0, budget: cfg.max_nodes };
    let colors = search.refine(initial_colors(g, h));
    if !search.balanced(&colors) {
        return Ok(None);
    }
    search.descend(colors)
}

fn initial_colors(g: &Digraph, h: &Digraph) -> Vec<usize> {
    let invariant = |d: &Digraph| -> Vec<(usize, usize, Vec<(usize, usize)>)> {
        let dist = distance_matrix(d);
        (0..d.order())
            .map(|x| {
                let mut pairs: Vec<(usize, usize)> = (0..d.order()).map(|y| (dist[x][y], dist[y][x])).collect();
                pairs.sort_unstable();
                (d.out_degree(x), d.in_degree(x), pairs)
            })
            .collect()
    };
    let all: Vec<_> = invariant(g).into_iter().chain(invariant(h)).collect();
    canonical_ids(&all)
}

fn canonical_ids<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let mut ids: BTreeMap<K, usize> = keys.iter().map(|k| (k.clone(), 0)).collect();
    for (i, v) in ids.values_mut().enumerate() {
        *v = i;
    }
    keys.iter().map(|k| ids[k]).collect()
}

struct Search<'a> {
    g: &'a Digraph,
    h: &'a Digraph,
    n: usize,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn neighbors(&self, v: usize, out: bool) -> impl Iterator<Item = usize> + '_ {
        let (d, off, x) = if v < self.n { (self.g, 0, v) } else { (self.h, self.n, v - self.n) };
        let list = if out { d.out_neighbors(x) } else { d.in_neighbors(x) };
        list.iter().map(move |&y| y + off)
    }

    fn refine(&self, mut colors: Vec<usize>) -> Vec<usize> {
        let mut count = distinct(&colors);
        loop {
            let sigs: Vec<(usize, Vec<usize>, Vec<usize>)> = (0..2 * self.n)
                .map(|v| {
                    let mut outs: Vec<usize> = self.neighbors(v, true).map(|y| colors[y]).collect();
                    let mut ins: Vec<usize> = self.neighbors(v, false).map(|y| colors[y]).collect();
                    outs.sort_unstable();
                    ins.sort_unstable();
                    (colors[v], outs, ins)
                })
                .collect();
            colors = canonical_ids(&sigs);
            let next = distinct(&colors);
            if next == count {
                return colors;
            }
            count = next;
        }
    }

    fn balanced(&self, colors: &[usize]) -> bool {
        let mut tally = vec![0i64; 2 * self.n];
        for (v, &c) in colors.iter().enumerate() {
            tally[c] += if v < self.n { 1 } else { -1 };
        }
        tally.iter().all(|&t| t == 0)
    }

    fn descend(&mut self, colors: Vec<usize>) -> Result<Option<VertexMap>, DigraphError> {
        let n = self.n;
        let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..n {
            cells.entry(colors[v]).or_default().push(v);
        }
        let target = cells.iter().filter(|(_, vs)| vs.len() > 1).min_by_key(|(c, vs)| (vs.len(), **c));
        let Some((&cell, members)) = target else {
            return Ok(self.leaf(&colors));
        };
        let v = members[0];
        let fresh = colors.iter().max().map_or(0, |m| m + 1);
        for w in (n..2 * n).filter(|&w| colors[w] == cell) {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(DigraphError::IsoBudget(self.budget));
            }
            let mut next = colors.clone();
            next[v] = fresh;
            next[w] = fresh;
            let next = self.refine(next);
            if self.balanced(&next) {
                if let Some(map) = self.descend(next)? {
                    return Ok(Some(map));
                }
            }
        }
        Ok(None)
    }

    fn leaf(&self, colors: &[usize]) -> Option<VertexMap> {
        let n = self.n;
        let mut by_color = vec![usize::MAX; 2 * n];
        for w in n..2 * n {
            by_color[colors[w]] = w - n;
        }
        let map: VertexMap = (0..n).map(|v| by_color[colors[v]]).collect();
        let ok = (0..n).all(|x| (0..n).all(|y| self.g.has_arc(x, y) == self.h.has_arc(map[x], map[y])));
        ok.then_some(map)
    }
}

fn distinct(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}
