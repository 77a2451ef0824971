//! Cancellativity: no three distinct edges `A, B, C` with `B △ C ⊆ A`.
//!
//! For 3-edges the symmetric difference `B △ C` fits inside a 3-set only
//! when `|B ∩ C| = 2`, in which case it is the pair of non-shared vertices.
//! The scan therefore walks pairs of edges sharing two vertices and asks
//! whether the two leftover vertices lie together in some edge.

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::hypergraph::{Edge, UniformHypergraph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CancellativityReport {
    pub cancellative: bool,
    /// `(A, B, C)` with `B < C` and `B △ C ⊆ A`; present iff not cancellative.
    pub witness: Option<(Edge, Edge, Edge)>,
}

/// If `b` and `c` share exactly two vertices, the two vertices that are in
/// one but not the other, ascending.
pub(crate) fn sym_diff_pair(b: &Edge, c: &Edge) -> Option<(usize, usize)> {
    let only_b: Vec<usize> = b.iter().copied().filter(|x| !c.contains(x)).collect();
    if only_b.len() != 1 {
        return None;
    }
    let y = c.iter().copied().find(|x| !b.contains(x))?;
    let x = only_b[0];
    Some(if x < y { (x, y) } else { (y, x) })
}

/// Checks cancellativity and reports the lexicographically least witness
/// `(A, B, C)` (edge order, `B < C`) when there is one.
pub fn check_cancellative(g: &UniformHypergraph) -> CancellativityReport {
    let edges = g.edges();
    let mut best: Option<(Edge, Edge, Edge)> = None;
    for (i, b) in edges.iter().enumerate() {
        for c in &edges[i + 1..] {
            let Some((x, y)) = sym_diff_pair(b, c) else {
                continue;
            };
            // Least A containing both x and y; edges are sorted.
            if let Some(a) = edges.iter().find(|a| a.contains(&x) && a.contains(&y)) {
                let cand = (*a, *b, *c);
                if best.is_none_or(|cur| cand < cur) {
                    best = Some(cand);
                }
            }
        }
    }
    CancellativityReport {
        cancellative: best.is_none(),
        witness: best,
    }
}

/// Boolean form of [`check_cancellative`] that stops at the first witness.
pub fn is_cancellative(g: &UniformHypergraph) -> bool {
    let edges = g.edges();
    let shadow = PairCover::new(g);
    edges.iter().enumerate().all(|(i, b)| {
        edges[i + 1..].iter().all(|c| match sym_diff_pair(b, c) {
            Some((x, y)) => !shadow.covered(x, y),
            None => true,
        })
    })
}

/// Whether `g + e` is still cancellative, given that `g` is.
///
/// Any new violating triple must use `e`, either as the covering edge `A`
/// or as one of `B, C`.
pub fn extension_keeps_cancellative(g: &UniformHypergraph, e: &Edge) -> bool {
    let edges = g.edges();
    let cover = PairCover::new(g);
    // e as B (or C): partner edge f shares two vertices with e; the
    // leftover pair must not be covered by an old edge or by e itself
    // (e contains only one of the two, so only old edges matter).
    for f in edges {
        if let Some((x, y)) = sym_diff_pair(e, f) {
            if cover.covered(x, y) {
                return false;
            }
        }
    }
    // e as A: some old pair B, C with B △ C one of e's three pairs.
    let pairs = [(e[0], e[1]), (e[0], e[2]), (e[1], e[2])];
    for (i, b) in edges.iter().enumerate() {
        for c in &edges[i + 1..] {
            if let Some(p) = sym_diff_pair(b, c) {
                if pairs.contains(&p) {
                    return false;
                }
            }
        }
    }
    true
}

/// Pair coverage lookup for small vertex counts.
struct PairCover {
    n: usize,
    bits: Vec<bool>,
}

impl PairCover {
    fn new(g: &UniformHypergraph) -> Self {
        let n = g.n();
        let mut bits = vec![false; n * n];
        for &[a, b, c] in g.edges() {
            for (x, y) in [(a, b), (a, c), (b, c)] {
                bits[x * n + y] = true;
                bits[y * n + x] = true;
            }
        }
        Self { n, bits }
    }

    fn covered(&self, x: usize, y: usize) -> bool {
        self.bits[x * self.n + y]
    }
}

/// Whether the links of `u` and `v` share no pair.
pub fn links_edge_disjoint(g: &UniformHypergraph, u: usize, v: usize) -> Result<bool> {
    if u == v {
        return invalid("links_edge_disjoint needs two distinct vertices");
    }
    let lu = g.link(u)?;
    let lv = g.link(v)?;
    Ok(!lu.pairs.iter().any(|p| lv.pairs.binary_search(p).is_ok()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::turan3;

    fn hg(n: usize, e: &[[usize; 3]]) -> UniformHypergraph {
        UniformHypergraph::new(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn f4_is_not_cancellative() {
        let r = check_cancellative(&hg(4, &[[0, 1, 2], [0, 1, 3], [1, 2, 3]]));
        assert!(!r.cancellative);
        // 012 and 013 differ in {2,3}, covered by 123.
        assert_eq!(r.witness, Some(([0, 1, 2], [0, 1, 3], [1, 2, 3])));
    }

    #[test]
    fn f5_is_not_cancellative() {
        let r = check_cancellative(&hg(5, &[[0, 1, 2], [0, 1, 3], [2, 3, 4]]));
        assert!(!r.cancellative);
        let (a, b, c) = r.witness.unwrap();
        assert_eq!((a, b, c), ([2, 3, 4], [0, 1, 2], [0, 1, 3]));
    }

    #[test]
    fn turan_is_cancellative() {
        let r = check_cancellative(&turan3(9).unwrap());
        assert!(r.cancellative);
        assert!(r.witness.is_none());
        assert!(is_cancellative(&turan3(9).unwrap()));
    }

    #[test]
    fn single_edge_is_cancellative() {
        assert!(check_cancellative(&hg(3, &[[0, 1, 2]])).cancellative);
    }

    #[test]
    fn extension_check_matches_full_check() {
        let g = hg(5, &[[0, 1, 2], [0, 1, 3]]);
        assert!(!extension_keeps_cancellative(&g, &[2, 3, 4]));
        assert!(!extension_keeps_cancellative(&g, &[1, 2, 3]));
        assert!(extension_keeps_cancellative(&g, &[0, 1, 4]));
    }

    #[test]
    fn links_disjoint_examples() {
        let t = turan3(6).unwrap();
        assert!(links_edge_disjoint(&t, 0, 2).unwrap());

        let g = hg(4, &[[0, 1, 2], [0, 1, 3]]);
        assert!(!links_edge_disjoint(&g, 2, 3).unwrap());

        let g = hg(3, &[[0, 1, 2]]);
        assert!(links_edge_disjoint(&g, 0, 1).unwrap());
        assert!(links_edge_disjoint(&g, 0, 0).is_err());
        assert!(links_edge_disjoint(&g, 0, 3).is_err());
    }
}
