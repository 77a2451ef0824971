//! The switching operation `T_v^u`.

use crate::error::{invalid, Result};
use crate::hypergraph::UniformHypergraph;

/// `T_v^u(G)`: drop every edge at `v`, then for each edge at `u` that
/// misses `v`, add a copy with `u` replaced by `v`.
///
/// Afterwards `u` and `v` are non-adjacent and `v` has the link `u` had
/// (minus pairs containing `v`).
pub fn switch(g: &UniformHypergraph, u: usize, v: usize) -> Result<UniformHypergraph> {
    let n = g.n();
    if u == v {
        return invalid("switch needs u != v");
    }
    if u >= n || v >= n {
        return invalid(format!("switch vertices ({u}, {v}) outside 0..{n}"));
    }
    let kept = g.edges().iter().filter(|e| !e.contains(&v)).copied();
    let cloned = g
        .edges()
        .iter()
        .filter(|e| e.contains(&u) && !e.contains(&v))
        .map(|e| e.map(|x| if x == u { v } else { x }));
    // Images contain v and kept edges do not, so no duplicates arise.
    UniformHypergraph::new(n, kept.chain(cloned))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clone_into_isolated_vertex() {
        let g = UniformHypergraph::new(4, [[0, 1, 2]]).unwrap();
        let h = switch(&g, 0, 3).unwrap();
        assert_eq!(h.edges(), &[[0, 1, 2], [1, 2, 3]]);
    }

    #[test]
    fn switching_from_isolated_vertex_clears_target() {
        let g = UniformHypergraph::new(4, [[0, 1, 2]]).unwrap();
        let h = switch(&g, 3, 0).unwrap();
        assert!(h.is_empty());
        assert_eq!(h.n(), 4);
    }

    #[test]
    fn rejects_equal_vertices() {
        let g = UniformHypergraph::new(4, [[0, 1, 2]]).unwrap();
        assert!(switch(&g, 1, 1).is_err());
        assert!(switch(&g, 1, 4).is_err());
    }

    #[test]
    fn result_has_u_v_nonadjacent() {
        let g = UniformHypergraph::new(5, [[0, 1, 2], [0, 3, 4], [1, 3, 4]]).unwrap();
        let h = switch(&g, 0, 1).unwrap();
        assert!(!h.adjacent(0, 1));
        assert_eq!(h.edges(), &[[0, 3, 4], [1, 3, 4]]);
    }
}
