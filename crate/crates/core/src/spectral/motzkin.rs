//! Motzkin–Straus: `max_{x ∈ Δ} Σ_{uv ∈ E} x_u x_v = (1 − 1/ω)/2`.

use super::simplex::{dirichlet, projected_ascent, start_rng};
use super::SolverConfig;
use crate::error::{Error, Result};
use crate::hypergraph::SimpleGraph;

/// Vertex limit for the brute-force clique number.
pub const CLIQUE_MAX_N: usize = 12;

/// Clique number by branch and bound over bitmasks (`n <= 12`).
pub fn clique_number(h: &SimpleGraph) -> Result<usize> {
    let n = h.n();
    if n > CLIQUE_MAX_N {
        return Err(Error::UnsupportedSize {
            what: "n",
            value: n,
            supported: "n <= 12 for the brute-force clique number",
        });
    }
    let mut adj = vec![0u32; n];
    for &(a, b) in h.edges() {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    fn expand(adj: &[u32], size: usize, mut cand: u32, best: &mut usize) {
        if cand == 0 {
            *best = (*best).max(size);
            return;
        }
        while cand != 0 {
            if size + cand.count_ones() as usize <= *best {
                return;
            }
            let v = cand.trailing_zeros() as usize;
            cand &= !(1 << v);
            expand(adj, size + 1, cand & adj[v], best);
        }
    }
    let mut best = 0;
    let all = if n == 0 { 0 } else { (1u32 << n) - 1 };
    expand(&adj, 0, all, &mut best);
    Ok(best)
}

/// `(1 − 1/ω)/2`, or 0 for the graph with no vertices.
pub fn motzkin_straus_target(omega: usize) -> f64 {
    if omega == 0 {
        0.0
    } else {
        (1.0 - 1.0 / omega as f64) / 2.0
    }
}

/// Simplex maximum of the edge quadratic form, by projected gradient
/// ascent from the barycenter, from the barycenter of every closed
/// neighborhood, and from `cfg.restarts - 1` seeded Dirichlet draws.
pub fn motzkin_straus(h: &SimpleGraph, cfg: &SolverConfig) -> Result<f64> {
    cfg.validate()?;
    let n = h.n();
    if h.edge_count() == 0 {
        return Ok(0.0);
    }
    let adj = h.adjacency_lists();
    let mut starts: Vec<Vec<f64>> = vec![vec![1.0 / n as f64; n]];
    for (v, nb) in adj.iter().enumerate() {
        let mut x = vec![0.0; n];
        x[v] = 1.0;
        for &u in nb {
            x[u] = 1.0;
        }
        let k = (nb.len() + 1) as f64;
        x.iter_mut().for_each(|w| *w /= k);
        starts.push(x);
    }
    for k in 1..cfg.restarts {
        starts.push(dirichlet(n, &mut start_rng(cfg.rng_seed, k)));
    }
    let edges = h.edges();
    let values = cfg.exec.map(&starts, |start| {
        projected_ascent(
            start.clone(),
            |x, grad| {
                grad.iter_mut().for_each(|g| *g = 0.0);
                let mut v = 0.0;
                for &(a, b) in edges {
                    v += x[a] * x[b];
                    grad[a] += x[b];
                    grad[b] += x[a];
                }
                v
            },
            cfg.tolerance,
            cfg.max_iterations,
        )
        .value
    });
    Ok(values.into_iter().fold(0.0, f64::max))
}
