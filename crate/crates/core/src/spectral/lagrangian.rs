//! `λ^(1)(G)`: the maximum of `P_G` over the standard simplex, i.e. three
//! times the Lagrangian.
//!
//! Two routes are combined. Projected gradient ascent runs from the
//! barycenter and seeded Dirichlet starts. For `n <= 12` a support
//! enumeration also scores, for every vertex set `S` whose pairs are all
//! covered by edges inside `S`, the barycenter of `S` and the point reached
//! from it by the Baum–Eagon growth map restricted to `S`. The larger value
//! wins, and its vector is then pushed to a minimal support without losing
//! value (see [`minimize_support`]).

use super::form::accumulate_sums;
use super::simplex::{dirichlet, projected_ascent, projected_gradient_norm, start_rng};
use super::{Norm, SolverConfig, SpectralEstimate, WeightVector};
use crate::error::Result;
use crate::hypergraph::UniformHypergraph;

/// Vertex count up to which the support enumeration also runs.
pub const SUPPORT_ENUMERATION_MAX_N: usize = 12;

const GROWTH_ITERATIONS: usize = 5_000;

const VALUE_TIE: f64 = 1e-12;

fn value_and_grad(edges: &[[usize; 3]], x: &[f64], grad: &mut [f64]) -> f64 {
    accumulate_sums(edges, x, grad);
    let v: f64 = x.iter().zip(grad.iter()).map(|(a, b)| a * b).sum();
    grad.iter_mut().for_each(|g| *g *= 3.0);
    v
}

/// Pairs of `S` (as a bitmask) all lie in some edge contained in `S`.
fn support_mask_is_covered(edges: &[[usize; 3]], n: usize, mask: u32) -> bool {
    let mut covered = vec![0u32; n];
    for &[a, b, c] in edges {
        let em = (1 << a) | (1 << b) | (1 << c);
        if em & mask == em {
            covered[a] |= em;
            covered[b] |= em;
            covered[c] |= em;
        }
    }
    (0..n)
        .filter(|&v| mask & (1 << v) != 0)
        .all(|v| covered[v] | (1 << v) == mask)
}

/// Baum–Eagon map `x_i ← x_i ∂_i P / Σ_j x_j ∂_j P`; nondecreasing in `P`
/// for polynomials with nonnegative coefficients.
fn growth_map(edges: &[[usize; 3]], mut x: Vec<f64>) -> Vec<f64> {
    let mut s = vec![0.0; x.len()];
    for _ in 0..GROWTH_ITERATIONS {
        accumulate_sums(edges, &x, &mut s);
        let total: f64 = x.iter().zip(&s).map(|(a, b)| a * b).sum();
        if total <= 0.0 {
            break;
        }
        let mut delta: f64 = 0.0;
        for i in 0..x.len() {
            let next = x[i] * s[i] / total;
            delta = delta.max((next - x[i]).abs());
            x[i] = next;
        }
        if delta < 1e-15 {
            break;
        }
    }
    x
}

fn support_enumeration(g: &UniformHypergraph) -> (f64, Vec<f64>) {
    let n = g.n();
    let edges = g.edges();
    let mut best_value = 0.0;
    let mut best_x = vec![0.0; n];
    let mut grad = vec![0.0; n];
    for mask in 1u32..(1 << n) {
        if mask.count_ones() < 3 || !support_mask_is_covered(edges, n, mask) {
            continue;
        }
        let k = mask.count_ones() as f64;
        let bary: Vec<f64> = (0..n)
            .map(|v| if mask & (1 << v) != 0 { 1.0 / k } else { 0.0 })
            .collect();
        let grown = growth_map(edges, bary.clone());
        for cand in [bary, grown] {
            let v = value_and_grad(edges, &cand, &mut grad);
            if v > best_value {
                best_value = v;
                best_x = cand;
            }
        }
    }
    (best_value, best_x)
}

/// Moves weight between supported vertices that share no edge inside the
/// support until every supported pair is covered.
///
/// For such a pair `u, v`, `P` is affine along `x + t(e_u − e_v)`, so all
/// of one vertex's weight can go to the other without decreasing `P`.
pub fn minimize_support(g: &UniformHypergraph, x: &[f64]) -> Vec<f64> {
    let n = g.n();
    let mut x = x.to_vec();
    let mut s = vec![0.0; n];
    'outer: loop {
        let support: Vec<usize> = (0..n).filter(|&i| x[i] > 0.0).collect();
        for (i, &u) in support.iter().enumerate() {
            for &v in &support[i + 1..] {
                if pair_covered_in_support(g, &x, u, v) {
                    continue;
                }
                accumulate_sums(g.edges(), &x, &mut s);
                let (to, from) = if s[u] >= s[v] { (u, v) } else { (v, u) };
                x[to] += x[from];
                x[from] = 0.0;
                continue 'outer;
            }
        }
        return x;
    }
}

fn pair_covered_in_support(g: &UniformHypergraph, x: &[f64], u: usize, v: usize) -> bool {
    g.edges()
        .iter()
        .any(|e| e.contains(&u) && e.contains(&v) && e.iter().all(|&w| x[w] > 0.0))
}

/// Every pair of supported vertices lies in an edge of the subgraph
/// induced by the support.
pub fn support_cover_check(g: &UniformHypergraph, x: &WeightVector) -> bool {
    let x = x.entries();
    let support: Vec<usize> = (0..x.len()).filter(|&i| x[i] > 0.0).collect();
    support.iter().enumerate().all(|(i, &u)| {
        support[i + 1..]
            .iter()
            .all(|&v| pair_covered_in_support(g, x, u, v))
    })
}

/// `λ^(1)(G) = max { P_G(x) : x >= 0, Σ x = 1 }`.
///
/// `residual` holds the projected-gradient norm at the returned vector,
/// which has minimal support in the sense of [`support_cover_check`].
pub fn lagrangian_lambda1(g: &UniformHypergraph, cfg: &SolverConfig) -> Result<SpectralEstimate> {
    cfg.validate()?;
    let n = g.n();
    if g.is_empty() {
        return Ok(SpectralEstimate::zero(n, Norm::Simplex));
    }
    let edges = g.edges();
    let runs = cfg.exec.map_range(cfg.restarts, |k| {
        let start = if k == 0 {
            vec![1.0 / n as f64; n]
        } else {
            dirichlet(n, &mut start_rng(cfg.rng_seed, k))
        };
        projected_ascent(
            start,
            |x, grad| value_and_grad(edges, x, grad),
            cfg.tolerance,
            cfg.max_iterations,
        )
    });
    let mut grad = vec![0.0; n];
    let mut candidates: Vec<(f64, f64, Vec<f64>, usize)> = runs
        .into_iter()
        .map(|r| {
            let v = value_and_grad(edges, &r.x, &mut grad);
            (v, projected_gradient_norm(&r.x, &grad), r.x, r.iterations)
        })
        .collect();
    let restarts_used = candidates.len();
    if n <= SUPPORT_ENUMERATION_MAX_N {
        let (_, cand) = support_enumeration(g);
        let v = value_and_grad(edges, &cand, &mut grad);
        candidates.push((v, projected_gradient_norm(&cand, &grad), cand, 0));
    }
    // Values within VALUE_TIE of the best are rounding-level ties; among
    // them take the best-certified point.
    let top = candidates.iter().map(|c| c.0).fold(f64::MIN, f64::max);
    let (_, _, x, iterations) = candidates
        .into_iter()
        .filter(|c| c.0 >= top - VALUE_TIE)
        .min_by(|a, b| a.1.total_cmp(&b.1))
        .expect("at least one candidate");
    let value = top - VALUE_TIE;

    let x = minimize_support(g, &x);
    let lambda = value_and_grad(edges, &x, &mut grad);
    debug_assert!(lambda >= value - 1e-12);
    let residual = projected_gradient_norm(&x, &grad);
    Ok(SpectralEstimate {
        lambda,
        vector: WeightVector::from_raw(x, Norm::Simplex),
        residual,
        iterations,
        restarts_used,
        converged: residual <= cfg.tolerance,
    })
}
