//! Damped nonlinear power iteration on the eigenequations.
//!
//! One step from `x` on the unit ℓ^p sphere:
//!
//! ```text
//! s_i = Σ_{ijk ∈ E} x_j x_k
//! y_i = ((1 − γ) λ x_i^(p−1) + γ s_i)^(1/(p−1))
//! x   = y / ‖y‖_p
//! ```
//!
//! with `λ = P_G(x) = Σ_i x_i s_i`. A fixed point with `x_i > 0` satisfies
//! `λ x_i^(p−1) = s_i`. Iterates stay in the nonnegative orthant. A step
//! that lowers `P_G` is replaced by a shorter multiplicative step (for
//! `p < 2` the plain map is expansive and can collapse onto a vertex). A
//! run stops once the eigen-residual drops to the tolerance.

use super::form::{accumulate_sums, residual_from_sums};
use super::simplex::{dirichlet, start_rng};
use super::{p_norm, Norm, SolverConfig, SpectralEstimate, WeightVector};
use crate::error::{invalid, Result};
use crate::hypergraph::UniformHypergraph;

/// Consecutive iterations with `s_i = 0` after which a vertex is pinned
/// at zero.
const FREEZE_AFTER: usize = 50;

/// Entries this far below the largest one are flushed to zero (they are
/// not frozen and come back if `s_i` turns positive).
const FLUSH_RATIO: f64 = 1e-150;

struct Run {
    x: Vec<f64>,
    lambda: f64,
    residual: f64,
    iterations: usize,
    converged: bool,
}

fn normalize(x: &mut [f64], p: f64) -> bool {
    let len = p_norm(x, p);
    if !(len > 0.0) || !len.is_finite() {
        return false;
    }
    x.iter_mut().for_each(|v| *v /= len);
    true
}

/// Relative drop in `P` below the best value so far that a step may
/// cause. Near a critical point the gain in `P` is quadratic in the
/// residual and vanishes under rounding, so steps that keep `P` within
/// this slack are judged by the residual instead.
const ASCENT_SLACK: f64 = 1e-14;

/// Halvings of the multiplicative step before a run gives up.
const MAX_HALVINGS: usize = 60;

fn lambda_of(g: &UniformHypergraph, x: &[f64], s: &mut [f64]) -> f64 {
    accumulate_sums(g.edges(), x, s);
    x.iter().zip(s.iter()).map(|(a, b)| a * b).sum()
}

/// Power step from `x`; zero entries with `s_i > 0` come back.
#[allow(clippy::too_many_arguments)]
fn power_step(
    x: &[f64],
    s: &[f64],
    lambda: f64,
    p: f64,
    gamma: f64,
    zero_streak: &mut [usize],
    frozen: &mut [bool],
) -> Option<Vec<f64>> {
    let inv = 1.0 / (p - 1.0);
    let mut y = vec![0.0; x.len()];
    for i in 0..x.len() {
        if frozen[i] {
            continue;
        }
        if s[i] == 0.0 {
            zero_streak[i] += 1;
            if zero_streak[i] >= FREEZE_AFTER {
                frozen[i] = true;
                continue;
            }
        } else {
            zero_streak[i] = 0;
        }
        let base = (1.0 - gamma) * lambda * x[i].powf(p - 1.0) + gamma * s[i];
        y[i] = base.powf(inv);
    }
    let top = y.iter().copied().fold(0.0, f64::max);
    if !(top > 0.0) || !top.is_finite() {
        return None;
    }
    for v in y.iter_mut() {
        if *v < top * FLUSH_RATIO {
            *v = 0.0;
        }
    }
    normalize(&mut y, p).then_some(y)
}

/// `x_i ← x_i r_i^β` with `r_i = s_i / (λ x_i^(p−1))`. To first order
/// this is the power step with `β = γ/(p−1)`; the direction `x_i log r_i`
/// has nonnegative inner product with the tangential gradient of `P`, so
/// a small enough `β` ascends.
fn multiplicative_step(x: &[f64], s: &[f64], lambda: f64, p: f64, beta: f64) -> Option<Vec<f64>> {
    let mut y: Vec<f64> = x
        .iter()
        .zip(s)
        .map(|(&xi, &si)| {
            if xi == 0.0 {
                0.0
            } else {
                xi * (si / (lambda * xi.powf(p - 1.0))).powf(beta)
            }
        })
        .collect();
    normalize(&mut y, p).then_some(y)
}

fn run_from(g: &UniformHypergraph, cfg: &SolverConfig, mut x: Vec<f64>) -> Run {
    let n = g.n();
    let p = cfg.p;
    let gamma = cfg.gamma();
    let beta_max = gamma / (p - 1.0);
    let mut beta = beta_max;
    let mut s = vec![0.0; n];
    let mut s_next = vec![0.0; n];
    let mut zero_streak = vec![0usize; n];
    let mut frozen = vec![false; n];
    normalize(&mut x, p);
    let mut lambda = lambda_of(g, &x, &mut s);
    let mut best = lambda;
    let mut residual = residual_from_sums(&x, &s, p, lambda);

    let mut iterations = 0;
    loop {
        if residual <= cfg.tolerance || iterations >= cfg.max_iterations {
            return Run {
                x,
                lambda,
                residual,
                iterations,
                converged: residual <= cfg.tolerance,
            };
        }
        iterations += 1;
        // Try the full power step while it behaves, then shorter
        // multiplicative steps.
        let mut accepted = None;
        if beta >= beta_max {
            if let Some(y) = power_step(&x, &s, lambda, p, gamma, &mut zero_streak, &mut frozen)
            {
                let value = lambda_of(g, &y, &mut s_next);
                let res = residual_from_sums(&y, &s_next, p, value);
                if value > best || (value >= best * (1.0 - ASCENT_SLACK) && res < residual) {
                    accepted = Some((y, value, res));
                } else {
                    beta = 0.5 * beta_max;
                }
            }
        }
        let mut halvings = 0;
        while accepted.is_none() && halvings < MAX_HALVINGS {
            if let Some(y) = multiplicative_step(&x, &s, lambda, p, beta) {
                let value = lambda_of(g, &y, &mut s_next);
                let res = residual_from_sums(&y, &s_next, p, value);
                if value > best || (value >= best * (1.0 - ASCENT_SLACK) && res < residual) {
                    accepted = Some((y, value, res));
                    beta = (2.0 * beta).min(beta_max);
                    break;
                }
            }
            beta *= 0.5;
            halvings += 1;
        }
        let Some((y, value, res)) = accepted else {
            // No step improves anything: stalled.
            return Run {
                x,
                lambda,
                residual,
                iterations,
                converged: false,
            };
        };
        x = y;
        lambda = value;
        residual = res;
        best = best.max(value);
        std::mem::swap(&mut s, &mut s_next);
    }
}

fn start_vector(n: usize, cfg: &SolverConfig, k: usize) -> Vec<f64> {
    if k == 0 {
        vec![1.0; n]
    } else {
        dirichlet(n, &mut start_rng(cfg.rng_seed, k))
    }
}

/// Picks the winner: largest λ among converged runs (lower index on ties),
/// or the largest λ overall when none converged.
fn select(runs: &[Run]) -> usize {
    let best_among = |want_converged: bool| {
        let mut best: Option<usize> = None;
        for (i, r) in runs.iter().enumerate() {
            if want_converged && !r.converged {
                continue;
            }
            if best.is_none_or(|b| r.lambda > runs[b].lambda) {
                best = Some(i);
            }
        }
        best
    };
    best_among(true).or_else(|| best_among(false)).unwrap_or(0)
}

/// `λ^(p)(G)` for `p > 1` by multi-start damped power iteration.
///
/// The result is the best critical value found; `converged` certifies the
/// eigenequations at the returned vector to `cfg.tolerance`, not global
/// optimality.
pub fn solve_p_spectral(g: &UniformHypergraph, cfg: &SolverConfig) -> Result<SpectralEstimate> {
    cfg.validate()?;
    if !(cfg.p > 1.0) {
        return invalid(format!(
            "power iteration needs p > 1 (got {}); use the Lagrangian path for p = 1",
            cfg.p
        ));
    }
    let n = g.n();
    let norm = Norm::Sphere(cfg.p);
    if g.is_empty() {
        return Ok(SpectralEstimate::zero(n, norm));
    }
    let runs: Vec<Run> = cfg
        .exec
        .map_range(cfg.restarts, |k| run_from(g, cfg, start_vector(n, cfg, k)));
    let best = select(&runs);
    let run = &runs[best];
    Ok(SpectralEstimate {
        lambda: run.lambda,
        vector: WeightVector::from_raw(run.x.clone(), norm),
        residual: run.residual,
        iterations: run.iterations,
        restarts_used: runs.len(),
        converged: run.converged,
    })
}
