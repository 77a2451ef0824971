//! Simplex geometry shared by the `p = 1` and Motzkin–Straus paths, plus
//! the seeded start generator.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Exp1};

/// Euclidean projection onto `{x >= 0, Σ x = 1}` (sort-and-threshold).
pub fn project_to_simplex(y: &[f64]) -> Vec<f64> {
    if y.is_empty() {
        return Vec::new();
    }
    let mut u = y.to_vec();
    u.sort_unstable_by(|a, b| b.total_cmp(a));
    let mut cum = 0.0;
    let mut theta = 0.0;
    for (j, &uj) in u.iter().enumerate() {
        cum += uj;
        let t = (cum - 1.0) / (j + 1) as f64;
        if uj - t > 0.0 {
            theta = t;
        }
    }
    let mut x: Vec<f64> = y.iter().map(|&v| (v - theta).max(0.0)).collect();
    // For large inputs `cum − 1` cancels; restore the unit sum exactly.
    let total: f64 = x.iter().sum();
    if total > 0.0 {
        x.iter_mut().for_each(|v| *v /= total);
    }
    x
}

/// Seeded generator used wherever the crate draws random choices.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent generator for start `k` under `seed`; the stream depends
/// only on `(seed, k)`, not on scheduling.
pub(crate) fn start_rng(seed: u64, k: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(k as u64);
    rng
}

/// Draw from the flat Dirichlet distribution on the `n`-simplex.
pub(crate) fn dirichlet(n: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    let mut x: Vec<f64> = (0..n).map(|_| Exp1.sample(rng)).collect();
    let s: f64 = x.iter().sum();
    x.iter_mut().for_each(|v| *v /= s);
    x
}

/// `‖Π(x + ∇f(x)) − x‖_∞`: zero exactly at KKT points of `max f` on the
/// simplex.
pub(crate) fn projected_gradient_norm(x: &[f64], grad: &[f64]) -> f64 {
    let y: Vec<f64> = x.iter().zip(grad).map(|(a, g)| a + g).collect();
    project_to_simplex(&y)
        .iter()
        .zip(x)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max)
}

pub(crate) struct AscentResult {
    pub x: Vec<f64>,
    pub value: f64,
    pub iterations: usize,
}

/// Relative drop below the best value so far tolerated on a step that
/// shrinks the projected gradient (see [`projected_ascent`]).
const TIE_SLACK: f64 = 1e-15;

/// Iterations without a new best value or a new smallest projected
/// gradient after which a run stops.
const STALL_LIMIT: usize = 100;

/// A run whose value gains less than `SLOW_GAIN` (relative) over
/// `SLOW_WINDOW` iterations is creeping along a degenerate maximum and
/// stops.
const SLOW_WINDOW: usize = 1_000;
const SLOW_GAIN: f64 = 1e-10;

/// Projected gradient ascent with Armijo backtracking.
///
/// Close to a maximizer the Armijo gain falls below rounding, so a step
/// is also accepted when the value stays within rounding of the best seen
/// and the projected-gradient norm shrinks. A run that improves neither
/// the best value nor the smallest projected gradient for a while stops,
/// and so does one whose value has all but stopped growing.
///
/// `eval(x, grad)` writes the gradient and returns the objective.
pub(crate) fn projected_ascent<F>(
    start: Vec<f64>,
    mut eval: F,
    tol: f64,
    max_iter: usize,
) -> AscentResult
where
    F: FnMut(&[f64], &mut [f64]) -> f64,
{
    let n = start.len();
    let mut x = project_to_simplex(&start);
    let mut grad = vec![0.0; n];
    let mut trial_grad = vec![0.0; n];
    let mut value = eval(&x, &mut grad);
    let mut best = value;
    let mut step = 1.0;
    let mut iterations = 0;
    let mut pg_norm = projected_gradient_norm(&x, &grad);
    let mut best_pg = pg_norm;
    let mut stalled = 0;
    let mut window_start = value;
    while pg_norm > tol && iterations < max_iter && stalled < STALL_LIMIT {
        iterations += 1;
        let mut accepted = false;
        for _ in 0..60 {
            let y: Vec<f64> = x.iter().zip(&grad).map(|(a, g)| a + step * g).collect();
            let cand = project_to_simplex(&y);
            if cand == x {
                step *= 0.5;
                continue;
            }
            let dir: f64 = cand.iter().zip(&x).zip(&grad).map(|((c, a), g)| (c - a) * g).sum();
            let cand_value = eval(&cand, &mut trial_grad);
            let armijo = cand_value > value && cand_value >= value + 1e-4 * dir;
            let cand_pg = projected_gradient_norm(&cand, &trial_grad);
            let tie = cand_value >= best - TIE_SLACK * best.abs().max(1.0) && cand_pg < pg_norm;
            if armijo || tie {
                if cand_value > best || cand_pg < 0.99 * best_pg {
                    stalled = 0;
                } else {
                    stalled += 1;
                }
                best_pg = best_pg.min(cand_pg);
                x = cand;
                value = cand_value;
                best = best.max(value);
                pg_norm = cand_pg;
                std::mem::swap(&mut grad, &mut trial_grad);
                accepted = true;
                step = (step * 2.0).min(1e6);
                break;
            }
            step *= 0.5;
        }
        if !accepted {
            break;
        }
        if iterations % SLOW_WINDOW == 0 {
            if value - window_start < SLOW_GAIN * value.abs().max(1.0) {
                break;
            }
            window_start = value;
        }
    }
    AscentResult {
        x,
        value,
        iterations,
    }
}
