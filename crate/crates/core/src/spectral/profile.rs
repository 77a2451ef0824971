//! `f_G(p) = (λ^(p)(G) / (3m))^p` over a grid of exponents.

use serde::{Deserialize, Serialize};

use super::{solve_p_spectral, SolverConfig};
use crate::error::{invalid, Result};
use crate::hypergraph::UniformHypergraph;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ProfilePoint {
    pub p: f64,
    pub lambda: f64,
    pub f: f64,
    pub converged: bool,
}

pub fn f_value(lambda: f64, m: usize, p: f64) -> f64 {
    (lambda / (3.0 * m as f64)).powf(p)
}

/// `λ^(p)` and `f_G(p)` at each grid point. The grid must be strictly
/// increasing with every `p > 1`, and `G` needs an edge.
pub fn spectral_profile(
    g: &UniformHypergraph,
    p_grid: &[f64],
    cfg: &SolverConfig,
) -> Result<Vec<ProfilePoint>> {
    let m = g.edge_count();
    if m == 0 {
        return invalid("f_G(p) is undefined for a graph without edges");
    }
    if p_grid.is_empty() {
        return invalid("empty p grid");
    }
    if p_grid.iter().any(|&p| !(p > 1.0) || !p.is_finite()) {
        return invalid("every grid exponent must be a finite real > 1");
    }
    if p_grid.windows(2).any(|w| !(w[0] < w[1])) {
        return invalid("p grid must be strictly increasing");
    }
    let points = cfg.exec.map(p_grid, |&p| -> Result<ProfilePoint> {
        let est = solve_p_spectral(g, &cfg.with_p(p))?;
        Ok(ProfilePoint {
            p,
            lambda: est.lambda,
            f: f_value(est.lambda, m, p),
            converged: est.converged,
        })
    });
    points.into_iter().collect()
}

/// Each `f` is at most the previous one times `1 + rel_slack`.
pub fn profile_is_nonincreasing(points: &[ProfilePoint], rel_slack: f64) -> bool {
    points
        .windows(2)
        .all(|w| w[1].f <= w[0].f * (1.0 + rel_slack))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::turan3;

    #[test]
    fn tripartite_profile_is_flat() {
        let g = turan3(6).unwrap();
        let pts = spectral_profile(&g, &[2.0, 3.0, 4.0], &SolverConfig::new(2.0)).unwrap();
        for pt in &pts {
            assert!(pt.converged);
            assert!((pt.f - 1.0 / 216.0).abs() < 1e-9, "{pt:?}");
        }
    }

    #[test]
    fn isolated_vertex_does_not_change_profile() {
        let a = turan3(3).unwrap();
        let b = a.pad_to(4).unwrap();
        let cfg = SolverConfig::new(2.0);
        let pa = spectral_profile(&a, &[2.0, 3.0], &cfg).unwrap();
        let pb = spectral_profile(&b, &[2.0, 3.0], &cfg).unwrap();
        for (x, y) in pa.iter().zip(&pb) {
            assert!((x.f - y.f).abs() < 1e-9);
        }
    }

    #[test]
    fn bad_inputs() {
        let cfg = SolverConfig::new(2.0);
        assert!(spectral_profile(&UniformHypergraph::empty(3), &[2.0], &cfg).is_err());
        let g = turan3(3).unwrap();
        assert!(spectral_profile(&g, &[3.0, 2.0], &cfg).is_err());
        assert!(spectral_profile(&g, &[1.0, 2.0], &cfg).is_err());
        assert!(spectral_profile(&g, &[], &cfg).is_err());
    }
}
