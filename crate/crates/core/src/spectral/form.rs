use crate::error::{invalid, Result};
use crate::hypergraph::UniformHypergraph;

fn check_dim(g: &UniformHypergraph, x: &[f64]) -> Result<()> {
    if x.len() != g.n() {
        return invalid(format!(
            "vector has length {}, graph has {} vertices",
            x.len(),
            g.n()
        ));
    }
    Ok(())
}

/// `P_G(x) = 3 Σ_{ijk ∈ E} x_i x_j x_k`.
pub fn polynomial_form(g: &UniformHypergraph, x: &[f64]) -> Result<f64> {
    check_dim(g, x)?;
    Ok(3.0 * g.edges().iter().map(|&[a, b, c]| x[a] * x[b] * x[c]).sum::<f64>())
}

/// `s_i = Σ_{ijk ∈ E} x_j x_k`; `∂P_G/∂x_i = 3 s_i`.
pub fn vertex_sums(g: &UniformHypergraph, x: &[f64]) -> Result<Vec<f64>> {
    check_dim(g, x)?;
    let mut s = vec![0.0; g.n()];
    accumulate_sums(g.edges(), x, &mut s);
    Ok(s)
}

pub(crate) fn accumulate_sums(edges: &[[usize; 3]], x: &[f64], s: &mut [f64]) {
    s.iter_mut().for_each(|v| *v = 0.0);
    for &[a, b, c] in edges {
        s[a] += x[b] * x[c];
        s[b] += x[a] * x[c];
        s[c] += x[a] * x[b];
    }
}

/// `max_{i : x_i > 0} |λ x_i^(p-1) − s_i|`.
pub(crate) fn residual_from_sums(x: &[f64], s: &[f64], p: f64, lambda: f64) -> f64 {
    x.iter()
        .zip(s)
        .filter(|(xi, _)| **xi > 0.0)
        .map(|(xi, si)| (lambda * xi.powf(p - 1.0) - si).abs())
        .fold(0.0, f64::max)
}

/// Largest violation of the eigenequations over the support of `x`.
///
/// Only defined for `p > 1`; at `p = 1` the equations carry `x_i^0`
/// terms and the simplex path uses a projected-gradient residual instead.
pub fn eigen_residual(g: &UniformHypergraph, p: f64, lambda: f64, x: &[f64]) -> Result<f64> {
    if !(p > 1.0) {
        return Err(crate::Error::Unsupported(format!(
            "eigen residual needs p > 1, got {p}"
        )));
    }
    let s = vertex_sums(g, x)?;
    Ok(residual_from_sums(x, &s, p, lambda))
}

/// `λ^(p)` of any complete 3-partite 3-graph with `m` edges:
/// `(27 m)^(1 − 1/p) / 9`.
pub fn tripartite_closed_form(m: u64, p: f64) -> Result<f64> {
    if m == 0 {
        return invalid("closed form needs at least one edge");
    }
    if !(p > 1.0) {
        return invalid(format!("closed form needs p > 1, got {p}"));
    }
    Ok((27.0 * m as f64).powf(1.0 - 1.0 / p) / 9.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::turan3;

    #[test]
    fn form_on_single_edge() {
        let g = turan3(3).unwrap();
        let a = 3f64.powf(-1.0 / 3.0);
        assert!((polynomial_form(&g, &[a, a, a]).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(polynomial_form(&g, &[0.0; 3]).unwrap(), 0.0);
        assert!(polynomial_form(&g, &[1.0; 4]).is_err());
    }

    #[test]
    fn form_all_ones_counts_edges() {
        let g = turan3(6).unwrap();
        assert_eq!(polynomial_form(&g, &[1.0; 6]).unwrap(), 24.0);
    }

    #[test]
    fn residual_examples() {
        let g = turan3(3).unwrap();
        let a = 3f64.powf(-1.0 / 3.0);
        assert!(eigen_residual(&g, 3.0, 1.0, &[a, a, a]).unwrap() < 1e-15);

        let t = turan3(6).unwrap();
        let b = 6f64.powf(-1.0 / 3.0);
        assert!(eigen_residual(&t, 3.0, 4.0, &[b; 6]).unwrap() < 1e-12);

        // A single supported isolated vertex: λ·1 − 0.
        let h = crate::UniformHypergraph::new(4, [[0, 1, 2]]).unwrap();
        let r = eigen_residual(&h, 3.0, 2.5, &[0.0, 0.0, 0.0, 1.0]).unwrap();
        assert_eq!(r, 2.5);

        assert!(eigen_residual(&g, 1.0, 1.0, &[a, a, a]).is_err());
    }

    #[test]
    fn closed_form_values() {
        assert!((tripartite_closed_form(1, 3.0).unwrap() - 1.0).abs() < 1e-14);
        assert!((tripartite_closed_form(8, 3.0).unwrap() - 4.0).abs() < 1e-14);
        let big = tripartite_closed_form(8, 1e9).unwrap();
        assert!((big - 24.0).abs() < 1e-6);
        assert!(tripartite_closed_form(0, 3.0).is_err());
        assert!(tripartite_closed_form(1, 1.0).is_err());
    }
}
