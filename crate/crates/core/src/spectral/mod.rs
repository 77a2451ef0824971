//! p-spectral radius of 3-graphs.
//!
//! `P_G(x) = 3 Σ_{ijk ∈ E} x_i x_j x_k` and
//! `λ^(p)(G) = max { P_G(x) : ‖x‖_p = 1 }`.
//! For `p > 1`, a positive-entry maximizer satisfies the eigenequations
//! `λ x_i^(p-1) = Σ_{ijk ∈ E} x_j x_k`; [`solve_p_spectral`] iterates them.
//! `p = 1` is the (scaled) Lagrangian and goes through [`lagrangian_lambda1`].

mod form;
mod lagrangian;
mod motzkin;
mod profile;
mod simplex;
mod solver;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::par::Exec;

pub use form::{eigen_residual, polynomial_form, tripartite_closed_form, vertex_sums};
pub use lagrangian::{lagrangian_lambda1, minimize_support, support_cover_check};
pub use motzkin::{clique_number, motzkin_straus, motzkin_straus_target};
pub use profile::{f_value, profile_is_nonincreasing, spectral_profile, ProfilePoint};
pub use simplex::{project_to_simplex, seeded_rng};
pub use solver::solve_p_spectral;

/// Which unit ball a [`WeightVector`] is normalized to.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum Norm {
    /// Unit ℓ^p sphere, `p > 1`.
    Sphere(f64),
    /// Standard simplex (unit ℓ¹ sphere in the nonnegative orthant).
    Simplex,
}

impl Norm {
    fn exponent(self) -> f64 {
        match self {
            Norm::Sphere(p) => p,
            Norm::Simplex => 1.0,
        }
    }
}

const NORM_SLACK: f64 = 1e-12;

/// Nonnegative vector of unit norm.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeightVector {
    entries: Vec<f64>,
    norm: Norm,
}

pub(crate) fn p_norm(x: &[f64], p: f64) -> f64 {
    if p == 1.0 {
        return x.iter().map(|v| v.abs()).sum();
    }
    // Scale by the max entry first so large p does not underflow.
    let m = x.iter().fold(0.0f64, |a, v| a.max(v.abs()));
    if m == 0.0 {
        return 0.0;
    }
    m * x.iter().map(|v| (v.abs() / m).powf(p)).sum::<f64>().powf(1.0 / p)
}

impl WeightVector {
    /// Validates nonnegativity and unit norm (within `1e-12`).
    pub fn new(entries: Vec<f64>, norm: Norm) -> Result<Self> {
        if let Norm::Sphere(p) = norm {
            if !(p > 1.0) {
                return invalid(format!("sphere exponent must exceed 1, got {p}"));
            }
        }
        if entries.iter().any(|v| !(*v >= 0.0) || !v.is_finite()) {
            return invalid("weight vector entries must be finite and nonnegative");
        }
        let len = p_norm(&entries, norm.exponent());
        if (len - 1.0).abs() > NORM_SLACK {
            return invalid(format!("weight vector has norm {len}, expected 1"));
        }
        Ok(Self { entries, norm })
    }

    /// Scales a nonnegative, nonzero vector onto the unit ball of `norm`.
    pub fn normalized(mut entries: Vec<f64>, norm: Norm) -> Result<Self> {
        if entries.iter().any(|v| !(*v >= 0.0) || !v.is_finite()) {
            return invalid("weight vector entries must be finite and nonnegative");
        }
        let len = p_norm(&entries, norm.exponent());
        if len == 0.0 {
            return invalid("cannot normalize the zero vector");
        }
        entries.iter_mut().for_each(|v| *v /= len);
        Self::new(entries, norm)
    }

    /// Uniform vector on `support` (all other entries zero).
    pub fn uniform_on(n: usize, support: &[usize], norm: Norm) -> Result<Self> {
        let mut e = vec![0.0; n];
        for &v in support {
            if v >= n {
                return invalid(format!("support vertex {v} outside 0..{n}"));
            }
            e[v] = 1.0;
        }
        Self::normalized(e, norm)
    }

    pub(crate) fn from_raw(entries: Vec<f64>, norm: Norm) -> Self {
        Self { entries, norm }
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn norm(&self) -> Norm {
        self.norm
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Indices of the nonzero entries.
    pub fn support(&self) -> Vec<usize> {
        (0..self.entries.len())
            .filter(|&i| self.entries[i] > 0.0)
            .collect()
    }

    pub fn min_entry(&self) -> f64 {
        self.entries.iter().copied().fold(f64::INFINITY, f64::min)
    }

    pub fn max_entry(&self) -> f64 {
        self.entries.iter().copied().fold(0.0, f64::max)
    }
}

/// Solver settings.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolverConfig {
    pub p: f64,
    /// Eigen-residual (or projected-gradient norm for `p = 1`) that counts
    /// as converged.
    pub tolerance: f64,
    pub max_iterations: usize,
    /// Number of starting vectors: the uniform vector plus seeded random
    /// draws.
    pub restarts: usize,
    /// Damping `γ ∈ (0, 1]`; `None` picks 1 for `p >= 3` and 0.5 below.
    pub damping: Option<f64>,
    pub rng_seed: u64,
    pub exec: Exec,
}

impl SolverConfig {
    pub const DEFAULT_TOLERANCE: f64 = 1e-10;
    pub const DEFAULT_MAX_ITERATIONS: usize = 100_000;
    pub const DEFAULT_RESTARTS: usize = 16;
    pub const DEFAULT_SEED: u64 = 0x5eed_0003;

    pub fn new(p: f64) -> Self {
        Self {
            p,
            tolerance: Self::DEFAULT_TOLERANCE,
            max_iterations: Self::DEFAULT_MAX_ITERATIONS,
            restarts: Self::DEFAULT_RESTARTS,
            damping: None,
            rng_seed: Self::DEFAULT_SEED,
            exec: Exec::default(),
        }
    }

    pub fn with_p(&self, p: f64) -> Self {
        Self { p, ..self.clone() }
    }

    pub fn with_exec(mut self, exec: Exec) -> Self {
        self.exec = exec;
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.rng_seed = seed;
        self
    }

    pub fn gamma(&self) -> f64 {
        self.damping
            .unwrap_or(if self.p >= 3.0 { 1.0 } else { 0.5 })
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.p >= 1.0) || !self.p.is_finite() {
            return invalid(format!("p must be a finite real >= 1, got {}", self.p));
        }
        let g = self.gamma();
        if !(g > 0.0 && g <= 1.0) {
            return invalid(format!("damping must lie in (0, 1], got {g}"));
        }
        if !(self.tolerance > 0.0) {
            return invalid("tolerance must be positive");
        }
        if self.restarts == 0 {
            return invalid("at least one start is required");
        }
        Ok(())
    }
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self::new(3.0)
    }
}

/// Solver output.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralEstimate {
    /// `P_G(vector)`.
    pub lambda: f64,
    pub vector: WeightVector,
    /// Eigen-residual at `vector` for `p > 1`; projected-gradient norm on
    /// the simplex for `p = 1`.
    pub residual: f64,
    /// Iterations of the winning run.
    pub iterations: usize,
    pub restarts_used: usize,
    pub converged: bool,
}

impl SpectralEstimate {
    pub(crate) fn zero(n: usize, norm: Norm) -> Self {
        let mut e = vec![0.0; n];
        if let Some(first) = e.first_mut() {
            *first = 1.0;
        }
        Self {
            lambda: 0.0,
            vector: WeightVector::from_raw(e, norm),
            residual: 0.0,
            iterations: 0,
            restarts_used: 0,
            converged: true,
        }
    }
}
