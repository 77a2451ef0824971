//! Text, CSV and JSON renderings of command results.

use std::fmt::Write as _;

use cancel_spectral::enumerate::{CorollarySummary, EnumerationReport, Lambda1Summary, Verdict};
use cancel_spectral::spectral::{profile_is_nonincreasing, ProfilePoint, SpectralEstimate};
use cancel_spectral::{CancellativityReport, Edge, UniformHypergraph};
use serde::Serialize;

fn edge(e: &Edge) -> String {
    format!("{{{} {} {}}}", e[0], e[1], e[2])
}

fn verdict_word(v: Verdict) -> &'static str {
    match v {
        Verdict::Pass => "pass",
        Verdict::Refuted => "refuted",
        Verdict::Inconclusive => "inconclusive",
    }
}

fn csv_string(wtr: csv::Writer<Vec<u8>>) -> Result<String, super::UsageError> {
    let bytes = wtr.into_inner().map_err(|e| super::UsageError(e.to_string()))?;
    Ok(String::from_utf8(bytes)?)
}

fn opt_lambda(x: Option<f64>) -> String {
    x.map(|l| format!("{l:.9}")).unwrap_or_default()
}

// ---- check ----

#[derive(Serialize)]
pub struct CheckReport {
    pub n: usize,
    pub m: usize,
    pub cancellative: bool,
    /// `(A, B, C)` with `B △ C ⊆ A`.
    pub witness: Option<[Edge; 3]>,
}

impl CheckReport {
    pub fn new(g: &UniformHypergraph, r: &CancellativityReport) -> Self {
        Self {
            n: g.n(),
            m: g.edge_count(),
            cancellative: r.cancellative,
            witness: r.witness.map(|(a, b, c)| [a, b, c]),
        }
    }
}

pub fn check_text(r: &CancellativityReport) -> String {
    match r.witness {
        None => "cancellative\n".to_string(),
        Some((a, b, c)) => format!(
            "not cancellative\nwitness A = {}, B = {}, C = {} (B △ C ⊆ A)\n",
            edge(&a),
            edge(&b),
            edge(&c)
        ),
    }
}

// ---- lambda ----

#[derive(Serialize)]
pub struct LambdaReport {
    pub p: f64,
    pub lambda: f64,
    pub residual: f64,
    /// `eigen` for p > 1, `projected_gradient` for p = 1.
    pub residual_kind: &'static str,
    pub iterations: usize,
    pub starts: usize,
    pub converged: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vector: Option<Vec<f64>>,
}

impl LambdaReport {
    pub fn new(p: f64, est: &SpectralEstimate, with_vector: bool) -> Self {
        Self {
            p,
            lambda: est.lambda,
            residual: est.residual,
            residual_kind: if p == 1.0 { "projected_gradient" } else { "eigen" },
            iterations: est.iterations,
            starts: est.restarts_used,
            converged: est.converged,
            vector: with_vector.then(|| est.vector.entries().to_vec()),
        }
    }
}

pub fn lambda_text(p: f64, est: &SpectralEstimate, with_vector: bool) -> String {
    let mut s = String::new();
    let kind = if p == 1.0 { " (projected gradient)" } else { "" };
    let _ = writeln!(s, "lambda      {:.9}", est.lambda);
    let _ = writeln!(s, "residual    {:.3e}{kind}", est.residual);
    let _ = writeln!(s, "iterations  {}", est.iterations);
    let _ = writeln!(s, "converged   {}", est.converged);
    if with_vector {
        let xs: Vec<String> = est.vector.entries().iter().map(|x| format!("{x:.9}")).collect();
        let _ = writeln!(s, "vector      {}", xs.join(" "));
    }
    s
}

// ---- sweep ----

#[derive(Serialize)]
pub struct SweepReport {
    pub points: Vec<ProfilePoint>,
    pub slack: f64,
    pub nonincreasing: bool,
    pub verdict: Verdict,
}

impl SweepReport {
    pub fn new(points: Vec<ProfilePoint>, slack: f64) -> Self {
        let nonincreasing = profile_is_nonincreasing(&points, slack);
        let verdict = if points.iter().any(|p| !p.converged) {
            Verdict::Inconclusive
        } else if nonincreasing {
            Verdict::Pass
        } else {
            Verdict::Refuted
        };
        Self {
            points,
            slack,
            nonincreasing,
            verdict,
        }
    }

    fn verdict_line(&self) -> String {
        format!(
            "verdict: {} (f non-increasing within relative slack {:e}: {})\n",
            verdict_word(self.verdict),
            self.slack,
            self.nonincreasing
        )
    }
}

pub fn sweep_csv(r: &SweepReport) -> Result<String, super::UsageError> {
    let mut wtr = csv::Writer::from_writer(Vec::new());
    wtr.write_record(["p", "lambda", "f", "converged"])?;
    for pt in &r.points {
        wtr.write_record([
            pt.p.to_string(),
            format!("{:.9}", pt.lambda),
            format!("{:.12e}", pt.f),
            pt.converged.to_string(),
        ])?;
    }
    Ok(csv_string(wtr)? + "# " + &r.verdict_line())
}

pub fn sweep_text(r: &SweepReport) -> String {
    let mut s = format!("{:>8}  {:>14}  {:>20}  converged\n", "p", "lambda", "f");
    for pt in &r.points {
        let _ = writeln!(
            s,
            "{:>8}  {:>14.9}  {:>20.12e}  {}",
            pt.p, pt.lambda, pt.f, pt.converged
        );
    }
    s + &r.verdict_line()
}

// ---- verify ----

pub fn classes_csv(r: &EnumerationReport) -> Result<String, super::UsageError> {
    let mut wtr = csv::Writer::from_writer(Vec::new());
    wtr.write_record(["key", "m", "maximal", "lambda", "converged"])?;
    for c in &r.classes {
        wtr.write_record([
            c.key.to_hex(),
            c.edges.to_string(),
            c.maximal.to_string(),
            opt_lambda(c.lambda),
            c.converged.map(|b| b.to_string()).unwrap_or_default(),
        ])?;
    }
    csv_string(wtr)
}

fn extremal_line(keys: &[cancel_spectral::CanonicalKey], turan: &cancel_spectral::CanonicalKey) -> String {
    let names: Vec<String> = keys
        .iter()
        .map(|k| {
            if k == turan {
                format!("{k} (T_3)")
            } else {
                k.to_string()
            }
        })
        .collect();
    format!("{} class(es): {}", keys.len(), names.join(", "))
}

pub fn edges_text(r: &EnumerationReport) -> String {
    let mut s = format!("verify edges n={}: {}\n", r.n, verdict_word(r.verdict));
    let _ = writeln!(s, "classes     {}", r.count_cancellative);
    let _ = writeln!(s, "max edges   {} (t_3({}) = {})", r.max_edges, r.n, r.t3);
    let _ = writeln!(s, "extremal    {}", extremal_line(&r.edge_extremal_keys, &r.turan_key));
    s
}

pub fn spectral_text(r: &EnumerationReport) -> String {
    let p = r.spectral_p.unwrap_or(f64::NAN);
    let mut s = format!("verify spectral n={} p={}: {}\n", r.n, p, verdict_word(r.verdict));
    let solved = r.classes.iter().filter(|c| c.lambda.is_some()).count();
    let unconverged = r.classes.iter().filter(|c| c.converged == Some(false)).count();
    let _ = writeln!(s, "classes     {} ({solved} solved, {unconverged} unconverged)", r.count_cancellative);
    let _ = writeln!(s, "max lambda  {}", opt_lambda(r.max_lambda));
    if let Some(keys) = &r.spectral_extremal_keys {
        let _ = writeln!(s, "extremal    {}", extremal_line(keys, &r.turan_key));
    }
    if let Some(m) = r.spectral_margin {
        let _ = writeln!(s, "margin      {m:.9}");
    }
    s
}

pub fn lambda1_text(r: &Lambda1Summary) -> String {
    let mut s = format!("verify lambda1 n={}: {}\n", r.n, verdict_word(r.verdict));
    let _ = writeln!(s, "classes     {} checked of {} with an edge", r.checked, r.eligible);
    let _ = writeln!(s, "max |λ−1/9| {:.3e}", r.max_deviation);
    let _ = writeln!(s, "unconverged {}", r.unconverged);
    for (k, l) in &r.failures {
        let _ = writeln!(s, "failure     {k}: {l:.9}");
    }
    s
}

pub fn lambda1_csv(r: &Lambda1Summary) -> Result<String, super::UsageError> {
    let mut wtr = csv::Writer::from_writer(Vec::new());
    wtr.write_record(["key", "m", "lambda"])?;
    for (k, m, l) in &r.values {
        wtr.write_record([k.to_hex(), m.to_string(), format!("{l:.9}")])?;
    }
    csv_string(wtr)
}

pub fn corollary_text(r: &CorollarySummary) -> String {
    let mut s = format!("verify corollary n={}: {}\n", r.n, verdict_word(r.verdict));
    let _ = writeln!(s, "identity    (n/3)·t_3(n)^(2/3) = t_3(n) = {}: {}", r.t3, r.identity_holds);
    let _ = writeln!(s, "classes     {} checked, {} unconverged", r.checked, r.unconverged);
    for (k, m, l) in &r.violations {
        let _ = writeln!(s, "violation   {k} (m = {m}): {l:.9}");
    }
    s
}

pub fn corollary_csv(r: &CorollarySummary) -> Result<String, super::UsageError> {
    let mut wtr = csv::Writer::from_writer(Vec::new());
    wtr.write_record(["key", "m", "lambda"])?;
    for (k, m, l) in &r.violations {
        wtr.write_record([k.to_hex(), m.to_string(), format!("{l:.9}")])?;
    }
    csv_string(wtr)
}
