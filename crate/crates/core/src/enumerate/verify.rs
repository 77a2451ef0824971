//! Verification campaigns over all cancellative classes on `n` vertices.

use std::collections::BTreeMap;

use rand::seq::index::sample;
use serde::{Deserialize, Serialize};

use super::{cancellative_classes, check_enum_range, CancellativeClass};
use crate::canonical::{canonical_key, CanonicalKey};
use crate::error::{invalid, Error, Result};
use crate::hypergraph::{t3, turan3};
use crate::par::Exec;
use crate::spectral::{lagrangian_lambda1, solve_p_spectral, SolverConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    /// The computed data contradicts the statement under test.
    Refuted,
    /// Some solver run did not converge; no conclusion.
    Inconclusive,
}

/// One class in a report.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub key: CanonicalKey,
    pub edges: usize,
    pub maximal: bool,
    /// `None` when the class was skipped by the monotonicity prefilter.
    pub lambda: Option<f64>,
    pub converged: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnumerationReport {
    pub n: usize,
    pub count_cancellative: usize,
    pub max_edges: usize,
    pub t3: u64,
    pub edge_extremal_keys: Vec<CanonicalKey>,
    pub spectral_p: Option<f64>,
    pub max_lambda: Option<f64>,
    pub spectral_extremal_keys: Option<Vec<CanonicalKey>>,
    /// Winner's λ minus the best λ among the other classes.
    pub spectral_margin: Option<f64>,
    pub turan_key: CanonicalKey,
    /// Sorted by key.
    pub classes: Vec<ClassRecord>,
    pub verdict: Verdict,
}

fn edge_summary(n: usize, classes: &[CancellativeClass]) -> Result<EnumerationReport> {
    let max_edges = classes.iter().map(|c| c.graph.edge_count()).max().unwrap_or(0);
    let edge_extremal_keys: Vec<CanonicalKey> = classes
        .iter()
        .filter(|c| c.graph.edge_count() == max_edges)
        .map(|c| c.key.clone())
        .collect();
    let turan_key = canonical_key(&turan3(n)?)?;
    let ok = max_edges as u64 == t3(n) && edge_extremal_keys == [turan_key.clone()];
    Ok(EnumerationReport {
        n,
        count_cancellative: classes.len(),
        max_edges,
        t3: t3(n),
        edge_extremal_keys,
        spectral_p: None,
        max_lambda: None,
        spectral_extremal_keys: None,
        spectral_margin: None,
        turan_key,
        classes: classes
            .iter()
            .map(|c| ClassRecord {
                key: c.key.clone(),
                edges: c.graph.edge_count(),
                maximal: c.maximal,
                lambda: None,
                converged: None,
            })
            .collect(),
        verdict: if ok { Verdict::Pass } else { Verdict::Refuted },
    })
}

/// Maximum edge count of a cancellative 3-graph on `n` vertices, and the
/// classes attaining it. Passes when the maximum is `t_3(n)` and `T_3(n)`
/// is the only class attaining it.
pub fn verify_edge_extremal(n: usize, exec: Exec) -> Result<EnumerationReport> {
    let classes = cancellative_classes(n, exec)?;
    edge_summary(n, &classes)
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectralOptions {
    /// Solve every class instead of only those the prefilter cannot rule out.
    pub exhaustive: bool,
    /// Permit `n = 7`.
    pub allow_n7: bool,
}

/// Whether `T_3(n)` is the unique maximizer of `λ^(p)` among cancellative
/// classes on `n` vertices, `p >= 3`.
///
/// Without `exhaustive`, only maximal classes and the one-edge deletions
/// of the winner are solved. Adding an edge never lowers `λ^(p)`, so every
/// other class is bounded by one of those.
pub fn verify_spectral_extremal(
    n: usize,
    p: f64,
    cfg: &SolverConfig,
    opts: SpectralOptions,
) -> Result<EnumerationReport> {
    check_enum_range(n)?;
    if n == 7 && !opts.allow_n7 {
        return Err(Error::UnsupportedSize {
            what: "n",
            value: n,
            supported: "3 <= n <= 6 for spectral verification (n = 7 needs an explicit opt-in)",
        });
    }
    if !(p >= 3.0) || !p.is_finite() {
        return invalid(format!("spectral verification needs p >= 3, got {p}"));
    }
    let cfg = cfg.with_p(p);
    cfg.validate()?;
    let inner = cfg.clone().with_exec(Exec::Sequential);
    let classes = cancellative_classes(n, cfg.exec)?;
    let mut report = edge_summary(n, &classes)?;
    report.spectral_p = Some(p);

    let index: BTreeMap<&CanonicalKey, usize> =
        classes.iter().enumerate().map(|(i, c)| (&c.key, i)).collect();
    let mut solved: BTreeMap<usize, (f64, bool)> = BTreeMap::new();
    let solve = |ids: Vec<usize>, solved: &mut BTreeMap<usize, (f64, bool)>| -> Result<()> {
        let ids: Vec<usize> = ids.into_iter().filter(|i| !solved.contains_key(i)).collect();
        let out = cfg.exec.map(&ids, |&i| {
            solve_p_spectral(&classes[i].graph, &inner).map(|e| (e.lambda, e.converged))
        });
        for (i, r) in ids.into_iter().zip(out) {
            solved.insert(i, r?);
        }
        Ok(())
    };

    let first: Vec<usize> = (0..classes.len())
        .filter(|&i| !classes[i].graph.is_empty() && (opts.exhaustive || classes[i].maximal))
        .collect();
    solve(first, &mut solved)?;
    let winner = argmax(&solved).ok_or_else(|| {
        Error::InvalidArgument("no class with an edge to compare".into())
    })?;
    if !opts.exhaustive {
        let g = &classes[winner].graph;
        let mut deletions = Vec::new();
        for idx in 0..g.edge_count() {
            let k = canonical_key(&g.without_edge_at(idx))?;
            if let Some(&i) = index.get(&k) {
                if !classes[i].graph.is_empty() {
                    deletions.push(i);
                }
            }
        }
        solve(deletions, &mut solved)?;
    }
    let winner = argmax(&solved).expect("non-empty");

    let tol = cfg.tolerance;
    let best = solved[&winner].0;
    let runner_up = solved
        .iter()
        .filter(|(i, _)| **i != winner)
        .map(|(_, (l, _))| *l)
        .fold(0.0, f64::max);
    let extremal: Vec<CanonicalKey> = solved
        .iter()
        .filter(|(_, (l, _))| *l >= best - 10.0 * tol)
        .map(|(i, _)| classes[*i].key.clone())
        .collect();
    let all_converged = solved.values().all(|(_, c)| *c);
    let unique_turan = extremal == [report.turan_key.clone()] && best - runner_up > 10.0 * tol;

    for (i, (l, c)) in &solved {
        report.classes[*i].lambda = Some(*l);
        report.classes[*i].converged = Some(*c);
    }
    report.max_lambda = Some(best);
    report.spectral_margin = Some(best - runner_up);
    report.spectral_extremal_keys = Some(extremal);
    report.verdict = if !all_converged {
        Verdict::Inconclusive
    } else if unique_turan {
        Verdict::Pass
    } else {
        Verdict::Refuted
    };
    Ok(report)
}

fn argmax(solved: &BTreeMap<usize, (f64, bool)>) -> Option<usize> {
    let mut best: Option<(usize, f64)> = None;
    for (&i, &(l, _)) in solved {
        if best.is_none_or(|(_, b)| l > b) {
            best = Some((i, l));
        }
    }
    best.map(|(i, _)| i)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Lambda1Summary {
    pub n: usize,
    /// Classes with at least one edge.
    pub eligible: usize,
    pub checked: usize,
    pub max_deviation: f64,
    /// Classes whose value is off by more than the slack.
    pub failures: Vec<(CanonicalKey, f64)>,
    pub unconverged: usize,
    pub verdict: Verdict,
    /// Per-class values, sorted by key.
    pub values: Vec<(CanonicalKey, usize, f64)>,
}

/// Allowed deviation of `λ^(1)` from `1/9`.
pub const LAMBDA1_SLACK: f64 = 1e-6;

/// Checks `λ^(1)(G) = 1/9` on `sample` cancellative classes with an edge
/// (all of them when there are fewer). The sample is drawn with
/// `cfg.rng_seed`.
pub fn verify_lambda1(n: usize, sample_size: usize, cfg: &SolverConfig) -> Result<Lambda1Summary> {
    let cfg = cfg.with_p(1.0);
    cfg.validate()?;
    let classes = cancellative_classes(n, cfg.exec)?;
    let eligible: Vec<&CancellativeClass> =
        classes.iter().filter(|c| !c.graph.is_empty()).collect();
    let chosen: Vec<&CancellativeClass> = if sample_size >= eligible.len() {
        eligible.clone()
    } else {
        let mut rng = crate::spectral::seeded_rng(cfg.rng_seed);
        let mut idx = sample(&mut rng, eligible.len(), sample_size).into_vec();
        idx.sort_unstable();
        idx.into_iter().map(|i| eligible[i]).collect()
    };
    let inner = cfg.clone().with_exec(Exec::Sequential);
    let results = cfg.exec.map(&chosen, |c| lagrangian_lambda1(&c.graph, &inner));
    let target = 1.0 / 9.0;
    let mut values = Vec::with_capacity(chosen.len());
    let mut failures = Vec::new();
    let mut max_deviation: f64 = 0.0;
    let mut unconverged = 0;
    let mut failed_unconverged = false;
    for (c, r) in chosen.iter().zip(results) {
        let est = r?;
        let dev = (est.lambda - target).abs();
        max_deviation = max_deviation.max(dev);
        if !est.converged {
            unconverged += 1;
        }
        if dev > LAMBDA1_SLACK {
            failures.push((c.key.clone(), est.lambda));
            failed_unconverged |= !est.converged;
        }
        values.push((c.key.clone(), c.graph.edge_count(), est.lambda));
    }
    let verdict = if failures.is_empty() {
        Verdict::Pass
    } else if failed_unconverged {
        Verdict::Inconclusive
    } else {
        Verdict::Refuted
    };
    Ok(Lambda1Summary {
        n,
        eligible: eligible.len(),
        checked: chosen.len(),
        max_deviation,
        failures,
        unconverged,
        verdict,
        values,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorollarySummary {
    pub n: usize,
    pub t3: u64,
    /// `(n/3) · t_3(n)^(2/3) = t_3(n)`, checked in integers.
    pub identity_holds: bool,
    pub checked: usize,
    /// Classes violating `3m/n <= λ^(3)(G) <= t_3(n)^(2/3)`.
    pub violations: Vec<(CanonicalKey, usize, f64)>,
    pub unconverged: usize,
    pub verdict: Verdict,
}

/// Absolute slack on the two inequalities.
pub const COROLLARY_SLACK: f64 = 1e-9;

/// For `n ≡ 0 (mod 3)`, `n <= 6`: every cancellative class satisfies
/// `3m/n <= λ^(3)(G) <= t_3(n)^(2/3)`, and `(n/3) t_3(n)^(2/3) = t_3(n)`.
pub fn verify_corollary_identity(n: usize, cfg: &SolverConfig) -> Result<CorollarySummary> {
    if n % 3 != 0 || !(3..=6).contains(&n) {
        return Err(Error::UnsupportedSize {
            what: "n",
            value: n,
            supported: "n in {3, 6} (a multiple of 3, at most 6)",
        });
    }
    let cfg = cfg.with_p(3.0);
    cfg.validate()?;
    let k = (n / 3) as u64;
    let t = t3(n);
    let identity_holds = t == k * k * k && k * (k * k) == t;
    let upper = (t as f64).powf(2.0 / 3.0);

    let classes = cancellative_classes(n, cfg.exec)?;
    let inner = cfg.clone().with_exec(Exec::Sequential);
    let ests = cfg
        .exec
        .map(&classes, |c| solve_p_spectral(&c.graph, &inner));
    let mut violations = Vec::new();
    let mut unconverged = 0;
    for (c, est) in classes.iter().zip(ests) {
        let est = est?;
        if !est.converged {
            unconverged += 1;
        }
        let m = c.graph.edge_count();
        let lower = 3.0 * m as f64 / n as f64;
        if est.lambda < lower - COROLLARY_SLACK || est.lambda > upper + COROLLARY_SLACK {
            violations.push((c.key.clone(), m, est.lambda));
        }
    }
    let verdict = if !identity_holds || (!violations.is_empty() && unconverged == 0) {
        Verdict::Refuted
    } else if !violations.is_empty() || unconverged > 0 {
        Verdict::Inconclusive
    } else {
        Verdict::Pass
    };
    Ok(CorollarySummary {
        n,
        t3: t,
        identity_holds,
        checked: classes.len(),
        violations,
        unconverged,
        verdict,
    })
}
