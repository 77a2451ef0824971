//! `cancel-spectral`: generate, check, solve, sweep and verify 3-graphs.
//!
//! Exit codes: 0 pass/true, 1 fail/false/refuted, 2 usage or input error,
//! 3 numerically inconclusive.

mod manifest;
mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use cancel_spectral::enumerate::{
    verify_corollary_identity, verify_edge_extremal, verify_lambda1, verify_spectral_extremal,
    SpectralOptions, Verdict,
};
use cancel_spectral::io::{from_hg3, to_hg3};
use cancel_spectral::spectral::{lagrangian_lambda1, solve_p_spectral, spectral_profile, SolverConfig};
use cancel_spectral::{check_cancellative, turan3, Exec, UniformHypergraph};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use manifest::RunManifest;

const PASS: u8 = 0;
const FAIL: u8 = 1;
const USAGE: u8 = 2;
const INCONCLUSIVE: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "cancel-spectral", version, about = "Cancellative 3-graphs and their p-spectral radii")]
struct Cli {
    /// Worker threads: 1 runs sequentially, 0 uses every core.
    #[arg(long, global = true, env = "CANCEL_SPECTRAL_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a named 3-graph in .hg3 form.
    Gen(GenArgs),
    /// Decide whether a 3-graph is cancellative.
    Check(CheckArgs),
    /// Compute the p-spectral radius of a 3-graph.
    Lambda(LambdaArgs),
    /// Tabulate λ^(p) and f(p) = (λ^(p)/3m)^p over a grid of exponents.
    Sweep(SweepArgs),
    /// Run an exhaustive verification campaign over all classes on n vertices.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug, Serialize)]
struct OutputArgs {
    /// Output format (default: csv for sweep, text otherwise).
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write the result here (plus `<out>.manifest.json`) instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug, Clone, Serialize)]
struct SolverArgs {
    /// Convergence tolerance on the residual.
    #[arg(long, default_value_t = SolverConfig::DEFAULT_TOLERANCE)]
    tol: f64,
    /// Iteration cap per start.
    #[arg(long = "max-iter", default_value_t = SolverConfig::DEFAULT_MAX_ITERATIONS)]
    max_iter: usize,
    /// Number of starting vectors.
    #[arg(long, default_value_t = SolverConfig::DEFAULT_RESTARTS)]
    starts: usize,
    /// Seed for the random starts.
    #[arg(long, default_value_t = SolverConfig::DEFAULT_SEED)]
    seed: u64,
}

impl SolverArgs {
    fn config(&self, p: f64, exec: Exec) -> SolverConfig {
        let mut cfg = SolverConfig::new(p).with_exec(exec).with_seed(self.seed);
        cfg.tolerance = self.tol;
        cfg.max_iterations = self.max_iter;
        cfg.restarts = self.starts;
        cfg
    }
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Kind {
    /// Balanced complete 3-partite 3-graph T_3(n).
    Tur3,
    /// {012, 013, 123} on n >= 4 vertices.
    F4,
    /// {012, 013, 234} on n >= 5 vertices.
    F5,
    /// No edges.
    Empty,
}

#[derive(Args, Debug, Serialize)]
struct GenArgs {
    #[arg(value_enum)]
    kind: Kind,
    n: usize,
    /// Write the graph here (plus `<out>.manifest.json`) instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug, Serialize)]
struct CheckArgs {
    input: PathBuf,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug, Serialize)]
struct LambdaArgs {
    input: PathBuf,
    /// Exponent p >= 1; p = 1 maximizes over the simplex.
    #[arg(long)]
    p: f64,
    #[command(flatten)]
    solver: SolverArgs,
    /// Also print the maximizing vector.
    #[arg(long)]
    vector: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug, Serialize)]
struct SweepArgs {
    input: PathBuf,
    /// Strictly increasing exponents, all > 1.
    #[arg(long, value_delimiter = ',', default_value = "1.5,2,2.5,3,4,6,10")]
    grid: Vec<f64>,
    /// Relative slack allowed on each step of the monotonicity check.
    #[arg(long, default_value_t = 1e-7)]
    slack: f64,
    #[command(flatten)]
    solver: SolverArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Clone, Copy, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Target {
    /// Maximum edge count is t_3(n), attained only by T_3(n).
    Edges,
    /// T_3(n) uniquely maximizes λ^(p), p >= 3.
    Spectral,
    /// λ^(1) = 1/9 on every class with an edge.
    Lambda1,
    /// 3m/n <= λ^(3) <= t_3(n)^(2/3) for n in {3, 6}.
    Corollary,
}

#[derive(Args, Debug, Serialize)]
struct VerifyArgs {
    #[arg(value_enum)]
    target: Target,
    n: usize,
    /// Exponent for the spectral target.
    #[arg(long, default_value_t = 3.0)]
    p: f64,
    /// Check only this many seeded random classes (lambda1).
    #[arg(long)]
    sample: Option<usize>,
    /// Solve every class instead of only those the monotonicity prefilter keeps (spectral).
    #[arg(long)]
    exhaustive: bool,
    /// Allow the spectral target at n = 7.
    #[arg(long = "allow-n7")]
    allow_n7: bool,
    #[command(flatten)]
    solver: SolverArgs,
    #[command(flatten)]
    output: OutputArgs,
}

/// Anything that ends the run with exit code 2.
#[derive(Debug)]
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type CliResult = Result<u8, UsageError>;

fn configure_threads(threads: Option<usize>) -> Result<(Exec, usize), UsageError> {
    match threads {
        Some(1) => Ok((Exec::Sequential, 1)),
        #[cfg(feature = "parallel")]
        other => {
            if let Some(t) = other.filter(|&t| t > 1) {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(t)
                    .build_global()
                    .map_err(|e| UsageError(format!("cannot start {t} threads: {e}")))?;
            }
            Ok((Exec::Parallel, rayon::current_num_threads()))
        }
        #[cfg(not(feature = "parallel"))]
        _ => Ok((Exec::Sequential, 1)),
    }
}

fn read_graph(path: &Path, manifest: &mut RunManifest) -> Result<UniformHypergraph, UsageError> {
    let bytes = fs::read(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    manifest.add_input(path, &bytes);
    let text = String::from_utf8(bytes)
        .map_err(|_| UsageError(format!("{}: not UTF-8 text", path.display())))?;
    from_hg3(&text).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

/// Writes `body` to `--out` (with the manifest alongside) or to stdout.
fn emit(out: Option<&Path>, body: &str, manifest: &mut RunManifest) -> Result<(), UsageError> {
    manifest.finish();
    match out {
        Some(path) => {
            fs::write(path, body).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
            let mut side = path.as_os_str().to_owned();
            side.push(".manifest.json");
            let json = serde_json::to_string_pretty(manifest)? + "\n";
            fs::write(&side, json)
                .map_err(|e| UsageError(format!("{}: {e}", Path::new(&side).display())))?;
        }
        None => print!("{body}"),
    }
    Ok(())
}

/// JSON documents carry the manifest inline.
fn json_doc<T: Serialize>(manifest: &mut RunManifest, report: &T) -> Result<String, UsageError> {
    manifest.finish();
    let doc = serde_json::json!({ "manifest": manifest, "report": report });
    Ok(serde_json::to_string_pretty(&doc)? + "\n")
}

fn verdict_code(v: Verdict) -> u8 {
    match v {
        Verdict::Pass => PASS,
        Verdict::Refuted => FAIL,
        Verdict::Inconclusive => INCONCLUSIVE,
    }
}

fn flags<T: Serialize>(args: &T) -> serde_json::Value {
    serde_json::to_value(args).unwrap_or(serde_json::Value::Null)
}

fn cmd_gen(args: &GenArgs, threads: usize) -> CliResult {
    let mut manifest = RunManifest::start("gen", flags(args), None, threads);
    let g = match args.kind {
        Kind::Tur3 => turan3(args.n)?,
        Kind::F4 => UniformHypergraph::f4(args.n)?,
        Kind::F5 => UniformHypergraph::f5(args.n)?,
        Kind::Empty => UniformHypergraph::empty(args.n),
    };
    emit(args.out.as_deref(), &to_hg3(&g), &mut manifest)?;
    Ok(PASS)
}

fn cmd_check(args: &CheckArgs, threads: usize) -> CliResult {
    let mut manifest = RunManifest::start("check", flags(args), None, threads);
    let g = read_graph(&args.input, &mut manifest)?;
    let rep = check_cancellative(&g);
    let body = match args.output.format.unwrap_or(Format::Text) {
        Format::Text => report::check_text(&rep),
        Format::Json => json_doc(&mut manifest, &report::CheckReport::new(&g, &rep))?,
        Format::Csv => return Err(UsageError("check has no CSV form".into())),
    };
    emit(args.output.out.as_deref(), &body, &mut manifest)?;
    Ok(if rep.cancellative { PASS } else { FAIL })
}

fn cmd_lambda(args: &LambdaArgs, exec: Exec, threads: usize) -> CliResult {
    let mut manifest = RunManifest::start("lambda", flags(args), Some(args.solver.seed), threads);
    let g = read_graph(&args.input, &mut manifest)?;
    let cfg = args.solver.config(args.p, exec);
    let est = if args.p == 1.0 {
        lagrangian_lambda1(&g, &cfg)?
    } else {
        solve_p_spectral(&g, &cfg)?
    };
    let body = match args.output.format.unwrap_or(Format::Text) {
        Format::Text => report::lambda_text(args.p, &est, args.vector),
        Format::Json => json_doc(&mut manifest, &report::LambdaReport::new(args.p, &est, args.vector))?,
        Format::Csv => return Err(UsageError("lambda has no CSV form".into())),
    };
    emit(args.output.out.as_deref(), &body, &mut manifest)?;
    Ok(if est.converged { PASS } else { INCONCLUSIVE })
}

fn cmd_sweep(args: &SweepArgs, exec: Exec, threads: usize) -> CliResult {
    let mut manifest = RunManifest::start("sweep", flags(args), Some(args.solver.seed), threads);
    let g = read_graph(&args.input, &mut manifest)?;
    if !(args.slack >= 0.0) {
        return Err(UsageError("slack must be nonnegative".into()));
    }
    let points = spectral_profile(&g, &args.grid, &args.solver.config(3.0, exec))?;
    let rep = report::SweepReport::new(points, args.slack);
    let body = match args.output.format.unwrap_or(Format::Csv) {
        Format::Csv => report::sweep_csv(&rep)?,
        Format::Text => report::sweep_text(&rep),
        Format::Json => json_doc(&mut manifest, &rep)?,
    };
    emit(args.output.out.as_deref(), &body, &mut manifest)?;
    Ok(verdict_code(rep.verdict))
}

fn cmd_verify(args: &VerifyArgs, exec: Exec, threads: usize) -> CliResult {
    let seed = match args.target {
        Target::Edges => None,
        _ => Some(args.solver.seed),
    };
    let mut manifest = RunManifest::start("verify", flags(args), seed, threads);
    let format = args.output.format.unwrap_or(Format::Text);
    let n = args.n;
    let (body, verdict) = match args.target {
        Target::Edges => {
            let r = verify_edge_extremal(n, exec)?;
            let body = match format {
                Format::Text => report::edges_text(&r),
                Format::Csv => report::classes_csv(&r)?,
                Format::Json => json_doc(&mut manifest, &r)?,
            };
            (body, r.verdict)
        }
        Target::Spectral => {
            let opts = SpectralOptions {
                exhaustive: args.exhaustive,
                allow_n7: args.allow_n7,
            };
            let r = verify_spectral_extremal(n, args.p, &args.solver.config(args.p, exec), opts)?;
            let body = match format {
                Format::Text => report::spectral_text(&r),
                Format::Csv => report::classes_csv(&r)?,
                Format::Json => json_doc(&mut manifest, &r)?,
            };
            (body, r.verdict)
        }
        Target::Lambda1 => {
            let sample = args.sample.unwrap_or(usize::MAX);
            let r = verify_lambda1(n, sample, &args.solver.config(1.0, exec))?;
            let body = match format {
                Format::Text => report::lambda1_text(&r),
                Format::Csv => report::lambda1_csv(&r)?,
                Format::Json => json_doc(&mut manifest, &r)?,
            };
            (body, r.verdict)
        }
        Target::Corollary => {
            let r = verify_corollary_identity(n, &args.solver.config(3.0, exec))?;
            let body = match format {
                Format::Text => report::corollary_text(&r),
                Format::Csv => report::corollary_csv(&r)?,
                Format::Json => json_doc(&mut manifest, &r)?,
            };
            (body, r.verdict)
        }
    };
    emit(args.output.out.as_deref(), &body, &mut manifest)?;
    Ok(verdict_code(verdict))
}

fn run(cli: Cli) -> CliResult {
    let (exec, threads) = configure_threads(cli.threads)?;
    match &cli.command {
        Command::Gen(a) => cmd_gen(a, threads),
        Command::Check(a) => cmd_check(a, threads),
        Command::Lambda(a) => cmd_lambda(a, exec, threads),
        Command::Sweep(a) => cmd_sweep(a, exec, threads),
        Command::Verify(a) => cmd_verify(a, exec, threads),
    }
}

fn main() -> ExitCode {
    // clap exits with 2 on usage errors, matching the contract.
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
    }
}
