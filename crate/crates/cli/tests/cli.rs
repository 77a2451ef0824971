use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_cancel-spectral"));
    c.env_remove("CANCEL_SPECTRAL_THREADS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn gen(dir: &TempDir, kind: &str, n: usize) -> PathBuf {
    let path = dir.path().join(format!("{kind}{n}.hg3"));
    let o = run(&["gen", kind, &n.to_string(), "--out", path.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    path
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn gen_writes_canonical_files() {
    let o = run(&["gen", "tur3", "6"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.starts_with("hg 3 6 8\n"));
    assert_eq!(text.lines().count(), 9);

    let o = run(&["gen", "f4", "4"]);
    assert_eq!(stdout(&o), "hg 3 4 3\n0 1 2\n0 1 3\n1 2 3\n");
    let o = run(&["gen", "empty", "5"]);
    assert_eq!(stdout(&o), "hg 3 5 0\n");
}

#[test]
fn gen_rejects_bad_sizes() {
    for args in [["gen", "f4", "3"], ["gen", "f5", "4"], ["gen", "tur3", "2"], ["gen", "tur3", "-1"]] {
        assert_eq!(code(&run(&args)), 2, "{args:?}");
    }
}

#[test]
fn gen_out_writes_manifest() {
    let dir = TempDir::new().unwrap();
    let path = gen(&dir, "tur3", 6);
    let manifest = std::fs::read_to_string(dir.path().join("tur36.hg3.manifest.json")).unwrap();
    let v: serde_json::Value = serde_json::from_str(&manifest).unwrap();
    assert_eq!(v["command"], "gen");
    assert_eq!(v["flags"]["kind"], "tur3");
    assert_eq!(v["flags"]["n"], 6);
    assert!(v["version"].is_string());
    assert!(std::fs::read_to_string(path).unwrap().starts_with("hg 3 6 8\n"));
}

#[test]
fn check_reports_and_exit_codes() {
    let dir = TempDir::new().unwrap();
    let f5 = gen(&dir, "f5", 5);
    let o = run(&["check", p(&f5)]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("witness"));

    let t9 = gen(&dir, "tur3", 9);
    let o = run(&["check", p(&t9)]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "cancellative\n");

    let e = gen(&dir, "empty", 4);
    assert_eq!(code(&run(&["check", p(&e)])), 0);

    let o = run(&["check", p(&f5), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["report"]["cancellative"], false);
    assert_eq!(v["report"]["witness"], serde_json::json!([[2, 3, 4], [0, 1, 2], [0, 1, 3]]));
    assert_eq!(v["manifest"]["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn check_rejects_malformed_input() {
    let dir = TempDir::new().unwrap();
    let cases = [
        "hg 3 4 1\n0 1 5\n",
        "hg 3 4 2\n0 1 2\n",
        "hg 3 4 1\n0 1 2",
        "hg 3 4 1\r\n0 1 2\r\n",
        "hg 2 4 0\n",
        "hg 3 4 1\n2 1 0\n",
    ];
    for (i, text) in cases.iter().enumerate() {
        let path = dir.path().join(format!("bad{i}.hg3"));
        std::fs::write(&path, text).unwrap();
        let o = run(&["check", p(&path)]);
        assert_eq!(code(&o), 2, "{text:?}");
        assert!(!o.stderr.is_empty());
    }
    assert_eq!(code(&run(&["check", "/definitely/not/here.hg3"])), 2);
}

#[test]
fn lambda_examples() {
    let dir = TempDir::new().unwrap();
    let t6 = gen(&dir, "tur3", 6);
    let o = run(&["lambda", p(&t6), "--p", "3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("lambda      4.000000000\n"), "{}", stdout(&o));

    let o = run(&["lambda", p(&t6), "--p", "1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("lambda      0.111111111\n"));

    let t9 = gen(&dir, "tur3", 9);
    let o = run(&["lambda", p(&t9), "--p", "2", "--vector"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("lambda      3.000000000\n"));
    let vector = out.lines().find(|l| l.starts_with("vector")).unwrap();
    assert_eq!(vector.split_whitespace().count(), 10);
}

#[test]
fn lambda_json_and_errors() {
    let dir = TempDir::new().unwrap();
    let t6 = gen(&dir, "tur3", 6);
    let o = run(&["lambda", p(&t6), "--p", "2.5", "--format", "json", "--seed", "7"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["report"]["converged"], true);
    assert_eq!(v["report"]["residual_kind"], "eigen");
    assert_eq!(v["manifest"]["seed"], 7);
    assert_eq!(v["manifest"]["flags"]["solver"]["seed"], 7);

    assert_eq!(code(&run(&["lambda", p(&t6), "--p", "0.5"])), 2);
    assert_eq!(code(&run(&["lambda", p(&t6)])), 2);
    assert_eq!(code(&run(&["lambda", p(&t6), "--p", "3", "--starts", "0"])), 2);
}

#[test]
fn lambda_non_convergence_exits_3_with_estimate() {
    let dir = TempDir::new().unwrap();
    let f5 = gen(&dir, "f5", 6);
    let o = run(&["lambda", p(&f5), "--p", "3", "--tol", "1e-300", "--max-iter", "3"]);
    assert_eq!(code(&o), 3);
    let out = stdout(&o);
    assert!(out.contains("converged   false"));
    assert!(out.starts_with("lambda      "));
}

#[test]
fn sweep_examples() {
    let dir = TempDir::new().unwrap();
    let t6 = gen(&dir, "tur3", 6);
    let o = run(&["sweep", p(&t6), "--grid", "2,3,4"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let mut rdr = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(out.as_bytes());
    let rows: Vec<csv::StringRecord> = rdr.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 3);
    for row in &rows {
        let f: f64 = row[2].parse().unwrap();
        assert!((f - 1.0 / 216.0).abs() < 1e-9);
        assert_eq!(&row[3], "true");
    }
    assert!(out.lines().last().unwrap().starts_with("# verdict: pass"));

    let edge = gen(&dir, "tur3", 3);
    let o = run(&["sweep", p(&edge), "--grid", "1.5,3,10", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["report"]["verdict"], "pass");
    assert_eq!(v["report"]["points"].as_array().unwrap().len(), 3);
}

#[test]
fn sweep_errors() {
    let dir = TempDir::new().unwrap();
    let e = gen(&dir, "empty", 5);
    let o = run(&["sweep", p(&e)]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("without edges"));

    let t6 = gen(&dir, "tur3", 6);
    assert_eq!(code(&run(&["sweep", p(&t6), "--grid", "3,2"])), 2);
    assert_eq!(code(&run(&["sweep", p(&t6), "--grid", "1,2"])), 2);
}

#[test]
fn sweep_unconverged_point_is_inconclusive() {
    let dir = TempDir::new().unwrap();
    let f5 = gen(&dir, "f5", 6);
    let o = run(&["sweep", p(&f5), "--grid", "2,3", "--tol", "1e-300", "--max-iter", "2"]);
    assert_eq!(code(&o), 3);
    let out = stdout(&o);
    assert!(out.contains(",false"));
    assert!(out.contains("# verdict: inconclusive"));
}

#[test]
fn verify_examples() {
    let o = run(&["verify", "edges", "6"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.starts_with("verify edges n=6: pass"));
    assert!(out.contains("max edges   8"));
    assert!(out.contains("1 class(es)") && out.contains("(T_3)"));

    let o = run(&["verify", "spectral", "6", "--p", "3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("max lambda  4.000000000"));

    let o = run(&["verify", "lambda1", "5"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("6 checked of 6"));

    let o = run(&["verify", "corollary", "6"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn verify_unsupported_sizes_exit_2() {
    for args in [
        vec!["verify", "edges", "8"],
        vec!["verify", "edges", "2"],
        vec!["verify", "spectral", "7"],
        vec!["verify", "spectral", "6", "--p", "2"],
        vec!["verify", "corollary", "5"],
    ] {
        assert_eq!(code(&run(&args)), 2, "{args:?}");
    }
}

#[test]
fn verify_csv_has_one_row_per_class() {
    let o = run(&["verify", "spectral", "5", "--format", "csv", "--exhaustive"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let mut rdr = csv::Reader::from_reader(out.as_bytes());
    let rows: Vec<csv::StringRecord> = rdr.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 7);
    assert!(rows.iter().filter(|r| &r[1] != "0").all(|r| !r[3].is_empty()));
}

#[test]
fn verify_is_reproducible_across_thread_counts() {
    let strip = |o: &Output| {
        let mut v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        v.as_object_mut().unwrap().remove("manifest");
        v
    };
    let one = run(&["verify", "lambda1", "6", "--sample", "8", "--format", "json", "--threads", "1"]);
    let mut c = bin();
    c.env("CANCEL_SPECTRAL_THREADS", "3");
    let three = c
        .args(["verify", "lambda1", "6", "--sample", "8", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(code(&one), 0);
    assert_eq!(code(&three), 0);
    assert_eq!(strip(&one), strip(&three));
    let v: serde_json::Value = serde_json::from_slice(&three.stdout).unwrap();
    let expected = if cfg!(feature = "parallel") { 3 } else { 1 };
    assert_eq!(v["manifest"]["threads"], expected);
}

#[test]
fn verify_out_writes_report_and_manifest() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("edges7.json");
    let o = run(&["verify", "edges", "7", "--format", "json", "--out", p(&out)]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["report"]["count_cancellative"], 201);
    assert_eq!(v["report"]["max_edges"], 12);
    assert!(dir.path().join("edges7.json.manifest.json").exists());
}
