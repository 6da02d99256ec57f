use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_metajacobi"));
    c.env_remove("METAJACOBI_TOL");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const PR: [&str; 4] = ["--alpha", "0.7", "--beta", "0.3"];

fn with_pr<'a>(args: &[&'a str]) -> Vec<&'a str> {
    args.iter().copied().chain(PR).collect()
}

fn eval_pair(kind: &str, n: &str) -> (f64, f64) {
    let o = run(&with_pr(&["eval", "--kind", kind, "--n", n, "--z-re", "0", "--z-im", "1"]));
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1);
    let parts: Vec<f64> = text.trim().split(',').map(|s| s.parse().unwrap()).collect();
    (parts[0], parts[1])
}

#[test]
fn eval_prints_one_line() {
    // P_1(i) = i + beta / (alpha + 1)
    let (re, im) = eval_pair("askey-p", "1");
    assert!((re - 0.3 / 1.7).abs() < 1e-15 && (im - 1.0).abs() < 1e-15);
    let a = eval_pair("askey-p", "3");
    let b = eval_pair("askey-p-rec", "3");
    assert!((a.0 - b.0).abs() < 1e-13 && (a.1 - b.1).abs() < 1e-13);
}

#[test]
fn negative_degree_is_a_usage_error() {
    let o = run(&with_pr(&["eval", "--kind", "askey-p", "--n", "-1"]));
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "--kind", "askey-p"]).status.code(), Some(2));
    // parameter guard
    let o = run(&["verify", "--suite", "algebra", "--alpha", "0.7", "--beta", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&with_pr(&["verify", "--suite", "nope"]));
    assert_eq!(o.status.code(), Some(2));
    let o = run(&with_pr(&["verify", "--suite", "biorth", "--panels", "2"]));
    assert_eq!(o.status.code(), Some(2));
    let o = bin()
        .args(with_pr(&["verify", "--suite", "biorth"]))
        .env("METAJACOBI_TOL", "abc")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn numeric_errors() {
    // the infinite overlap needs |1 - z| > 1
    let o = run(&with_pr(&["eval", "--kind", "overlap-qlt", "--n", "1", "--z-re", "0.5"]));
    assert_eq!(o.status.code(), Some(3));
    // the negative-index Q family degenerates at alpha + beta = 1
    let o = run(&with_pr(&["coeffs", "--kind", "negative-q", "--n", "3"]));
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verification_failure_exits_one() {
    // alpha + beta just above -1: the endpoint singularity is too strong
    // for the rule to reach 1e-13
    let o = run(&["verify", "--suite", "biorth", "--alpha", "-0.45", "--beta", "-0.549", "--tol", "1e-13"]);
    assert_eq!(o.status.code(), Some(1), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["pass"], false);
}

#[test]
fn verify_report_shape() {
    let o = run(&with_pr(&["verify", "--suite", "algebra"]));
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["suite"], "algebra");
    assert_eq!(v["params"]["alpha"], 0.7);
    assert_eq!(v["pass"], true);
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    for c in checks {
        assert!(c["residual"].as_f64().unwrap() < 1e-12);
        for key in ["name", "residual", "tolerance", "pass"] {
            assert!(c.get(key).is_some(), "{key}");
        }
    }
}

#[test]
fn kummer_and_biorth_suites() {
    let o = run(&with_pr(&["verify", "--suite", "kummer"]));
    assert_eq!(o.status.code(), Some(0));
    let o = run(&with_pr(&["verify", "--suite", "biorth"]));
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["checks"].as_array().unwrap().len(), 81);
}

#[test]
fn tables() {
    let o = run(&with_pr(&["table", "--kind", "recurrence", "--nmax", "3"]));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,b_n,g_n");
    assert_eq!(lines.len(), 5);
    // b_0 = -beta / (alpha + 1), g_0 = 0
    assert!(lines[1].starts_with("0,-0.17647058823529"));
    assert!(lines[1].ends_with(",0.0"));

    let o = run(&with_pr(&["table", "--kind", "coeffs", "--n", "0"]));
    assert_eq!(stdout(&o), "k,coeff\n0,1.0\n");

    let o = run(&with_pr(&["table", "--kind", "biorth-matrix", "--nmax", "2"]));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 10);
    for row in text.lines().skip(1) {
        let f: Vec<f64> = row.split(',').map(|s| s.parse().unwrap()).collect();
        if f[0] != f[1] {
            assert!(f[2].hypot(f[3]) < 1e-8);
        }
    }
}

#[test]
fn json_tables_and_spectrum() {
    let o = run(&with_pr(&["spectrum", "--kind", "pencil", "--nmax", "3", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["columns"], serde_json::json!(["k", "value"]));
    assert_eq!(v["rows"].as_array().unwrap().len(), 4);
    let o = run(&with_pr(&["coeffs", "--kind", "gevp-q", "--n", "1", "--lmax", "3"]));
    assert_eq!(stdout(&o).lines().count(), 5);
}

#[test]
fn out_file_matches_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = run(&with_pr(&["verify", "--suite", "module", "--out", path.to_str().unwrap()]));
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let direct = run(&with_pr(&["verify", "--suite", "module"]));
    assert_eq!(std::fs::read(&path).unwrap(), direct.stdout);
}

#[test]
fn env_tolerance_is_used_when_flag_absent() {
    let args = with_pr(&["eval", "--kind", "jacobi-circle", "--n", "2", "--m", "2"]);
    let o = bin().args(&args).env("METAJACOBI_TOL", "1e-14").output().unwrap();
    // below the 1e-13 floor of the quadrature settings
    assert_eq!(o.status.code(), Some(2));
    let o = bin().args(&args).env("METAJACOBI_TOL", "1e-9").output().unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn deterministic_output() {
    let a = run(&with_pr(&["verify", "--suite", "jacobi"]));
    let b = run(&with_pr(&["verify", "--suite", "jacobi"]));
    assert_eq!(a.stdout, b.stdout);
}
