use std::process::{Command, Output};

fn leja(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_leja")).args(args).output().expect("spawn leja")
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn column(csv: &str, name: &str) -> Vec<f64> {
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    let idx = header.iter().position(|h| *h == name).unwrap();
    lines.map(|l| l.split(',').nth(idx).unwrap().parse().unwrap()).collect()
}

fn max(v: &[f64]) -> f64 {
    v.iter().copied().fold(f64::NEG_INFINITY, f64::max)
}

#[test]
fn gen_two_points() {
    let out = stdout(&leja(&["gen", "--k", "2"]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "index,angle_numerator,angle_log_denominator,re,im");
    assert_eq!(lines.len(), 3);
    assert_eq!(column(&out, "re"), vec![1.0, -1.0]);
}

#[test]
fn gen_index_five_has_angle_five_quarters() {
    let out = stdout(&leja(&["gen", "--k", "6"]));
    let row: Vec<&str> = out.lines().nth(6).unwrap().split(',').collect();
    assert_eq!(&row[..3], &["5", "5", "2"]);
}

#[test]
fn gen_json_parses() {
    let out = stdout(&leja(&["gen", "--k", "4", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 4);
}

#[test]
fn zero_k_is_usage_error() {
    assert_eq!(leja(&["gen", "--k", "0"]).status.code(), Some(2));
    assert_eq!(leja(&["verify", "--max-k", "0"]).status.code(), Some(2));
    assert_eq!(leja(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn unknown_suite_fails() {
    let out = leja(&["verify", "--max-k", "8", "--suites", "nope"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn lebesgue_seven_equals_seven() {
    let out = stdout(&leja(&["lebesgue", "--k", "7", "--grid", "8192"]));
    assert!((column(&out, "lambda")[0] - 7.0).abs() < 1e-9);
    assert!((column(&out, "lambda2")[0] - 7f64.sqrt()).abs() < 1e-9);
}

#[test]
fn lebesgue_two_is_sqrt_two() {
    let out = stdout(&leja(&["lebesgue", "--k", "2", "--which", "lambda"]));
    assert!((column(&out, "lambda")[0] - 2f64.sqrt()).abs() < 1e-9);
}

#[test]
fn quadratic_constant_for_six_is_sqrt_three() {
    let out = stdout(&leja(&["lebesgue", "--k", "6", "--which", "lambda2", "--grid", "8192"]));
    assert!((column(&out, "lambda2")[0] - 3f64.sqrt()).abs() < 1e-9);
}

#[test]
fn exact_suites_pass() {
    let out = leja(&["verify", "--max-k", "256", "--suites", "recursion,lemma3"]);
    let text = stdout(&out);
    assert!(text.contains("2/2 suites passed"), "{text}");
}

#[test]
fn verify_csv_and_json_reports() {
    let csv = stdout(&leja(&["verify", "--max-k", "32", "--suites", "symmetry", "--format", "csv"]));
    assert!(csv.starts_with("suite,family,"));
    let json = stdout(&leja(&["verify", "--max-k", "32", "--suites", "recursion", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 1);
}

#[test]
fn plotdata_three_points() {
    let out = stdout(&leja(&["plotdata", "--k", "3", "--grid", "1024"]));
    let lambda = column(&out, "lambda");
    assert_eq!(lambda.len(), 1024);
    assert!((max(&lambda) - 3.0).abs() < 1e-3);
    assert!(lambda.iter().all(|&v| v >= 1.0 - 1e-12));
}

#[test]
fn plotdata_single_point_is_constant() {
    let out = stdout(&leja(&["plotdata", "--k", "1", "--grid", "64"]));
    assert!(column(&out, "lambda").iter().all(|&v| v == 1.0));
}

#[test]
fn plotdata_roots_of_unity_quadratic_is_one() {
    let out = stdout(&leja(&["plotdata", "--k", "8", "--grid", "512", "--which", "lambda2"]));
    assert!((max(&column(&out, "lambda2")) - 1.0).abs() < 1e-9);
}

#[test]
fn greedy_and_recursion_tables() {
    let g = stdout(&leja(&["greedy", "--k", "8", "--grid", "256"]));
    assert_eq!(g.lines().count(), 9);
    let r = stdout(&leja(&["recursion", "--max-k", "7"]));
    let last: Vec<&str> = r.lines().last().unwrap().split(',').collect();
    assert_eq!(last[0], "7");
    assert_eq!(last[3], "7");
    assert_eq!(last[7], "true");
}

#[test]
fn output_is_deterministic() {
    let args = ["lebesgue", "--k", "13", "--grid", "4096"];
    assert_eq!(leja(&args).stdout, leja(&args).stdout);
    let seq = leja(&["--sequential", "lebesgue", "--k", "13", "--grid", "4096"]);
    assert_eq!(leja(&args).stdout, seq.stdout);
}

#[test]
fn writes_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("points.csv");
    let out = leja(&["gen", "--k", "3", "--output", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 4);
}

#[test]
fn unwritable_output_fails() {
    let out = leja(&["gen", "--k", "3", "--output", "/nonexistent-dir/x.csv"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("/nonexistent-dir/x.csv"));
}
