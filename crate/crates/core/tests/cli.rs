use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pretentious"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn value_of(text: &str, key: &str) -> f64 {
    text.lines()
        .find_map(|l| l.strip_prefix(key).map(|v| v.trim().parse().unwrap()))
        .unwrap_or_else(|| panic!("no {key} in {text}"))
}

fn config(name: &str) -> String {
    format!("{}/examples/configs/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn constants_all_pass() {
    let o = run(&["constants"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.contains("computed")).count(), 14);
    assert!(!text.contains("FAIL"));
}

#[test]
fn constants_csv() {
    let o = run(&["constants", "--csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(
        reader.headers().unwrap().iter().collect::<Vec<_>>(),
        ["case_id", "computed", "paper", "delta", "pass"]
    );
    let rows: Vec<_> = reader.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 14);
    assert!(rows.iter().all(|r| &r[4] == "true"));
    let exact = stdout(&run(&["constants", "--csv", "--exact-c1"]));
    assert!(exact.lines().next().unwrap().ends_with(",exact_c1"));
}

#[test]
fn zfr_widths() {
    let o = run(&["zfr", "--theorem", "1", "--m", "1", "--cond", "3", "--t", "0", "--degree", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let w = value_of(&stdout(&o), "width");
    assert!((w - 1.0 / (80.0 * 9f64.ln())).abs() < 1e-12);
    let o = run(&[
        "zfr", "--theorem", "3", "--m", "1", "--mprime", "1", "--cond", "3", "--condprime", "3", "--t", "0",
        "--degree", "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let w = value_of(&stdout(&o), "width");
    // log(𝔠(π)𝔠(π′)(3+|t|)^m) = log 27 for these arguments.
    assert!((w - 1.0 / (132.0 * 27f64.ln())).abs() < 1e-12);
    let o = run(&["zfr", "--theorem", "1", "--m", "1", "--cond", "3", "--t", "-5", "--degree", "1"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn zfr_usage_errors() {
    let o = run(&["zfr", "--theorem", "2", "--m", "1", "--cond", "3", "--t", "0", "--degree", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(run(&["zfr", "--theorem", "1"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
}

#[test]
fn verify_three_four_one() {
    let o = run(&["verify", "three-four-one", "--sigma", "1.1", "--X", "100000"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(value_of(&stdout(&o), "  worst term:") >= -1e-15);
}

#[test]
fn verify_conductor() {
    let o = run(&["verify", "conductor", "--seed", "7", "--n", "100000"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(value_of(&text, "  real inequality margin:") >= 0.0);
    assert!(value_of(&text, "  complex inequality margin:") >= 0.0);
}

#[test]
fn verify_hadamard() {
    let zeros = format!("{}/data/zeta_zeros_100.txt", env!("CARGO_MANIFEST_DIR"));
    let o = run(&["verify", "hadamard", "--zeros", &zeros, "--sigma", "1.5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(run(&["verify", "hadamard"]).status.code(), Some(2));
    assert_eq!(
        run(&["verify", "hadamard", "--zeros", "/nonexistent/zeros.txt"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_hadamard_reports_bad_table() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "# zeros\n0.5 14.1\nnot-a-number\n").unwrap();
    let o = run(&["verify", "hadamard", "--zeros", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn verify_is_byte_deterministic() {
    let a = run(&["verify", "tails", "--seed", "5", "--n", "10"]);
    let b = run(&["verify", "tails", "--seed", "5", "--n", "10"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(run(&["verify", "psd", "--n", "5", "--X", "500"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "metric-axioms", "--n", "3", "--X", "2000"]).status.code(), Some(0));
}

#[test]
fn distance_identical_is_zero() {
    let o = run(&["distance", "--config", &config("trivial.toml"), "--sigma", "1.5", "--X", "10000"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(value_of(&stdout(&o), "distance "), 0.0);
}

#[test]
fn distance_expansion_reconciles() {
    let o = run(&[
        "distance", "--config", &config("chi5_pair.toml"), "--sigma", "1.5", "--X", "100000", "--gamma1", "-1",
        "--gamma2", "1", "--expansion",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(value_of(&text, "residual") <= value_of(&text, "tail_budget"));
    let d = value_of(&text, "distance_sq");
    assert!((d - value_of(&text, "expansion_total")).abs() <= 1e-9 * d);
}

#[test]
fn distance_input_errors() {
    let o = run(&["distance", "--config", &config("trivial.toml"), "--sigma", "1.0"]);
    assert_eq!(o.status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.toml");
    std::fs::write(&path, "schema_version = 1\n[rep]\nkind = \"dirichlet\"\nmodulus = 5\nindex = 9\n").unwrap();
    let o = run(&["distance", "--config", path.to_str().unwrap(), "--sigma", "1.5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("index 9"));
}

#[test]
fn shipped_configs_parse() {
    for name in ["chi5_pair.toml", "trivial.toml", "synthetic_gl2.toml", "synthetic_seeded.toml"] {
        let cfg = pretentious::cli::RepConfig::load(config(name).as_ref()).unwrap();
        cfg.build_pair().unwrap();
    }
}
