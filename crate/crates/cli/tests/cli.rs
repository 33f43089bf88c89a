use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_intertwine")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_str(stdout(o).lines().next().expect("one record")).unwrap()
}

const POINT: [&str; 12] = ["--p", "4", "--q", "6", "--k", "2", "--a", "1", "--jp", "1", "--j", "2"];

fn eval(extra: &[&str]) -> Output {
    let mut args = vec!["eval"];
    args.extend(POINT);
    args.extend(extra);
    run(&args)
}

#[test]
fn eval_echoes_levels_and_s() {
    let o = eval(&["--r", "1", "--family", "m1-delta", "--format", "jsonl"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["s"], "2");
    assert_eq!(v["jp_level"], "2");
    assert_eq!(v["j_level"], "4");
    assert_eq!(v["radicand"], "3");
}

#[test]
fn eval_at_r_zero_is_one() {
    for family in ["m1-delta", "m1-d"] {
        let v = json(&eval(&["--r", "0", "--family", family, "--format", "jsonl"]));
        assert_eq!(v["value"], "1");
    }
}

#[test]
fn eval_m2_reports_trace_and_det() {
    let v = json(&eval(&["--r", "1", "--family", "m2", "--format", "jsonl"]));
    assert_ne!(v["trace"], "");
    assert_eq!(v["det"], "105/16");
}

#[test]
fn exact_mode_rejects_real_r() {
    let o = eval(&["--r", "0.5", "--family", "m1-d"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("integer r"));
    let o = eval(&["--r", "0.5", "--family", "m1-d", "--mode", "float", "--format", "jsonl"]);
    assert!(o.status.success());
    assert!(json(&o)["float"].as_f64().unwrap() > 0.0);
}

#[test]
fn nonexistent_ktype_is_an_error() {
    let o = run(&["eval", "--p", "2", "--q", "2", "--k", "1", "--a", "0", "--jp", "2", "--j", "1", "--r", "1", "--family", "m1-delta"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn empty_table_is_empty() {
    let dir = std::env::temp_dir().join(format!("intertwine-empty-{}", std::process::id()));
    let o = run(&["table", "--jp", "5..3", "--output", dir.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(std::fs::read(&dir).unwrap().len(), 0);
    std::fs::remove_file(dir).ok();
}

#[test]
fn table_is_deterministic() {
    let args = ["table", "--p", "2..4", "--q", "3..4", "--jp", "0..3", "--j", "0..3", "--r", "0..2"];
    let a = run(&args);
    let mut seq = args.to_vec();
    seq.push("--sequential");
    let b = run(&seq);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert!(text.starts_with("p,q,k,a,family,jp,j,r,"));
    assert!(text.lines().count() > 100);
}

#[test]
fn verify_small_grid_passes_and_writes_report() {
    let path = std::env::temp_dir().join(format!("intertwine-verify-{}.jsonl", std::process::id()));
    let o = run(&[
        "verify", "--p", "2..4", "--q", "2..4", "--jp", "0..4", "--j", "0..4", "--r", "0..2", "--format", "jsonl",
        "--output", path.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let report = std::fs::read_to_string(&path).unwrap();
    assert!(report.lines().count() > 1000);
    assert!(!report.contains("\"status\":\"fail\""));
    std::fs::remove_file(path).ok();
}

#[test]
fn torus_passes_and_reflected_fails() {
    let o = run(&["torus", "--k", "1", "--r", "1", "--M", "24"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().nth(1).unwrap().ends_with(",pass"));
    let o = run(&["torus", "--k", "1", "--r", "1", "--M", "8", "--convention", "reflected"]);
    assert_eq!(o.status.code(), Some(1));
}
