use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_operad-gf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = vec!["--json"];
    a.extend_from_slice(args);
    serde_json::from_str(&stdout(&a)).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("operad-gf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn dims_examples() {
    assert_eq!(stdout(&["dims", "assoc", "--n", "10", "--oracle"]), "1, 1, 1, 1, 1, 1, 1, 1, 1, 1\n");
    assert!(stdout(&["dims", "alia", "--n", "8", "--system", "stump"]).starts_with("1, 2, 11, 100,"));
    assert_eq!(stdout(&["dims", "free_binary", "--n", "5", "--oracle"]), "1, 1, 2, 5, 14\n");
    let v = json(&["dims", "asw", "--n", "6"]);
    assert_eq!(v["dims"], serde_json::json!([1, 1, 2, 4, 8, 15]));
}

#[test]
fn weighted_dims() {
    let v = json(&["dims", "alia", "--n", "4", "--weighted", "--oracle"]);
    assert_eq!(v["dims"], serde_json::json!([1, 2, 11, 100]));
    assert_eq!(v["weighted"][2], serde_json::json!(["0", "0", "11"]));
    let w = json(&["dims", "alia", "--n", "4", "--weighted"]);
    assert_eq!(v, w);
}

#[test]
fn solve_examples() {
    let ode = stdout(&["solve", "alia", "--emit", "ode"]);
    assert!(ode.contains("y_a' ="), "{ode}");
    assert!(ode.contains("2906189/1296*z^10"), "{ode}");
    let asw = stdout(&["solve", "asw", "--system", "incl-excl"]);
    assert_eq!(asw.lines().filter(|l| l.starts_with("y")).count(), 5, "{asw}");
    let v = json(&["solve", "assoc", "--emit", "json"]);
    assert_eq!(v["system"]["variables"].as_array().unwrap().len(), 2);
    let text = stdout(&["solve", "assoc"]);
    assert!(text.contains("y_mu = z^2 + z*y_mu"), "{text}");
}

#[test]
fn guess_examples() {
    assert!(stdout(&["guess", "assoc", "--rational"]).starts_with("G = z/(1 - z)\n"));
    let alia = stdout(&["guess", "alia", "--algebraic", "--deg-y", "3"]);
    assert!(alia.starts_with("y^3 - 6*y^2 + 6*y - 6*z = 0"), "{alia}");
    let v = json(&["guess", "nu3", "--algebraic", "--deg-y", "4"]);
    assert_eq!(v["algebraic"]["deg_y"], 4);
    assert_eq!(v["algebraic"]["coeffs"][0], serde_json::json!(["0", "64", "16", "-8", "9"]));
}

#[test]
fn guess_not_found_exits_3() {
    let out = run(&["guess", "free_binary", "--rational", "--n", "24"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn check_examples() {
    let v = json(&["check", "nu2"]);
    assert_eq!(v["shuffle_regular"], true);
    assert_eq!(v["symmetric_regular"], true);
    let alia = json(&["check", "alia"]);
    assert_eq!(alia["shuffle_regular"], true);
    assert_eq!(alia["symmetric_regular"], false);
    let path = scratch("half.txt");
    std::fs::write(&path, "operad shuffle\ngen a : 2\nrel a(a(x1,x2),x3)\n").unwrap();
    let half = stdout(&["check", path.to_str().unwrap()]);
    assert!(half.contains("shuffle regular: false"), "{half}");
    assert!(half.contains("missing a(a(x1,x3),x2)"), "{half}");
}

#[test]
fn crosscheck_passes_and_fails() {
    for name in ["assoc", "asw", "free_binary", "alia", "lieadm"] {
        let v = json(&["crosscheck", name, "--n-oracle", "6", "--n-system", "8"]);
        assert_eq!(v["pass"], true, "{name}");
    }
    let mut sys = json(&["solve", "assoc", "--emit", "json"])["system"].clone();
    // y_mu = z^2 + z*y_mu + z^2*y_mu
    sys["equations"][0]["terms"]
        .as_array_mut()
        .unwrap()
        .push(serde_json::json!({"sign": 1, "t_exp": 0, "factors": [0, 0, 1], "divisor": 1}));
    let path = scratch("broken.json");
    std::fs::write(&path, sys.to_string()).unwrap();
    let out = run(&["crosscheck", "assoc", "--system-file", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("FAIL at arity 4"), "{text}");
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(run(&["dims", "no_such_operad"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let path = scratch("bad.txt");
    std::fs::write(&path, "operad nonsym\ngen m : 2\nrel m(-,-,-)\n").unwrap();
    let out = run(&["dims", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("arity"));
    assert_eq!(run(&["solve", "alia", "--system", "symmetric"]).status.code(), Some(2));
    assert_eq!(run(&["solve", "assoc", "--emit", "ode"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic_and_writable() {
    let a = run(&["--json", "solve", "nu2", "--n", "8"]).stdout;
    let b = run(&["--json", "solve", "nu2", "--n", "8"]).stdout;
    assert_eq!(a, b);
    let path = scratch("out.json");
    stdout(&["--json", "--out", path.to_str().unwrap(), "--threads", "1", "dims", "nu3", "--n", "6", "--oracle"]);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["dims"], serde_json::json!([1, 2, 12, 120, 1680, 30060]));
}

#[test]
fn growth_and_export() {
    let g = stdout(&["growth", "assoc"]);
    assert!(g.contains("rational expected"), "{g}");
    let g = stdout(&["growth", "free_binary"]);
    assert!(g.contains("exponential-or-faster expected"), "{g}");
    let dsl = stdout(&["export", "asw"]);
    let path = scratch("asw.txt");
    std::fs::write(&path, &dsl).unwrap();
    assert_eq!(stdout(&["export", path.to_str().unwrap()]), dsl);
}
