use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn gdu(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gdu")).args(args).output().expect("run gdu")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn machine(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "machine"]);
    let o = gdu(&all);
    let v: Value = serde_json::from_slice(&o.stdout).expect("valid json");
    (v, o.status.code().unwrap())
}

fn check<'a>(report: &'a Value, name: &str) -> &'a Value {
    report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == name)
        .unwrap_or_else(|| panic!("no check {name} in {report}"))
}

fn spec_file(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::Builder::new().suffix(".toml").tempfile().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn certify_sl2_passes() {
    let (r, code) = machine(&["certify", "--preset", "sl2"]);
    assert_eq!(code, 0);
    assert_eq!(r["schema"], 1);
    assert_eq!(r["ok"], true);
    for name in ["groebner", "pbw", "solvable", "ordering-axioms"] {
        assert_eq!(check(&r, name)["status"], "pass", "{name}");
    }
    assert_eq!(r["algebra"]["gamma"], "2");
}

#[test]
fn certify_every_preset() {
    for p in ["sl2", "smith", "woronowicz", "conformal", "down_up"] {
        let (r, code) = machine(&["certify", "--preset", p]);
        assert_eq!(code, 0, "{p}: {r}");
    }
}

#[test]
fn lambda_zero_skips_solvable() {
    let f = spec_file("lambda = 0\nomega = 1\ngamma = 1\nf = [1, 2, 3]\n");
    let (r, code) = machine(&["certify", "--spec", f.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(check(&r, "groebner")["status"], "pass");
    let s = check(&r, "solvable");
    assert_eq!(s["status"], "skipped");
    assert!(s["detail"].as_str().unwrap().contains("λω ≠ 0"));
}

#[test]
fn random_spec_is_reproducible() {
    let f = spec_file("[preset]\nname = \"random\"\ndegree = 3\n");
    let path = f.path().to_str().unwrap();
    let a = gdu(&["certify", "--spec", path, "--seed", "11"]);
    let b = gdu(&["certify", "--spec", path, "--seed", "11"]);
    let c = gdu(&["certify", "--spec", path, "--seed", "12"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    assert_ne!(stdout(&a), stdout(&c));
}

#[test]
fn normal_forms_on_sl2() {
    let nf = |e: &str| {
        let (r, code) = machine(&["nf", "--preset", "sl2", e]);
        assert_eq!(code, 0);
        check(&r, "normal-form")["values"]["normal_form"].as_str().unwrap().to_string()
    };
    assert_eq!(nf("X3*X1"), "X1·X3 − 2·X3");
    assert_eq!(nf("1"), "1");
    // X3X1 → X1X3 − 2X3, X3X2 → X2X3 + X1, X1X2 → X2X1 − 2X2, applied by hand.
    assert_eq!(nf("X3*X1*X2"), "X2·X1·X3 + X1^2 − 4·X2·X3 − 2·X1");
    assert_eq!(nf("X2*X1*X3"), "X2·X1·X3");
}

#[test]
fn hilbert_sl2_is_binomial() {
    let (r, code) = machine(&["graded", "hilbert", "--preset", "sl2", "--degree", "12"]);
    assert_eq!(code, 0);
    let coeffs: Vec<u64> = check(&r, "hilbert")["values"]["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    let expected: Vec<u64> = (0..=12).map(|q| binomial(q + 3, 3)).collect();
    assert_eq!(coeffs, expected);
}

#[test]
fn gk_dimensions() {
    let (r, code) = machine(&["graded", "gk", "--preset", "sl2"]);
    assert_eq!(code, 0);
    assert_eq!(check(&r, "gk-A")["status"], "pass");
    assert_eq!(check(&r, "gk-H")["status"], "pass");
    let text = stdout(&gdu(&["graded", "gk", "--preset", "conformal"]));
    assert!(text.contains("= 3") && text.contains("= 4"), "{text}");
}

#[test]
fn quadratic_false_for_weighted_cubic() {
    let f = spec_file("lambda = 1\nomega = 2\ngamma = 1\nf = [0, 1, 0, 1]\nscheme = \"deg-f\"\n");
    let (r, code) = machine(&["graded", "quadratic", "--spec", f.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(check(&r, "quadratic")["values"]["quadratic"], false);
    let (r, _) = machine(&["graded", "quadratic", "--preset", "sl2"]);
    assert_eq!(check(&r, "quadratic")["values"]["quadratic"], true);
}

#[test]
fn rees_and_assoc_pass() {
    for cmd in ["rees", "assoc", "homogenize"] {
        let (r, code) = machine(&["graded", cmd, "--preset", "woronowicz"]);
        assert_eq!(code, 0, "{cmd}: {r}");
    }
}

#[test]
fn float_in_spec_is_a_positioned_error() {
    let f = spec_file("lambda = 1\nomega = 0.5\ngamma = 1\nf = [1]\n");
    let o = gdu(&["certify", "--spec", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 2, column 9"), "{err}");
}

#[test]
fn malformed_inputs_exit_two() {
    let f = spec_file("lambda = 1\nomega = 1\n[preset]\nname = \"sl2\"\n");
    assert_eq!(gdu(&["certify", "--spec", f.path().to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(gdu(&["nf", "--preset", "sl2", "X4*X1"]).status.code(), Some(2));
    assert_eq!(gdu(&["certify", "--spec", "/nonexistent.toml"]).status.code(), Some(2));
}

#[test]
fn presets_list_names_everything() {
    let o = gdu(&["presets", "list"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for p in ["sl2", "smith", "woronowicz", "conformal", "down_up", "random"] {
        assert!(text.contains(p), "{p}");
    }
}
