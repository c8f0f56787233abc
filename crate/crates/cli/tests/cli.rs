use std::process::{Command, Output};

fn hbk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hbk")).args(args).output().expect("run hbk")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn tmp(name: &str, text: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("hbk-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

#[test]
fn b4m_theta() {
    let o = hbk(&["invariant", "--family", "b4m", "--m", "5", "--tangle", "theta"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).lines().any(|l| l == "v = 400"), "{}", stdout(&o));
}

#[test]
fn group_theta_with_checks() {
    let o = hbk(&[
        "invariant", "--family", "group", "--group", "S3", "--tangle", "theta", "--check-horns", "--scale", "3",
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("v = 36"), "{out}");
    assert!(out.contains("independent"));
    assert!(out.contains("scaling laws: hold"));
}

#[test]
fn uq_trivial_knot_vanishes() {
    let o = hbk(&["invariant", "--family", "uq", "--n", "3", "--tangle", "O"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("v = 0") && out.contains("F = 0"), "{out}");
}

#[test]
fn tangle_expression_and_file() {
    let o = hbk(&["invariant", "--family", "group", "--group", "Z3", "--tangle", "cap . cup"]);
    assert!(stdout(&o).contains("v = 3"), "{}", stderr(&o));
    let p = tmp("theta.tangle", "cap . (mu & id) . (nu & id) . cup\n");
    let o = hbk(&["invariant", "--family", "group", "--group", "Z3", "--tangle", p.to_str().unwrap()]);
    assert!(stdout(&o).contains("v = 9"), "{}", stderr(&o));
}

#[test]
fn table_row() {
    let o = hbk(&["table", "--m", "3..7", "--tangle", "theta"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    let row: Vec<&str> = out.lines().find(|l| l.starts_with("theta")).unwrap().split_whitespace().collect();
    assert_eq!(row, ["theta", "144", "256", "400", "576", "784"]);
}

#[test]
fn json_is_deterministic() {
    let args = ["invariant", "--family", "double", "--group", "Z2", "--tangle", "theta", "--json"];
    let a = hbk(&args);
    let b = hbk(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert!(v.is_object());
}

#[test]
fn verify_passes() {
    let o = hbk(&["verify", "--family", "group", "--group", "Z3"]);
    assert!(o.status.success(), "{}{}", stdout(&o), stderr(&o));
}

#[test]
fn export_round_trips_through_raw() {
    let o = hbk(&["export", "--family", "b4m", "--m", "3"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let p = tmp("b12.hopf", &text);
    let o = hbk(&["invariant", "--family", "raw", "--file", p.to_str().unwrap(), "--tangle", "theta"]);
    assert!(stdout(&o).contains("v = 144"), "{}", stderr(&o));
    let again = hbk(&["export", "--family", "raw", "--file", p.to_str().unwrap()]);
    assert_eq!(stdout(&again), text);
}

#[test]
fn broken_raw_file_names_the_axiom() {
    let o = hbk(&["export", "--family", "group", "--group", "Z2"]);
    let text = stdout(&o).replace("1 1 -> 0 : 1", "1 1 -> 1 : 1");
    let p = tmp("broken.hopf", &text);
    let o = hbk(&["verify", "--family", "raw", "--file", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("antipode"), "{}", stderr(&o));
}

#[test]
fn usage_errors() {
    for args in [
        vec!["invariant", "--family", "group", "--tangle", "theta"],
        vec!["invariant", "--family", "group", "--group", "Z3", "--tangle", "cap & cup"],
        vec!["invariant", "--family", "group", "--group", "Z3", "--tangle", "cap . ( cup"],
        vec!["table", "--m", "2..4"],
        vec!["frobnicate"],
    ] {
        let o = hbk(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
    }
}

const SWEEDLER: &str = "hopf v1 dim=4 conductor=1 name=H4
LABELS
0 : 1
1 : g
2 : x
3 : gx
MULT
0 0 -> 0 : 1
0 1 -> 1 : 1
0 2 -> 2 : 1
0 3 -> 3 : 1
1 0 -> 1 : 1
2 0 -> 2 : 1
3 0 -> 3 : 1
1 1 -> 0 : 1
1 2 -> 3 : 1
1 3 -> 2 : 1
2 1 -> 3 : -1
3 1 -> 2 : -1
UNIT
-> 0 : 1
COMULT
0 -> 0 0 : 1
1 -> 1 1 : 1
2 -> 2 0 : 1
2 -> 1 2 : 1
3 -> 3 1 : 1
3 -> 0 3 : 1
COUNIT
0 : 1
1 : 1
ANTIPODE
0 -> 0 : 1
1 -> 1 : 1
2 -> 3 : -1
3 -> 2 : 1
ANTIPODE_INV
0 -> 0 : 1
1 -> 1 : 1
2 -> 3 : 1
3 -> 2 : -1
";

#[test]
fn non_unimodular_algebra_is_unsupported() {
    let p = tmp("sweedler.hopf", SWEEDLER);
    let o = hbk(&["invariant", "--family", "raw", "--file", p.to_str().unwrap(), "--tangle", "O"]);
    assert_eq!(o.status.code(), Some(3), "{}{}", stdout(&o), stderr(&o));
}
