use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn arf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arf"))
        .args(args)
        .env_remove("ARF_MAX_LEVEL")
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const HYPERBOLIC2: &str = r#"{"field": "gf2:1:3", "dim": 2, "gram": [[0, 1], [1, 0]], "diag": [0, 0]}"#;
const QT: &str = r#"{"field": "f2t", "dim": 2, "gram": [["0", "1"], ["1", "0"]], "diag": ["1", "t"]}"#;

#[test]
fn arf_of_hyperbolic_plane_is_zero() {
    let dir = TempDir::new().unwrap();
    let form = write(&dir, "hyperbolic2.json", HYPERBOLIC2);
    let out = arf(&["arf", "--field", "gf2:1:3", "--form", s(&form), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["verb"], "arf");
    assert_eq!(v["field"], "gf2:1:3");
    assert_eq!(v["result"]["class"], 0);
    assert!(v["witnesses"].is_object());
}

#[test]
fn as_solve_of_t_is_absent() {
    let out = arf(&["as-solve", "--field", "f2t", "--expr", "t", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json_of(&out)["result"]["solution"], Value::Null);
}

#[test]
fn as_solve_present_solution_reparses() {
    let out = arf(&["as-solve", "--field", "f2t", "--expr", "t^2+t", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["result"]["solution"], "t");

    let out = arf(&["as-solve", "--field", "gf2:3:11", "--expr", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(1), "trace of 1 in GF(8) is 1");
}

#[test]
fn diagram_check_on_qt() {
    let dir = TempDir::new().unwrap();
    let form = write(&dir, "qt.json", QT);
    let out = arf(&["diagram-check", "--level", "1", "--form", s(&form), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["result"]["commutes"], true);
}

#[test]
fn class_eq_exit_codes() {
    let same = arf(&["class-eq", "--field", "gf2:2:7", "--expr", "2", "--expr", "3"]);
    assert_eq!(same.status.code(), Some(0));
    let differ = arf(&["class-eq", "--field", "gf2:2:7", "--expr", "0", "--expr", "2"]);
    assert_eq!(differ.status.code(), Some(1));
    let tower = arf(&["class-eq", "--field", "f2t-tower:1", "--expr", "t", "--expr", "level=1; u"]);
    assert_eq!(tower.status.code(), Some(0), "t = u² ~ u at level 1");
}

#[test]
fn errors_exit_2_with_code() {
    let out = arf(&["as-solve", "--field", "gf2:2:5", "--expr", "1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json_of(&out)["error"]["code"], "ReducibleModulus");

    let out = arf(&["as-solve", "--field", "f2t", "--expr", "t^", "--format", "json"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json_of(&out)["error"]["code"], "ParseError");

    let out = arf(&["class-eq", "--field", "f2t", "--expr", "t", "--format", "json"]);
    assert_eq!(out.status.code(), Some(2), "arity is checked first");
    assert_eq!(json_of(&out)["error"]["code"], "UsageError");

    let dir = TempDir::new().unwrap();
    let degenerate = write(
        &dir,
        "zero.json",
        r#"{"field": "gf2:1:3", "dim": 2, "gram": [[0, 0], [0, 0]], "diag": [1, 0]}"#,
    );
    let out = arf(&["arf", "--form", s(&degenerate), "--format", "json"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json_of(&out)["error"]["code"], "DegenerateForm");

    let form = write(&dir, "h.json", HYPERBOLIC2);
    let out = arf(&["arf", "--field", "gf2:2:7", "--form", s(&form)]);
    assert_eq!(out.status.code(), Some(2), "field must match the form");
}

#[test]
fn max_level_env_caps_tower() {
    let out = Command::new(env!("CARGO_BIN_EXE_arf"))
        .args(["descend", "--expr", "level=3; u", "--format", "json"])
        .env("ARF_MAX_LEVEL", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json_of(&out)["error"]["code"], "LevelCapExceeded");
}

#[test]
fn descend_reports_identity() {
    let out = arf(&["descend", "--expr", "level=2; u^3+1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["result"]["y"], "t^3+1");
    assert_eq!(v["result"]["height"], 2);
    assert_eq!(v["witnesses"]["identity_holds"], true);
}

#[test]
fn witt_and_parf_on_anisotropic_plane() {
    let dir = TempDir::new().unwrap();
    let form = write(
        &dir,
        "aniso.json",
        r#"{"field": "gf2:1:3", "dim": 2, "gram": [[0, 1], [1, 0]], "diag": [1, 1]}"#,
    );
    let out = arf(&["witt", "--form", s(&form), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["result"]["arf_bit"], 1);
    assert_eq!(v["result"]["neutral"], false);
    let out = arf(&["parf", "--form", s(&form), "--format", "json"]);
    assert_eq!(json_of(&out)["result"]["class"], 1);
}

#[test]
fn printed_form_reparses() {
    let dir = TempDir::new().unwrap();
    let form = write(&dir, "qt.json", QT);
    let out = arf(&["symplectic", "--form", s(&form), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let f = v["result"]["f"][0].as_array().unwrap();
    let rebuilt = format!(
        r#"{{"field": "f2t", "dim": 2, "gram": [["0", "1"], ["1", "0"]], "diag": [{}, {}]}}"#,
        f[0], f[1]
    );
    let again = write(&dir, "again.json", &rebuilt);
    assert_eq!(arf(&["arf", "--form", s(&again)]).status.code(), Some(0));
}

#[test]
fn selftest_is_deterministic_and_catches_corruption() {
    let a = arf(&["selftest", "--seed", "11"]);
    let b = arf(&["selftest", "--seed", "11"]);
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stdout));
    assert_eq!(a.stdout, b.stdout);
    let bad = arf(&["selftest", "--inject-corrupt-modulus"]);
    assert_ne!(bad.status.code(), Some(0));
    let text = String::from_utf8_lossy(&bad.stdout);
    assert!(text.lines().any(|l| l.starts_with("[FAIL]") && l.contains("gf2n")));
}
