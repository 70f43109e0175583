use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn tests_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests")
}

fn devsurf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_devsurf"))
        .args(args)
        .current_dir(tests_dir())
        .output()
        .expect("run devsurf")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn golden(kind: &str, name: &str) {
    let input = format!("data/{name}.txt");
    let out = devsurf(&[kind, "--no-timings", &input]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let want = std::fs::read(tests_dir().join(format!("golden/{name}.json"))).unwrap();
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&want),
        "report for {name} drifted"
    );
    // The printed parametrization must pass `verify` against the printed implicit equation.
    let r = json(&out);
    let f = r["implicit"].as_str().unwrap();
    let p = r["parametrization"]["surface"].as_str().unwrap();
    assert_eq!(code(&devsurf(&["verify", f, p])), 0);
}

#[test]
fn golden_cone_implicit() {
    golden("implicit", "cone_implicit");
}

#[test]
fn golden_cylinder_implicit() {
    golden("implicit", "cylinder_implicit");
}

#[test]
fn golden_tangent_implicit() {
    golden("implicit", "tangent_implicit");
}

#[test]
fn golden_cone_parametric() {
    golden("parametric", "cone_parametric");
}

#[test]
fn golden_tangent_parametric() {
    golden("parametric", "tangent_parametric");
}

#[test]
fn cone_apex_in_report() {
    let out = devsurf(&["implicit", "4*x^2 + 9*y^2 - 4*x - 6*y - z^2 + 2"]);
    assert_eq!(code(&out), 0);
    let r = json(&out);
    assert_eq!(r["classification"]["kind"], "Conical");
    assert_eq!(
        r["classification"]["apex"],
        serde_json::json!(["1/2", "1/3", "0"])
    );
    assert!(r["timings_ms"].as_array().is_some_and(|t| !t.is_empty()));
}

#[test]
fn sphere_is_not_developable() {
    let out = devsurf(&["implicit", "x^2 + y^2 + z^2 - 1"]);
    assert_eq!(code(&out), 3);
    let r = json(&out);
    assert_eq!(r["message"], "not a developable surface");
    assert_eq!(r["k_poly"], "-16*x^2 - 16*y^2 - 16*z^2");
    assert!(r["parametrization"].is_null());
}

#[test]
fn syntax_error_reports_location() {
    let out = devsurf(&["implicit", "x^2 +"]);
    assert_eq!(code(&out), 1);
    let r = json(&out);
    assert_eq!(r["error"]["line"], 1);
    assert_eq!(r["error"]["column"], 6);
    assert!(String::from_utf8_lossy(&out.stderr).contains("1:6"));
}

#[test]
fn parametric_exit_codes() {
    assert_eq!(code(&devsurf(&["parametric", "(s, t, s*t)"])), 3);
    let out = devsurf(&["parametric", "(t, t^2, t^3)"]);
    assert_eq!(code(&out), 2);
    assert!(json(&out)["message"]
        .as_str()
        .unwrap()
        .contains("degenerate"));
    assert_eq!(code(&devsurf(&["parametric", "(s, t)"])), 1);
}

#[test]
fn verify_exit_codes() {
    let f = "data/cylinder_implicit.txt";
    let good = "(-625/6561*t^4 + 2375/2187*t^3 - 1175/243*t^2 + s + 2495/243*t - 781/81, \
                625/6561*t^4 - 2750/2187*t^3 + 1475/243*t^2 - s - 2810/243*t + 649/81, -s + 1)";
    let out = devsurf(&["verify", f, good]);
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["verified"], true);
    let cylinder = "((1 - t^2)/(1 + t^2), 2*t/(1 + t^2), s)";
    assert_eq!(
        code(&devsurf(&["verify", "data/cone_implicit.txt", cylinder])),
        4
    );
    assert_eq!(code(&devsurf(&["verify", f, "(s, t"])), 1);
}

#[test]
fn file_input_and_jobs_keep_order() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.txt");
    std::fs::write(&a, "x^2 + y^2 - 1\n").unwrap();
    let a = a.to_str().unwrap();
    let out = devsurf(&[
        "implicit",
        "--jobs",
        "3",
        "--no-timings",
        a,
        "x^2 + y^2 + z^2 - 1",
        "z",
    ]);
    assert_eq!(code(&out), 3);
    let r = json(&out);
    let kinds: Vec<&str> = r
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["classification"]["kind"].as_str().unwrap())
        .collect();
    assert_eq!(kinds, ["Cylindrical", "NotDevelopable", "Plane"]);
    assert_eq!(r[0]["input"]["file"], a);
}

#[test]
fn pretty_report() {
    let out = devsurf(&["implicit", "--pretty", "x^2 + y^2 - z^2"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("cone, apex (0, 0, 0)"));
}

#[test]
fn mesh_cone_grid() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cone.obj");
    let out = devsurf(&[
        "mesh",
        "((1 - s)/2 + s*t, (1 - s)/3 + s*t^2, s)",
        "--s",
        "0:1",
        "--t",
        "-3:3",
        "--res",
        "20",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert!(!String::from_utf8_lossy(&out.stderr).contains("poles"));
    let text = std::fs::read_to_string(path).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 400);
}

#[test]
fn mesh_poles_and_bad_resolution() {
    let map = "(s, t, 1/(t - 1)^2)";
    let out = devsurf(&["mesh", map, "--s", "0:1", "--t", "0:2", "--res", "5"]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stderr).contains("skipped 5 samples"));
    let out = devsurf(&["mesh", map, "--s", "0:1", "--t", "0:2", "--res", "0"]);
    assert_eq!(code(&out), 1);
    let out = devsurf(&["mesh", map, "--s", "0:1", "--t", "1:1", "--res", "3"]);
    assert_eq!(code(&out), 1);
}
