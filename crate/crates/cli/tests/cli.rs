use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use hcc_cli::spec::Catalog;
use hcc_core::hopf::group_algebra_cyclic;
use serde_json::Value;

fn specs() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../specs")
}

fn hcc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hcc"))
        .args(args)
        .env_remove("HCC_MAX_DEGREE")
        .output()
        .expect("run hcc")
}

fn spec_path(name: &str) -> String {
    specs().join(name).display().to_string()
}

fn write_spec(dir: &tempfile::TempDir, text: &str) -> String {
    let p = dir.path().join("spec.json");
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json report")
}

#[test]
fn explicit_z2_matches_the_builtin() {
    let text = std::fs::read_to_string(specs().join("z2.json")).unwrap();
    let catalog = Catalog::from_json(&text).unwrap();
    let mut parsed = (*catalog.hopf["Z2"]).clone();
    let builtin = group_algebra_cyclic(2);
    parsed.name = builtin.name.clone();
    assert_eq!(parsed, builtin);
}

#[test]
fn decimal_literals_are_rejected() {
    for lit in ["\"0.5\"", "0.5"] {
        let text = format!(
            r#"{{"modules": {{"N": {{"hopf": "group:Z2", "modular_pair": {{"delta": [{lit}, "1"], "sigma": ["1", "0"]}}}}}}}}"#
        );
        let err = Catalog::from_json(&text).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        assert!(err.to_string().contains("modules.N"), "{err}");
    }
}

#[test]
fn undeclared_hopf_algebra_is_an_unresolved_name() {
    let err = Catalog::from_json(r#"{"modules": {"N": {"hopf": "nowhere", "builtin": "trivial"}}}"#).unwrap_err();
    assert!(err.to_string().contains("unresolved name"), "{err}");
}

#[test]
fn malformed_json_reports_its_position() {
    let err = Catalog::from_json("{\n  \"modules\": [\n").unwrap_err();
    assert!(err.to_string().contains("line"), "{err}");
}

#[test]
fn builtin_catalog_passes() {
    let out = hcc(&["--format", "json", "check", &spec_path("builtins.json")]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    assert_eq!(json(&out)["status"], "pass");
}

#[test]
fn corrupted_antipode_fails_by_name() {
    let text = std::fs::read_to_string(specs().join("z2.json")).unwrap();
    let mut spec: Value = serde_json::from_str(&text).unwrap();
    spec["hopf_algebras"]["Z2"]["antipode"][1][2] = Value::from("2");
    let dir = tempfile::tempdir().unwrap();
    let path = write_spec(&dir, &spec.to_string());
    let out = hcc(&["--format", "json", "check", &path, "Z2"]);
    assert_eq!(out.status.code(), Some(1));
    let report = json(&out);
    let failed: Vec<&str> = report["sections"][0]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert!(failed.iter().any(|n| n.contains("antipode") || n.contains("S")), "{failed:?}");
}

#[test]
fn unknown_object_exits_2() {
    let out = hcc(&["check", &spec_path("trivial.json"), "nope"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cohomology_of_the_ground_field() {
    let out = hcc(&["--format", "json", "cohomology", &spec_path("trivial.json"), "plain_Q", "--max-degree", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let dims: Vec<u64> = json(&out)["cohomology"]["degrees"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["cyclic"]["dim"].as_u64().unwrap())
        .collect();
    assert_eq!(dims, [1, 0, 1, 0]);
}

#[test]
fn cyclic_zero_of_z2_is_two_dimensional() {
    let out = hcc(&["--format", "json", "cohomology", &spec_path("z2.json"), "plain_Z2", "--max-degree", "0"]);
    assert_eq!(json(&out)["cohomology"]["degrees"][0]["cyclic"]["dim"], 2);
}

#[test]
fn degree_beyond_the_cap_exits_2() {
    let out = hcc(&["cohomology", &spec_path("trivial.json"), "plain_Q", "--max-degree", "5"]);
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_hcc"))
        .args(["cohomology", &spec_path("trivial.json"), "plain_Q", "--max-degree", "3"])
        .env("HCC_MAX_DEGREE", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn trivial_cup_is_the_trace() {
    let out = hcc(&[
        "--format", "json", "cup", &spec_path("trivial.json"), "--variant", "ac", "--p", "0", "--q", "0", "--left",
        "phi0", "--right", "omega0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let cup = &json(&out)["cup"];
    assert_eq!(cup["cocycle"]["components"], serde_json::json!([["1"]]));
    assert_eq!(cup["top_values"][0]["value"], "1");
}

#[test]
fn general_cup_reports_the_collapse() {
    let out = hcc(&[
        "--format", "json", "cup", &spec_path("z2.json"), "--variant", "ac-general", "--p", "0", "--q", "0",
        "--left", "phi_g", "--right", "omega0",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let sections = json(&out)["sections"].clone();
    let collapse = sections
        .as_array()
        .unwrap()
        .iter()
        .find(|s| s["subject"].as_str().unwrap().starts_with("collapse"))
        .expect("collapse section");
    assert_eq!(collapse["checks"][0]["passed"], true);
}

#[test]
fn non_cocycle_is_rejected_by_name() {
    let text = std::fs::read_to_string(specs().join("trivial.json")).unwrap();
    let mut spec: Value = serde_json::from_str(&text).unwrap();
    spec["cochains"]["bad1"] = serde_json::json!({"construction": "A_M", "degree": 1, "values": ["1"]});
    let dir = tempfile::tempdir().unwrap();
    let path = write_spec(&dir, &spec.to_string());
    let out = hcc(&[
        "--format", "json", "cup", &path, "--variant", "ac", "--p", "1", "--q", "0", "--left", "bad1", "--right",
        "omega0",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let report = json(&out);
    let msg = report["error"].as_str().unwrap();
    assert!(msg.contains("left input") && msg.contains("b-cocycle"), "{msg}");
}

#[test]
fn reruns_are_byte_identical() {
    let args = [
        "--format", "json", "cup", &spec_path("z2.json"), "--variant", "aa-general", "--p", "0", "--q", "0",
        "--left", "psi0", "--right", "phi_1",
    ];
    let a = hcc(&args);
    let b = hcc(&args);
    assert_eq!(a.stdout, b.stdout);
    let c = hcc(&["--format", "json", "check", &spec_path("builtins.json")]);
    let d = hcc(&["--format", "json", "check", &spec_path("builtins.json")]);
    assert_eq!(c.stdout, d.stdout);
}
