use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn fixture() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/e1.json")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hom-embed"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn machine(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "machine"]);
    let out = run(&all);
    let v = serde_json::from_slice(&out.stdout).expect("machine output is JSON");
    (code(&out), v)
}

fn temp_copy(dir: &tempfile::TempDir) -> PathBuf {
    let p = dir.path().join("ws.json");
    std::fs::copy(fixture(), &p).unwrap();
    p
}

#[test]
fn fixture_objects_pass_their_checks() {
    let f = fixture();
    let f = f.to_str().unwrap();
    for obj in [
        "e1", "e1-twisted", "ad-e1", "line", "id-e1", "d-e1", "line-t", "id-morphism", "j1", "j2",
        "far", "fund-e1", "hsd-ad-e1",
    ] {
        let out = run(&["check", f, obj]);
        assert_eq!(code(&out), 0, "{obj}: {}", String::from_utf8_lossy(&out.stdout));
    }
}

#[test]
fn non_cocycle_fails_with_exit_one() {
    let f = fixture();
    let (c, v) = machine(&["check", f.to_str().unwrap(), "c1"]);
    assert_eq!(c, 1);
    let verdicts = v["verdicts"].as_array().unwrap();
    assert_eq!(verdicts[0]["passed"], true);
    assert_eq!(verdicts[1]["name"], "cocycle");
    assert_eq!(verdicts[1]["passed"], false);
}

#[test]
fn cohomology_of_identity_tensor() {
    let f = fixture();
    let (c, v) = machine(&["cohomology", f.to_str().unwrap(), "id-e1", "1"]);
    assert_eq!(c, 0);
    let h = &v["cohomology"][0];
    assert_eq!(h["dim_cochain"], 16);
    assert_eq!(h["dim_coboundary"], 0);
    assert_eq!(h["dim_h"], h["dim_cocycle"]);
}

#[test]
fn line_tensor_has_one_dimensional_coboundaries() {
    let f = fixture();
    let (c, v) = machine(&["cohomology", f.to_str().unwrap(), "line-t"]);
    assert_eq!(c, 0);
    assert_eq!(v["cohomology"][0]["dim_coboundary"], 1);
    assert_eq!(v["cohomology"][0]["dim_h"], 3);
}

#[test]
fn capacity_limit_exits_three() {
    let f = fixture();
    let out = run(&["cohomology", f.to_str().unwrap(), "id-e1", "2", "--capacity", "100"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn degree_zero_is_an_input_error() {
    let f = fixture();
    assert_eq!(code(&run(&["cohomology", f.to_str().unwrap(), "id-e1", "0"])), 2);
}

#[test]
fn unresolved_reference_exits_two() {
    let f = fixture();
    assert_eq!(code(&run(&["check", f.to_str().unwrap(), "missing"])), 2);
}

#[test]
fn parse_errors_report_position() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.json");
    std::fs::write(&p, "{\n  \"format_version\": \"1\",\n  \"algebras\": [\n").unwrap();
    let (c, v) = machine(&["check", p.to_str().unwrap(), "x"]);
    assert_eq!(c, 2);
    let msg = v["error"]["message"].as_str().unwrap();
    assert!(msg.contains("line"), "{msg}");
}

#[test]
fn malformed_scalars_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    for bad in ["0.5", "1/0", "abc"] {
        let p = dir.path().join("s.json");
        let text = format!(
            r#"{{"format_version":"1","algebras":{{"a":{{"dim":1,"alpha":[["{bad}"]]}}}}}}"#
        );
        std::fs::write(&p, text).unwrap();
        assert_eq!(code(&run(&["check", p.to_str().unwrap(), "a"])), 2, "{bad}");
    }
}

#[test]
fn dimension_mismatch_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("d.json");
    std::fs::write(
        &p,
        r#"{"format_version":"1","algebras":{"a":{"dim":2,"alpha":[["1","0"]]}}}"#,
    )
    .unwrap();
    assert_eq!(code(&run(&["check", p.to_str().unwrap(), "a"])), 2);
}

#[test]
fn failing_algebra_lists_violations() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("f.json");
    // [e1,e2,e3] = e1 with α = 2·Id is not multiplicative.
    std::fs::write(
        &p,
        r#"{"format_version":"1","algebras":{"a":{"dim":3,
            "alpha":[["2","0","0"],["0","2","0"],["0","0","2"]],
            "bracket":{"1,2,3":["1","0","0"]}}}}"#,
    )
    .unwrap();
    let (c, v) = machine(&["check", p.to_str().unwrap(), "a"]);
    assert_eq!(c, 1);
    let fails = v["failures"].as_array().unwrap();
    assert!(!fails.is_empty());
    let t = fails[0]["tuple"].as_array().unwrap();
    assert!(t.iter().all(|i| i.as_u64().unwrap() >= 1));
}

#[test]
fn deformation_witness_and_search() {
    let f = fixture();
    let f = f.to_str().unwrap();
    let (c, v) = machine(&["deform", f, "j1", "--same-class", "j2", "--witness", "w12"]);
    assert_eq!(c, 0, "{v}");
    assert_eq!(v["verdicts"].as_array().unwrap().len(), 3);
    let (c, v) = machine(&["deform", f, "j1", "--same-class", "j2", "--search-witness"]);
    assert_eq!(c, 0);
    assert!(v["notes"][0].as_str().unwrap().starts_with("witness found"));
    let (c, _) = machine(&["deform", f, "j1", "--same-class", "far"]);
    assert_eq!(c, 1);
    assert_eq!(code(&run(&["deform", f, "j1", "--witness", "w12"])), 2);
}

#[test]
fn derive_then_check_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let ws = temp_copy(&dir);
    let ws = ws.to_str().unwrap();
    let out = dir.path().join("out.json");
    let out = out.to_str().unwrap();
    let r = run(&["derive", ws, "--output", out, "example-tensor", "e1", "sum", "3", "--name", "s3"]);
    assert_eq!(code(&r), 0, "{}", String::from_utf8_lossy(&r.stdout));
    for obj in ["s3", "s3-rep"] {
        assert_eq!(code(&run(&["check", out, obj])), 0, "{obj}");
    }
    let r = run(&["derive", out, "induced-rep", "s3", "--name", "ind"]);
    assert_eq!(code(&r), 0);
    for obj in ["ind", "ind-algebra"] {
        assert_eq!(code(&run(&["check", out, obj])), 0, "{obj}");
    }
    let before = std::fs::read_to_string(ws).unwrap();
    assert_eq!(before, std::fs::read_to_string(fixture()).unwrap());
}

#[test]
fn derive_rejects_bad_parameters() {
    let dir = tempfile::tempdir().unwrap();
    let ws = temp_copy(&dir);
    let ws = ws.to_str().unwrap();
    assert_eq!(code(&run(&["derive", ws, "adjoint", "e1", "--name", "ad-e1"])), 2);
    assert_eq!(
        code(&run(&["derive", ws, "example-tensor", "e1", "projection", "2", "3"])),
        2
    );
    assert_eq!(code(&run(&["derive", ws, "direct-sum", "e1", "0"])), 2);
    // The identity is not square-zero.
    std::fs::write(
        ws,
        std::fs::read_to_string(ws).unwrap().replacen(
            "\"matrices\": {",
            "\"matrices\": {\n    \"eye\": [[\"1\",\"0\",\"0\",\"0\"],[\"0\",\"1\",\"0\",\"0\"],[\"0\",\"0\",\"1\",\"0\"],[\"0\",\"0\",\"0\",\"1\"]],",
            1,
        ),
    )
    .unwrap();
    assert_eq!(
        code(&run(&["derive", ws, "example-tensor", "e1", "derivation", "eye"])),
        1
    );
}

#[test]
fn machine_reports_are_deterministic() {
    let f = fixture();
    let f = f.to_str().unwrap();
    let args = ["cohomology", f, "id-e1", "1", "2", "--format", "machine"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert!(v.get("timing_ms").is_none());
    let (_, t) = machine(&["check", f, "e1", "--timing"]);
    assert!(t["timing_ms"].is_number());
}

#[test]
fn strict_flag_is_accepted() {
    let f = fixture();
    let out = run(&["check", f.to_str().unwrap(), "fund-e1", "--strict-printed-identities"]);
    assert_ne!(code(&out), 2);
}
