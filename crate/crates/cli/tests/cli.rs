use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

use sasakian_core::builtins::builtin;
use sasakian_core::scalar::int;
use sasakian_core::serialize_algebra;

fn sasakian(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sasakian"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("structured output is JSON")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("sasakian-cli-tests-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn cp3_is_formal() {
    let o = sasakian(&["analyze", "--builtin", "cp3", "--analyses", "formality", "--format", "structured"]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    assert_eq!(r["results"]["formality"]["result"]["verdict"], "formal");
    assert_eq!(r["summary"]["formality"], "formal");
}

#[test]
fn cp1_cubed_is_non_formal() {
    let o = sasakian(&[
        "analyze",
        "--builtin",
        "cp1xcp1xcp1",
        "--omega",
        "1,1,1",
        "--analyses",
        "formality,massey",
        "--format",
        "structured",
    ]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    let f = &r["results"]["formality"]["result"];
    assert_eq!(f["verdict"], "non-formal");
    assert_eq!(f["witness"]["value"], "9/2");
    assert_eq!(f["values"], serde_json::json!(["9/2"]));
    let nonzero = r["results"]["massey"]["result"]["nonzero"].as_array().unwrap();
    assert!(nonzero
        .iter()
        .any(|e| e["indices"] == serde_json::json!([2, 1, 1, 2]) && e["value"] == "-9/2"));
    assert!(r["results"].get("gysin").is_none());
}

#[test]
fn text_report_mentions_the_verdict() {
    let o = sasakian(&["analyze", "--builtin", "cp1xcp1xcp1", "--analyses", "formality"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("verdict: non-formal"), "{text}");
    assert!(text.contains("primitive basis: a - b, b - c"), "{text}");
}

#[test]
fn vanishing_omega_cubed_is_inapplicable() {
    let a = builtin("cp1xcp1xcp1").unwrap().with_omega(Some(vec![int(1), int(1), int(0)])).unwrap();
    let path = scratch("degenerate.json", &serialize_algebra(&a));
    let o = sasakian(&["analyze", "--input", path.to_str().unwrap(), "--analyses", "gysin"]);
    assert_eq!(code(&o), 3);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("inapplicable"), "{text}");
}

#[test]
fn odd_kernel_reports_exclusion_and_inapplicable_formality() {
    let o = sasakian(&["analyze", "--builtin", "synthetic-oddker", "--format", "structured"]);
    assert_eq!(code(&o), 3);
    let r = json(&o);
    assert_eq!(r["results"]["gysin"]["result"]["b3"], 3);
    assert_eq!(r["summary"]["sasakian_obstruction"], "Sasakian structure excluded");
    assert_eq!(r["results"]["formality"]["status"], "inapplicable");
}

#[test]
fn full_pipeline_on_h3_algebra() {
    let o = sasakian(&["analyze", "--builtin", "synthetic-h3", "--format", "structured"]);
    assert_eq!(code(&o), 0);
    let r = json(&o);
    for name in ["validate", "hard-lefschetz", "gysin", "obstructions", "formality", "massey", "model"] {
        assert_eq!(r["results"][name]["status"], "completed", "{name}");
    }
    let m = &r["results"]["model"]["result"];
    assert_eq!(m["three_equivalence"], true);
    assert_eq!(m["model_cohomology_dims"], r["results"]["gysin"]["result"]["betti"]);
}

#[test]
fn structured_output_is_deterministic() {
    let args = ["analyze", "--builtin", "synthetic-indefinite", "--format", "structured"];
    let a = sasakian(&args);
    let b = sasakian(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn output_file_and_digest() {
    let dir = std::env::temp_dir().join(format!("sasakian-cli-out-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = dir.join("report.json");
    let o = sasakian(&[
        "analyze",
        "--builtin",
        "cp3",
        "--format",
        "structured",
        "--output",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    assert!(o.stdout.is_empty());
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(r["input"]["digest"].as_str().unwrap().len(), 64);
    assert_eq!(r["tool"]["version"], env!("CARGO_PKG_VERSION"));

    // same algebra from a file gives the same digest
    let path = scratch("cp3.json", &serialize_algebra(&builtin("cp3").unwrap()));
    let o = sasakian(&["validate", "--input", path.to_str().unwrap(), "--format", "structured"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["input"]["digest"], r["input"]["digest"]);
}

#[test]
fn product_expressions() {
    let o = sasakian(&["analyze", "--builtin", "cp2xcp1", "--analyses", "hard-lefschetz", "--format", "structured"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["results"]["hard-lefschetz"]["result"]["hard_lefschetz"]["holds"], true);
}

#[test]
fn invalid_inputs_exit_2() {
    assert_eq!(code(&sasakian(&["analyze", "--builtin", "cp9x"])), 2);
    assert_eq!(code(&sasakian(&["analyze", "--builtin", "cp3", "--omega", "1/0"])), 2);
    assert_eq!(code(&sasakian(&["analyze", "--builtin", "cp3", "--omega", "1,2"])), 2);
    assert_eq!(code(&sasakian(&["analyze", "--builtin", "cp3", "--analyses", "everything"])), 2);
    assert_eq!(code(&sasakian(&["analyze", "--input", "/nonexistent/algebra.json"])), 2);
    assert_eq!(code(&sasakian(&["analyze"])), 2);

    let broken = scratch("broken.json", "{\"top_degree\": 2,");
    let o = sasakian(&["validate", "--input", broken.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line"));

    // h^2 = 0 in top degree 4 breaks Poincare duality
    let doc = r#"{
      "top_degree": 4,
      "basis": [{"degree": 0, "labels": ["1"]}, {"degree": 2, "labels": ["h"]}, {"degree": 4, "labels": ["v"]}],
      "integration": [{"index": 0, "coeff": "1"}],
      "products": [{"left": "h", "right": "h", "value": []}]
    }"#;
    let bad = scratch("degenerate-pd.json", doc);
    let o = sasakian(&["validate", "--input", bad.to_str().unwrap(), "--format", "structured"]);
    assert_eq!(code(&o), 2, "{}", String::from_utf8_lossy(&o.stderr));
    let r = json(&o);
    assert_eq!(r["results"]["validate"]["result"]["valid"], false);
}

#[test]
fn missing_omega_is_invalid() {
    let a = builtin("cp3").unwrap().with_omega(None).unwrap();
    let path = scratch("no-omega.json", &serialize_algebra(&a));
    let p = path.to_str().unwrap();
    assert_eq!(code(&sasakian(&["validate", "--input", p])), 0);
    assert_eq!(code(&sasakian(&["analyze", "--input", p, "--analyses", "gysin"])), 2);
    assert_eq!(code(&sasakian(&["analyze", "--input", p, "--omega", "2", "--analyses", "gysin"])), 0);
}

#[test]
fn builtin_list_names_everything() {
    let o = sasakian(&["builtin-list"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    for name in ["cp1", "cp3", "cp1xcp1xcp1", "cp1xcp2", "synthetic-oddker", "synthetic-cupsq", "synthetic-h3"] {
        assert!(text.lines().any(|l| l.starts_with(name)), "{name}");
    }
}
