use std::path::Path;
use std::process::{Command, Output};

fn loopalg(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_loopalg"))
        .args(args)
        .env("LOOPALG_CACHE_DIR", cache)
        .output()
        .expect("binary runs")
}

#[test]
fn json_report_has_schema_fields() {
    let dir = tempfile::tempdir().unwrap();
    let out = loopalg(dir.path(), &["compute", "--family", "su", "--rank", "2", "--max-degree", "6", "--format", "json"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    for key in ["family", "rank", "coeffs", "max_degree", "generators", "relations", "poincare", "checks", "schema_version"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["poincare"], serde_json::json!([1, 2, 2, 2, 3, 4, 4]));
    assert_eq!(v["family"], "su");
}

#[test]
fn output_is_byte_identical_across_runs() {
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let args = ["compute", "--family", "g2", "--coeffs", "integer", "--max-degree", "8", "--format", "json"];
    let first = loopalg(a.path(), &args);
    let second = loopalg(b.path(), &args);
    let cached = loopalg(a.path(), &["report", "--family", "g2", "--coeffs", "integer", "--max-degree", "8", "--format", "json", "--no-compute"]);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stdout, cached.stdout);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let code = |args: &[&str]| loopalg(dir.path(), args).status.code();
    assert_eq!(code(&["verify", "--family", "su", "--rank", "3"]), Some(0));
    assert_eq!(code(&["compute", "--family", "x9"]), Some(2));
    assert_eq!(code(&["verify", "--family", "sp", "--rank", "3", "--budget", "3"]), Some(3));
    let torsion = loopalg(
        dir.path(),
        &["verify", "--family", "su", "--rank", "2", "--coeffs", "integer", "--max-degree", "4", "--inject-torsion"],
    );
    assert_eq!(torsion.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&torsion.stderr).contains("torsion_free_check"));
}

#[test]
fn series_prints_coefficients() {
    let dir = tempfile::tempdir().unwrap();
    let out = loopalg(dir.path(), &["series", "--family", "su", "--rank", "2", "--max-degree", "5"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "[1,2,2,2,3,4]");
}
