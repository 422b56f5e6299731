use std::fs;
use std::process::Command;

fn curling() -> Command {
    Command::new(env!("CARGO_BIN_EXE_curling"))
}

#[test]
fn eval_torus_json() {
    let out = curling()
        .args(["eval", "C3 box C3", "--json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["cn"], 9);
    assert_eq!(json["cnc"], 9);
    assert_eq!(json["order"], 9);
    assert_eq!(json["size"], 18);
    assert_eq!(json["string_cn"], 9);
}

#[test]
fn fast_json_omits_materialized_fields() {
    let out = curling()
        .args(["eval", "C4 x P2", "--json", "--fast"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let keys: Vec<&String> = json.as_object().unwrap().keys().collect();
    assert_eq!(keys.len(), 4, "{keys:?}");
    assert_eq!(
        (json["cn"].as_u64(), json["cnc"].as_u64()),
        (Some(8), Some(8))
    );
}

#[test]
fn file_subcommand_and_file_atoms() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p4.el");
    fs::write(&path, "# a path\nn 4\n0 1\n1 2\n2 3\n").unwrap();

    let out = curling()
        .arg("file")
        .arg(&path)
        .arg("--json")
        .output()
        .unwrap();
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(json["degree_sequence"], serde_json::json!([2, 2, 1, 1]));
    assert_eq!(
        (json["cn"].as_u64(), json["cnc"].as_u64()),
        (Some(2), Some(4))
    );

    let out = curling()
        .current_dir(dir.path())
        .args(["eval", "file(p4.el) box P4", "--json"])
        .output()
        .unwrap();
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let json: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        (json["cn"].as_u64(), json["cnc"].as_u64()),
        (Some(8), Some(128))
    );
}

#[test]
fn bad_edge_list_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.el");
    fs::write(&path, "n 3\n0 5\n").unwrap();
    let out = curling().arg("file").arg(&path).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("out of range"));
}

#[test]
fn missing_file_exits_2() {
    let out = curling().args(["file", "missing.el"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("missing.el"));
}

#[test]
fn parse_errors_exit_2() {
    for expr in ["P4 box", "Q3", "C2", "(P3"] {
        let out = curling().args(["eval", expr]).output().unwrap();
        assert_eq!(out.status.code(), Some(2), "{expr}");
    }
}

#[test]
fn check_small_run() {
    let out = curling()
        .args([
            "check",
            "--ranges",
            "3..6",
            "--samples",
            "20",
            "--seed",
            "7",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("0 fail"), "{text}");
    assert!(text.contains("seed 7"), "{text}");
}
