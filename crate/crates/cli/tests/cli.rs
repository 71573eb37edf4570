use std::process::{Command, Output};

use serde_json::{json, Value};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fused-mackey")).args(args).output().expect("binary runs")
}

fn json_of(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn ranks_of_c2() {
    assert_eq!(json_of(&["mackey-rank", "--group", "C2"]), json!({"rank": 6}));
    assert_eq!(json_of(&["fused-rank", "--group", "C2"]), json!({"rank": 5}));
    assert_eq!(json_of(&["kernel", "--group", "C2"])["rank"], 1);
    assert_eq!(json_of(&["mackey-rank", "--group", "C1"]), json!({"rank": 1}));
    let v = json_of(&["mackey-rank", "--all-subgroups", "--group", "S3"]);
    assert_eq!(v["corner_rank"], v["rank"]);
    assert!(v["all_subgroups_rank"].as_u64() > v["rank"].as_u64());
}

#[test]
fn verify_trivial_group_passes() {
    let out = run(&["verify", "--group", "C1", "--suite", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert!(v["checks"].as_array().unwrap().len() > 30);
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        &["structure-constants", "--group", "S3"][..],
        &["structure-constants", "--group", "S3", "--fused", "--format", "csv"],
        &["verify", "--group", "C2", "--suite", "fused_cat", "--seed", "17", "--trials", "20"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn structure_constants_csv_header() {
    let out = run(&["structure-constants", "--group", "C2", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("i,j,k,coeff"));
    assert!(lines.all(|l| l.split(',').count() == 4));
}

#[test]
fn homs_and_functors() {
    let basis = json_of(&["span-hom", "pt", "G/0", "--group", "C2"]);
    let first = &basis.as_array().unwrap()[0];
    for key in ["mid_subgroup_class", "src_point", "tgt_point"] {
        assert!(first.get(key).is_some());
    }
    let h = json_of(&["fused-hom", "Omega", "Omega", "--group", "C2"]);
    assert_eq!((h["unfused_rank"].as_u64(), h["fused_rank"].as_u64()), (Some(6), Some(5)));

    let f = json_of(&["fuse-functor", "--functor", "yoneda:G/0", "--group", "C2"]);
    assert_eq!((f["rank"].as_u64(), f["fused_rank"].as_u64()), (Some(3), Some(2)));
    let b = json_of(&["fuse-functor", "--functor", "burnside", "--group", "S3"]);
    assert_eq!(b["collapsed"], false);
    assert_eq!(json_of(&["is-fused", "--functor", "burnside", "--group", "S3"])["is_fused"], true);
    let y = json_of(&["is-fused", "--functor", "yoneda:G/0", "--group", "C2"]);
    assert_eq!(y["is_fused"], false);
    assert!(!y["witnesses"].as_array().unwrap().is_empty());
}

#[test]
fn marks_of_c2() {
    assert_eq!(json_of(&["marks", "--group", "C2"]), json!({"marks": [[2, 1], [0, 1]]}));
}

#[test]
fn group_json_input() {
    let path = std::env::temp_dir().join(format!("fm-cli-{}.json", std::process::id()));
    std::fs::write(&path, r#"{"degree": 3, "generators": [[2, 3, 1]]}"#).unwrap();
    let v = json_of(&["mackey-rank", "--group", path.to_str().unwrap()]);
    std::fs::write(&path, "{\"degree\": 3, \"generators\": [[1, 1, 2]]}").unwrap();
    let bad = run(&["mackey-rank", "--group", path.to_str().unwrap()]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(v, json_of(&["mackey-rank", "--group", "C3"]));
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn input_errors_exit_2() {
    for args in [
        &["mackey-rank", "--group", "nonsense"][..],
        &["frobnicate"],
        &["mackey-rank", "--bogus"],
        &["span-hom", "G/7", "pt", "--group", "C2"],
        &["verify", "--suite", "nope"],
        &["mackey-rank", "--group", "S4", "--max-order", "10"],
        &["is-fused", "--functor", "json:/nonexistent/file.json"],
        &["mackey-rank", "--format", "csv"],
        &["mackey-rank", "--all-subgroups", "--group", "D4"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
}
