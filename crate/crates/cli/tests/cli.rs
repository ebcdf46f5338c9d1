use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn ilo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ilo"))
        .args(args)
        .env_remove("ILO_MAX_ORDER")
        .output()
        .expect("binary runs")
}

fn fixture(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "fixtures", name].iter().collect();
    path.to_string_lossy().into_owned()
}

fn lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).expect("every line is JSON"))
        .collect()
}

#[test]
fn enumerate_quandles_up_to_iso() {
    let out = ilo(&["enumerate", "--order", "3", "--class", "quandle", "--up-to-iso"]);
    assert!(out.status.success());
    let lines = lines(&out);
    assert_eq!(lines.len(), 4);
    assert!(lines[..3].iter().all(|l| l["kind"] == "ilo"));
    assert_eq!(lines[3]["summary"]["count"], 3);
}

#[test]
fn shards_partition_the_stream() {
    let whole = lines(&ilo(&["enumerate", "--order", "3", "--class", "ilo"]));
    let mut merged: Vec<String> = Vec::new();
    for i in 0..4 {
        let shard = format!("{i}/4");
        let part = lines(&ilo(&["enumerate", "--order", "3", "--class", "ilo", "--shard", &shard]));
        merged.extend(part.iter().filter(|l| l.get("summary").is_none()).map(|l| l.to_string()));
    }
    let mut expected: Vec<String> = whole.iter().filter(|l| l.get("summary").is_none()).map(|l| l.to_string()).collect();
    merged.sort();
    expected.sort();
    assert_eq!(merged.len(), 216);
    assert_eq!(merged, expected);
}

#[test]
fn bad_shard_and_order_cap_exit_two() {
    let out = ilo(&["enumerate", "--order", "3", "--class", "ilo", "--shard", "4/4"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(lines(&out)[0]["error"]["kind"], "malformed-input");
    let out = ilo(&["enumerate", "--order", "7", "--class", "quandle"]);
    assert_eq!(out.status.code(), Some(2));
    let out = ilo(&["enumerate", "--order", "3", "--class", "rack"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn max_order_can_be_lowered_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_ilo"))
        .args(["enumerate", "--order", "3", "--class", "ilo"])
        .env("ILO_MAX_ORDER", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn classify_fixtures() {
    let out = ilo(&["classify", &fixture("z2.json")]);
    assert!(out.status.success());
    let flags = &lines(&out)[0]["flags"];
    assert!(flags.as_array().unwrap().iter().any(|f| f == "Hypersubtraction"));

    let out = ilo(&["classify", &fixture("bare_subtraction.json")]);
    assert_eq!(lines(&out)[0]["flags"], serde_json::json!(["Subtraction"]));
}

#[test]
fn malformed_input_exits_two() {
    let out = ilo(&["classify", &fixture("malformed.json")]);
    assert_eq!(out.status.code(), Some(2));
    let out = ilo(&["classify", &fixture("missing.json")]);
    assert_eq!(out.status.code(), Some(2));
    let out = ilo(&["verify-index", "--epi", &fixture("not_a_section.json"), "--formula", "group"]);
    assert_eq!(out.status.code(), Some(2));
    let out = ilo(&["verify-index", "--epi", &fixture("z6_z2_epi.json"), "--formula", "brace"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_group_and_model_indexes() {
    let out = ilo(&["verify-index", "--epi", &fixture("s3_sign_epi.json"), "--formula", "group"]);
    assert!(out.status.success());
    let w = &lines(&out)[0]["witness"];
    assert_eq!(w["is_index"], true);
    assert_eq!(w["is_hyperindex"], true);

    let out = ilo(&["verify-index", "--epi", &fixture("z3_two_minus_square_epi.json"), "--formula", "model"]);
    assert!(out.status.success());
    let w = &lines(&out)[0]["witness"];
    assert_eq!(w["is_index"], true);
    assert_eq!(w["is_hyperindex"], false);
}

#[test]
fn brace_indexes_differ_on_the_opposite_brace() {
    let out = ilo(&["verify-index", "--epi", &fixture("s3_opposite_brace_epi.json"), "--formula", "brace"]);
    assert!(out.status.success());
    let report = &lines(&out)[0];
    assert_eq!(report["star"]["is_hyperindex"], true);
    assert_eq!(report["circ"]["is_hyperindex"], true);
    assert!(!report["differ_at"].as_array().unwrap().is_empty());
}

#[test]
fn check_theorems_at_order_two() {
    let out = ilo(&["check-theorems", "--max-order", "2", "--group-order", "6"]);
    assert!(out.status.success());
    let lines = lines(&out);
    let summary = &lines.last().unwrap()["summary"];
    assert_eq!(summary["failed"], 0);
    assert!(lines[..lines.len() - 1].iter().all(|l| l["status"] == "pass"));
    assert!(lines.iter().any(|l| l["suite"] == "prop-assos"));
    assert!(lines.iter().any(|l| l["suite"] == "theta-maltsev"));
}

#[test]
fn unknown_suite_exits_two() {
    let out = ilo(&["check-theorems", "--max-order", "2", "--suite", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn census_summaries() {
    let out = ilo(&["census", "--max-order", "3", "--class", "quandle"]);
    assert!(out.status.success());
    let lines = lines(&out);
    let summaries: Vec<&Value> = lines.iter().filter(|l| l.get("labeled").is_some()).collect();
    assert_eq!(summaries.len(), 3);
    assert_eq!(summaries[2]["labeled"], 5);
    assert_eq!(summaries[2]["iso"], 3);
}
