use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semiclassical")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

/// Compare stdout with `tests/golden/<name>`; `BLESS=1` rewrites the file.
fn golden(name: &str, args: &[&str]) {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let actual = String::from_utf8(out.stdout).unwrap();
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("BLESS").is_some() {
        std::fs::write(&path, &actual).unwrap();
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "{name}");
}

#[test]
fn weingarten_output() {
    golden("weingarten_cue_1_1.json", &["weingarten", "--ensemble", "cue", "--partition", "1,1"]);
    golden("weingarten_coe_2_laurent.json", &["weingarten", "--ensemble", "coe", "--partition", "2", "--laurent", "5"]);
    let v = json(&["weingarten", "--ensemble", "cue", "--partition", "2", "--at", "3"]);
    assert_eq!(v["value"]["num"], "-1");
    assert_eq!(v["value"]["den"], "24");
}

#[test]
fn series_output() {
    golden("series_u_2.json", &["series", "--type", "u", "--partition", "2", "--order", "5"]);
    let v = json(&["series", "--type", "o", "--partition", "1", "--order", "4"]);
    assert_eq!(v["equal"], true);
    assert_eq!(v["delta"]["text"], "N^-1 - N^-2 + N^-3 - N^-4 + O(N^-5)");
}

#[test]
fn factorize_output() {
    golden("factorize_u_2_1_v3.json", &["factorize", "--type", "u", "--partition", "2,1", "--v", "3", "--list"]);
    let v = json(&["factorize", "--type", "o", "--partition", "1", "--v", "3"]);
    assert_eq!(v["count"], "1");
}

#[test]
fn diagrams_report() {
    golden("diagrams_id2.json", &["diagrams", "--target", "()", "--t", "2", "--symmetry", "u", "--max-order", "4"]);
    let v = json(&["diagrams", "--target", "(1 2)", "--symmetry", "u", "--max-order", "3", "--list"]);
    assert_eq!(v["total"], 1);
    assert_eq!(v["fixed_points"], 1);
}

#[test]
fn render_writes_one_file_per_diagram() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out");
    let v = json(&["render", "--target", "(1 2)", "--symmetry", "u", "--max-order", "3", "--dot", out.to_str().unwrap()]);
    let files = v["files"].as_array().unwrap();
    assert_eq!(files.len(), 1);
    let dot = std::fs::read_to_string(files[0].as_str().unwrap()).unwrap();
    assert!(dot.starts_with("graph diagram {"));
    assert_eq!(std::fs::read_dir(&out).unwrap().count(), 1);
}

#[test]
fn correlator_and_moment_output() {
    golden("correlator_cue.json", &["correlator", "--ensemble", "cue", "--n", "4", "--z", "1,2;3,2", "--zstar", "1,2;3,2"]);
    let v = json(&["correlator", "--ensemble", "cue", "--n", "3", "--z", "1,2", "--zstar", "2,1"]);
    assert_eq!(v["value"]["num"], "0");
    golden("moment_coe.json", &["moment", "--ensemble", "coe", "--n1", "2", "--n2", "3", "--traces", "2,1", "--block", "t", "--oracle"]);
}

#[test]
fn mc_is_deterministic() {
    let args = ["mc", "--ensemble", "coe", "--n", "4", "--z", "1,2", "--zstar", "1,2", "--samples", "2000", "--seed", "7"];
    golden("mc_coe.json", &args);
    assert_eq!(json(&args), json(&args));
    let v = json(&["mc", "--ensemble", "cue", "--traces", "1", "--n1", "2", "--n2", "3", "--samples", "20000", "--exact"]);
    assert!(v["deviation_se"].as_f64().unwrap() < 5.0);
}

#[test]
fn verify_examples() {
    let v = json(&["verify", "--max-t", "4", "--max-order", "6", "--symmetry", "u"]);
    assert_eq!(v["all_equal"], true);
    assert_eq!(v["cases"].as_array().unwrap().len(), 1 + 2 + 3 + 5);

    let v = json(&["verify", "--max-t", "1", "--symmetry", "o", "--with-diagrams"]);
    assert_eq!(v["all_equal"], true);
    assert!(v["cases"].as_array().unwrap().iter().any(|c| c["rhs"]["text"].as_str().unwrap().starts_with("N^-1 - N^-2 + N^-3")));

    let v = json(&["verify", "--max-t", "2", "--with-diagrams", "--symmetry", "u"]);
    assert_eq!(v["all_equal"], true);
    let id2 = v["cases"].as_array().unwrap().iter().find(|c| c["check"] == "diagrams" && c["partition"] == serde_json::json!([1, 1])).unwrap();
    let fourth = id2["per_order"].as_array().unwrap().iter().find(|o| o["order"] == 4).unwrap();
    assert_eq!(fourth["signed_sum"], 1);
    assert_eq!(fourth["connected"], 5);
}

#[test]
fn verify_with_sampling() {
    let v = json(&["verify", "--max-t", "2", "--max-order", "1", "--with-mc", "--samples", "50000"]);
    assert_eq!(v["all_equal"], true);
    assert!(v["cases"].as_array().unwrap().iter().any(|c| c["check"] == "monte-carlo"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["weingarten", "--ensemble", "cue", "--partition", "x"]).status.code(), Some(2));
    assert_eq!(run(&["weingarten", "--ensemble", "gue", "--partition", "1"]).status.code(), Some(2));
    assert_eq!(run(&["diagrams", "--target", "()", "--symmetry", "u", "--max-order", "2"]).status.code(), Some(2));
    assert_eq!(run(&["weingarten", "--ensemble", "cue", "--partition", "9"]).status.code(), Some(1));
    assert_eq!(run(&["moment", "--ensemble", "coe", "--n1", "1", "--n2", "1", "--traces", "3,3", "--block", "r"]).status.code(), Some(1));
    assert_eq!(run(&["correlator", "--ensemble", "cue", "--n", "2", "--z", "3,1", "--zstar", "3,1"]).status.code(), Some(1));
    assert_eq!(run(&["mc", "--ensemble", "cue"]).status.code(), Some(2));
    assert_eq!(run(&["weingarten", "--ensemble", "cue", "--partition", "9", "--force"]).status.code(), Some(0));
}

#[test]
fn text_format() {
    let out = run(&["moment", "--ensemble", "cue", "--n1", "2", "--n2", "3", "--traces", "1", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("value: 6/5"), "{text}");
}
