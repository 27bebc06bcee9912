//! End-to-end checks of the installed binary: output shapes, exit
//! codes, determinism, and configuration overrides.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bgposet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bgposet"))
        .args(args)
        .env_remove("BGPOSET_CONFIG")
        .output()
        .expect("binary runs")
}

fn bgposet_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_bgposet"));
    cmd.args(args).env_remove("BGPOSET_CONFIG");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn enumerate_counts_per_order() {
    for (n, expect) in [("1", 0), ("3", 4), ("4", 10)] {
        let v = stdout_json(&bgposet(&["enumerate", n]));
        assert_eq!(v["result"].as_array().unwrap().len(), expect, "order {n}");
    }
}

#[test]
fn enumerate_csv_has_header_and_rows() {
    let out = bgposet(&["enumerate", "4", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "word,length_vector,a,b,c,rank,beta,alpha");
    assert_eq!(lines.len(), 11);
}

#[test]
fn compare_examples_and_methods() {
    let v = stdout_json(&bgposet(&["compare", "14235", "34512"]));
    assert_eq!(v["result"]["leq"], true);
    assert_eq!(v["result"]["method_used"], "vector");

    for method in ["ehresmann", "bb", "vector", "oracle"] {
        let v = stdout_json(&bgposet(&["compare", "14235", "34512", "--method", method]));
        assert_eq!(v["result"]["leq"], true, "method {method}");
    }

    let v = stdout_json(&bgposet(&["compare", "31245", "12453"]));
    assert_eq!(v["result"]["leq"], false);
    let v = stdout_json(&bgposet(&["compare", "12453", "31245"]));
    assert_eq!(v["result"]["leq"], false);

    let v = stdout_json(&bgposet(&["compare", "24153", "24153"]));
    assert_eq!(v["result"]["leq"], true);
    assert_eq!(v["result"]["method_used"], "ehresmann");
}

#[test]
fn compare_exit_codes() {
    // Parse failure.
    assert_eq!(exit_code(&bgposet(&["compare", "1,1,2", "123"])), 2);
    // Order mismatch.
    assert_eq!(exit_code(&bgposet(&["compare", "12", "123"])), 2);
    // Method precondition: left argument not bigrassmannian.
    assert_eq!(
        exit_code(&bgposet(&["compare", "24153", "34512", "--method", "bb"])),
        3
    );
    // Oracle over its cap.
    assert_eq!(
        exit_code(&bgposet(&[
            "compare",
            "1,2,3,4,5,6,7,8,9",
            "9,8,7,6,5,4,3,2,1",
            "--method",
            "oracle",
        ])),
        3
    );
}

#[test]
fn stats_examples() {
    let v = stdout_json(&bgposet(&["stats", "6"]));
    assert_eq!(v["result"]["max_antichain"], "9");
    assert_eq!(v["result"]["maximal_chains"], "256");
    assert_eq!(v["provenance"], "both");

    let v = stdout_json(&bgposet(&["stats", "3"]));
    assert_eq!(v["result"]["edges"], "4");
    assert_eq!(v["result"]["butterflies"], "1");

    let v = stdout_json(&bgposet(&["stats", "2"]));
    assert_eq!(v["result"]["bg_count"], "1");
    assert_eq!(v["result"]["edges"], "0");
    assert_eq!(v["result"]["butterflies"], "0");

    // Above the sweep cap the oracle block disappears.
    let v = stdout_json(&bgposet(&["stats", "9"]));
    assert_eq!(v["provenance"], "formula");
    assert!(v["result"].get("oracle").is_none());
    assert_eq!(exit_code(&bgposet(&["stats", "1"])), 2);
}

#[test]
fn beta_alpha_vector_worked_examples() {
    let v = stdout_json(&bgposet(&["beta", "1562347"]));
    assert_eq!(v["result"]["beta"], "15");
    assert_eq!(v["provenance"], "both");

    let v = stdout_json(&bgposet(&["alpha", "126734589"]));
    assert_eq!(v["result"]["alpha"], "27");

    let v = stdout_json(&bgposet(&["vector", "126734589"]));
    assert_eq!(v["result"]["length_vector"], "(3,3,2,3)@9");
    assert_eq!(v["result"]["abc"]["a"], 2);
    assert_eq!(v["result"]["abc"]["b"], 5);
    assert_eq!(v["result"]["abc"]["c"], 7);

    let v = stdout_json(&bgposet(&["vector", "(3,3,3,2)@9"]));
    assert_eq!(v["result"]["word"], "1,2,6,7,8,3,4,5,9");

    // alpha of a non-bigrassmannian word is a precondition violation.
    assert_eq!(exit_code(&bgposet(&["alpha", "24153"])), 3);
}

#[test]
fn chains_distance_below() {
    let v = stdout_json(&bgposet(&["chains", "13245", "45123"]));
    // Minimal (2,1,1,3) up to maximal (1,3,2,1): C(3,1)*C(3,2) = 9.
    assert_eq!(v["result"]["chains"], "9");
    assert_eq!(v["provenance"], "both");

    let v = stdout_json(&bgposet(&["distance", "31245", "12453"]));
    assert_eq!(v["result"]["distance"], "4");

    let v = stdout_json(&bgposet(&["below", "(2,2,1,2)@5", "(2,1,2,2)@5"]));
    assert_eq!(v["result"]["count"], 2);

    let v = stdout_json(&bgposet(&["below", "(1,2,1,3)@5", "(3,1,2,1)@5"]));
    assert_eq!(v["result"]["count"], 0);

    let v = stdout_json(&bgposet(&[
        "below",
        "--above",
        "(2,1,1,3)@5",
        "(1,1,2,3)@5",
    ]));
    assert!(v["result"]["count"].as_u64().unwrap() > 0);

    // Incomparable chains request violates the precondition.
    assert_eq!(exit_code(&bgposet(&["chains", "31245", "12453"])), 3);
}

#[test]
fn hasse_export_is_deterministic() {
    let a = bgposet(&["hasse", "5", "--downset", "41235"]);
    let b = bgposet(&["hasse", "5", "--downset", "41235"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert_eq!(text.matches("style=filled").count(), 6);
    assert_eq!(text.matches(" -> ").count(), 40);

    let up = bgposet(&["hasse", "5", "--upset", "12453"]);
    let text = String::from_utf8(up.stdout).unwrap();
    assert_eq!(text.matches("style=filled").count(), 6);

    // Invalid vertex and unwritable path.
    assert_eq!(
        exit_code(&bgposet(&["hasse", "5", "--downset", "21435"])),
        2,
        "two descents, not a vertex"
    );
    assert_eq!(
        exit_code(&bgposet(&["hasse", "5", "--downset", "12345"])),
        2,
        "identity is not a vertex"
    );
    assert_eq!(
        exit_code(&bgposet(&["hasse", "5", "--downset", "(1,1,1,2)@3"])),
        2,
        "wrong order"
    );
    assert_eq!(
        exit_code(&bgposet(&["hasse", "4", "--dot", "/nonexistent/x.dot"])),
        4
    );
    // Export cap.
    assert_eq!(exit_code(&bgposet(&["hasse", "13"])), 2);
}

#[test]
fn hasse_highlights_both_sets_with_overlap_color() {
    // Down-set of a maximal element and up-set of a minimal one
    // overlap on the interval between them.
    let out = bgposet(&["hasse", "5", "--downset", "45123", "--upset", "13245"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("fillcolor=lightblue"));
    assert!(text.contains("fillcolor=lightsalmon"));
    assert!(text.contains("fillcolor=palegreen"));

    // Smallest poset renders fine: one vertex, no edges.
    let out = bgposet(&["hasse", "2"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.matches("label=").count(), 1);
    assert_eq!(text.matches(" -> ").count(), 0);
}

#[test]
fn antichain_paths_cover_the_poset() {
    let v = stdout_json(&bgposet(&["antichain", "6", "--paths"]));
    assert_eq!(v["result"]["max_antichain"], "9");
    let paths = v["result"]["paths"].as_array().unwrap();
    assert_eq!(paths.len(), 9, "one path per middle-level vertex");
    let vertices: usize = paths.iter().map(|p| p.as_array().unwrap().len()).sum();
    assert_eq!(vertices, 35, "paths cover all of the order-6 poset");
}

#[test]
fn below_accepts_three_targets() {
    let v = stdout_json(&bgposet(&[
        "below",
        "(2,2,1,2)@5",
        "(2,1,2,2)@5",
        "(3,1,1,2)@5",
    ]));
    assert_eq!(v["result"]["count"], 1);
    assert_eq!(v["result"]["elements"][0]["length_vector"], "(3,1,1,2)@5");
    assert_eq!(v["provenance"], "both");
}

#[test]
fn hasse_writes_requested_file() {
    let path: PathBuf = std::env::temp_dir().join("bgposet_test_bg4.dot");
    let _ = std::fs::remove_file(&path);
    let out = bgposet(&["hasse", "4", "--dot", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.matches(" -> ").count(), 16);
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn verify_passes_and_reports() {
    let out = bgposet(&["verify", "--max-n", "5"]);
    assert_eq!(exit_code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("summary:"));
    assert!(text.contains("0 failed"));
    assert!(!text.contains("FAIL"));

    let out = bgposet(&[
        "verify", "--max-n", "5", "--suite", "counts", "--format", "json",
    ]);
    let reports: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(reports.as_array().unwrap().len() > 5);
    assert!(reports
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["status"] == "pass"));

    let out = bgposet(&[
        "verify", "--max-n", "7", "--suite", "counts", "--format", "csv",
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("status,suite,check,max_n,instances"));
    assert!(text.contains("pass,counts,edge-count-formula-vs-graph,7"));

    // Caps reject an oversized sweep bound.
    assert_eq!(exit_code(&bgposet(&["verify", "--max-n", "11"])), 2);
}

#[test]
fn stats_csv_lists_scalars_and_levels() {
    let out = bgposet(&["stats", "6", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "stat,value");
    assert!(lines.contains(&"max_antichain,9"));
    assert!(lines.contains(&"maximal_chains,256"));
    assert!(lines.contains(&"level_2,9"));
}

#[test]
fn identical_invocations_are_byte_identical() {
    for args in [
        vec!["stats", "6"],
        vec!["enumerate", "5"],
        vec!["verify", "--max-n", "4"],
        vec!["below", "(2,2,1,2)@5", "(2,1,2,2)@5"],
    ] {
        let a = bgposet(&args);
        let b = bgposet(&args);
        assert_eq!(a.stdout, b.stdout, "args {args:?}");
    }
}

#[test]
fn limits_respond_to_environment_and_config_file() {
    // Dropping the sweep cap suppresses oracle columns.
    let out = bgposet_env(&["stats", "6"], &[("BGPOSET_BG_SWEEP_MAX", "2")]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["provenance"], "formula");

    let path = std::env::temp_dir().join("bgposet_test_limits.toml");
    std::fs::write(&path, "bg_sweep_max = 2\nmax_order = 5\n").unwrap();
    let out = bgposet_env(
        &["stats", "6"],
        &[("BGPOSET_CONFIG", path.to_str().unwrap())],
    );
    assert_eq!(out.status.code(), Some(2), "max_order from file applies");
    let out = bgposet_env(
        &["stats", "5"],
        &[("BGPOSET_CONFIG", path.to_str().unwrap())],
    );
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["provenance"], "formula");
    std::fs::remove_file(&path).unwrap();

    // --max-n flag overrides the configured maximum order.
    assert_eq!(exit_code(&bgposet(&["enumerate", "70"])), 2);
    let out = bgposet(&["enumerate", "70", "--max-n", "70"]);
    assert!(out.status.success());
}

#[test]
fn digit_word_round_trip_in_outputs() {
    let v = stdout_json(&bgposet(&["vector", "41235"]));
    assert_eq!(v["result"]["length_vector"], "(1,3,1,2)@5");
    assert_eq!(v["result"]["digit_word"], "41235");
    assert_eq!(v["result"]["beta"], "6");
    let v = stdout_json(&bgposet(&["vector", "12453"]));
    assert_eq!(v["result"]["alpha"], "6");
}
