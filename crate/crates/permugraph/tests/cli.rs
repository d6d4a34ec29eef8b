//! End-to-end checks of the CLI: exit codes, output formats, determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_permugraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn group_info_exit_codes() {
    let ok = run(&["group-info", "Q 8"]);
    assert_eq!(ok.status.code(), Some(0));
    let text = stdout(&ok);
    assert!(text.contains("order: 8"));
    assert!(text.contains("proper_cyclic_subgroups: 4"));

    // Prime order: info is printed, exit code 3 flags the undefined graph.
    let prime = run(&["group-info", "Z 7"]);
    assert_eq!(prime.status.code(), Some(3));
    assert!(stdout(&prime).contains("gamma_c_defined: false"));

    let bad = run(&["group-info", "bogus 4"]);
    assert_eq!(bad.status.code(), Some(2));

    let usage = run(&["no-such-subcommand"]);
    assert_eq!(usage.status.code(), Some(2));
}

#[test]
fn graph_formats() {
    let dot = run(&["graph", "S 3", "--dot"]);
    assert_eq!(dot.status.code(), Some(0));
    let text = stdout(&dot);
    assert_eq!(text.matches(" -- ").count(), 3);
    assert_eq!(text.matches("label=").count(), 4);

    let json = run(&["graph", "A 4", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 7);
    assert_eq!(v["edges"].as_array().unwrap().len(), 3);

    let z16 = run(&["graph", "Z 16", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&z16)).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 3);
    assert_eq!(v["edges"].as_array().unwrap().len(), 3);
}

#[test]
fn analyze_output() {
    let out = run(&["analyze", "Q 8"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("complete: true"));
    assert!(text.contains("diameter: 1"));

    let json = run(&["analyze", "SD 5 2 1 1", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["recognized_name"], "K1,5");
    assert_eq!(v["girth"], "infinity");
}

#[test]
fn verify_small_corpus() {
    let out = run(&["verify", "--max-order", "16"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.matches(": PASS").count(), 8);
    assert!(!text.contains("FAIL"));

    // identical invocations produce identical stdout bytes
    let again = run(&["verify", "--max-order", "16"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn verify_report_file() {
    let dir = std::env::temp_dir().join("permugraph-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = run(&[
        "verify",
        "--max-order",
        "12",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let body = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&body).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 8);
    for r in reports {
        assert_eq!(r["pass"], true);
        assert!(r["counterexamples"].as_array().unwrap().is_empty());
    }
    std::fs::remove_file(&path).ok();
}
