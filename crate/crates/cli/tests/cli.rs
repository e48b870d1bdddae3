//! End-to-end tests of the binary: exit codes, report files, and the
//! instance analysis surface.

use std::path::PathBuf;
use std::process::{Command, Output};

fn nestlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nestlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is UTF-8")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("nestlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    dir.join(name)
}

fn write_scratch(name: &str, contents: &str) -> PathBuf {
    let path = scratch(name);
    std::fs::write(&path, contents).expect("write temp file");
    path
}

#[test]
fn verify_runs_clean_suites_and_writes_reports() {
    let report = scratch("nestord.json");
    let out = nestlab(&[
        "verify",
        "--suite",
        "NESTORD",
        "--max-n",
        "3",
        "--exhaustive",
        "--json",
        report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("instances checked: 70"));
    assert!(text.contains("failures: 0"));

    let written: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(written["suite_id"], "NESTORD");
    assert_eq!(written["instances_checked"], 70);
    assert_eq!(written["wall_time_ms"], 0);
}

#[test]
fn verify_report_files_do_not_depend_on_the_worker_count() {
    let single = scratch("t1-single.json");
    let multi = scratch("t1-multi.json");
    for (path, jobs) in [(&single, "1"), (&multi, "4")] {
        let out = nestlab(&[
            "verify",
            "--suite",
            "T1",
            "--max-n",
            "4",
            "--samples",
            "500",
            "--seed",
            "9",
            "--jobs",
            jobs,
            "--json",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    }
    let single = std::fs::read(&single).unwrap();
    let multi = std::fs::read(&multi).unwrap();
    assert_eq!(single, multi);
}

#[test]
fn verify_rejects_bad_configurations() {
    let unknown = nestlab(&["verify", "--suite", "NOPE", "--max-n", "2"]);
    assert_eq!(unknown.status.code(), Some(2));
    assert!(stderr(&unknown).contains("available suites"));

    let conflict = nestlab(&[
        "verify",
        "--suite",
        "T1",
        "--max-n",
        "2",
        "--exhaustive",
        "--samples",
        "5",
    ]);
    assert_eq!(conflict.status.code(), Some(2));

    let over_cap = nestlab(&["verify", "--suite", "NESTORD", "--max-n", "9"]);
    assert_eq!(over_cap.status.code(), Some(2));
}

#[test]
fn check_answers_family_queries() {
    let nest = write_scratch(
        "nest.json",
        r#"{"kind":"nest","universe":["a","b","c"],"sets":[["a"],["a","b"]]}"#,
    );
    let input = nest.to_str().unwrap();

    let t0 = nestlab(&["check", "--input", input, "--query", "t0"]);
    assert_eq!(t0.status.code(), Some(0));
    assert!(stdout(&t0).contains("\"t0_separating\": true"));

    let order = nestlab(&["check", "--input", input, "--query", "order"]);
    assert_eq!(order.status.code(), Some(0));
    assert!(stdout(&order).contains("\"linear\": true"));

    let conditions = nestlab(&["check", "--input", input, "--query", "conditions"]);
    assert_eq!(conditions.status.code(), Some(2));
}

#[test]
fn check_answers_relation_queries() {
    let relation = write_scratch(
        "relation.json",
        r#"{"kind":"relation","universe":["a","b"],"pairs":[["a","b"]]}"#,
    );
    let input = relation.to_str().unwrap();

    let conditions = nestlab(&["check", "--input", input, "--query", "conditions"]);
    assert_eq!(conditions.status.code(), Some(0));
    assert!(stdout(&conditions).contains("condition1"));

    let all = nestlab(&["check", "--input", input, "--query", "all"]);
    assert_eq!(all.status.code(), Some(0));
    assert!(stdout(&all).contains("\"topologies\""));

    let interlocking = nestlab(&["check", "--input", input, "--query", "interlocking"]);
    assert_eq!(interlocking.status.code(), Some(2));
}

#[test]
fn check_rejects_unreadable_inputs() {
    let missing = nestlab(&["check", "--input", "/no/such/file.json", "--query", "t0"]);
    assert_eq!(missing.status.code(), Some(2));

    let garbage = write_scratch("garbage.json", r#"{"kind":"widget"}"#);
    let out = nestlab(&[
        "check",
        "--input",
        garbage.to_str().unwrap(),
        "--query",
        "t0",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not an instance"));
}

#[test]
fn search_reports_exhaustion_and_validates_claims() {
    let out = nestlab(&["search", "--claim", "T4-forward", "--max-n", "2"]);
    assert_eq!(out.status.code(), Some(0), "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("search status: exhausted"));

    let unknown = nestlab(&["search", "--claim", "NOPE", "--max-n", "2"]);
    assert_eq!(unknown.status.code(), Some(2));
    assert!(stderr(&unknown).contains("available claims"));
}

#[test]
fn demo_prints_the_derived_topologies() {
    for example in ["chain", "antichain", "vee"] {
        let out = nestlab(&["demo", example]);
        assert_eq!(out.status.code(), Some(0));
        let text = stdout(&out);
        for topology in ["upper", "lower", "interval", "left", "right"] {
            assert!(
                text.contains(&format!("\"{topology}\"")),
                "{example} demo is missing the {topology} topology"
            );
        }
    }
}
