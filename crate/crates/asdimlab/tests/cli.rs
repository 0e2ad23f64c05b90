//! End-to-end tests of the `asdimlab` binary: exit codes, the JSON result
//! schema, certificate files, and the atlas sweep.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const C5_ARTIN: &str = "kind artin\n\
    vertex a\nvertex b\nvertex c\nvertex d\nvertex e\n\
    edge a b 3\nedge b c 3\nedge c d 3\nedge d e 3\nedge a e 3\n";

const MIXED_TRIANGLE: &str = "kind artin\n\
    vertex a\nvertex b\nvertex c\n\
    edge a b 2\nedge a c 3\nedge b c 5\n";

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_asdimlab"))
}

fn write_input(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn run_bound(file: &Path, extra: &[&str]) -> Output {
    let mut cmd = bin();
    cmd.arg("bound").arg(file).args(extra);
    cmd.output().unwrap()
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).unwrap()
}

fn stderr_of(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).unwrap()
}

#[test]
fn bound_json_on_cycle_matches_schema() {
    let dir = TempDir::new().unwrap();
    let file = write_input(&dir, "c5.graph", C5_ARTIN);
    let output = run_bound(&file, &["--json"]);
    assert_eq!(output.status.code(), Some(0), "{}", stderr_of(&output));
    let line = stdout_of(&output);
    let value: serde_json::Value = serde_json::from_str(line.trim()).unwrap();
    assert_eq!(value["kind"], "artin");
    assert_eq!(value["vertices"], 5);
    assert_eq!(value["edges"], 5);
    assert_eq!(value["sim"], 2);
    assert_eq!(value["betti"], 1);
    assert_eq!(value["chromatic_upper"], 3);
    assert_eq!(value["lower"], 2);
    assert_eq!(value["upper"], 2);
    assert_eq!(value["exact"], true);
    assert_eq!(value["conditional"], false);
    assert_eq!(value["rules"][0], "AmalgamCycle");
    // schema order is pinned
    let keys: Vec<&str> = [
        "kind",
        "vertices",
        "edges",
        "sim",
        "betti",
        "chromatic_upper",
        "lower",
        "upper",
        "exact",
        "conditional",
        "rules",
    ]
    .to_vec();
    let mut cursor = 0usize;
    for key in keys {
        let pos = line.find(&format!("\"{key}\"")).unwrap();
        assert!(pos >= cursor, "field {key} out of order");
        cursor = pos;
    }
}

#[test]
fn bound_json_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let file = write_input(&dir, "c5.graph", C5_ARTIN);
    let a = run_bound(&file, &["--json"]);
    let b = run_bound(&file, &["--json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn unknown_upper_is_reported_without_failing() {
    let dir = TempDir::new().unwrap();
    let file = write_input(&dir, "t.graph", MIXED_TRIANGLE);
    let output = run_bound(&file, &["--json"]);
    assert_eq!(output.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(stdout_of(&output).trim()).unwrap();
    assert_eq!(value["upper"], "unknown");
    assert_eq!(value["lower"], 2);
    assert_eq!(value["rules"][0], "LeafUnknown");
}

#[test]
fn conditional_mode_sets_flag_and_banner() {
    let dir = TempDir::new().unwrap();
    let file = write_input(&dir, "t.graph", MIXED_TRIANGLE);
    let output = run_bound(&file, &["--mode", "conditional"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout_of(&output);
    assert!(text.contains("upper: 3"), "{text}");
    assert!(text.contains("clique-number conjecture"), "{text}");

    let output = run_bound(&file, &["--mode", "conditional", "--json"]);
    let value: serde_json::Value = serde_json::from_str(stdout_of(&output).trim()).unwrap();
    assert_eq!(value["upper"], 3);
    assert_eq!(value["conditional"], true);
}

#[test]
fn certificate_roundtrip_through_files() {
    let dir = TempDir::new().unwrap();
    let file = write_input(&dir, "c5.graph", C5_ARTIN);
    let cert = dir.path().join("c5.cert.json");
    let output = run_bound(&file, &["--certificate", cert.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(0));
    assert!(cert.exists());

    let output = bin()
        .arg("check")
        .arg(&file)
        .arg("--certificate")
        .arg(&cert)
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0), "{}", stderr_of(&output));
    assert!(stdout_of(&output).contains("certificate accepted"));
}

#[test]
fn tampered_certificate_is_rejected_with_exit_3() {
    let dir = TempDir::new().unwrap();
    let file = write_input(&dir, "c5.graph", C5_ARTIN);
    let cert = dir.path().join("c5.cert.json");
    run_bound(&file, &["--certificate", cert.to_str().unwrap()]);
    let text = std::fs::read_to_string(&cert).unwrap();
    // claim a sharper root upper bound than the proof derives
    let tampered = text.replacen("\"upper\": 2", "\"upper\": 1", 1);
    assert_ne!(text, tampered);
    std::fs::write(&cert, tampered).unwrap();

    let output = bin()
        .arg("check")
        .arg(&file)
        .arg("--certificate")
        .arg(&cert)
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(3));
    assert!(
        stderr_of(&output).contains("rejected"),
        "{}",
        stderr_of(&output)
    );
}

#[test]
fn parse_errors_exit_2_with_position() {
    let dir = TempDir::new().unwrap();
    let file = write_input(
        &dir,
        "bad.graph",
        "kind artin\nvertex a\nvertex b\nedge a b 1\n",
    );
    let output = run_bound(&file, &[]);
    assert_eq!(output.status.code(), Some(2));
    let err = stderr_of(&output);
    assert!(
        err.contains("line 4") && err.contains("label must be >= 2"),
        "{err}"
    );

    let file = write_input(&dir, "badkind.graph", "kind elves\n");
    let output = run_bound(&file, &[]);
    assert_eq!(output.status.code(), Some(2));
    assert!(
        stderr_of(&output).contains("unknown kind"),
        "{}",
        stderr_of(&output)
    );

    let file = write_input(
        &dir,
        "badword.graph",
        "kind graphgroup\nvertex a\nvertex b\nedge a b b.b.a.b\n",
    );
    let output = run_bound(&file, &[]);
    assert_eq!(output.status.code(), Some(2));
    assert!(
        stderr_of(&output).contains("forbidden relator form"),
        "{}",
        stderr_of(&output)
    );
}

#[test]
fn report_shows_graph_statistics() {
    let dir = TempDir::new().unwrap();
    let file = write_input(&dir, "c5.graph", C5_ARTIN);
    let output = run_bound(&file, &["--report"]);
    let text = stdout_of(&output);
    assert!(text.contains("Sim: 2"), "{text}");
    assert!(text.contains("betti: 1"), "{text}");
    assert!(
        text.contains("report: Sim bound 2 vs chromatic bound 3"),
        "{text}"
    );
}

#[test]
fn vertex_guard_is_configurable() {
    let dir = TempDir::new().unwrap();
    let file = write_input(&dir, "c5.graph", C5_ARTIN);
    let output = bin()
        .arg("bound")
        .arg(&file)
        .env("ASDIMLAB_MAX_VERTICES", "3")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
    assert!(stderr_of(&output).contains("ASDIMLAB_MAX_VERTICES"));
}

#[test]
fn atlas_writes_one_json_line_per_graph() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("atlas.jsonl");
    let output = bin()
        .args([
            "atlas",
            "--max-vertices",
            "3",
            "--kind",
            "coxeter",
            "--label",
            "2",
            "--out",
        ])
        .arg(&out)
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0), "{}", stderr_of(&output));
    let text = std::fs::read_to_string(&out).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    // 1 graph on one vertex, 2 on two, 8 on three
    assert_eq!(lines.len(), 11);
    for line in &lines {
        let value: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(value["kind"], "coxeter");
        assert_ne!(value["upper"], "unknown");
    }

    // deterministic across runs
    let out2 = dir.path().join("atlas2.jsonl");
    bin()
        .args([
            "atlas",
            "--max-vertices",
            "3",
            "--kind",
            "coxeter",
            "--label",
            "2",
            "--out",
        ])
        .arg(&out2)
        .output()
        .unwrap();
    assert_eq!(text, std::fs::read_to_string(&out2).unwrap());
}

#[test]
fn atlas_rejects_oversized_requests() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("atlas.jsonl");
    let output = bin()
        .args([
            "atlas",
            "--max-vertices",
            "9",
            "--kind",
            "artin",
            "--label",
            "3",
            "--out",
        ])
        .arg(&out)
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn graphgroup_atlas_uses_relator_labels() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("gg.jsonl");
    let output = bin()
        .args([
            "atlas",
            "--max-vertices",
            "3",
            "--kind",
            "graphgroup",
            "--label",
            "3",
            "--out",
        ])
        .arg(&out)
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0), "{}", stderr_of(&output));
    let text = std::fs::read_to_string(&out).unwrap();
    // the path on three vertices is a graph-group forest: upper 2
    assert!(text.lines().any(|l| {
        let v: serde_json::Value = serde_json::from_str(l).unwrap();
        v["kind"] == "graphgroup" && v["edges"] == 2 && v["upper"] == 2
    }));
}
