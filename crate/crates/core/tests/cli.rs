use std::io::Write;
use std::process::{Command, Output};

use tempfile::NamedTempFile;

fn gradedk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gradedk")).args(args).output().unwrap()
}

fn file(contents: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

#[test]
fn kgroups_text_report() {
    let g = file("vertices: v w\nedges: v -> w +inf\nedges: w -> v -2\nedges: w -> w +1\n");
    let o = gradedk(&["kgroups", path(&g)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("K0 = Z (+) Z_2"), "{out}");
    assert!(out.contains("K1 = 0"), "{out}");
    assert!(out.contains("infinite emitters: {v}"), "{out}");
}

#[test]
fn kgroups_json_is_exact_and_deterministic() {
    let g = file("vertices: v\nedges: v -> v +5 -1\n");
    let a = gradedk(&["kgroups", path(&g), "--format", "json"]);
    let b = gradedk(&["kgroups", path(&g), "--format", "json"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(stdout(&a), stdout(&b));
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["mode"], "graded");
    assert_eq!(v["k0"]["torsion"], serde_json::json!([3]));
    assert_eq!(v["matrix"]["entries"], serde_json::json!([[-3]]));
}

#[test]
fn ungraded_flag() {
    let g = file("vertices: v\nedges: v -> v +5 -1\n");
    let o = gradedk(&["kgroups", path(&g), "--ungraded"]);
    assert!(stdout(&o).contains("K0 = Z_5"));
}

#[test]
fn sinks_exit_with_status_two() {
    let g = file("vertices: a b\nedges: a -> b +1\n");
    let o = gradedk(&["kgroups", path(&g)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("sinks: b"), "{}", stderr(&o));

    let o = gradedk(&["kgroups", path(&g), "--allow-sinks"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("warning: experimental"));
    assert!(stdout(&o).contains("mode: graded-experimental"));
}

#[test]
fn malformed_input_exits_with_status_one() {
    let g = file("vertices: v\nedges: v -> w +1\n");
    let o = gradedk(&["kgroups", path(&g)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));

    let o = gradedk(&["analyze", "/nonexistent/graph.txt"]);
    assert_eq!(o.status.code(), Some(1));

    let o = gradedk(&["clifford", "mul", "e1", "e3", "--n", "2"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn analyze_reports_properties() {
    let g = file("vertices: a b c\nedges: a -> b +1\nedges: c -> a +inf\n");
    let o = gradedk(&["analyze", path(&g), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["properties"]["sinks"], serde_json::json!(["b"]));
    assert_eq!(v["properties"]["sources"], serde_json::json!(["c"]));
    assert_eq!(v["properties"]["row_finite"], false);
    assert!(v["k0"].is_null());
}

#[test]
fn snf_command() {
    let m = file("# 2x3\n2 3\n2 4 4\n-6 6 12\n");
    let o = gradedk(&["snf", path(&m)]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("invariant factors = (2, 6)"), "{out}");
    assert!(out.contains("cokernel = Z_2 (+) Z_6"), "{out}");
    assert!(out.contains("kernel rank = 1"), "{out}");

    let bad = file("2 2\n1 2\n3\n");
    assert_eq!(gradedk(&["snf", path(&bad)]).status.code(), Some(1));
}

#[test]
fn clifford_commands() {
    let run = |args: &[&str]| {
        let o = gradedk(args);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        stdout(&o)
    };
    assert_eq!(run(&["clifford", "mul", "e1", "e1"]), "-1\n");
    assert_eq!(run(&["clifford", "mul", "e1", "e2"]), "1 * e1e2\n");
    assert_eq!(run(&["clifford", "mul", "e1e2", "e1e2"]), "-1\n");
    assert_eq!(run(&["clifford", "star", "e1e2"]), "-1 * e1e2\n");
    assert_eq!(run(&["clifford", "star", "2+3i * e1"]), "-2+3i * e1\n");
    assert_eq!(run(&["clifford", "ktheory", "1"]), "(0, Z)\n");
    assert_eq!(run(&["clifford", "ktheory", "4"]), "(Z, 0)\n");
    let v: serde_json::Value =
        serde_json::from_str(&run(&["clifford", "mul", "e1", "e2", "--n", "3", "--format", "json"])).unwrap();
    assert_eq!(v, serde_json::json!({"n": 3, "result": "1 * e1e2"}));
}
