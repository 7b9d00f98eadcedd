use std::process::{Command, Output};

use serde_json::Value;

fn greenseq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_greenseq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let out = greenseq(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_str(&stdout(&out)).unwrap()
}

#[test]
fn count_json_for_a2() {
    let out = greenseq(&["count", "--preset", "A:2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        concat!(
            r#"{"type":"A2","hasse":{"vertices":5,"arrows":5},"counts":{"2":"1","3":"1"},"#,
            r#""total":"2","total_sci":"2.000e+0","min_length":2,"max_length":3,"no_gap":true}"#,
            "\n"
        )
    );
    assert!(out.stderr.is_empty());
}

#[test]
fn count_dtilde4_is_deterministic_across_threads() {
    let one = greenseq(&["count", "--preset", "Dtilde4-paper", "--threads", "1"]);
    let two = greenseq(&["count", "--preset", "Dtilde4-paper", "--threads", "3"]);
    assert_eq!(one.stdout, two.stdout);
    let v: Value = serde_json::from_slice(&one.stdout).unwrap();
    assert_eq!(v["total"], "210284");
    assert_eq!(v["max_length"], 22);
    let text = stdout(&one);
    let at = |key: &str| text.find(&format!("\"{key}\":\"")).unwrap();
    for len in 5..22 {
        assert!(at(&len.to_string()) < at(&(len + 1).to_string()));
    }
}

#[test]
fn count_tsv_and_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a3.tsv");
    let out = greenseq(&[
        "count",
        "--preset",
        "A:3",
        "--format",
        "tsv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "3\t1\n4\t4\n5\t2\n6\t2\n"
    );
}

#[test]
fn quiver_file_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q.json");
    std::fs::write(
        &path,
        r#"{"vertices":5,"arrows":[[0,2],[1,2],[2,3],[2,4]],"name":"d"}"#,
    )
    .unwrap();
    let v = json(&["hasse", "--quiver", path.to_str().unwrap()]);
    assert_eq!(v, serde_json::json!({"vertices": 314, "arrows": 743}));
}

#[test]
fn hasse_dot_and_stats() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.dot");
    let out = greenseq(&[
        "hasse",
        "--preset",
        "Dtilde4-paper",
        "--stats",
        "--emit-dot",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "{\"vertices\":314,\"arrows\":743}\n");
    assert!(String::from_utf8_lossy(&out.stderr).contains("before pruning"));
    let dot = std::fs::read_to_string(&path).unwrap();
    assert_eq!(dot.lines().filter(|l| l.contains("[label=")).count(), 314);
    assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 743);
    let direct = greenseq(&["hasse", "--preset", "Dtilde4-paper", "--format", "dot"]);
    assert_eq!(stdout(&direct), dot);
}

#[test]
fn catalog_dump() {
    let v = json(&["catalog", "--preset", "Dtilde4-paper"]);
    assert_eq!(v["size"], 49);
    assert_eq!(v["m_thresh"], 2);
    assert_eq!(v["nonsincere_count"], 23);
    assert_eq!(v["entries"][0]["triple"], serde_json::json!([0, 0, 0]));
    assert_eq!(v["entries"].as_array().unwrap().len(), 49);
}

#[test]
fn prec_reports_branch() {
    let v = json(&[
        "prec",
        "--preset",
        "Dtilde4-paper",
        "--x",
        "(0,0,0)",
        "--y",
        "(0,0,1)",
    ]);
    assert_eq!(v["prec"], false);
    assert_eq!(v["branch"], "PreprojectivePair");
    let v = json(&[
        "prec",
        "--preset",
        "Dtilde4-paper",
        "--x",
        "(2,0,-1)",
        "--y",
        "(1,2,3)",
    ]);
    assert_eq!(v["prec"], true);
    let out = greenseq(&[
        "prec",
        "--preset",
        "Dtilde4-paper",
        "--x",
        "(1,7,1)",
        "--y",
        "(0,0,0)",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let out = greenseq(&[
        "prec",
        "--preset",
        "Dtilde4-paper",
        "--x",
        "(0,0",
        "--y",
        "(0,0,0)",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oracle_and_check() {
    let v = json(&["oracle", "--preset", "A:2", "--max-len", "5"]);
    assert_eq!(v["counts"], serde_json::json!({"2": "1", "3": "1"}));
    let v = json(&["oracle", "--preset", "Atilde:1,1", "--max-len", "2"]);
    assert_eq!(v["counts"], serde_json::json!({"2": "1"}));
    for p in ["A:3", "D:4", "Atilde:2,1"] {
        let v = json(&["check", "--preset", p]);
        assert_eq!(v["equal"], true, "{p}");
    }
    let out = greenseq(&["check", "--preset", "A:3", "--format", "tsv"]);
    assert_eq!(stdout(&out), "equal\ttrue\n");
}

#[test]
fn orientation_sweep() {
    let v = json(&["orientations", "--preset", "A:2"]);
    assert_eq!(v["constant"], true);
    assert_eq!(v["max_lengths"], serde_json::json!([3]));
    assert_eq!(v["orientations"].as_array().unwrap().len(), 2);
    let v = json(&["orientations", "--preset", "Dtilde:4"]);
    assert_eq!(v["max_lengths"], serde_json::json!([22]));
    assert_eq!(v["orientations"].as_array().unwrap().len(), 16);
}

#[test]
fn exit_codes() {
    assert_eq!(
        greenseq(&["count", "--preset", "Nope"]).status.code(),
        Some(2)
    );
    assert_eq!(greenseq(&["count"]).status.code(), Some(2));
    assert_eq!(
        greenseq(&["count", "--preset", "A:2", "--format", "dot"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(greenseq(&["frobnicate"]).status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let cyclic = dir.path().join("cyclic.json");
    std::fs::write(&cyclic, r#"{"vertices":3,"arrows":[[0,1],[1,2],[2,0]]}"#).unwrap();
    assert_eq!(
        greenseq(&["count", "--quiver", cyclic.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
    let wild = dir.path().join("wild.json");
    std::fs::write(&wild, r#"{"vertices":2,"arrows":[[0,1],[0,1],[0,1]]}"#).unwrap();
    assert_eq!(
        greenseq(&["count", "--quiver", wild.to_str().unwrap()])
            .status
            .code(),
        Some(3)
    );
    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "not json").unwrap();
    assert_eq!(
        greenseq(&["count", "--quiver", garbage.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}
