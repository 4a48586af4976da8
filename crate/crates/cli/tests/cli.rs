use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn domgame(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_domgame"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap_or_else(|e| panic!("{l}: {e}")))
        .collect()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn classify_g3() {
    let out = domgame(&["classify", "--family", "G_r", "--r", "3"], None);
    assert_eq!(code(&out), 0);
    let rows = json_lines(&out);
    assert_eq!(rows.len(), 1);
    assert_eq!(
        (
            &rows[0]["gamma_cg"],
            &rows[0]["gamma_tcg"],
            &rows[0]["class"]
        ),
        (&5.into(), &7.into(), &2.into())
    );
}

#[test]
fn compute_d15() {
    for variant in ["connected", "total"] {
        let out = domgame(&["compute", "--family", "D15", "--variant", variant], None);
        assert_eq!(code(&out), 0);
        assert_eq!(json_lines(&out)[0]["value"], 9);
    }
}

#[test]
fn per_vertex_twins() {
    let out = domgame(
        &["per-vertex", "--family", "D_15", "--variant", "total"],
        None,
    );
    let rows = json_lines(&out);
    assert_eq!(rows.len(), 15);
    for twin in ["y2", "v2"] {
        let row = rows.iter().find(|r| r["label"] == twin).unwrap();
        assert_eq!(row["value"], 10);
    }
    let best = rows
        .iter()
        .map(|r| r["value"].as_u64().unwrap())
        .min()
        .unwrap();
    assert_eq!(best, 9);
}

#[test]
fn family_spec_inputs() {
    let out = domgame(&["classify", "--family", "direct(paw,complete(2))"], None);
    let row = &json_lines(&out)[0];
    assert_eq!(
        (&row["gamma_cg"], &row["gamma_tcg"], &row["class"]),
        (&5.into(), &5.into(), &0.into())
    );

    let out = domgame(&["family", "--family", "F_4k", "--k", "2"], None);
    let row = &json_lines(&out)[0];
    assert_eq!((&row["n"], &row["m"]), (&8.into(), &12.into()));
    assert_eq!(row["labels"][7], "b2");
}

#[test]
fn staller_start_and_workers_agree() {
    let one = domgame(
        &["compute", "--family", "G_r", "--r", "3", "--starter", "s"],
        None,
    );
    let two = domgame(
        &[
            "compute",
            "--family",
            "G_r",
            "--r",
            "3",
            "--starter",
            "s",
            "--workers",
            "2",
        ],
        None,
    );
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, two.stdout);
    let a = domgame(&["scan", "--max-n", "4"], None);
    let b = domgame(&["scan", "--max-n", "4", "--workers", "2"], None);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json_lines(&a).len(), 1 + 4 + 38);
}

#[test]
fn graph6_and_edge_list_from_stdin() {
    let out = domgame(&["classify", "--graph6", "-"], Some("Bg\nC~\n"));
    let rows = json_lines(&out);
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[1]["graph"], "C~");
    let out = domgame(
        &["compute", "--edges", "-", "--variant", "total"],
        Some("# P4\n4 3\n0 1\n1 2\n2 3\n"),
    );
    assert_eq!(json_lines(&out)[0]["value"], 3);
}

#[test]
fn formats() {
    let out = domgame(
        &["classify", "--family", "cycle(5)", "--format", "tsv"],
        None,
    );
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        "graph\tgamma_cg\tgamma_tcg\tclass\nDhc\t3\t3\t0\n"
    );
    let out = domgame(
        &["classify", "--family", "cycle(5)", "--format", "human"],
        None,
    );
    assert_eq!(
        String::from_utf8_lossy(&out.stdout),
        "graph: Dhc  gamma_cg: 3  gamma_tcg: 3  class: 0\n"
    );
}

#[test]
fn verify_full_suite_passes() {
    let out = domgame(&["verify", "--suite", "paper", "--max-n", "6"], None);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
    let rows = json_lines(&out);
    assert!(rows.iter().all(|r| r["holds"] == true));
    assert!(rows.iter().any(|r| r["check"] == "regressions"));
}

#[test]
fn verify_graphs_prints_results() {
    let out = domgame(&["verify", "--graph6", "-"], Some("Dhc\n"));
    assert_eq!(code(&out), 0);
    let claims: Vec<_> = json_lines(&out)
        .iter()
        .map(|r| r["claim"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(
        claims,
        ["class_bounds", "gamma_c_bounds", "non_inclusive_class0"]
    );
}

#[test]
fn usage_errors_exit_1() {
    let cases: &[&[&str]] = &[
        &["compute"],
        &["compute", "--family", "paw", "--edges", "x"],
        &["compute", "--bogus"],
        &["compute", "--family", "paw", "--variant", "sideways"],
        &["classify", "--family", "G_r"],
        &["classify", "--family", "G_r", "--k", "3"],
        &["classify", "--family", "hypercube(3)"],
        &["classify", "--edges", "/nonexistent/graph.txt"],
        &["scan", "--max-n", "9"],
        &["scan", "--question", "3"],
        &["verify", "--suite", "paper", "--family", "paw"],
        &["compute", "--family", "direct(complete(2),complete(2))"],
    ];
    for args in cases {
        let out = domgame(args, None);
        assert_eq!(
            code(&out),
            1,
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        assert!(!out.stderr.is_empty());
    }
    let out = domgame(&["classify", "--graph6", "-"], Some("C~~\n"));
    assert_eq!(code(&out), 1);
    let out = domgame(&["verify", "--graph6", "-"], Some("@\n"));
    assert_eq!(code(&out), 1);
}

#[test]
fn help_exits_0() {
    assert_eq!(code(&domgame(&["--help"], None)), 0);
    assert_eq!(code(&domgame(&["scan", "--help"], None)), 0);
}

#[test]
fn question_scans() {
    let out = domgame(
        &["scan", "--question", "staller-start", "--max-n", "4"],
        None,
    );
    let rows = json_lines(&out);
    let summary = rows.last().unwrap();
    assert_eq!(
        summary["examined"].as_u64().unwrap() + summary["skipped_complete"].as_u64().unwrap(),
        1 + 4 + 38
    );
    let out = domgame(
        &[
            "scan",
            "--question",
            "tcg-range",
            "--family",
            "G_r",
            "--r",
            "3",
        ],
        None,
    );
    let rows = json_lines(&out);
    assert_eq!(rows[0]["gamma_c"], 5);
    assert_eq!(rows[0]["gamma_tcg_counts"]["7"], 1);
}
