use std::fs;
use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn domcrit(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_domcrit"));
    cmd.args(args)
        .env_remove("DOMCRIT_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().unwrap();
    if let Some(text) = stdin {
        child
            .stdin
            .take()
            .unwrap()
            .write_all(text.as_bytes())
            .unwrap();
    }
    drop(child.stdin.take());
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn analyze_c4_from_stdin() {
    let out = domcrit(&["analyze", "-"], Some("Cr\n"), &[]);
    assert_eq!(out.status.code(), Some(0));
    let v = &json(&out)[0];
    assert_eq!(v["n"], 4);
    assert_eq!(v["gamma"], 2);
    assert_eq!(v["critical"], true);
    assert_eq!(v["gamma_set_count"], 6);
    assert_eq!(v["fk"]["params"]["m"], serde_json::json!([2]));
    assert_eq!(v["fstar"]["shape"], "Fk");
    assert!(!out.stderr.is_empty());
}

#[test]
fn analyze_path_edge_list_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p3.txt");
    fs::write(&path, "# a path\nn 3\n0 1\n1 2\n").unwrap();
    let out = domcrit(&["analyze", path.to_str().unwrap()], None, &[]);
    assert_eq!(out.status.code(), Some(0));
    let v = &json(&out)[0];
    assert_eq!(v["gamma"], 1);
    assert_eq!(v["partition"]["plus"], serde_json::json!([1]));
    assert_eq!(v["partition"]["zero"], serde_json::json!([0, 2]));
}

#[test]
fn analyze_disconnected_lists_components() {
    let out = domcrit(
        &["analyze", "-", "--format", "edgelist"],
        Some("n 5\n0 1\n2 3\n3 4\n"),
        &[],
    );
    let v = &json(&out)[0];
    assert_eq!(v["connected"], false);
    assert_eq!(v["diameter"], Value::Null);
    let comps = v["components"].as_array().unwrap();
    let total: u64 = comps.iter().map(|c| c["gamma"].as_u64().unwrap()).sum();
    assert_eq!(total, v["gamma"].as_u64().unwrap());
}

#[test]
fn budget_exhaustion_is_unknown_and_flag_beats_env() {
    // K6 has 6 γ-sets of size 1; a budget of 2 candidate sets is too small
    let k6 = "E~~w";
    let out = domcrit(&["analyze", "-"], Some(k6), &[("DOMCRIT_BUDGET", "2")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)[0]["gamma_set_count"], "unknown");
    let out = domcrit(
        &["analyze", "-", "--budget", "100"],
        Some(k6),
        &[("DOMCRIT_BUDGET", "2")],
    );
    assert_eq!(json(&out)[0]["gamma_set_count"], 6);
}

#[test]
fn parse_errors_exit_2() {
    let out = domcrit(&["analyze", "-"], Some("not a graph!\n"), &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse error"));
    let out = domcrit(&["analyze", "/nonexistent/file"], None, &[]);
    assert_eq!(out.status.code(), Some(2));
    let out = domcrit(&["frobnicate"], None, &[]);
    assert_eq!(out.status.code(), Some(2));
    let out = domcrit(&["verify", "--theorems", "NoSuchCheck"], None, &[]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gen_families() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("g22.g6");
    let out = domcrit(
        &[
            "gen",
            "fk",
            "--k",
            "3",
            "--m",
            "2,2",
            "--out",
            out_path.to_str().unwrap(),
        ],
        None,
        &[],
    );
    assert_eq!(out.status.code(), Some(0));
    let g6 = fs::read_to_string(&out_path).unwrap();
    let g = domcrit::Graph::from_graph6(g6.trim()).unwrap();
    assert_eq!(g.order(), 7);
    let sidecar: Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("g22.g6.json")).unwrap()).unwrap();
    assert_eq!(sidecar[0]["k"], 3);
    assert_eq!(sidecar[0]["construction"]["m"], serde_json::json!([2, 2]));
    assert_eq!(sidecar[0]["graph"], g6.trim());

    let out = domcrit(
        &["gen", "fpp3", "--m1", "2", "--m2", "2", "--variant", "1"],
        None,
        &[],
    );
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(domcrit::Graph::from_graph6(text.trim()).unwrap().order(), 8);

    let out = domcrit(
        &["gen", "fstar", "--k", "4", "--max-order", "12"],
        None,
        &[],
    );
    assert_eq!(out.status.code(), Some(0));
    let lines: Vec<String> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(String::from)
        .collect();
    assert!(!lines.is_empty());
    let mut forms: Vec<_> = lines
        .iter()
        .map(|l| domcrit::Graph::from_graph6(l).unwrap().canonical_form())
        .collect();
    forms.sort();
    forms.dedup();
    assert_eq!(forms.len(), lines.len());

    let out = domcrit(&["gen", "fk", "--m", "1,2"], None, &[]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn iso_and_convert() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.g6");
    let b = dir.path().join("b.txt");
    fs::write(&a, "Cr\n").unwrap();
    // complement of 2K2
    fs::write(&b, "n 4\n0 2\n0 3\n1 2\n1 3\n").unwrap();
    let out = domcrit(
        &["iso", a.to_str().unwrap(), b.to_str().unwrap()],
        None,
        &[],
    );
    assert_eq!(json(&out)["isomorphic"], true);
    let out = domcrit(&["iso", a.to_str().unwrap(), "-"], Some("C^"), &[]);
    assert_eq!(json(&out)["isomorphic"], false);

    let out = domcrit(
        &["convert", b.to_str().unwrap(), "--to", "graph6"],
        None,
        &[],
    );
    let g6 = String::from_utf8(out.stdout).unwrap();
    let back = domcrit(&["convert", "-", "--to", "edgelist"], Some(&g6), &[]);
    let again = domcrit(
        &["convert", "-", "--to", "graph6"],
        Some(&String::from_utf8(back.stdout).unwrap()),
        &[],
    );
    assert_eq!(String::from_utf8(again.stdout).unwrap(), g6);
}

#[test]
fn verify_exit_codes_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let out = domcrit(
        &[
            "verify",
            "--theorems",
            "ThmA,Lem1_22",
            "--n-max",
            "6",
            "--out",
            report.to_str().unwrap(),
        ],
        None,
        &[],
    );
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
    let checks = v["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 2);
    assert_eq!(checks[0]["theorem_id"], "ThmA");
    assert_eq!(checks[1]["status"], "pass");
    assert!(String::from_utf8_lossy(&out.stderr).contains("Lem1_22"));

    let out = domcrit(&["verify", "--n-max", "11"], None, &[]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_file_source() {
    let out = domcrit(
        &["verify", "--theorems", "ThmE,Thm1", "--input", "-"],
        Some("Cr\nF]@IO\n"),
        &[],
    );
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    for c in v["checks"].as_array().unwrap() {
        assert_eq!(c["hypothesis_count"], 2);
        assert_eq!(c["status"], "pass");
    }
}
