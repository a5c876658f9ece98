use std::process::Command as Process;

use clique_lab_cli::{parse_args, run_captured, Command, Format};
use serde_json::Value;

fn records(out: &[u8]) -> Vec<Value> {
    String::from_utf8(out.to_vec())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn body<'a>(recs: &'a [Value], kind: &str) -> &'a Value {
    recs.iter().find(|r| r["record"] == kind).unwrap()
}

#[test]
fn parses_documented_invocations() {
    let cli = parse_args([
        "clique-lab",
        "cliques",
        "--named",
        "hajos_sun",
        "--format",
        "json",
    ])
    .unwrap();
    assert!(matches!(&cli.command, Command::Cliques(a) if a.named.as_deref() == Some("hajos_sun")));
    assert_eq!(cli.format, Format::Json);

    let cli = parse_args([
        "clique-lab",
        "behavior",
        "--graph6",
        "Bw",
        "--max-iter",
        "30",
    ])
    .unwrap();
    assert!(
        matches!(&cli.command, Command::Behavior(a) if a.budgets.max_iter == 30 && a.input.graph6.as_deref() == Some("Bw"))
    );

    let cli = parse_args([
        "clique-lab",
        "verify",
        "--n-max",
        "9",
        "--delta-max",
        "4",
        "--exclude-octahedron",
    ])
    .unwrap();
    assert!(
        matches!(&cli.command, Command::Verify(a) if a.corpus.n_max == Some(9) && a.corpus.exclude_octahedron)
    );
}

#[test]
fn rejects_bad_invocations() {
    assert!(parse_args(["clique-lab", "cliques", "--named", "c4", "--graph6", "Bw"]).is_err());
    assert!(parse_args(["clique-lab", "cliques"]).is_err());
    assert!(parse_args(["clique-lab", "cliques", "--named", "c4", "--bogus"]).is_err());
    assert!(parse_args(["clique-lab", "behavior", "--named", "c4", "--max-iter", "0"]).is_err());
    let (_, code) = run_captured(["clique-lab", "cliques", "--graph6", "Bw", "--n-max", "3"]);
    assert_eq!(code, 2);
}

#[test]
fn octahedron_behavior_exceeds_budget() {
    let (out, code) = run_captured(["clique-lab", "behavior", "--named", "octahedron3"]);
    assert_eq!(code, 1);
    let recs = records(&out);
    let b = body(&recs, "behavior");
    assert_eq!(b["verdict"], "budget_exceeded");
    assert_eq!(b["orders"], serde_json::json!([6, 8, 16, 256]));
}

#[test]
fn sun_is_not_hereditary_helly() {
    let (out, code) = run_captured(["clique-lab", "hch", "--named", "hajos_sun"]);
    assert_eq!(code, 1);
    let recs = records(&out);
    let h = body(&recs, "hch");
    assert_eq!(h["hajos_compatible"], false);
    assert_eq!(h["embedding"]["inner"], serde_json::json!([0, 1, 2]));
}

#[test]
fn verify_small_corpus_passes() {
    let (out, code) = run_captured(["clique-lab", "verify", "--n-max", "7"]);
    assert_eq!(code, 0);
    let recs = records(&out);
    let summary = recs.last().unwrap();
    assert_eq!(summary["record"], "summary");
    assert_eq!(summary["fail"], 0);
    assert_eq!(summary["graphs"], 461);
    assert_eq!(recs[0]["record"], "header");
}

#[test]
fn verify_with_octahedron_fails() {
    let (out, code) = run_captured([
        "clique-lab",
        "verify",
        "--n-min",
        "6",
        "--n-max",
        "6",
        "--include-octahedron",
    ]);
    assert_eq!(code, 1);
    let summary = records(&out).pop().unwrap();
    assert_eq!(summary["budget_exceeded"], 1);
}

#[test]
fn cliques_and_kgraph_of_sun() {
    let (out, code) = run_captured(["clique-lab", "cliques", "--named", "hajos_sun"]);
    assert_eq!(code, 0);
    assert_eq!(body(&records(&out), "cliques")["count"], 4);
    let (out, _) = run_captured([
        "clique-lab",
        "kgraph",
        "--named",
        "hajos_sun",
        "--steps",
        "2",
    ]);
    let k = records(&out);
    assert_eq!(body(&k, "kgraph")["order"], 1);
}

#[test]
fn edge_list_input_and_dot_output() {
    let dir = std::env::temp_dir().join(format!("clique-lab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("c5.txt");
    std::fs::write(&path, "5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    let p = path.to_str().unwrap();
    let (out, code) = run_captured(["clique-lab", "helly", "--edges", p, "--format", "text"]);
    assert_eq!(code, 0);
    assert!(String::from_utf8(out)
        .unwrap()
        .contains("clique_helly=true"));
    let (out, code) = run_captured(["clique-lab", "kgraph", "--edges", p, "--format", "dot"]);
    assert_eq!(code, 0);
    assert!(String::from_utf8(out).unwrap().starts_with("graph G {"));
    let (_, code) = run_captured(["clique-lab", "behavior", "--edges", p, "--format", "dot"]);
    assert_eq!(code, 2);
    let (_, code) = run_captured(["clique-lab", "cliques", "--edges", "/nonexistent/graph.txt"]);
    assert_eq!(code, 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn gen_text_is_graph6_lines() {
    let (out, code) = run_captured([
        "clique-lab",
        "gen",
        "--n-min",
        "5",
        "--n-max",
        "5",
        "--format",
        "text",
    ]);
    assert_eq!(code, 0);
    let text = String::from_utf8(out).unwrap();
    let tokens: Vec<&str> = text.lines().collect();
    assert_eq!(tokens.len(), 21);
    assert!(tokens
        .iter()
        .all(|t| clique_lab::parse_graph6(t).unwrap().order() == 5));
}

#[test]
fn corpus_file_round_trip() {
    let dir = std::env::temp_dir().join(format!("clique-lab-corpus-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("corpus.g6");
    let (out, _) = run_captured(["clique-lab", "gen", "--n-max", "5", "--format", "text"]);
    std::fs::write(&path, out).unwrap();
    let (out, code) = run_captured([
        "clique-lab",
        "lemmas",
        "--corpus-file",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let summary = records(&out).pop().unwrap();
    assert_eq!(summary["graphs"], 31);
    assert_eq!(summary["fail"], 0);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn binary_exit_status_and_thread_variable() {
    let bin = env!("CARGO_BIN_EXE_clique-lab");
    let ok = Process::new(bin)
        .args(["verify", "--n-max", "6"])
        .env("CLIQUE_LAB_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let header: Value =
        serde_json::from_str(String::from_utf8_lossy(&ok.stdout).lines().next().unwrap()).unwrap();
    assert_eq!(header["threads"], 2);
    let bad = Process::new(bin)
        .args(["hch", "--named", "hajos_sun"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
    let usage = Process::new(bin)
        .args(["hch", "--named", "nonsense"])
        .output()
        .unwrap();
    assert_eq!(usage.status.code(), Some(2));
    let env_bad = Process::new(bin)
        .args(["cliques", "--named", "c4"])
        .env("CLIQUE_LAB_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(env_bad.status.code(), Some(2));
}
