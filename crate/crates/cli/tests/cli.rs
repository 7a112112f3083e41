use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn hombound(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hombound"))
        .args(args)
        .env_remove("HOMBOUND_GUARD_EVALS")
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn hom_k2_into_k3() {
    let v = json_of(&hombound(&["hom", "--h-graph6", "A_", "--g-graph6", "Bw"]));
    assert_eq!(v["records"][0]["count"], "6");
    assert_eq!(v["command"], "hom");
    assert!(v["generated_at"].is_string());
}

#[test]
fn density_is_exact() {
    let v = json_of(&hombound(&[
        "density",
        "--h-graph6",
        "Bg",
        "--g-graph6",
        "Bw",
    ]));
    // P3 into K3: 12 / 27
    assert_eq!(v["records"][0]["density"], "4/9");
    assert_eq!(v["records"][0]["count"], "12");
}

#[test]
fn sidorenko_star_on_triangle() {
    let v = json_of(&hombound(&[
        "check-sidorenko",
        "--h-graph6",
        "Bg",
        "--g-graph6",
        "Bw",
    ]));
    let r = &v["records"][0];
    assert_eq!(r["holds"], true);
    assert_eq!(r["slack"], "1/1");
    assert_eq!(r["apex_hypothesis"], true);
}

#[test]
fn sidorenko_with_tensor_powers() {
    let v = json_of(&hombound(&[
        "check-sidorenko",
        "--h-graph6",
        "Cl",
        "--g-graph6",
        "Bw",
        "--r",
        "2",
        "--no-timestamp",
    ]));
    let r = &v["records"][0];
    assert_eq!(r["slack"], "9/8");
    assert_eq!(
        r["tensor_powers"]["details"]["multiplicative_power2"],
        "true"
    );
    assert_eq!(r["violation"], false);
}

#[test]
fn drc_on_triangle_holds() {
    let v = json_of(&hombound(&[
        "drc",
        "--g-graph6",
        "Bw",
        "--n",
        "2",
        "--k",
        "2",
    ]));
    let r = &v["records"][0];
    assert_eq!(r["holds"], true);
    assert_eq!(r["good_vertices"], serde_json::json!([0, 1, 2]));
    assert_eq!(r["vertices"][0]["per_k"].as_array().unwrap().len(), 1);
}

#[test]
fn embed_verify_c4_on_k4() {
    let v = json_of(&hombound(&[
        "embed-verify",
        "--h-graph6",
        "Cl",
        "--g-graph6",
        "C~",
    ]));
    let r = &v["records"][0];
    assert_eq!(r["lhs"], "84");
    assert_eq!(r["conclusion_holds"], true);
    assert_eq!(r["sub_reports"].as_array().unwrap().len(), 4);
}

#[test]
fn embed_verify_rejects_non_apex_pattern() {
    // P6 has no apex
    let out = hombound(&["embed-verify", "--h-graph6", "EhCG", "--g-graph6", "Bw"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("EhCG"));
}

#[test]
fn tensor_pairs_hosts() {
    let v = json_of(&hombound(&[
        "tensor",
        "--h-graph6",
        "A_",
        "--g-graph6",
        "Bw",
        "--g-graph6",
        "Bg",
    ]));
    // pairs (Bw,Bw), (Bw,Bg), (Bg,Bg)
    assert_eq!(v["records"].as_array().unwrap().len(), 3);
    assert_eq!(v["summary"]["violations"], 0);
}

#[test]
fn search_is_deterministic() {
    let args = [
        "search",
        "--max-vertices",
        "3",
        "--random",
        "6,1/2,5",
        "--seed",
        "3",
        "--no-timestamp",
    ];
    let a = hombound(&args);
    let b = hombound(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert!(v.get("generated_at").is_none());
    // K2 only: density equals p exactly
    let v = json_of(&hombound(&[
        "search",
        "--max-vertices",
        "2",
        "--random",
        "6,1/2,5",
    ]));
    assert_eq!(v["records"][0]["min_slack"], "1/1");
}

#[test]
fn records_are_sorted_by_id() {
    let v = json_of(&hombound(&[
        "hom",
        "--h-graph6",
        "A_",
        "--g-graph6",
        "Bw",
        "--g-graph6",
        "Bg",
    ]));
    let ids: Vec<&str> = v["records"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["id"].as_str().unwrap())
        .collect();
    assert_eq!(ids, ["h=A_ g=Bg", "h=A_ g=Bw"]);
}

#[test]
fn csv_output_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.csv");
    let out = hombound(&[
        "hom",
        "--h-graph6",
        "A_",
        "--g-graph6",
        "Bw",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = fs::read_to_string(&path).unwrap();
    assert_eq!(text, "id,violation,count,g,h\nh=A_ g=Bw,false,6,Bw,A_\n");
}

#[test]
fn edge_list_and_stream_files() {
    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("k3.txt");
    fs::write(&edges, "3\n0 1\n1 2\n0 2\n").unwrap();
    let stream = dir.path().join("h.g6");
    fs::write(&stream, "A_\nBg\n").unwrap();
    let v = json_of(&hombound(&[
        "hom",
        "--h-file",
        stream.to_str().unwrap(),
        "--g-file",
        edges.to_str().unwrap(),
    ]));
    let counts: Vec<&str> = v["records"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["count"].as_str().unwrap())
        .collect();
    assert_eq!(counts, ["6", "12"]);
}

#[test]
fn exit_codes() {
    assert_eq!(
        hombound(&["hom", "--h-graph6", "A_"]).status.code(),
        Some(1)
    );
    assert_eq!(hombound(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(
        hombound(&["hom", "--h-graph6", "A_", "--g-file", "/nonexistent.g6"])
            .status
            .code(),
        Some(1)
    );
    let out = hombound(&["hom", "--h-graph6", "B~", "--g-graph6", "Bw"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("B~"));
    // K3 into K3 fixes two vertices before the last is counted: 9 evaluations
    let args = [
        "hom",
        "--h-graph6",
        "Bw",
        "--g-graph6",
        "Bw",
        "--guard",
        "5",
    ];
    assert_eq!(hombound(&args).status.code(), Some(3));
    // non-bipartite pattern
    assert_eq!(
        hombound(&["check-sidorenko", "--h-graph6", "Bw", "--g-graph6", "Bw"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn guard_from_environment_and_flag_precedence() {
    let base = ["hom", "--h-graph6", "Bw", "--g-graph6", "Bw"];
    let run = |env: &str, extra: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_hombound"))
            .args(base)
            .args(extra)
            .env("HOMBOUND_GUARD_EVALS", env)
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(run("5", &[]), Some(3));
    assert_eq!(run("5", &["--guard", "1000"]), Some(0));
    assert_eq!(run("1000", &[]), Some(0));
}

#[test]
fn config_is_echoed() {
    let v = json_of(&hombound(&[
        "drc",
        "--g-graph6",
        "Bw",
        "--n",
        "3",
        "--seed",
        "18446744073709551615",
    ]));
    assert_eq!(v["config"]["n"], 3);
    assert_eq!(v["config"]["seed"], "18446744073709551615");
    assert_eq!(v["tool"], "hombound");
}

#[test]
fn search_over_all_small_graphs() {
    let graphs: Vec<hombound::Graph> = (1..=4)
        .flat_map(|n| hombound::corpus::all_graphs(n).unwrap())
        .collect();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("small.g6");
    fs::write(
        &path,
        hombound::graph::graph6::emit_graph6_stream(&graphs).unwrap(),
    )
    .unwrap();
    let v = json_of(&hombound(&[
        "search",
        "--max-vertices",
        "4",
        "--g-file",
        path.to_str().unwrap(),
    ]));
    assert_eq!(v["summary"]["violations"], 0);
    assert_eq!(v["summary"]["hosts"], 18);
    assert_eq!(v["summary"]["min_slack"], "1/1");
}
