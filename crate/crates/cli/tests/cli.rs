use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hesstorus"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn classify_single_h_succeeds_with_schema() {
    let out = run(&["classify", "--n", "4", "--operator", "F2", "--h", "3,3,4,4"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["schema"], "hesstorus/classify/1");
    assert_eq!(doc["config"]["seed"], 0);
    assert_eq!(doc["config"]["trials"], 40);
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0]["t_stable"]["status"]["kind"], "not_T_stable");
    assert_eq!(rows[0]["gkm"], false);
}

#[test]
fn classify_sweep_lists_every_hessenberg_function() {
    let out = run(&["classify", "--n", "4", "--operator", "F2", "--sweep"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 14);
    // Sweep order is lexicographic in h.
    let hs: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| {
            r["h"]
                .as_array()
                .unwrap()
                .iter()
                .map(|v| v.as_u64().unwrap())
                .collect()
        })
        .collect();
    let mut sorted = hs.clone();
    sorted.sort();
    assert_eq!(hs, sorted);
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = [
        "classify", "--n", "5", "--operator", "F2", "--sweep", "--trials", "15", "--seed", "11",
    ];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn too_small_n_is_a_usage_error() {
    let out = run(&["classify", "--n", "3", "--operator", "F2", "--sweep"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn missing_required_flags_exit_with_usage_error() {
    let out = run(&["classify", "--n", "4", "--operator", "F2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["classify", "--n", "4", "--h", "3,3,4,4"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["classify"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_operator_and_h_are_usage_errors() {
    let out = run(&["classify", "--n", "4", "--operator", "G2", "--h", "3,3,4,4"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["classify", "--n", "4", "--operator", "F2", "--h", "4,3,3,4"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["classify", "--n", "4", "--operator", "F2", "--h", "3,3,4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_suites_pass_and_report_instances() {
    let out = run(&["verify", "--suite", "f2-tstable", "--n", "4", "--trials", "8"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("instances=14 PASS"));
    assert!(text.contains("all checks passed"));

    let out = run(&["verify", "--suite", "f2-gkm", "--n", "4..5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("n=4"));
    assert!(text.contains("n=5"));
}

#[test]
fn unknown_suite_is_a_usage_error() {
    let out = run(&["verify", "--suite", "nope", "--n", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn moment_graph_dot_output_for_subregular_operator() {
    let out = run(&[
        "moment-graph",
        "--n",
        "4",
        "--skeletal",
        "2,3,1/1;3,4,1/1",
        "--h",
        "1,2,3,4",
        "--torus",
        "T",
        "--format",
        "dot",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.matches(" -- ").count(), 3);
    assert!(text.starts_with("graph moment {"));
    assert!(text.contains("[label=\""));
}

#[test]
fn moment_graph_json_reports_vertices_and_completeness() {
    let out = run(&[
        "moment-graph",
        "--n",
        "4",
        "--operator",
        "F3",
        "--h",
        "3,3,3,4",
        "--torus",
        "canonical",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["schema"], "hesstorus/moment-graph/1");
    assert_eq!(doc["graph"]["vertices"].as_array().unwrap().len(), 6);
    assert_eq!(doc["graph"]["edges"].as_array().unwrap().len(), 9);
    assert_eq!(doc["graph"]["complete"], true);
}

#[test]
fn moment_graph_flags_incomplete_canonical_torus_graphs() {
    let out = run(&[
        "moment-graph",
        "--n",
        "4",
        "--operator",
        "F2",
        "--h",
        "4,4,4,4",
        "--torus",
        "canonical",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["graph"]["complete"], false);
    assert!(doc["graph"]["incompleteness_witness"].is_array());
}

#[test]
fn moment_graph_explicit_torus_accepts_character_lists() {
    let explicit = run(&[
        "moment-graph",
        "--n",
        "4",
        "--operator",
        "F2",
        "--h",
        "2,2,3,4",
        "--torus",
        "1,-1,-1,1",
        "--format",
        "json",
    ]);
    assert!(explicit.status.success());
    let canonical = run(&[
        "moment-graph",
        "--n",
        "4",
        "--operator",
        "F2",
        "--h",
        "2,2,3,4",
        "--torus",
        "canonical",
        "--format",
        "json",
    ]);
    assert!(canonical.status.success());
    let a: serde_json::Value = serde_json::from_str(&stdout(&explicit)).unwrap();
    let b: serde_json::Value = serde_json::from_str(&stdout(&canonical)).unwrap();
    assert_eq!(a["graph"], b["graph"]);
}

#[test]
fn non_regular_explicit_torus_is_rejected() {
    // The constraint e1 - e2 keeps a root trivial, so the subtorus is not
    // regular and the moment graph is undefined.
    let out = run(&[
        "moment-graph",
        "--n",
        "4",
        "--operator",
        "F2",
        "--h",
        "4,4,4,4",
        "--torus",
        "1,-1,0,0",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn out_file_matches_stdout_content() {
    let dir = std::env::temp_dir().join("hesstorus-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("graph.dot");
    let piped = run(&[
        "moment-graph", "--n", "4", "--operator", "F3", "--h", "3,3,3,4", "--format", "dot",
    ]);
    let filed = run(&[
        "moment-graph",
        "--n",
        "4",
        "--operator",
        "F3",
        "--h",
        "3,3,3,4",
        "--format",
        "dot",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(filed.status.success());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(format!("{written}\n"), stdout(&piped));
    assert!(stdout(&filed).contains("vertices=6 edges=9"));
}
