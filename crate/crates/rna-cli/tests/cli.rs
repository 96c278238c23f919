//! End-to-end checks of the `rna` binary: output shapes, exit codes, and
//! byte-stability of JSON output.

use std::process::{Command, Output};

fn rna(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rna"))
        .args(args)
        .env_remove("RNA_MAX_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn compute_petersen() {
    let out = rna(&["--petersen", "5,2"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("rna: 5"), "{text}");
    assert!(text.contains("solver: fast"), "{text}");
}

#[test]
fn compute_cycle_json_is_stable() {
    let a = rna(&["--family", "cycle:8", "--format", "json"]);
    let b = rna(&["--family", "cycle:8", "--format", "json"]);
    assert_eq!(exit_code(&a), 0);
    assert_eq!(a.stdout, b.stdout, "json output must be byte-stable");
    let value: serde_json::Value = serde_json::from_str(stdout(&a).trim()).unwrap();
    assert_eq!(value["rna"], 2);
    assert_eq!(value["solver"], "fast");
    assert!(value["witness_side"].is_array());
}

#[test]
fn compute_single_edge() {
    let out = rna(&["--edges", "0-1"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("rna: 1"));
}

#[test]
fn solvers_agree_via_cli() {
    for solver in ["naive", "fast", "bb"] {
        let out = rna(&["--famous", "durer", "--solver", solver]);
        assert_eq!(exit_code(&out), 0, "{solver}");
        assert!(stdout(&out).contains("rna: 4"), "{solver}: {}", stdout(&out));
    }
}

#[test]
fn exit_code_validation_error() {
    let out = rna(&["--petersen", "4,2"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn exit_code_capacity_error() {
    let out = rna(&["--family", "complete:50"]);
    assert_eq!(exit_code(&out), 3);
}

#[test]
fn exit_code_io_error() {
    let out = rna(&["--json-file", "/nonexistent/graph.json"]);
    assert_eq!(exit_code(&out), 4);
}

#[test]
fn max_order_env_raises_guard() {
    let blocked = rna(&["--family", "cycle:41"]);
    assert_eq!(exit_code(&blocked), 3);
    let out = Command::new(env!("CARGO_BIN_EXE_rna"))
        .args(["--family", "cycle:41"])
        .env("RNA_MAX_ORDER", "41")
        .output()
        .unwrap();
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("rna: 2"));
}

#[test]
fn verify_single_claim() {
    let out = rna(&["verify", "thm4.4", "--n", "4..10"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("thm4.4"), "{text}");
    assert!(text.contains("pass"), "{text}");
    assert!(text.contains("0 failed"), "{text}");
}

#[test]
fn verify_census_claim() {
    let out = rna(&["verify", "lem6.4"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("pass"));
}

#[test]
fn verify_all_quick_passes() {
    let out = rna(&["verify", "all", "--quick"]);
    assert_eq!(exit_code(&out), 0, "{}", stdout(&out));
    assert!(stdout(&out).contains("0 failed"));
}

#[test]
fn verify_unknown_claim_is_usage_error() {
    let out = rna(&["verify", "nonsense"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn verify_json_schema_and_stability() {
    let a = rna(&["verify", "thm2.1", "--format", "json"]);
    let b = rna(&["verify", "thm2.1", "--format", "json"]);
    assert_eq!(exit_code(&a), 0);
    assert_eq!(a.stdout, b.stdout, "verify json must be byte-stable");
    let value: serde_json::Value = serde_json::from_str(stdout(&a).trim()).unwrap();
    assert_eq!(value["theorem"], "thm2.1");
    assert_eq!(value["status"], "pass");
    let instances = value["instances"].as_array().unwrap();
    assert!(!instances.is_empty());
    for inst in instances {
        assert!(inst.get("params").is_some());
        assert_eq!(inst["expected"], inst["computed"]);
    }
}

#[test]
fn verify_jobs_output_matches_sequential() {
    let seq = rna(&["verify", "thm2.5", "--format", "json"]);
    let par = rna(&["verify", "thm2.5", "--format", "json", "--jobs", "4"]);
    assert_eq!(seq.stdout, par.stdout);
}

#[test]
fn export_dashed_negative_edges() {
    let dir = std::env::temp_dir().join(format!("rna-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();

    let durer = dir.join("durer.dot");
    let out = rna(&[
        "export",
        "--famous",
        "durer",
        "--labeling",
        "famous",
        "-o",
        durer.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = std::fs::read_to_string(&durer).unwrap();
    assert_eq!(text.matches("style=dashed").count(), 4, "{text}");
    assert!(text.starts_with("graph {"));
    assert!(text.contains("u0 -- u1"));

    // no labeling: all solid
    let plain = dir.join("petersen.dot");
    let out = rna(&["export", "--famous", "petersen", "-o", plain.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    let text = std::fs::read_to_string(&plain).unwrap();
    assert_eq!(text.matches("style=dashed").count(), 0);
    assert_eq!(text.matches(" -- ").count(), 15);

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn export_json_round_trips_through_solver() {
    let dir = std::env::temp_dir().join(format!("rna-cli-json-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("petersen.json");

    let out = rna(&[
        "export",
        "--petersen",
        "5,2",
        "--format",
        "json",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);

    let out = rna(&["--json-file", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("rna: 5"));

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn export_nauru_has_eight_dashed_edges() {
    let dir = std::env::temp_dir().join(format!("rna-cli-nauru-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("nauru.dot");
    let out = rna(&[
        "export",
        "--famous",
        "nauru",
        "--labeling",
        "famous",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(exit_code(&out), 0);
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.matches("style=dashed").count(), 8);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn missing_graph_spec_is_usage_error() {
    let out = rna(&[]);
    assert_eq!(exit_code(&out), 2);
}
