use std::path::Path;
use std::process::{Command, Output};
use tempfile::TempDir;

fn minorlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_minorlab"))
        .args(args)
        .env_remove("MINORLAB_RESULTS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gen_dimacs_grid() {
    let o = minorlab(&["gen", "grid", "4", "4", "--format", "dimacs"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.lines().next(), Some("p edge 16 24"));
    assert_eq!(text.lines().filter(|l| l.starts_with("e ")).count(), 24);
}

#[test]
fn gen_dot_keeps_coordinates() {
    let o = minorlab(&["gen", "grid", "2", "3", "--format", "dot"]);
    assert!(stdout(&o).contains("label=\"(1,2)\""));
}

#[test]
fn gen_twisted_prism_permutation() {
    let o = minorlab(&["gen", "twisted-prism", "4", "--pi", "2,1,4,3"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["n"], 8);
    assert_eq!(v["edges"].as_array().unwrap().len(), 12);
    let bad = minorlab(&["gen", "twisted-prism", "4", "--pi", "1,1,2,3"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn treewidth_and_certificate_round_trip() {
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("g.dimacs");
    let cert = dir.path().join("td.json");
    assert!(minorlab(&["gen", "grid", "4", "4", "--format", "dimacs", "--out", path_str(&g)]).status.success());

    let o = minorlab(&["tw", path_str(&g), "--exact", "--cert", path_str(&cert)]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "4");

    let o = minorlab(&["verify", path_str(&cert), path_str(&g)]);
    assert_eq!(o.status.code(), Some(0));
    let check: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(check["accepted"], true);

    let o = minorlab(&["tw", path_str(&g), "--heuristic"]);
    let line = stdout(&o);
    assert!(line.starts_with("lower≥") && line.contains(" upper≤"), "{line}");
}

#[test]
fn tampered_model_is_rejected() {
    let dir = TempDir::new().unwrap();
    let host = dir.path().join("host.json");
    let cert = dir.path().join("model.json");
    let o = minorlab(&[
        "embed",
        "twisted-prism-grid",
        "--ell",
        "75",
        "--seed",
        "3",
        "--cert",
        path_str(&cert),
        "--graph-out",
        path_str(&host),
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(minorlab(&["verify", path_str(&cert), path_str(&host)]).status.code(), Some(0));

    let mut v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&cert).unwrap()).unwrap();
    let stolen = v["branch_sets"]["1"][0].clone();
    v["branch_sets"]["0"].as_array_mut().unwrap().push(stolen);
    std::fs::write(&cert, v.to_string()).unwrap();
    let o = minorlab(&["verify", path_str(&cert), path_str(&host)]);
    assert_eq!(o.status.code(), Some(1));
    let check: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(check["accepted"], false);
    assert!(check["reason"].as_str().unwrap().contains("branch sets not disjoint"));
}

#[test]
fn embeddings_self_verify() {
    for args in [
        &["embed", "grid-prism", "--r", "2"][..],
        &["embed", "phi", "--base-grid", "2", "--ell", "5"][..],
        &["embed", "phi", "--base-grid", "3", "--ell", "4", "--count", "2"][..],
    ] {
        let o = minorlab(args);
        assert!(o.status.success(), "{args:?}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["type"], "minor_model");
    }
}

#[test]
fn exit_codes_for_bad_input_and_caps() {
    let dir = TempDir::new().unwrap();
    let g = dir.path().join("g.json");
    let cert = dir.path().join("c.json");
    std::fs::write(&cert, r#"{"type":"spaceship"}"#).unwrap();
    assert!(minorlab(&["gen", "cycle", "5", "--out", path_str(&g)]).status.success());
    assert_eq!(minorlab(&["verify", path_str(&cert), path_str(&g)]).status.code(), Some(2));
    assert_eq!(minorlab(&["tw", "/nonexistent/graph.json"]).status.code(), Some(2));
    assert_eq!(minorlab(&["embed", "twisted-prism-grid", "--ell", "10"]).status.code(), Some(2));

    let big = dir.path().join("k30.json");
    assert!(minorlab(&["gen", "complete", "30", "--out", path_str(&big)]).status.success());
    let o = minorlab(&["tw", path_str(&big)]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("exceeds cap"));
}

#[test]
fn default_suite_passes() {
    let o = minorlab(&["check-bounds", "--seed", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    let records: Vec<serde_json::Value> = text
        .lines()
        .filter(|l| l.starts_with('{'))
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert!(!records.is_empty());
    assert!(records.iter().all(|r| r["verdict"] == "pass"));
    assert!(text.contains("0 failed"));
}

#[test]
fn bogus_bound_fails() {
    let dir = TempDir::new().unwrap();
    let results = dir.path().join("r.jsonl");
    let o = minorlab(&["check-bounds", "--bound-override", "cycle=0", "--results", path_str(&results)]);
    assert_eq!(o.status.code(), Some(1));
    let text = std::fs::read_to_string(&results).unwrap();
    let c4 = text
        .lines()
        .map(|l| serde_json::from_str::<serde_json::Value>(l).unwrap())
        .find(|r| r["case"] == "cycle4")
        .unwrap();
    assert_eq!(c4["verdict"], "fail");
    assert_eq!(c4["bound"], 0);
    assert_eq!(c4["bound_overridden"], true);
    // The witness is a triangle, which has treewidth 2 but no C4 minor.
    assert_eq!(c4["witness"]["n"], 3);
}

#[test]
fn suite_output_is_reproducible() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.jsonl");
    let b = dir.path().join("b.jsonl");
    let env_path = dir.path().join("env.jsonl");
    let run = |out: &Path, jobs: &str| {
        let o = minorlab(&["check-bounds", "--suite", "full", "--seed", "7", "--jobs", jobs, "--results", path_str(out)]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    };
    run(&a, "1");
    run(&b, "3");
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());

    // The environment variable names the results file unless the flag is given.
    let o = Command::new(env!("CARGO_BIN_EXE_minorlab"))
        .args(["check-bounds", "--seed", "7"])
        .env("MINORLAB_RESULTS", &env_path)
        .output()
        .unwrap();
    assert!(o.status.success());
    assert!(std::fs::read_to_string(&env_path).unwrap().lines().count() >= 8);
    let flag_path = dir.path().join("flag.jsonl");
    let o = Command::new(env!("CARGO_BIN_EXE_minorlab"))
        .args(["check-bounds", "--seed", "8", "--results", path_str(&flag_path)])
        .env("MINORLAB_RESULTS", &env_path)
        .output()
        .unwrap();
    assert!(o.status.success());
    assert!(flag_path.exists());
    assert_ne!(std::fs::read(&flag_path).unwrap(), std::fs::read(&env_path).unwrap());
}
