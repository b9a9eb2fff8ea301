//! End-to-end tests of the `cubeforest` binary.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use cubeforest::constructions::BoxFamily;
use cubeforest::geometry::ContactGraph;
use cubeforest::io::{FamilyMemberJson, GraphJson};
use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_cubeforest"));
    c.env_remove("CUBEFOREST_SEED");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn greedy_colouring_of_an_edgeless_crossing_graph_uses_one_colour() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "p.txt", "0 1\n1 2\n2 3\n");
    let built = run(&["build", "--from", "edges", s(&g)]);
    assert_eq!(code(&built), 0);
    let path = write(dir.path(), "p.json", std::str::from_utf8(&built.stdout).unwrap());
    let o = run(&["colour", s(&path), "--method", "greedy", "--graph", "crossing"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json(&o)["num_colours"], 1);
    assert_eq!(json(&o)["proper"], true);
}

#[test]
fn median_check_on_k23_fails_with_a_triple() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "k23.json", r#"{"vertices":[0,1,2,3,4],"edges":[[0,2],[0,3],[0,4],[1,2],[1,3],[1,4]]}"#);
    let o = run(&["verify", s(&g), "--check", "median"]);
    assert_eq!(code(&o), 1);
    let v = json(&o);
    assert_eq!(v["ok"], false);
    assert_eq!(v["detail"]["NotMedian"]["medians"], 2);
}

#[test]
fn grid_embeds_into_two_trees() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.json");
    let col = dir.path().join("c.json");
    let trees = dir.path().join("trees");
    assert_eq!(code(&run(&["build", "--from", "grid", "--rows", "3", "--cols", "3", "-o", s(&g)])), 0);
    assert_eq!(code(&run(&["colour", s(&g), "--method", "exact", "--graph", "crossing", "-o", s(&col)])), 0);
    let o = run(&["embed-trees", s(&g), "--colouring", s(&col), "--out-dir", s(&trees)]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!((v["k"].as_u64(), v["isometric"].as_bool()), (Some(2), Some(true)));
    assert!(trees.join("tree-0.json").exists() && trees.join("tree-1.json").exists());
    assert!(!trees.join("tree-2.json").exists());
    let o = run(&["verify", s(&g), "--check", "isometry", "--colouring", s(&col)]);
    assert_eq!(code(&o), 0);
}

#[test]
fn improper_crossing_colouring_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.json");
    assert_eq!(code(&run(&["build", "--from", "grid", "-o", s(&g)])), 0);
    let col =
        write(dir.path(), "c.json", r#"{"method":"greedy","colours":{"0":0,"1":0},"num_colours":1,"proper":false}"#);
    assert_eq!(code(&run(&["embed-trees", s(&g), "--colouring", s(&col)])), 2);
    assert_eq!(code(&run(&["verify", s(&g), "--check", "isometry", "--colouring", s(&col)])), 1);
    assert_eq!(
        code(&run(&["verify", s(&g), "--check", "colouring", "--graph", "crossing", "--colouring", s(&col)])),
        1
    );
}

#[test]
fn usage_and_budget_exit_codes() {
    assert_eq!(code(&run(&["colour", "--no-such-flag"])), 2);
    assert_eq!(code(&run(&["hyperplanes", "/nonexistent.json"])), 2);
    assert_eq!(code(&run(&["theorem2", "-n", "9"])), 3);
    assert_eq!(code(&run(&["build", "--from", "grid", "--rows", "9", "--cols", "9", "--max-vertices", "10"])), 3);
}

#[test]
fn outputs_are_deterministic() {
    let a = run(&["build", "--from", "random", "--seed", "5", "--squares", "20"]);
    let b = run(&["build", "--from", "random", "--seed", "5", "--squares", "20"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let e = bin().args(["build", "--from", "random", "--squares", "20"]).env("CUBEFOREST_SEED", "5").output().unwrap();
    assert_eq!(e.stdout, a.stdout);
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.json", std::str::from_utf8(&a.stdout).unwrap());
    let c1 = run(&["colour", s(&g), "--method", "theorem1"]);
    let c2 = run(&["colour", s(&g), "--method", "theorem1"]);
    assert_eq!(code(&c1), 0);
    assert_eq!(c1.stdout, c2.stdout);
}

#[test]
fn artifacts_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.json");
    assert_eq!(code(&run(&["build", "--from", "grid", "--rows", "2", "--cols", "3", "-o", s(&g)])), 0);
    let walls = write(dir.path(), "w.json", r#"{"points":[0,1,2,3],"walls":[[[0,1],[2,3]],[[0,2],[1,3]]]}"#);
    let square = run(&["build", "--from", "walls", s(&walls)]);
    assert_eq!(json(&square)["edges"].as_array().unwrap().len(), 4);
    let events = write(dir.path(), "e.json", r#"{"events":[0,1,2],"causality":[[0,1]],"conflict":[[1,2]]}"#);
    let dom = run(&["build", "--from", "events", s(&events)]);
    assert_eq!(code(&dom), 0);
    let boxes = write(dir.path(), "b.json", r#"{"boxes":[[[1,2],[1,2],[1,2]]]}"#);
    assert_eq!(code(&run(&["build", "--from", "boxes", s(&boxes)])), 0);
    fn same<T: serde::Serialize + serde::de::DeserializeOwned>(o: &Output) {
        assert_eq!(code(o), 0);
        let typed: T = serde_json::from_slice(&o.stdout).unwrap();
        let again = serde_json::to_string_pretty(&typed).unwrap() + "\n";
        assert_eq!(again.as_bytes(), o.stdout.as_slice());
    }
    same::<Value>(&run(&["hyperplanes", s(&g)]));
    same::<ContactGraph>(&run(&["contact-graph", s(&g)]));
    same::<ContactGraph>(&run(&["contact-graph", s(&g), "--pointed", "0"]));
    same::<BoxFamily>(&run(&["burling", "-n", "1"]));
    same::<GraphJson>(&square);
    same::<GraphJson>(&dom);
    same::<FamilyMemberJson>(&run(&["theorem2", "-n", "1"]));
    let built = std::fs::read(&g).unwrap();
    let again = write(dir.path(), "g2.json", std::str::from_utf8(&built).unwrap());
    let rebuilt = run(&["contact-graph", s(&again)]);
    assert_eq!(rebuilt.stdout, run(&["contact-graph", s(&g)]).stdout);
}

#[test]
fn dot_marks_osculations_dashed() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "p.txt", "0 1\n1 2\n");
    let built = run(&["build", "--from", "edges", s(&p)]);
    let g = write(dir.path(), "p.json", std::str::from_utf8(&built.stdout).unwrap());
    let o = run(&["contact-graph", s(&g), "--dot"]);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.starts_with("graph contact {"));
    assert!(text.contains("0 -- 1 [style=dashed];"));
}

#[test]
fn recubulation_of_a_path_is_a_square_and_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "p.txt", "0 1\n1 2\n");
    let built = run(&["build", "--from", "edges", s(&p)]);
    let g = write(dir.path(), "p.json", std::str::from_utf8(&built.stdout).unwrap());
    let alpha = write(dir.path(), "a.json", r#"{"vertices":[0,1],"edges":[[0,1]]}"#);
    let out = dir.path().join("r.json");
    assert_eq!(code(&run(&["recubulate", s(&g), "--alpha", s(&alpha), "-o", s(&out)])), 0);
    let r: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(r["graph"]["vertices"].as_array().unwrap().len(), 4);
    let v = run(&["verify", s(&g), "--check", "recubulation", "--alpha", s(&alpha), "--recubulation", s(&out)]);
    assert_eq!(code(&v), 0);
    let far = write(dir.path(), "far.json", r#"{"vertices":[0,1],"edges":[]}"#);
    assert_eq!(code(&run(&["recubulate", s(&g), "--alpha", s(&far)])), 0);
    let p3 = write(dir.path(), "p3.txt", "0 1\n1 2\n2 3\n");
    let built = run(&["build", "--from", "edges", s(&p3)]);
    let g3 = write(dir.path(), "p3.json", std::str::from_utf8(&built.stdout).unwrap());
    let bad = write(dir.path(), "bad.json", r#"{"vertices":[0,1,2],"edges":[[0,2]]}"#);
    assert_eq!(code(&run(&["recubulate", s(&g3), "--alpha", s(&bad)])), 2);
}

#[test]
fn nice_labels_of_two_concurrent_events() {
    let dir = tempfile::tempdir().unwrap();
    let e = write(dir.path(), "e.json", r#"{"events":[0,1],"causality":[],"conflict":[]}"#);
    let o = run(&["nice-label", s(&e), "--method", "exact"]);
    assert_eq!(code(&o), 0);
    let v = json(&o);
    assert_eq!((v["num_labels"].as_u64(), v["nice"].as_bool()), (Some(2), Some(true)));
    let bad = write(dir.path(), "bad.json", r#"{"events":[0],"causality":[],"conflict":[[0,0]]}"#);
    assert_eq!(code(&run(&["nice-label", s(&bad)])), 2);
}

#[test]
fn structural_checks_pass_on_a_grid() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.json");
    assert_eq!(code(&run(&["build", "--from", "grid", "--rows", "2", "--cols", "4", "-o", s(&g)])), 0);
    for check in ["cluster-diameter", "weak-combing", "degree-bound", "median"] {
        let o = run(&["verify", s(&g), "--check", check]);
        assert_eq!(code(&o), 0, "{check}");
    }
}
