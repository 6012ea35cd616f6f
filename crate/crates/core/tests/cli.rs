use std::fs;
use std::path::Path;

use centerset::cli::run;
use centerset::generators;
use centerset::graph::to_edge_list;
use serde_json::Value;
use tempfile::TempDir;

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

fn call(args: &[&str]) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("centerset").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Outcome { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

fn write_graph(dir: &Path, name: &str, g: &centerset::Graph) -> String {
    let path = dir.join(name);
    fs::write(&path, to_edge_list(g)).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn center_of_antipodal_pair_in_c6() {
    let dir = TempDir::new().unwrap();
    let c6 = write_graph(dir.path(), "c6.el", &generators::cycle(6).unwrap());
    let r = call(&["center", "--graph", &c6, "--profile", "0,3"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.stdout, "[1,2,4,5]\n");

    let r = call(&["center", "--graph", &c6, "--profile", "0,3", "--one-based", "--format", "text"]);
    assert_eq!(r.stdout, "{2,3,5,6}\n");

    let r = call(&["center", "--graph", &c6]);
    assert_eq!(r.stdout, "[0,1,2,3,4,5]\n");
}

#[test]
fn enumerate_triangle() {
    let dir = TempDir::new().unwrap();
    let k3 = write_graph(dir.path(), "k3.el", &generators::complete(3).unwrap());
    let r = call(&["enumerate", "--graph", &k3]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "[[0],[1],[2],[0,1,2]]\n");
    let sets: Vec<Vec<usize>> = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(sets.len(), 4);
}

#[test]
fn enumerate_output_is_byte_stable() {
    let dir = TempDir::new().unwrap();
    let w6 = write_graph(dir.path(), "w6.el", &generators::wheel(6).unwrap());
    let a = call(&["enumerate", "--graph", &w6]).stdout;
    let b = call(&["enumerate", "--graph", &w6]).stdout;
    assert_eq!(a, b);
    let sets: Vec<Vec<usize>> = serde_json::from_str(&a).unwrap();
    assert_eq!(sets.len(), 21);
}

#[test]
fn classify_golden() {
    let dir = TempDir::new().unwrap();
    let p4 = write_graph(dir.path(), "p4.el", &generators::path(4).unwrap());
    let r = call(&["classify", "--graph", &p4]);
    assert_eq!(
        r.stdout,
        "{\"balanced\":false,\"block_graph\":true,\"center_critical\":false,\"even\":false,\
         \"harmonic\":false,\"self_centered\":false,\"symmetric_even\":false,\"uev\":true}\n"
    );
}

#[test]
fn verify_odd_cycle_passes() {
    let r = call(&["verify", "--class", "odd-cycle", "--n", "7"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let v: Value = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["predicted_count"], v["enumerated_count"]);
    assert_eq!(v["missing"], serde_json::json!([]));
}

#[test]
fn verify_with_graph_file() {
    let dir = TempDir::new().unwrap();
    let q3 = write_graph(dir.path(), "q3.el", &generators::hypercube(3).unwrap());
    let r = call(&["verify", "--class", "symmetric-even", "--graph", &q3, "--format", "text"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.ends_with("PASS\n"), "{}", r.stdout);
}

#[test]
fn count_values_and_rows() {
    let r = call(&["count", "--fn", "R", "--n", "6", "--k", "3", "--oracle"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.stdout, "{\"fn\":\"R\",\"k\":3,\"n\":6,\"oracle\":14,\"value\":14}\n");

    let r = call(&["count", "--fn", "L", "--n", "5"]);
    let row: Vec<Value> = serde_json::from_str(&r.stdout).unwrap();
    let values: Vec<u64> = row.iter().map(|c| c["value"].as_u64().unwrap()).collect();
    assert_eq!(values, vec![1, 5, 10, 7, 1, 0]);

    let r = call(&["count", "--cn", "even-cycle", "--n", "3", "--format", "text"]);
    assert_eq!(r.stdout, "39\n");
}

#[test]
fn gen_is_deterministic_and_parseable() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("t.el");
    let out_s = out.to_str().unwrap();
    let r = call(&["gen", "--family", "random-tree", "--n", "9", "--seed", "5", "--out", out_s]);
    assert_eq!(r.code, 0);
    let first = fs::read_to_string(&out).unwrap();
    let r = call(&["gen", "--family", "random-tree", "--n", "9", "--seed", "5"]);
    assert_eq!(r.stdout, first);
    let r = call(&["enumerate", "--graph", out_s]);
    let sets: Vec<Vec<usize>> = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(sets.len(), 17);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(call(&[]).code, 2);
    assert_eq!(call(&["frobnicate"]).code, 2);
    assert_eq!(call(&["count", "--fn", "L", "--cn", "tree", "--n", "3"]).code, 2);
    assert_eq!(call(&["verify", "--class", "nonsense"]).code, 2);
}

#[test]
fn domain_errors_exit_one_with_json() {
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.el");
    fs::write(&bad, "4 2\n0 1\n2 3\n").unwrap();
    let r = call(&["classify", "--graph", bad.to_str().unwrap()]);
    assert_eq!(r.code, 1);
    let v: Value = serde_json::from_str(r.stderr.trim()).unwrap();
    assert_eq!(v["error"], "Disconnected");
    assert!(v["message"].is_string());

    let c6 = write_graph(dir.path(), "c6.el", &generators::cycle(6).unwrap());
    let r = call(&["center", "--graph", &c6, "--profile", "0,9"]);
    assert_eq!(r.code, 1);
    let v: Value = serde_json::from_str(r.stderr.trim()).unwrap();
    assert_eq!(v["error"], "InvalidVertex");
}

#[test]
fn cap_override_warns() {
    let dir = TempDir::new().unwrap();
    let c17 = write_graph(dir.path(), "c17.el", &generators::cycle(17).unwrap());
    let r = call(&["enumerate", "--graph", &c17]);
    assert_eq!(r.code, 1);
    let v: Value = serde_json::from_str(r.stderr.trim()).unwrap();
    assert_eq!(v["error"], "TooLarge");

    let p4 = write_graph(dir.path(), "p4.el", &generators::path(4).unwrap());
    let r = call(&["enumerate", "--graph", &p4, "--max-n", "20"]);
    assert_eq!(r.code, 0);
    assert!(r.stderr.starts_with("warning:"));
}
