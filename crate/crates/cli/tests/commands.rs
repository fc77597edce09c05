use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use wsckit_cli::io::{ideal_to_text, input_json, parse_ideal_text, parse_input, Input};
use wsckit_core::{Graph, MonomialIdeal, SimplicialComplex, WeightFunction, WeightedComplex};

const WORKED: &str = "x1^2*x2^3, x2^3*x3^4, x3^4*x1^2";

fn wsckit(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_wsckit"))
        .args(args)
        .env_remove("WSCKIT_CHAR")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn two_points_with_weights_parse() {
    let input = parse_input(r#"{"n":2,"facets":[[0],[1]],"weights":[4,1]}"#).unwrap();
    let expected = WeightedComplex::new(
        SimplicialComplex::from_facets(2, &[vec![0], vec![1]]).unwrap(),
        WeightFunction::new(vec![4, 1]).unwrap(),
    )
    .unwrap();
    assert_eq!(input, Input::Weighted { complex: expected, names: None });
}

#[test]
fn worked_ideal_parses_from_text() {
    let expected = MonomialIdeal::from_exponents(3, &[vec![2, 3, 0], vec![0, 3, 4], vec![2, 0, 4]]).unwrap();
    assert_eq!(parse_ideal_text(WORKED).unwrap(), expected);
}

#[test]
fn malformed_weights_exit_two() {
    let out = wsckit(&["info"], r#"{"n":2,"facets":[[0],[1]],"weights":[4,1,1]}"#);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("weights"));
    assert!(out.stdout.is_empty());
}

#[test]
fn polarize_triangle_is_a_five_simplex() {
    let out = wsckit(&["polarize"], r#"{"n":3,"facets":[[0,1,2]],"weights":[1,2,3]}"#);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["complex"]["n"], 6);
    assert_eq!(v["complex"]["facets"], serde_json::json!([[0, 1, 2, 3, 4, 5]]));
    assert_eq!(v["map"]["counts"], serde_json::json!([1, 2, 3]));
}

#[test]
fn polarize_accepts_weights_flag() {
    let out = wsckit(&["polarize", "--weights", "4,1"], r#"{"n":2,"facets":[[0],[1]],"names":["a","b"]}"#);
    let v = json_of(&out);
    assert_eq!(v["complex"]["facets"].as_array().unwrap().len(), 5);
    assert_eq!(v["complex"]["names"], serde_json::json!(["a1", "a2", "a3", "a4", "b"]));
}

#[test]
fn decompose_worked_example() {
    let out = wsckit(&["decompose"], WORKED);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    let comps = v["components"].as_array().unwrap();
    assert_eq!(comps.len(), 3);
    let radicals: Vec<&Value> = comps.iter().map(|c| &c["radical"]).collect();
    assert_eq!(radicals, [&serde_json::json!([0, 1]), &serde_json::json!([0, 2]), &serde_json::json!([1, 2])]);
    assert_eq!(comps[0]["gens"], serde_json::json!([[2, 0, 0], [0, 3, 0]]));
}

#[test]
fn ass_and_betti_schemas() {
    let v = json_of(&wsckit(&["ass"], WORKED));
    assert_eq!(v["associated_primes"], serde_json::json!([[0, 1], [0, 2], [1, 2]]));
    assert_eq!(v["embedded"], serde_json::json!([]));
    let b = json_of(&wsckit(&["betti", "--char", "2"], WORKED));
    assert_eq!(b["char"], 2);
    let entries = b["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 4);
    assert_eq!(entries.iter().map(|e| e["value"].as_u64().unwrap()).sum::<u64>(), 5);
    assert!(entries.iter().all(|e| e["i"].is_u64() && e["degree"].is_array() && e["value"].is_u64()));
}

#[test]
fn wreath_and_sr_ideal() {
    let v = json_of(&wsckit(&["wreath", "--weights", "1,0"], r#"{"n":2,"facets":[[0],[1]]}"#));
    assert_eq!(v["complex"]["facets"], serde_json::json!([[0, 1], [0, 2], [1, 2]]));
    let i = json_of(&wsckit(&["sr-ideal"], r#"{"n":4,"facets":[[0,1],[0,2],[1,2],[3]],"weights":[3,4,5,2]}"#));
    let gens: Vec<Vec<u32>> = serde_json::from_value(i["gens"].clone()).unwrap();
    assert_eq!(gens.len(), 4);
    assert!(gens.contains(&vec![3, 4, 5, 0]));
    assert!(gens.contains(&vec![0, 0, 5, 2]));
}

#[test]
fn weight_and_polarize_ideal() {
    let v = json_of(&wsckit(&["weight", "--weights", "2,3"], "x1*x2"));
    assert_eq!(v["gens"], serde_json::json!([[2, 3]]));
    let p = json_of(&wsckit(&["polarize-ideal"], "x1^2*x2^3"));
    assert_eq!(p["ideal"]["n"], 5);
    assert_eq!(p["ideal"]["gens"], serde_json::json!([[1, 1, 1, 1, 1]]));
}

#[test]
fn ntf_reports_graph_bipartiteness() {
    let v = json_of(&wsckit(&["ntf", "--max-power", "2"], r#"{"n":3,"edges":[[0,1],[1,2],[0,2]]}"#));
    assert_eq!(v["bipartite"], false);
    assert_eq!(v["holds_up_to_max"], false);
    assert_eq!(v["first_failure"], 2);
}

#[test]
fn check_weighted_reports_both_sides() {
    let out = wsckit(&["check", "cm"], r#"{"n":2,"facets":[[0],[1]],"weights":[4,1]}"#);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["complex"]["verdict"], "true");
    assert_eq!(v["polarization"]["verdict"], "true");
}

#[test]
fn exhausted_budget_exits_three() {
    let out = wsckit(&["check", "constructible", "--bound", "1"], r#"{"n":3,"facets":[[0,1],[1,2],[0,2]]}"#);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(json_of(&out)["complex"]["verdict"], "unknown");
}

#[test]
fn domain_errors_exit_two() {
    assert_eq!(wsckit(&["decompose"], "n=2;").status.code(), Some(2));
    assert_eq!(wsckit(&["betti", "--char", "4"], WORKED).status.code(), Some(2));
    assert_eq!(wsckit(&["wreath", "--weights", "1"], r#"{"n":2,"facets":[[0],[1]]}"#).status.code(), Some(2));
    assert_eq!(wsckit(&["info"], "{\"n\": 2,\n \"facets\": [[0], [5]]}").status.code(), Some(2));
}

/// The real projective plane: six vertices, ten triangles.
const RP2: &str = r#"{"n":6,"facets":[[0,1,2],[0,2,3],[0,3,4],[0,4,5],[0,1,5],[1,2,4],[2,3,5],[1,3,4],[2,4,5],[1,3,5]]}"#;

#[test]
fn char_from_environment() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_wsckit"))
        .args(["info", "-"])
        .env("WSCKIT_CHAR", "2")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(RP2.as_bytes()).unwrap();
    let mod2 = json_of(&child.wait_with_output().unwrap());
    // Indexed from dimension -1.
    assert_eq!(mod2["reduced_homology"], serde_json::json!([0, 0, 1, 1]));
    let rational = json_of(&wsckit(&["info"], RP2));
    assert_eq!(rational["reduced_homology"], serde_json::json!([0, 0, 0, 0]));
}

#[test]
fn verify_default_run_is_clean_and_deterministic() {
    let a = wsckit(&["verify", "--seed", "42", "--trials", "50"], "");
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    let v = json_of(&a);
    assert_eq!(v["total_failures"], 0);
    assert_eq!(v["suites"].as_array().unwrap().len(), 11);
    let b = wsckit(&["verify", "--seed", "42", "--trials", "50"], "");
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn round_trips() {
    let samples = [
        r#"{"n":4,"facets":[[0,1],[1,2,3]],"names":["a","b","c","d"]}"#,
        r#"{"n":3,"facets":[[0,1,2]],"weights":[1,2,3]}"#,
        r#"{"n":3,"facets":[]}"#,
        r#"{"n":2,"facets":[[]]}"#,
        r#"{"n":3,"gens":[[2,3,0],[0,3,4]]}"#,
        r#"{"n":3,"gens":[]}"#,
        r#"{"n":4,"edges":[[0,1],[2,3]]}"#,
    ];
    for s in samples {
        let input = parse_input(s).unwrap();
        let printed = serde_json::to_string(&input_json(&input)).unwrap();
        assert_eq!(parse_input(&printed).unwrap(), input, "{s}");
    }
    for text in [WORKED, "n=5; x1*x2", "n=2;", "1", "(x3)", "x1^7*x2, x2^2"] {
        let ideal = parse_ideal_text(text).unwrap();
        assert_eq!(parse_ideal_text(&ideal_to_text(&ideal)).unwrap(), ideal, "{text}");
    }
    let g = Graph::cycle(5).unwrap();
    assert_eq!(parse_input(&input_json(&Input::Graph(g.clone())).to_string()).unwrap(), Input::Graph(g));
}
