//! End-to-end CLI tests: JSON shapes, exit codes, file round trips.

use serde_json::Value;
use std::process::{Command, Output};

fn mutvis(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mutvis"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn compute_petersen_all_variants() {
    let out = mutvis(&["compute", "--graph", "petersen", "--variant", "all"]);
    let j = stdout_json(&out);
    assert_eq!(j["mu"]["value"], 6);
    assert_eq!(j["outer"]["value"], 4);
    assert_eq!(j["dual"]["value"], 0);
    assert_eq!(j["total"]["value"], 0);
    assert_eq!(j["mu"]["exact"], true);
}

#[test]
fn compute_rook_dual() {
    let out = mutvis(&[
        "compute",
        "--graph",
        "cart(K(3),K(3))",
        "--variant",
        "dual",
    ]);
    let j = stdout_json(&out);
    assert_eq!(j["value"], 5);
    assert_eq!(j["variant"], "dual");
    assert!(j["witness_labels"].is_array());
}

#[test]
fn compute_missing_file_is_input_error() {
    let out = mutvis(&["compute", "--graph", "file(missing.g6)", "--variant", "mu"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn compute_budget_exhaustion_exits_3() {
    let out = mutvis(&[
        "compute",
        "--graph",
        "cart(K(4),K(4))",
        "--variant",
        "dual",
        "--strategy",
        "descending",
        "--budget",
        "0.000001",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let j: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(j["exact"], false);
}

#[test]
fn compute_csv_format() {
    let out = mutvis(&[
        "compute",
        "--graph",
        "C(5)",
        "--variant",
        "mu",
        "--format",
        "csv",
    ]);
    let text = String::from_utf8_lossy(&out.stdout);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("variant,value,witness,exact,nodes"));
    let row = lines.next().unwrap();
    assert!(row.starts_with("mu,3,0 1 3,true,"));
}

#[test]
fn verify_outer_set_on_petersen() {
    let out = mutvis(&[
        "verify",
        "--graph",
        "petersen",
        "--set",
        "0,2,8,9",
        "--variant",
        "outer",
    ]);
    let j = stdout_json(&out);
    assert_eq!(j["valid"], true);
    // A single vertex fails total on the Petersen graph.
    let out = mutvis(&[
        "verify", "--graph", "petersen", "--set", "3", "--variant", "total",
    ]);
    let j = stdout_json(&out);
    assert_eq!(j["valid"], false);
    assert!(j["failing_pair"].is_array());
    // The empty set is a total set of any connected graph.
    let out = mutvis(&[
        "verify", "--graph", "petersen", "--set", "", "--variant", "total",
    ]);
    let j = stdout_json(&out);
    assert_eq!(j["valid"], true);
}

#[test]
fn verify_resolves_product_labels() {
    let out = mutvis(&[
        "verify",
        "--graph",
        "cart(K(3),K(3))",
        "--set",
        "(0,0),(0,1),(0,2),(1,0),(2,0)",
        "--variant",
        "dual",
    ]);
    let j = stdout_json(&out);
    assert_eq!(j["valid"], true);
}

#[test]
fn construct_dual_cart_and_lk10() {
    let out = mutvis(&["construct", "dual-cart", "--n", "4", "--m", "5"]);
    let j = stdout_json(&out);
    assert_eq!(j["size"], 8);
    assert_eq!(j["witness_labels"].as_array().unwrap().len(), 8);
    let out = mutvis(&["construct", "total-lkn", "--n", "10"]);
    let j = stdout_json(&out);
    assert_eq!(j["size"], 13);
    let out = mutvis(&["construct", "lk10-witness"]);
    let j = stdout_json(&out);
    assert_eq!(j["size"], 16);
    let edges = j["edges"].as_array().unwrap();
    assert!(edges.iter().any(|e| e == &serde_json::json!([0, 4])));
}

#[test]
fn construct_family_and_cograph() {
    let out = mutvis(&["construct", "family-c5", "--i", "2", "--j", "3"]);
    let j = stdout_json(&out);
    assert_eq!(j["witnesses"]["mu"]["size"], 8);
    assert_eq!(j["witnesses"]["total"]["size"], 5);
    let out = mutvis(&[
        "construct",
        "cograph",
        "--graph",
        "(K(1) u K(1)) + (K(1) u K(1))",
    ]);
    let j = stdout_json(&out);
    assert_eq!(j["witnesses"]["dual"]["size"], 3);
    assert_eq!(j["witnesses"]["total"]["size"], 2);
}

#[test]
fn oracle_commands() {
    let out = mutvis(&["oracle", "ex", "--forbid", "k4c4", "--n", "8"]);
    let j = stdout_json(&out);
    assert_eq!(j["max_edges"], 15);
    assert_eq!(j["certified"], true);
    let out = mutvis(&["oracle", "zarankiewicz", "--m", "3", "--n", "3"]);
    let j = stdout_json(&out);
    assert_eq!(j["value"], 6);
    // Cross-check against the solver through the CLI.
    let out = mutvis(&["compute", "--graph", "cart(K(3),K(3))", "--variant", "mu"]);
    let j2 = stdout_json(&out);
    assert_eq!(j["value"], j2["value"]);
    // Above the ceiling: exit 3.
    let out = mutvis(&["oracle", "ex", "--forbid", "c4", "--n", "20"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn report_family_g_self_audits() {
    let out = mutvis(&["report", "family-g"]);
    let j = stdout_json(&out);
    assert_eq!(j["ok"], true);
    assert_eq!(j["rows"].as_array().unwrap().len(), 30);
}

#[test]
fn report_csv_output() {
    let out = mutvis(&["report", "hamming", "--nmax", "4", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("n,m,mu_d_formula"));
    assert_eq!(text.lines().count(), 4); // header + 3 rows
}

#[test]
fn cograph_analyze() {
    let out = mutvis(&[
        "cograph",
        "analyze",
        "--graph",
        "(K(1) u K(1)) + (K(1) u K(1))",
    ]);
    let j = stdout_json(&out);
    assert_eq!(j["is_cograph"], true);
    assert_eq!(j["numbers"]["mu"], 3);
    assert_eq!(j["numbers"]["mu_t"], 2);
    assert_eq!(j["big_mu"]["t"], 1);
    let out = mutvis(&["cograph", "analyze", "--graph", "C(5)"]);
    let j = stdout_json(&out);
    assert_eq!(j["is_cograph"], false);
    assert_eq!(j["numbers"], Value::Null);
}

#[test]
fn graph_files_round_trip_through_cli() {
    let dir = std::env::temp_dir().join(format!("mutvis-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let g6 = dir.join("p.g6");
    std::fs::write(&g6, mutvis::io::write_graph6(&mutvis::generators::petersen())).unwrap();
    // Bare path.
    let out = mutvis(&["compute", "--graph", g6.to_str().unwrap(), "--variant", "mu"]);
    let j = stdout_json(&out);
    assert_eq!(j["value"], 6);
    // Through the DSL file() atom.
    let expr = format!("file({})", g6.display());
    let out = mutvis(&["compute", "--graph", &expr, "--variant", "outer"]);
    let j = stdout_json(&out);
    assert_eq!(j["value"], 4);
    // Edge list too.
    let el = dir.join("c5.el");
    std::fs::write(&el, "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n").unwrap();
    let expr = format!("file({})", el.display());
    let out = mutvis(&["compute", "--graph", &expr, "--variant", "mu"]);
    let j = stdout_json(&out);
    assert_eq!(j["value"], 3);
    // Set from file.
    let setf = dir.join("set.txt");
    std::fs::write(&setf, "0 2 8 9\n").unwrap();
    let out = mutvis(&[
        "verify",
        "--graph",
        "petersen",
        "--set",
        &format!("@{}", setf.display()),
        "--variant",
        "outer",
    ]);
    let j = stdout_json(&out);
    assert_eq!(j["valid"], true);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn json_keys_are_sorted() {
    let out = mutvis(&["compute", "--graph", "C(5)", "--variant", "mu"]);
    let text = String::from_utf8_lossy(&out.stdout);
    let t = text.trim();
    // Keys come out in sorted order for diff-based testing.
    assert!(t.starts_with(r#"{"exact":true,"nodes":"#), "{t}");
    assert!(t.ends_with(r#""value":3,"variant":"mu","witness":[0,1,3]}"#), "{t}");
    // Two runs are byte-identical.
    let again = mutvis(&["compute", "--graph", "C(5)", "--variant", "mu"]);
    assert_eq!(out.stdout, again.stdout);
}

#[test]
fn disconnected_graph_is_input_error() {
    let out = mutvis(&["compute", "--graph", "K(2) u K(2)", "--variant", "mu"]);
    assert_eq!(out.status.code(), Some(2));
    let out = mutvis(&["verify", "--graph", "K(2) u K(2)", "--set", "0", "--variant", "mu"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn ceiling_exits_3() {
    let out = mutvis(&["compute", "--graph", "C(40)", "--variant", "mu"]);
    assert_eq!(out.status.code(), Some(3));
}
