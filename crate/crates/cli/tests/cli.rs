use std::process::{Command, Output};

use serde_json::Value;

fn klm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_klm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn coeff_single_and_all_methods() {
    let o = klm(&["coeff", "--m", "2", "--d", "3", "--i", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "5");

    let o = klm(&["coeff", "--m", "2", "--d", "3", "--i", "1", "--rho", "1", "--method", "all"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for m in ["tableau", "closed-form", "oracle", "direct"] {
        assert!(out.contains(&format!("{m}: 3")), "{out}");
    }
    assert!(out.contains("agree"));
}

#[test]
fn invalid_input_exits_two() {
    assert_eq!(klm(&["coeff", "--m", "0", "--d", "3", "--i", "1"]).status.code(), Some(2));
    assert_eq!(klm(&["coeff", "--m", "1", "--d", "1", "--i", "0", "--rho", "1"]).status.code(), Some(2));
    assert_eq!(klm(&["enumerate", "--a", "3", "--i", "0", "--b", "2"]).status.code(), Some(2));
    assert_eq!(klm(&["coeff", "--m", "1"]).status.code(), Some(2));
}

#[test]
fn oracle_respects_size_cap() {
    let o = Command::new(env!("CARGO_BIN_EXE_klm"))
        .args(["coeff", "--m", "2", "--d", "3", "--i", "1", "--method", "oracle"])
        .env("KLM_MAX_N", "4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn klpoly_prints_polynomials() {
    assert_eq!(stdout(&klm(&["klpoly", "--m", "1", "--d", "3"])).trim(), "1 + 2t");
    assert_eq!(stdout(&klm(&["klpoly", "--m", "2", "--d", "3", "--rho", "1"])).trim(), "1 + 3t");
    assert_eq!(stdout(&klm(&["klpoly", "--m", "2", "--d", "3", "--method", "oracle"])).trim(), "1 + 5t");
}

#[test]
fn enumerate_lists_fillings_then_count() {
    let o = klm(&["enumerate", "--a", "2", "--i", "1", "--b", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().collect::<Vec<_>>(), ["[1 2] [3 4]", "[1 3] [2 4]", "count: 2"]);

    let o = klm(&["enumerate", "--a", "3", "--i", "1", "--b", "2", "--family", "rho", "--d", "3", "--rho", "1"]);
    assert!(stdout(&o).ends_with("count: 3\n"));
}

#[test]
fn enumerate_json_lines_round_trip() {
    let o = klm(&["enumerate", "--a", "2", "--i", "2", "--b", "2", "--format", "json"]);
    let out = stdout(&o);
    let lines: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let (last, fillings) = lines.split_last().unwrap();
    assert_eq!(last["count"], "5");
    assert_eq!(fillings.len(), 5);
    for f in fillings {
        let back: klm_core::Filling = serde_json::from_value(f.clone()).unwrap();
        assert_eq!(back.size(), 6);
    }
}

#[test]
fn table_csv() {
    let o = klm(&["table", "--m-max", "3", "--d-max", "5", "--format", "csv"]);
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("m,d,rho,i,coefficient"));
    assert!(out.lines().any(|l| l == "1,3,0,1,2"));

    let out = stdout(&klm(&["table", "--m-max", "3", "--d-max", "5", "--rho", "1", "--format", "csv"]));
    assert!(out.lines().any(|l| l == "2,3,1,1,3"));
}

#[test]
fn json_envelope() {
    let o = klm(&["coeff", "--m", "2", "--d", "3", "--i", "1", "--rho", "1", "--format", "json"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["query"]["m"], 2);
    assert_eq!(v["result"]["values"]["tableau"], "3");
    assert_eq!(v["method"], "tableau");
    assert!(v["elapsed_ms"].is_u64());
}

#[test]
fn verify_suite_passes() {
    let o = klm(&["verify", "--suite", "catalan"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS catalan"));

    let o = klm(&["verify", "--suite", "exchange", "--max-n", "5", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"]["passed"], true);
}
