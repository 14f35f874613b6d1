use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lefschetz")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn apery_symmetric_and_not() {
    let o = run(&["apery", "4", "5", "6", "11", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["m_pure_symmetric"], true);
    assert_eq!(v["apery"], serde_json::json!([0, 5, 6, 11]));
    assert!(v["witness"].is_null());

    let o = run(&["apery", "4", "5", "6", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("m_pure_symmetric  false"));
    assert!(stdout(&o).contains("5 + 6 != 7"));
}

#[test]
fn apery_rejects_bad_generators() {
    assert_eq!(run(&["apery", "2", "4", "6", "8"]).status.code(), Some(2));
    assert_eq!(run(&["apery", "0", "4", "5", "7"]).status.code(), Some(2));
    assert_eq!(run(&["apery", "-3", "4", "5", "7"]).status.code(), Some(2));
    assert_eq!(run(&["apery", "3", "4"]).status.code(), Some(2));
}

#[test]
fn algebra_info_examples() {
    let o = run(&["algebra", "info", "3", "2", "2", "1", "1", "1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["F"], "x^2*z + x*y^2");
    assert_eq!(v["h_vector"], serde_json::json!([1, 3, 3, 1]));
    assert_eq!(v["D"], 3);

    let o = run(&["algebra", "info", "4", "3", "2", "1", "1", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("alpha+gamma != b"));

    let o = run(&["algebra", "info", "4", "3", "2", "2", "1", "1"]);
    assert!(stdout(&o).lines().any(|l| l.split_whitespace().collect::<Vec<_>>() == ["D", "5"]));
}

#[test]
fn wlp_verdicts_and_forms() {
    let o = run(&["wlp", "3", "2", "2", "1", "1", "1", "--method", "both", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], "has-wlp");
    assert_eq!(v["oracles_agree"], true);

    let o = run(&["wlp", "3", "2", "2", "1", "1", "1", "--linear-form", "1", "-1", "1", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["given_form"]["lefschetz"], true);

    let o = run(&["wlp", "3", "2", "2", "1", "1", "1", "--linear-form", "0", "0", "1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["given_form"]["lefschetz"], false);
    assert_eq!(v["verdict"], "has-wlp");

    assert_eq!(run(&["wlp", "3", "2", "2", "1", "1", "1", "--method", "guess"]).status.code(), Some(2));
    assert_eq!(run(&["wlp", "3", "2", "2", "1", "1", "1", "--linear-form", "1", "x", "1"]).status.code(), Some(2));
}

#[test]
fn wlp_json_round_trips() {
    let o = run(&["wlp", "5", "3", "4", "1", "1", "2", "--json"]);
    let text = stdout(&o);
    let report: lefschetz::wlp::WlpReport = serde_json::from_str(&text).unwrap();
    assert_eq!(report.to_json(), text.trim_end());
}

#[test]
fn wlp_is_seed_deterministic() {
    let args = ["wlp", "7", "5", "4", "2", "2", "3", "--seed", "9", "--json"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn sweep_csv_and_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rows.csv");
    let o = run(&["sweep", "--a", "2:8", "--b", "2", "--c", "2:8", "--a-ge-c", "--csv", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "a,b,c,alpha,beta,gamma,D,k,verdict,method,oracles_agree,h_vector,elapsed_ms");
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 28);
    assert!(rows.iter().all(|r| r.contains(",has-wlp,both,true,")));

    assert_eq!(run(&["sweep", "--a", "2:20"]).status.code(), Some(2));
    assert_eq!(run(&["sweep", "--a", "9:3"]).status.code(), Some(2));
    assert_eq!(run(&["sweep", "--a", "2:20", "--b", "2", "--c", "2", "--max-bound", "20"]).status.code(), Some(0));
}

#[test]
fn sweep_json_has_rows_in_tuple_order() {
    let o = run(&["sweep", "--a", "3:5", "--b", "3:4", "--c", "3:5", "--seed", "5", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v["rows"].as_array().unwrap();
    let tuples: Vec<Vec<u64>> = rows
        .iter()
        .map(|r| ["a", "b", "c", "alpha", "beta", "gamma"].iter().map(|k| r["params"][k].as_u64().unwrap()).collect())
        .collect();
    let mut sorted = tuples.clone();
    sorted.sort();
    assert_eq!(tuples, sorted);
    assert_eq!(v["summary"]["points"].as_u64().unwrap() as usize, rows.len());
}
