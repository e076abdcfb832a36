use serde_json::Value;
use std::io::Write;
use std::process::{Command, Output, Stdio};

fn duadic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_duadic")).args(args).env_remove("DUADIC_WORKERS").output().unwrap()
}

fn duadic_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_duadic"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn schema() -> jsonschema::Validator {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../schema/quantum-record.schema.json");
    let raw: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::validator_for(&raw).unwrap()
}

fn assert_valid(v: &Value) {
    let s = schema();
    let errors: Vec<String> = s.iter_errors(v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{v} fails the schema: {errors:?}");
}

#[test]
fn quantum_json_record() {
    let o = duadic(&["quantum", "duadic", "--n", "21", "--shift", "omega", "--leaders", "1,10,13", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["n"], 21);
    assert_eq!(v["k"], 3);
    assert_eq!(v["d"], 6);
    assert_eq!(v["degenerate"], false);
    assert_eq!(v["construction"], "duadic");
    assert_eq!(v["method"], "exhaustive");
    assert_valid(&v);
}

#[test]
fn product_of_catalogued_factors() {
    let o = duadic(&["product", "--left", "21:omega:1,10,13", "--right", "5:omega:1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert!(text.contains("[[105,3,18]]"), "{text}");
    assert!(text.contains("yes"), "{text}");

    let o = duadic(&["product", "--left", "21:omega:1,10,13", "--right", "5:omega:1", "--json"]);
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!((v["n"].as_u64(), v["k"].as_u64(), v["d"].as_u64()), (Some(105), Some(3), Some(18)));
    assert_eq!(v["degenerate"], true);
    assert_valid(&v);

    let o = duadic(&["product", "--multiplier", "3", "--right", "21:omega:1,10,13"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("[[63,9,6]]"));
}

#[test]
fn no_splitting_length_is_empty_with_notice() {
    let o = duadic(&["splittings", "--n", "9", "--shift", "w"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).trim().is_empty(), "{}", stdout(&o));
    assert!(!stderr(&o).trim().is_empty());
}

#[test]
fn splitting_listing_and_canonical() {
    let o = duadic(&["splittings", "--n", "75", "--shift", "omega", "--limit", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("X = Z(25)"), "{text}");
    assert!(text.contains("S1 = Z(1) + Z(10)"), "{text}");

    let o = duadic(&["splittings", "--n", "39", "--shift", "omega", "--canonical", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(stdout(&o).lines().next().unwrap()).unwrap();
    assert!(v.is_object());
}

#[test]
fn inadmissible_extension_is_a_precondition_error() {
    let o = duadic(&["extend", "--left", "3:omega:trivial", "--right", "11:omega:trivial"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("11"), "{}", stderr(&o));
}

#[test]
fn bounds_only_search_exits_two() {
    let o = duadic(&["--budget", "1000", "quantum", "duadic", "--n", "39", "--shift", "omega", "--leaders", "1,7,19", "--json"]);
    assert_eq!(o.status.code(), Some(2), "{}", stderr(&o));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert!(v["d"].is_object(), "{v}");
    assert_valid(&v);
}

#[test]
fn usage_errors() {
    assert_eq!(duadic(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(duadic(&["build", "--n", "5", "--leaders", "1", "--nope"]).status.code(), Some(64));
    let help = duadic(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
    assert!(stdout(&help).contains("splittings"));
}

#[test]
fn table_rows() {
    let o = duadic(&["table", "2", "--rows", "5,7,13,17"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).matches("MATCH").count(), 4);

    let o = duadic(&["table", "3", "--rows", "125", "--csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("table,expected,got,degenerate,status"));
    assert!(text.contains("[[125,1,27]]") && text.contains("MATCH"), "{text}");
}

#[test]
fn family_member() {
    let o = duadic(&["family", "--i", "1", "--json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!((v["n"].as_u64(), v["k"].as_u64()), (Some(16), Some(2)));
    assert_eq!(v["d"]["lower"], 6);
    assert_valid(&v);
}

#[test]
fn catalog_round_trip_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("codes.jsonl");
    let file = file.to_str().unwrap();

    let o = duadic(&["quantum", "duadic", "--n", "13", "--shift", "1", "--leaders", "1", "--catalog", file]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let records = duadic(&["quantum", "self_dual", "--n", "5", "--shift", "1", "--leaders", "1", "--json"]);
    let line = stdout(&records);
    let o = duadic_with_stdin(&["catalog", "append", "--file", file], &line);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), line);

    let stored = std::fs::read_to_string(file).unwrap();
    assert_eq!(stored.lines().count(), 2);
    assert!(stored.ends_with('\n'));
    for l in stored.lines() {
        assert_valid(&serde_json::from_str(l).unwrap());
    }

    let all = duadic(&["catalog", "query", "--file", file]);
    assert_eq!(stdout(&all), stored);
    let q = duadic(&["catalog", "query", "--file", file, "--construction", "self_dual"]);
    assert_eq!(stdout(&q), line);
    let q = duadic(&["catalog", "query", "--file", file, "--n", "13"]);
    assert_eq!(stdout(&q), stored.lines().next().unwrap().to_string() + "\n");
}

#[test]
fn catalog_rejects_malformed_records() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("codes.jsonl");
    let o = duadic_with_stdin(&["catalog", "append", "--file", file.to_str().unwrap()], "{\"n\": 5}\n");
    assert_eq!(o.status.code(), Some(1));
    assert!(!file.exists() || std::fs::read_to_string(&file).unwrap().is_empty());
}

#[test]
fn results_do_not_depend_on_worker_count() {
    let args = ["distance", "--n", "25", "--shift", "1", "--leaders", "1,5", "--odd-like", "--json"];
    let one = duadic(&[&["--workers", "1"], &args[..]].concat());
    let many = duadic(&[&["--workers", "4"], &args[..]].concat());
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(stdout(&one), stdout(&many));
    let v: Value = serde_json::from_str(stdout(&one).trim()).unwrap();
    assert_eq!(v["d_odd"], 9);
}
