use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn rankone(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rankone"))
        .args(args)
        .env_remove("RANKONE_CONFIG")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = rankone(&full);
    let v = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    (out.status.code().unwrap(), v)
}

fn text(args: &[&str]) -> (i32, String) {
    let out = rankone(args);
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn schema() -> jsonschema::JSONSchema {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../schema/output.schema.json");
    let raw: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::JSONSchema::options()
        .with_draft(jsonschema::Draft::Draft202012)
        .compile(&raw)
        .expect("schema compiles")
}

fn assert_no_floats(v: &Value) {
    match v {
        Value::Number(n) => assert!(n.is_i64() || n.is_u64(), "float in output: {n}"),
        Value::Array(a) => a.iter().for_each(assert_no_floats),
        Value::Object(o) => o.values().for_each(assert_no_floats),
        _ => {}
    }
}

fn strings(v: &Value) -> Vec<&str> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap())
        .collect()
}

#[test]
fn real_poles_example() {
    let (code, v) = json(&[
        "poles", "--case", "real", "--n", "3", "--sigma", "l=1", "--max-k", "3",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["schema_version"], "1.0.0");
    assert_eq!(
        strings(&v["result"]["poles"]),
        ["3/2", "7/2", "9/2", "11/2"]
    );
}

#[test]
fn complex_poles_example() {
    let (code, v) = json(&[
        "poles", "--case", "complex", "--n", "3", "--sigma", "1,1", "--max-k", "2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(strings(&v["result"]["poles"]), ["1/2", "5/2", "7/2"]);
}

#[test]
fn quaternionic_branching_example() {
    let (code, v) = json(&[
        "branch",
        "--case",
        "quaternionic",
        "--n",
        "7",
        "--tau",
        "1,4,4",
        "--oracle",
    ]);
    assert_eq!(code, 0);
    let rows = v["result"]["restriction"].as_array().unwrap();
    assert_eq!(rows.len(), 11);
    assert_eq!(v["result"]["oracle_agrees"], true);
    let doubled: Vec<&Value> = rows.iter().filter(|r| r["multiplicity"] == 2).collect();
    assert_eq!(doubled.len(), 1);
    assert_eq!(doubled[0]["sigma"]["label"]["b"], 4);
    assert_eq!(doubled[0]["sigma"]["label"]["c"], 2);
}

#[test]
fn real_middle_forms_give_discrete_series() {
    let (code, v) = json(&[
        "pforms", "--case", "real", "--n", "4", "--p", "4", "--max-k", "0",
    ]);
    assert_eq!(code, 0);
    let ktypes = v["result"]["ktypes"].as_array().unwrap();
    let labels: Vec<_> = ktypes
        .iter()
        .map(|k| k["tau"]["label"]["sign"].clone())
        .collect();
    assert_eq!(labels, ["+", "-"]);
    for (i, k) in ktypes.iter().enumerate() {
        let rows = k["residues"].as_array().unwrap();
        assert_eq!(rows.len(), 1);
        let c = &rows[0]["residue"]["constituents"][0];
        assert_eq!(c["kind"]["type"], "discrete_series");
        assert_eq!(c["kind"]["hc_index"], i);
    }
}

#[test]
fn resolve_single_pole_and_trace() {
    let args = [
        "resolve", "--case", "complex", "--n", "2", "--tau", "1,1", "--sigma", "0,0", "--q", "1",
    ];
    let (code, v) = json(&args);
    assert_eq!(code, 0);
    let rows = v["result"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 1);
    assert!(rows[0]["residue"].get("trace").is_none());

    let mut traced = args.to_vec();
    traced.push("--trace");
    let (_, v) = json(&traced);
    assert!(v["result"]["rows"][0]["residue"]["trace"]["gamma"].is_array());
}

#[test]
fn text_output() {
    let (code, out) = text(&[
        "poles", "--case", "real", "--n", "3", "--sigma", "l=1", "--max-k", "1",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("3/2"));
    assert!(out.contains("7/2"));
    let (code, out) = text(&["case-info", "--case", "quaternionic", "--n", "2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("Sp(2,1)"));
}

#[test]
fn all_outputs_match_schema_and_avoid_floats() {
    let schema = schema();
    let runs: &[&[&str]] = &[
        &["case-info", "--case", "complex", "--n", "4"],
        &[
            "branch",
            "--case",
            "real",
            "--n",
            "3",
            "--tau",
            "coords=1,1,0",
        ],
        &[
            "poles",
            "--case",
            "quaternionic",
            "--n",
            "5",
            "--sigma",
            "0,3,3/2",
        ],
        &[
            "resolve",
            "--case",
            "quaternionic",
            "--n",
            "7",
            "--tau",
            "0,4,2",
            "--max-k",
            "1",
            "--trace",
        ],
        &[
            "pforms", "--case", "complex", "--n", "3", "--p", "2", "--max-k", "1",
        ],
        &[
            "pforms",
            "--case",
            "quaternionic",
            "--n",
            "3",
            "--tau",
            "1,0,0",
            "--max-k",
            "1",
        ],
        &["tables", "--case", "quaternionic", "--n", "3"],
        &["selftest"],
        &["poles", "--case", "real", "--n", "3", "--sigma", "l=9"],
        &["case-info", "--case", "real", "--n", "40"],
        &[
            "branch",
            "--case",
            "quaternionic",
            "--n",
            "8",
            "--tau",
            "2,6,20",
            "--oracle",
        ],
    ];
    for args in runs {
        let (_, v) = json(args);
        assert_eq!(v["schema_version"], "1.0.0", "{args:?}");
        assert_no_floats(&v);
        let msgs: Vec<String> = match schema.validate(&v) {
            Ok(()) => Vec::new(),
            Err(errors) => errors
                .map(|e| format!("{e} at {}", e.instance_path))
                .collect(),
        };
        assert!(msgs.is_empty(), "{args:?} violates the schema: {msgs:?}");
    }
}

#[test]
fn usage_errors_exit_2() {
    let bad: &[&[&str]] = &[
        &["poles", "--case", "real", "--n", "3", "--sigma", "l=9"],
        &["poles", "--case", "real", "--n", "3", "--sigma", "1/3"],
        &["case-info", "--case", "real", "--n", "40"],
        &["case-info", "--case", "octonionic", "--n", "2"],
        &[
            "resolve", "--case", "real", "--n", "3", "--tau", "p=2", "--sigma", "l=1", "--q", "1",
        ],
        &[
            "resolve", "--case", "real", "--n", "3", "--tau", "p=2", "--q", "1/2",
        ],
        &["pforms", "--case", "quaternionic", "--n", "3", "--p", "1"],
        &["pforms", "--case", "real", "--n", "3"],
        &["frobnicate"],
    ];
    for args in bad {
        assert_eq!(rankone(args).status.code(), Some(2), "{args:?}");
    }
    let (code, v) = json(&["poles", "--case", "real", "--n", "3", "--sigma", "l=9"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "usage");
    assert!(v.get("result").is_none());
}

#[test]
fn computation_errors_exit_1() {
    let args = [
        "branch",
        "--case",
        "quaternionic",
        "--n",
        "8",
        "--tau",
        "2,6,20",
        "--oracle",
    ];
    let (code, v) = json(&args);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "dimension_bound_exceeded");
    let out = rankone(&args);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .starts_with("error (dimension_bound_exceeded)"));
}

#[test]
fn rank_limit_is_configurable() {
    let (code, _) = json(&["case-info", "--case", "real", "--n", "13"]);
    assert_eq!(code, 2);
    let (code, v) = json(&["--max-n", "13", "case-info", "--case", "real", "--n", "13"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["dim"], 13);
}

#[test]
fn config_file_from_environment() {
    let path = std::env::temp_dir().join(format!("rankone-test-{}.toml", std::process::id()));
    std::fs::write(&path, "format = \"json\"\nmax_k = 1\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_rankone"))
        .args(["poles", "--case", "real", "--n", "3", "--sigma", "l=1"])
        .env("RANKONE_CONFIG", &path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(strings(&v["result"]["poles"]), ["3/2", "7/2"]);

    std::fs::write(&path, "colour = \"blue\"\n").unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_rankone"))
        .arg("selftest")
        .env("RANKONE_CONFIG", &path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn selftest_passes() {
    let (code, out) = text(&["selftest"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 10);
    assert!(!out.contains("FAIL"));
}
