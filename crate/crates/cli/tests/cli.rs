use std::collections::BTreeSet;
use std::fs;
use std::process::Command;

use serde_json::Value;
use serre_cli::cache::Request;
use serre_cli::output::Analysis;
use serre_core::{Analyzer, FieldSpec, MonomialIdeal};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn serre(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_serre")).args(args).output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn json(run: &Run) -> Value {
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    serde_json::from_str(&run.stdout).unwrap()
}

fn strings(v: &Value) -> BTreeSet<String> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|s| s.as_str().unwrap().to_string())
        .collect()
}

#[test]
fn analyze_line_with_embedded_point() {
    let v = json(&serre(&["analyze", "--vars", "x,y", "--ideal", "x^2,x*y"]));
    assert_eq!(v["dim"], 1);
    assert_eq!(v["depth"], 0);
    assert_eq!(v["strata"], serde_json::json!([0]));
    assert_eq!(v["char"], 0);
    assert_eq!(v["dual_dims"], serde_json::json!({"0": 0, "1": 1, "2": null}));
    assert_eq!(v["unmixed"], false);
    assert_eq!(v["equidimensional"], true);
    assert_eq!(
        v["serre"]["1"],
        serde_json::json!({"theorem": false, "literal_s1": false})
    );
    let ass: BTreeSet<BTreeSet<String>> = v["ass"].as_array().unwrap().iter().map(strings).collect();
    let expected: BTreeSet<BTreeSet<String>> = [vec!["x"], vec!["x", "y"]]
        .iter()
        .map(|p| p.iter().map(|s| s.to_string()).collect())
        .collect();
    assert_eq!(ass, expected);
}

#[test]
fn analyze_agrees_with_library() {
    let v = json(&serre(&["analyze", "--ideal", "x1*x3^2, x1*x2^3", "--rmax", "3"]));
    let ideal = MonomialIdeal::from_rows(3, &[&[1, 0, 2], &[1, 3, 0]]).unwrap();
    let an = Analyzer::new(FieldSpec::RATIONALS);
    let profile = an.profile(&ideal).unwrap();
    for (j, d) in profile.dual_dims().iter().enumerate() {
        let expected = d.finite().map_or(Value::Null, Value::from);
        assert_eq!(v["dual_dims"][j.to_string()], expected, "j = {j}");
    }
    assert_eq!(v["vars"], serde_json::json!(["x1", "x2", "x3"]));
    assert_eq!(v["depth"], an.depth(&ideal).unwrap());
    assert_eq!(v["serre"].as_object().unwrap().len(), 3);
    for r in 2..=3 {
        let verdict = &v["serre"][r.to_string()];
        assert_eq!(verdict["theorem"], verdict["literal_s1"]);
    }
}

#[test]
fn skeletons_of_two_components() {
    let run = serre(&["skeletons", "--vars", "x,y,z", "--ideal", "x*y,y*z", "--g", "1,1,1"]);
    let v = json(&run);
    let sigma1 = v["skeletons"].as_array().unwrap().iter().find(|s| s["i"] == 1).unwrap();
    assert_eq!(
        strings(&sigma1["gens"]),
        ["x*y", "y*z", "x*z"].iter().map(|s| s.to_string()).collect()
    );
    assert_eq!(sigma1["dim"], 1);
    assert_eq!(v["passed"], true);
    assert_eq!(v["s1_divergences"], serde_json::json!([2]));
    let only = json(&serre(&[
        "skeletons",
        "--vars",
        "x,y,z",
        "--ideal",
        "x*y,y*z",
        "--i",
        "1",
    ]));
    assert_eq!(only["skeletons"].as_array().unwrap().len(), 1);
    assert_eq!(only["skeletons"][0], *sigma1);
}

#[test]
fn powers_table_and_verdict() {
    let args = [
        "powers", "--vars", "x,y,z", "--ideal", "x*y,y*z", "--kmax", "6", "--window", "3",
    ];
    let v = json(&serre(&args));
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 6);
    for (k, row) in rows.iter().enumerate() {
        assert_eq!(row["k"], k + 1);
        assert_eq!(row["strata"], serde_json::json!([1, 1]));
    }
    assert_eq!(v["stable"], true);
    assert_eq!(v["onset"], 1);
    assert_eq!(v["window"], 3);

    let mut csv_args = args.to_vec();
    csv_args.extend(["--format", "csv"]);
    let csv = serre(&csv_args);
    assert_eq!(csv.code, 0);
    let lines: Vec<&str> = csv.stdout.lines().collect();
    assert_eq!(lines[0], "k,dim,depth,S_1,S_2");
    assert_eq!(lines.len(), 7);
    assert_eq!(lines[1], "1,2,1,1,1");
}

#[test]
fn piece_and_profile() {
    let v = json(&serre(&[
        "piece", "--vars", "x,y", "--ideal", "x^2,x*y", "--a", "-1,0", "--j", "0",
    ]));
    assert_eq!(v["a"], serde_json::json!([-1, 0]));
    let ideal = MonomialIdeal::from_rows(2, &[&[2, 0], &[1, 1]]).unwrap();
    let an = Analyzer::new(FieldSpec::RATIONALS);
    let a = serre_core::Exponent::new(vec![-1, 0]);
    assert_eq!(v["dim"], an.dual_piece_dim(&ideal, &a, 0).unwrap());

    let p = json(&serre(&["profile", "--vars", "x,y", "--ideal", "x^2,x*y"]));
    assert_eq!(p["dual_dims"], serde_json::json!({"0": 0, "1": 1, "2": null}));
    assert!(p["witnesses"]["0"].is_string());
    assert!(p["witnesses"]["2"].is_null());
    assert_eq!(p["classes"], (2 + 2) * (1 + 2));
}

#[test]
fn decompose_and_verify() {
    let v = json(&serre(&["decompose", "--vars", "x,y", "--ideal", "x^2,x*y"]));
    let components: BTreeSet<BTreeSet<String>> = v["components"].as_array().unwrap().iter().map(strings).collect();
    assert!(components.contains(&["x".to_string()].into_iter().collect()));
    assert!(components.contains(&["x^2".to_string(), "y".to_string()].into_iter().collect()));
    assert_eq!(v["has_embedded"], true);

    let run = serre(&[
        "verify",
        "--vars",
        "x,y,z,w",
        "--ideal",
        "x*z,x*w,y*z,y*w",
        "--char",
        "2",
    ]);
    let v = json(&run);
    assert_eq!(v["passed"], true);
    assert_eq!(v["char"], 2);
    assert!(v["checks"].as_array().unwrap().len() > 10);
}

#[test]
fn input_errors_exit_one() {
    for args in [
        &["analyze", "--vars", "x,y", "--ideal", "x^-1"][..],
        &["analyze", "--vars", "x,y", "--ideal", "x*w"],
        &["analyze", "--vars", "x,y", "--ideal", "x**y"],
        &["analyze", "--ideal", "y"],
        &["analyze", "--vars", "x,y"],
        &["analyze", "--vars", "x,y", "--ideal", "x", "--char", "4"],
        &["analyze", "--vars", "x,y", "--ideal", "x", "--r", "0"],
        &["piece", "--vars", "x,y", "--ideal", "x", "--a", "1", "--j", "0"],
        &["piece", "--vars", "x,y", "--ideal", "x", "--a", "1,0", "--j", "5"],
        &["skeletons", "--vars", "x,y", "--ideal", "x^2", "--g", "1,0"],
        &[
            "powers", "--vars", "x,y", "--ideal", "x", "--kmax", "2", "--window", "3",
        ],
        &["decompose", "--vars", "x,y", "--ideal", "x", "--format", "csv"],
        &["frobnicate"],
    ] {
        let run = serre(args);
        assert_eq!(run.code, 1, "{args:?}: {}", run.stderr);
        assert!(run.stdout.is_empty());
        assert!(!run.stderr.is_empty());
    }
    let run = serre(&["analyze", "--vars", "x,y", "--ideal", "x, y^-2"]);
    assert!(run.stderr.contains("position 5"), "{}", run.stderr);
}

#[test]
fn unit_ideal_warns() {
    let run = serre(&["decompose", "--vars", "x,y", "--ideal", "x^0"]);
    assert!(run.stderr.contains("warning"), "{}", run.stderr);
    assert_eq!(run.code, 1);
}

#[test]
fn help_and_version_exit_zero() {
    for flag in ["--help", "--version"] {
        let run = serre(&[flag]);
        assert_eq!(run.code, 0);
        assert!(!run.stdout.is_empty());
    }
}

#[test]
fn budget_exceeded_exits_three() {
    let run = serre(&[
        "powers", "--vars", "x,y", "--ideal", "x^2,y^2", "--budget", "30", "--kmax", "3",
    ]);
    assert_eq!(run.code, 3, "{}", run.stderr);
    assert!(run.stderr.contains("k = 2"), "{}", run.stderr);
    let run = serre(&["profile", "--vars", "x,y", "--ideal", "x^2,y^2", "--budget", "3"]);
    assert_eq!(run.code, 3);
}

#[test]
fn output_is_independent_of_jobs() {
    for command in ["analyze", "profile", "verify"] {
        let base = ["--ideal", "x1*x2, x2*x3^2, x3*x4", "--format", "json"];
        let runs: Vec<String> = ["1", "2", "4"]
            .iter()
            .map(|jobs| {
                let mut args = vec![command, "--jobs", jobs];
                args.extend(base);
                let run = serre(&args);
                assert_eq!(run.code, 0, "{}", run.stderr);
                run.stdout
            })
            .collect();
        assert!(runs.windows(2).all(|w| w[0] == w[1]), "{command}");
    }
}

#[test]
fn cache_is_transparent() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    for format in ["json", "text", "csv"] {
        let command = if format == "csv" { "powers" } else { "analyze" };
        let plain = serre(&[command, "--vars", "x,y", "--ideal", "x^2, x*y", "--format", format]);
        let args = [
            command, "--vars", "x,y", "--ideal", "x*y,x^2", "--format", format, "--cache", cache,
        ];
        let first = serre(&args);
        let second = serre(&args);
        assert_eq!(plain.code, 0);
        assert_eq!(plain.stdout, first.stdout);
        assert_eq!(first.stdout, second.stdout);
    }
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 2);
}

fn request(command: &'static str) -> Request {
    Request {
        command,
        vars: vec!["x".into(), "y".into()],
        gens: vec!["x*y".into(), "x^2".into()],
        char: 0,
        params: Vec::new(),
    }
}

#[test]
fn cached_json_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let args = ["analyze", "--vars", "x,y", "--ideal", "x^2,x*y", "--cache", cache];
    let fresh = serre(&args);
    let mut key = request("analyze");
    key.params = vec![("r", String::new()), ("rmax", String::new())];
    let path = dir.path().join(format!("{}.json", key.key()));
    let stored: Analysis = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    let printed: Analysis = serde_json::from_str(&fresh.stdout).unwrap();
    assert_eq!(stored, printed);
    assert_eq!(serde_json::to_string_pretty(&printed).unwrap() + "\n", fresh.stdout);

    // A corrupt entry is a miss, never an error.
    fs::write(&path, "{ not json").unwrap();
    assert_eq!(serre(&args).stdout, fresh.stdout);
}

#[test]
fn cross_check_failure_exits_two() {
    // A stored failing report is served from the cache, exercising the exit path.
    let dir = tempfile::tempdir().unwrap();
    let entry = serde_json::json!({
        "vars": ["x", "y"], "gens": ["x*y", "x^2"], "char": 0, "passed": false,
        "checks": [{"name": "planted", "passed": false, "witness": "lhs = 1, rhs = 2"}],
    });
    let path = dir.path().join(format!("{}.json", request("verify").key()));
    fs::write(path, entry.to_string()).unwrap();
    let run = serre(&[
        "verify",
        "--vars",
        "x,y",
        "--ideal",
        "x^2,x*y",
        "--cache",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("planted: lhs = 1, rhs = 2"), "{}", run.stderr);
    assert_eq!(json(&Run { code: 0, ..run })["passed"], false);
}

#[test]
fn characteristic_is_reported() {
    let v = json(&serre(&["analyze", "--vars", "x,y", "--ideal", "x*y", "--char", "3"]));
    assert_eq!(v["char"], 3);
}
