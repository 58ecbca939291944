use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tplancherel"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn decompose_running_example() {
    let out = run(&["decompose", "18,7,6", "--t", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["core"], "3,1");
    assert_eq!(v["quotients"], serde_json::json!(["2", "-", "5,2"]));
    assert_eq!(v["size_identity"], true);
}

#[test]
fn decompose_offsets_and_empty() {
    let v = stdout_json(&run(&["decompose", "5,3,1,1", "--t", "3"]));
    assert_eq!(v["b"], serde_json::json!([0, 7, -4]));
    assert_eq!(v["d"], serde_json::json!([0, 2, -2]));
    let v = stdout_json(&run(&["decompose", "-", "--t", "5"]));
    assert_eq!(v["core"], "-");
    assert_eq!(v["quotients"], serde_json::json!(["-", "-", "-", "-", "-"]));
}

#[test]
fn decompose_parse_error_is_usage() {
    assert_eq!(
        run(&["decompose", "1,3", "--t", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["decompose", "x", "--t", "2"]).status.code(), Some(2));
    assert_eq!(run(&["decompose", "3"]).status.code(), Some(2));
}

#[test]
fn average_table() {
    let out = run(&[
        "average",
        "--core",
        "-",
        "--t",
        "2",
        "--n",
        "0..3",
        "--stat",
        "hook:j=0,pow=2,G",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let column: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.split('\t').nth(1).unwrap())
        .collect();
    assert_eq!(column, ["0", "4", "14", "30"]);

    let out = run(&[
        "average",
        "--t",
        "2",
        "--n",
        "1",
        "--stat",
        "content:j=1,pow=2,G",
        "--format",
        "json",
    ]);
    let v = stdout_json(&out);
    assert_eq!(v["rows"][0]["values"][0], "1");
}

#[test]
fn average_at_zero_is_core_value() {
    let out = run(&[
        "average",
        "--core",
        "5,3,1,1",
        "--t",
        "3",
        "--n",
        "0",
        "--stat",
        "hook:t=1,pow=2",
    ]);
    let text = String::from_utf8(out.stdout).unwrap();
    let cell = text
        .lines()
        .nth(1)
        .unwrap()
        .split('\t')
        .nth(1)
        .unwrap()
        .to_string();
    // hooks of (5,3,1,1): 8,5,4,2,1 / 5,2,1 / 2 / 1
    assert_eq!(cell, "145");
}

#[test]
fn average_rejects_non_core() {
    let out = run(&[
        "average",
        "--core",
        "2",
        "--t",
        "2",
        "--stat",
        "hook:j=0,pow=2,G",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("hook 2"), "{err}");
}

#[test]
fn certify_and_refute() {
    let out = run(&[
        "certify",
        "--t",
        "2",
        "--stat",
        "hook:j=0,pow=2,G",
        "--degree",
        "2",
        "--safety",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["values"], serde_json::json!(["0", "4", "14", "30"]));
    assert_eq!(v["verdict"], "certified");
    let out = run(&[
        "certify",
        "--t",
        "2",
        "--stat",
        "hook:j=0,pow=2,G",
        "--degree",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout_json(&out)["verdict"], "refuted");
}

#[test]
fn verify_exit_codes() {
    let out = run(&["verify", "bijection", "--max-size", "10", "--t", "1..5"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["failures"], 0);
    assert!(v["checks"].as_u64().unwrap() > 0);
    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(
        run(&["verify", "bijection", "--t", "0"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_report_independent_of_workers() {
    let strip = |out: Output| {
        let mut v = stdout_json(&out);
        v.as_object_mut().unwrap().remove("wall_time_ms");
        v
    };
    let one = strip(run(&[
        "verify",
        "averages",
        "--t",
        "2",
        "--n",
        "0..3",
        "--workers",
        "1",
    ]));
    let four = strip(run(&[
        "verify",
        "averages",
        "--t",
        "2",
        "--n",
        "0..3",
        "--workers",
        "4",
    ]));
    assert_eq!(one, four);
    assert_eq!(one["failures"], 0);
}
