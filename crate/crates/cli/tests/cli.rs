use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_levy-shuffle"))
        .args(args)
        .env_remove("LEVY_SHUFFLE_MAX_N")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn moments_table() {
    let out = run(&["moments", "--n-max", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let exact: Vec<String> = stdout(&out)
        .lines()
        .skip(1)
        .map(|l| l.split_whitespace().nth(1).unwrap().to_string())
        .collect();
    assert_eq!(exact, ["1/1", "0/1", "1/4", "0/1", "5/16", "0/1", "61/64"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("\"max_n\":8"));
}

#[test]
fn moments_json_and_single_row() {
    let out = run(&["moments", "--n-max", "6", "--format", "json"]);
    let rows = json(&out);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 7);
    assert!(rows.iter().all(|r| r["agreement"] == true));
    assert_eq!(rows[4]["exact"], "5/16");
    assert_eq!(rows[4]["routes"]["XY_exponential"], "5/16");

    let out = run(&["moments", "--n-max", "0", "--format", "csv"]);
    assert_eq!(stdout(&out).lines().count(), 2);
    assert!(stdout(&out).lines().nth(1).unwrap().starts_with("0,1/1,0,"));
}

#[test]
fn scaled_moments_carry_pi_powers() {
    let out = run(&["moments", "--n-max", "4", "--T", "2pi", "--format", "json"]);
    let rows = json(&out);
    assert_eq!(rows[2]["exact"], "1/1");
    assert_eq!(rows[2]["pi_power"], 2);
    assert_eq!(rows[4]["exact"], "5/1");
    assert_eq!(rows[4]["pi_power"], 4);
}

#[test]
fn limits_are_enforced() {
    assert_eq!(run(&["moments", "--n-max", "9"]).status.code(), Some(1));
    let out = Command::new(env!("CARGO_BIN_EXE_levy-shuffle"))
        .args(["moments", "--n-max", "4"])
        .env("LEVY_SHUFFLE_MAX_N", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(run(&["--max-n", "10", "moments", "--n-max", "9"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "--m-max", "5"]).status.code(), Some(1));
    assert_eq!(run(&["mc", "--kind", "signature", "--level", "5"]).status.code(), Some(1));
    assert_eq!(run(&["mc", "--kind", "moments", "--samples", "20000000"]).status.code(), Some(1));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(run(&[]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["moments", "--format", "xml"]).status.code(), Some(1));
    assert_eq!(run(&["moments", "--T", "-1"]).status.code(), Some(1));
    assert_eq!(run(&["mc", "--kind", "charfn", "--T", "2"]).status.code(), Some(1));
    assert_eq!(run(&["mc", "--kind", "moments", "--z", "0.5"]).status.code(), Some(1));
    assert_eq!(run(&["mc", "--kind", "moments", "--samples", "1"]).status.code(), Some(1));
    assert_eq!(run(&["numbers"]).status.code(), Some(1));
    assert_eq!(run(&["numbers", "--euler", "--tangent"]).status.code(), Some(1));
    assert_eq!(run(&["matchings", "--word", "xxq"]).status.code(), Some(1));
    assert_eq!(run(&["matchings", "--word", "xxy"]).status.code(), Some(1));
    assert_eq!(run(&["matchings", "--word", "XXY"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
}

#[test]
fn verify_suites() {
    let out = run(&["verify", "--suite", "all", "--m-max", "1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).lines().skip(1).all(|l| l.starts_with("PASS")));

    let out = run(&["verify", "--suite", "matchings", "--m-max", "2", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let body = json(&out);
    assert_eq!(body["passed"], true);
    assert!(body["checks"][0]["name"].as_str().unwrap().contains("length <= 8"));

    let out = run(&["verify", "--suite", "numbers", "--m-max", "4"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn numbers_tables() {
    let out = run(&["numbers", "--euler", "--count", "8", "--format", "csv"]);
    let values: Vec<String> = stdout(&out)
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().to_string())
        .collect();
    assert_eq!(values.join(","), "1,0,1,0,5,0,61,0,1385");

    let body = json(&run(&["numbers", "--tangent", "--count", "4", "--format", "json"]));
    assert_eq!(body["first_index"], 1);
    assert_eq!(body["values"], serde_json::json!(["1", "2", "16", "272"]));

    let body = json(&run(&["numbers", "--eulerian", "5", "--format", "json"]));
    assert_eq!(body["values"], serde_json::json!(["1", "26", "66", "26", "1"]));
}

#[test]
fn matchings_listing() {
    let out = run(&["matchings", "--word", "xxyyxxyy", "--negativity", "1", "--count-only"]);
    assert_eq!(stdout(&out).trim(), "16");

    let body = json(&run(&["matchings", "--word", "xy", "--format", "json"]));
    assert_eq!(body["count"], 1);
    assert_eq!(body["matchings"][0]["negativity"], 0);

    let body = json(&run(&["matchings", "--word", "XYXYYX", "--format", "json"]));
    let two_cycle = body["matchings"]
        .as_array()
        .unwrap()
        .iter()
        .find(|d| d["cycles"] == "(1 2 3 4)(5 6)")
        .unwrap();
    assert_eq!(two_cycle["negativity"], 3);
    assert_eq!(two_cycle["cycle_count"], 2);
    assert_eq!(two_cycle["expansion"], "xxyyxxyyyyxx");
}

#[test]
fn monte_carlo_output() {
    let args = [
        "mc", "--kind", "moments", "--n", "2,4", "--samples", "20000", "--steps", "32", "--seed", "3", "--workers",
        "2", "--format", "json",
    ];
    let first = run(&args);
    assert_eq!(first.status.code(), Some(0));
    let rows = json(&first);
    assert_eq!(rows.as_array().unwrap().len(), 2);
    for key in ["target", "estimate", "std_error", "samples", "steps", "seed", "workers", "reference_value"] {
        assert!(rows[0].get(key).is_some(), "missing {key}");
    }
    assert_eq!(rows[0]["reference_value"], 0.25);
    assert_eq!(rows[0]["workers"], 2);
    assert!(rows[0]["sigma_distance"].as_f64().unwrap() < 5.0);
    assert_eq!(first.stdout, run(&args).stdout);

    let out = run(&["mc", "--kind", "charfn", "--z", "0,0.25", "--samples", "2000", "--format", "csv"]);
    let text = stdout(&out);
    assert!(text.lines().next().unwrap().starts_with("target,estimate,std_error"));
    assert_eq!(text.lines().count(), 5);
    assert!(String::from_utf8_lossy(&out.stderr).contains("\"steps\":1024"));

    let out = run(&["mc", "--kind", "signature", "--level", "2", "--samples", "2000", "--steps", "16"]);
    assert!(stdout(&out).contains("level-2 mean"));
    assert!(stdout(&out).contains("S[yx]"));
}
