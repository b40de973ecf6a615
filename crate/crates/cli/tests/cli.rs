use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_semiinf")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn qls_enumerate_rows() {
    let o = run(&["qls", "enumerate", "--type", "A", "--rank", "1", "--lambda", "2"]);
    assert!(o.status.success());
    let rows: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 4);
    for r in &rows {
        for key in ["directions", "cuts", "weight", "deg_tail", "kappa_of_lift", "iota_of_tilde_lift"] {
            assert!(r.get(key).is_some(), "missing {key}");
        }
        assert!(r["deg_tail"].as_i64().unwrap() <= 0);
    }
}

#[test]
fn invalid_input_exits_2() {
    assert_eq!(run(&["root-system", "--type", "Q", "--rank", "9"]).status.code(), Some(2));
    assert_eq!(run(&["root-system", "--type", "E", "--rank", "9"]).status.code(), Some(2));
    assert_eq!(run(&["qls", "enumerate", "--type", "A", "--rank", "2", "--lambda", "-1,0"]).status.code(), Some(2));
    assert_eq!(run(&["char", "macdonald", "--type", "A", "--rank", "2", "--lambda", "1"]).status.code(), Some(2));
    assert_eq!(run(&["sils", "enumerate", "--type", "A", "--rank", "2", "--lambda", "1,0", "--x", "2|0,0"]).status.code(), Some(2));
}

#[test]
fn budget_exhaustion_exits_3() {
    let o = run(&["sils", "enumerate", "--type", "A", "--rank", "2", "--lambda", "1,1", "--depth", "2", "--budget", "5"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).is_empty());
}

#[test]
fn verify_commands_pass() {
    let o = run(&["char", "verify-grch1", "--type", "A", "--rank", "1", "--lambda", "1", "--depth", "3"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let o = run(&["char", "verify-grch2", "--type", "C", "--rank", "2", "--lambda", "1,0", "--depth", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn character_json_schema() {
    let o = run(&["char", "quotient-minus", "--type", "A", "--rank", "1", "--lambda", "2", "--w", "1"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["meta"]["type"], "A");
    assert_eq!(v["meta"]["lambda"], serde_json::json!([2]));
    assert_eq!(
        v["terms"],
        serde_json::json!([{"fw": [0], "q": -1, "coeff": 1}, {"fw": [-2], "q": 0, "coeff": 1}])
    );
}

#[test]
fn output_is_deterministic() {
    let cases: [&[&str]; 4] = [
        &["sils", "enumerate", "--type", "A", "--rank", "2", "--lambda", "1,1", "--depth", "1"],
        &["sils", "enumerate", "--type", "A", "--rank", "2", "--lambda", "1,1", "--depth", "1", "--out", "dot"],
        &["char", "demazure-minus", "--type", "C", "--rank", "2", "--lambda", "1,0", "--depth", "2"],
        &["si-graph", "--type", "A", "--rank", "2", "--lambda", "1,0", "--radius", "2"],
    ];
    for args in cases {
        let a = run(args);
        let b = run(args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout);
    }
    let serial = run(&["sils", "enumerate", "--type", "A", "--rank", "2", "--lambda", "1,1", "--depth", "2"]);
    let parallel = run(&["sils", "enumerate", "--type", "A", "--rank", "2", "--lambda", "1,1", "--depth", "2", "--jobs", "4"]);
    assert_eq!(serial.stdout, parallel.stdout);
}

#[test]
fn sils_records_have_weights() {
    let o = run(&["sils", "enumerate", "--type", "A", "--rank", "1", "--lambda", "1", "--depth", "3"]);
    let rows: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 8);
    assert!(rows.iter().all(|r| r["weight"]["delta"].as_i64().unwrap() >= -3));
}

#[test]
fn root_system_json() {
    let o = run(&["root-system", "--type", "G", "--rank", "2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["positive_roots"].as_array().unwrap().len(), 6);
    assert_eq!(v["highest_root"], serde_json::json!([3, 2]));
}
