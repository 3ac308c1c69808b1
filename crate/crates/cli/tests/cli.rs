use std::process::{Command, Output};

use serde_json::Value;

fn specht(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_specht"))
        .args(args)
        .env_remove("SPECHT_JOBS")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = specht(&full);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid json")
}

#[test]
fn tableaux_counts() {
    let v = json(&["tableaux", "--shape", "2,2,1,1", "--e", "2"]);
    assert_eq!(v["count"], 9);
    assert_eq!(v["tableaux"].as_array().unwrap().len(), 9);

    let v = json(&["tableaux", "--shape", "1", "--e", "2"]);
    assert_eq!(v["count"], 1);
    assert_eq!(v["tableaux"][0]["degree"], 0);

    let v = json(&["tableaux", "--shape", "4,3,1", "--e", "3", "--residues", "01220101"]);
    let mut degrees: Vec<i64> = v["tableaux"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["degree"].as_i64().unwrap())
        .collect();
    degrees.sort();
    assert!(degrees.len() >= 3);
    assert_eq!(degrees.iter().filter(|d| **d == 2).count(), 2);
    assert_eq!(degrees.iter().filter(|d| **d == -2).count(), 1);
}

#[test]
fn tableaux_csv_and_pretty() {
    let out = specht(&["tableaux", "--shape", "2,1", "--e", "2", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "index,rows,column_word,degree,residues");
    assert_eq!(lines.len(), 3);
    let out = specht(&["tableaux", "--shape", "2,1", "--e", "2"]);
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("2 standard tableaux"));
}

#[test]
fn malformed_shape_is_usage_error() {
    let out = specht(&["tableaux", "--shape", "1,2", "--e", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = specht(&["tableaux", "--shape", "2,a", "--e", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = specht(&["tableaux", "--e", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn regularise_examples() {
    let v = json(&["regularise", "--runs", "+4 - +4 -2 +3 -4 +", "--e", "4"]);
    assert_eq!(v["stages"].as_array().unwrap().len(), 1);
    assert_eq!(v["r_e"], 1);
    assert_eq!(v["input"]["degree"], 0);
    assert_eq!(v["output"]["degree"], -1);
    assert_eq!(v["output"]["shape"], "(2^5,1^9)");

    let v = json(&["regularise", "--runs", "+6 - +6 -4 + -4 +4 - + -", "--e", "3", "--p", "2"]);
    assert_eq!(v["z"], serde_json::json!([2, 1, 0]));
    assert_eq!(v["w"], serde_json::json!([13, 23, 28]));
    assert_eq!(v["output"]["shape"], "(2^4,1^21)");
    assert_eq!(v["output"]["degree"], -2);
    assert_eq!(v["reg_prime"]["degree"], 2);
    assert!(!v["input"]["diagram"].as_array().unwrap().is_empty());

    let v = json(&["regularise", "--word", "+-+-+", "--e", "3"]);
    assert!(v["stages"].as_array().unwrap().is_empty());

    let v = json(&["regularise", "--word", "11212", "--e", "3"]);
    assert_eq!(v["input"]["step_word"], "++-+-");
}

#[test]
fn regularise_rejects_non_dominant() {
    let out = specht(&["regularise", "--word", "+--", "--e", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn decomp_examples() {
    let v = json(&["decomp", "--n", "6", "--e", "2", "--p", "2"]);
    let d = &v["decomposition"];
    let cols: Vec<&str> = d["cols"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
    assert_eq!(cols, ["(1^6)", "(2,1^4)", "(2,2,1,1)"]);
    let row = d["rows"].as_array().unwrap().iter().position(|r| r == "(2,2,1,1)").unwrap();
    assert_eq!(d["entries"][row], serde_json::json!(["1", "q", "1"]));

    let v = json(&["decomp", "--n", "0", "--e", "2", "--p", "2"]);
    assert_eq!(v["decomposition"]["entries"], serde_json::json!([["1"]]));
}

#[test]
fn decomp_matches_adjusted_product() {
    let v = json(&["decomp", "--n", "14", "--e", "3", "--p", "3", "--adjustment"]);
    let v0 = json(&["decomp", "--n", "14", "--e", "3", "--p", "0"]);
    let dp = &v["decomposition"]["entries"];
    let d0 = &v0["decomposition"]["entries"];
    let a = &v["adjustment"]["entries"];
    let rows = dp.as_array().unwrap().len();
    let k = a.as_array().unwrap().len();
    for i in 0..rows {
        for j in 0..k {
            // entries of D^0 are 0, 1 or q; Ã is 0/1
            let (mut c0, mut c1) = (0, 0);
            for m in 0..k {
                if a[m][j] == "1" {
                    match d0[i][m].as_str().unwrap() {
                        "1" => c0 += 1,
                        "q" => c1 += 1,
                        "0" => {}
                        other => panic!("unexpected entry {other}"),
                    }
                }
            }
            let expected = match (c0, c1) {
                (0, 0) => "0",
                (1, 0) => "1",
                (0, 1) => "q",
                _ => panic!("entry {c0} + {c1}q is not 0, 1 or q"),
            };
            assert_eq!(dp[i][j], expected, "row {i} col {j}");
        }
    }
}

#[test]
fn decomp_gate_exit_code() {
    let out = specht(&["decomp", "--n", "6", "--e", "4", "--p", "2"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("outside the certified range"));
    let v = json(&["decomp", "--n", "6", "--e", "4", "--p", "2", "--combinatorial"]);
    assert_eq!(v["decomposition"]["extrapolated"], true);
}

#[test]
fn decomp_csv() {
    let out = specht(&["decomp", "--n", "6", "--e", "2", "--p", "2", "--format", "csv"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("lambda,\"(1^6)\",\"(2,1^4)\",\"(2,2,1,1)\"\n"));
    assert!(text.contains("\"(2,2,1,1)\",1,q,1\n"));
}

#[test]
fn characters() {
    let v = json(&["character", "--shape", "2,2,1,1", "--e", "2"]);
    assert_eq!(v["mass"], 9);
    let v = json(&["character", "--shape", "2,2,1,1", "--e", "2", "--p", "2", "--kind", "simple"]);
    assert_eq!(v["mass"], 4);
    assert_eq!(v["character"]["n"], 6);
    let out = specht(&["character", "--shape", "2,2,2", "--e", "2", "--kind", "simple"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_suites() {
    let v = json(&["verify", "--suite", "counterexample"]);
    assert_eq!(v["passed"], true);
    let v = json(&["verify", "--suite", "degrees", "--max-n", "12", "--e", "2,3,4"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["cases"].as_array().unwrap().len(), 13 * 3);
    let v = json(&["verify", "--suite", "characters", "--max-n", "10", "--e", "2", "--p", "2"]);
    assert_eq!(v["passed"], true);
    let out = specht(&["verify", "--suite", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--suite", "section5", "--max-n", "9", "--format", "json"];
    let a = specht(&args);
    let b = specht(&["--jobs", "1", "verify", "--suite", "section5", "--max-n", "9", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
}
