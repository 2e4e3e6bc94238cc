use std::process::{Command, Output};

use serde_json::Value;

fn parcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_parcat")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = parcat(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

fn json(args: &[&str]) -> Value {
    let mut v = args.to_vec();
    v.extend(["--format", "json"]);
    serde_json::from_str(&stdout(&v)).unwrap()
}

fn code(args: &[&str]) -> i32 {
    parcat(args).status.code().unwrap()
}

#[test]
fn documented_examples() {
    assert_eq!(
        stdout(&["map", "--name", "core", "--n", "9", "--r", "3,8", "--tuple", "7,9,6;5,5,9,8,9;9"]),
        "4,5,6;4,5,7,8,9;9"
    );
    assert_eq!(stdout(&["count", "--what", "cnr", "--n", "3", "--r", "1,2"]), "5");
    assert_eq!(stdout(&["rowsum", "--shape", "1,1,0", "--bounds", "3,3;3"]), "x1*x2 + x1*x3 + x2*x3");
}

#[test]
fn the_other_maps() {
    let m = |name: &str, t: &str| stdout(&["map", "--name", name, "--tuple", t]);
    assert_eq!(m("floor", "3,4,6;4,5,6,8,9;9"), "3,4,6;6,6,6,8,9;9");
    assert_eq!(m("ceiling", "3,4,5;4,5,6,8,9;9"), "5,5,5;6,6,6,9,9;9");
    assert_eq!(m("pi", "2,4,6;4,5,6,7,9;9"), "2,4,6;1,3,5,7,9;8");
    assert_eq!(stdout(&["map", "--name", "rank", "--perm", "2,4,6;1,5,7,8,9;3"]), "2,4,6;5,6,7,8,9;9");
    assert_eq!(stdout(&["map", "--name", "project", "--perm", "3,1,4,2", "--r", "2"]), "1,3;2,4");
    assert_eq!(stdout(&["map", "--name", "lift", "--perm", "3;1,2"]), "3;2;1");
}

#[test]
fn critical_lists_round_trip() {
    let t = "4,5,6;4,5,7,8,9;9";
    let list = stdout(&["critical", "--tuple", t]);
    assert_eq!(stdout(&["critical", "--list", &list, "--kind", "increasing"]), t);
    let j = json(&["critical", "--tuple", t]);
    assert_eq!(j["critical_list"], list.as_str());
}

#[test]
fn classify_lists_labels() {
    let labels = stdout(&["classify", "--tuple", "1,2"]);
    assert!(labels.split(' ').any(|l| l == "flag"), "{labels}");
    let j = json(&["classify", "--tuple", "1,2"]);
    assert!(j["labels"].as_array().unwrap().iter().any(|l| l == "upper"));
}

#[test]
fn scan_and_keys() {
    assert_eq!(stdout(&["scan", "--shape", "2,1", "--columns", "1,2/2"]), "1 2\n2");
    let key = json(&["key", "--shape", "2,1,0", "--perm", "3,1,2"]);
    let again = json(&["scan", "--tableau", &key.to_string()]);
    assert_eq!(key, again);
}

#[test]
fn tableau_json_matches_the_columns_form() {
    let a = json(&["scan", "--shape", "2,1,0", "--columns", "1,3/2"]);
    let b = json(&["scan", "--tableau", r#"{"n":3,"shape":[2,1,0],"columns":[[1,3],[2]]}"#]);
    assert_eq!(a, b);
    assert_eq!(a["columns"], serde_json::json!([[2, 3], [2]]));
}

#[test]
fn tableaux_count_and_listing_agree() {
    let n: usize = stdout(&["tableaux", "--shape", "2,1,0", "--count"]).parse().unwrap();
    assert_eq!(n, 8);
    assert_eq!(json(&["tableaux", "--shape", "2,1,0"]).as_array().unwrap().len(), 8);
    assert_eq!(stdout(&["tableaux", "--shape", "2,1,0", "--bounds", "2,3,3", "--count"]), "5");
}

#[test]
fn demazure_methods_agree() {
    let a = stdout(&["demazure", "--shape", "2,1,0", "--perm", "3,1,2", "--method", "tableau"]);
    let b = stdout(&["demazure", "--shape", "2,1,0", "--perm", "3,1,2", "--method", "dd"]);
    let c = stdout(&["demazure", "--shape", "2,1,0", "--perm", "3,1,2", "--method", "both"]);
    assert_eq!(a, b);
    assert_eq!(a, c);
    assert_eq!(a, "x1^2*x2 + x1^2*x3 + x1*x2^2 + x1*x2*x3 + x1*x3^2");
}

#[test]
fn gv_determinant_reports_nonpermutability() {
    let out = stdout(&["gvdet", "--shape", "2,1,0", "--bounds", "2,3,3"]);
    assert!(out.ends_with("nonpermutable: true"), "{out}");
    let poly = out.lines().next().unwrap();
    assert_eq!(poly, stdout(&["rowsum", "--shape", "2,1,0", "--bounds", "2,3,3"]));
    let j = json(&["gvdet", "--shape", "2,1,0", "--bounds", "3,2,3"]);
    assert_eq!(j["nonpermutable"], false);
}

#[test]
fn counts() {
    assert_eq!(stdout(&["count", "--what", "total", "--n", "4"]), "56");
    assert_eq!(stdout(&["count", "--what", "family", "--family", "UI", "--n", "4", "--r", "2"]), "6");
    assert_eq!(json(&["count", "--what", "cnr", "--n", "4", "--r", "1,2,3"])["count"], "14");
    let items = stdout(&["generate", "--family", "UI", "--n", "3", "--r", "1"]);
    assert_eq!(items.lines().count(), 3);
}

#[test]
fn verify_passes_and_reports_json() {
    assert_eq!(stdout(&["verify", "--theorem", "T340", "--max-n", "3", "--box", "2x2"]), "T340: pass (301 checks)");
    let j = json(&["verify", "--theorem", "T18_1", "--max-n", "4"]);
    assert_eq!(j["pass"], true);
    assert!(j.get("ms").is_none());
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "--theorem", "T721", "--max-n", "4", "--box", "3x3", "--format", "json"];
    assert_eq!(parcat(&args).stdout, parcat(&args).stdout);
    let args = ["tableaux", "--shape", "3,1,0,0", "--format", "json"];
    assert_eq!(parcat(&args).stdout, parcat(&args).stdout);
}

#[test]
fn polynomial_json_round_trips() {
    let j = json(&["rowsum", "--shape", "1,1,0", "--bounds", "3,3;3"]);
    let p = parcat::SparsePoly::from_json_value(&j).unwrap();
    assert_eq!(p.to_string(), "x1*x2 + x1*x3 + x2*x3");
}

#[test]
fn file_payloads() {
    let dir = std::env::temp_dir().join(format!("parcat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("tuple.txt");
    std::fs::write(&path, "7,9,6;5,5,9,8,9;9\n").unwrap();
    let arg = format!("@{}", path.display());
    assert_eq!(stdout(&["map", "--name", "core", "--tuple", &arg]), "4,5,6;4,5,7,8,9;9");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn exit_codes() {
    let bad = parcat(&["classify", "--tuple", "2,4,1"]);
    assert_eq!(bad.status.code(), Some(1));
    let msg = String::from_utf8(bad.stderr).unwrap();
    assert!(msg.contains("position"), "{msg}");
    assert_eq!(code(&["map", "--name", "core", "--tuple", "1,2", "--r", "1", "--n", "3"]), 2);
    assert_eq!(code(&["nonsense"]), 2);
    assert_eq!(code(&["verify", "--theorem", "T999"]), 2);
    assert_eq!(code(&["map", "--name", "core", "--tuple", "@/nonexistent/parcat"]), 2);
    assert_eq!(code(&["demazure", "--shape", "2,1,0", "--perm", "3;1,2"]), 1);
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn thread_count_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_parcat"))
        .args(["count", "--what", "cnr", "--n", "5", "--r", "1,2,3,4"])
        .env("PARCAT_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "42");
    let out = Command::new(env!("CARGO_BIN_EXE_parcat"))
        .args(["count", "--what", "cnr", "--n", "5", "--r", "1,2,3,4"])
        .env("PARCAT_THREADS", "many")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
