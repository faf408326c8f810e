use std::process::Command;

use serde_json::Value;
use towerforge::cli::run;

fn cli(args: &[&str]) -> towerforge::cli::Output {
    run(std::iter::once("towerforge").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let o = cli(args);
    assert_eq!(o.code, 0, "{}", o.stderr);
    serde_json::from_str(&o.stdout).unwrap()
}

#[test]
fn analyze_elliptic_split_reports_416() {
    let v = json(&["analyze", "elliptic", "--levels", "6", "--starts", "split", "--json"]);
    assert_eq!(v["split_chains"], 416);
    assert_eq!(v["genus_upper"], 417);
    assert_eq!(v["ratio"], "416/417");
    assert_eq!(v["dv_bound"], 31);
    assert_eq!(v["genus_exact_level1"], 4);
    assert_eq!(v["splitting_locus"].as_array().unwrap().len(), 4);
}

#[test]
fn reports_are_byte_identical() {
    let args = ["analyze", "gs-q2", "--levels", "3", "--starts", "all", "--json", "--seed", "11"];
    assert_eq!(cli(&args).stdout, cli(&args).stdout);
    let v: Value = serde_json::from_str(&cli(&args).stdout).unwrap();
    assert_eq!(v["config"]["seed"], 11);
    let csv = cli(&["analyze", "elliptic", "--levels", "2", "--starts", "split", "--csv"]);
    assert_eq!(csv.stdout, cli(&["analyze", "elliptic", "--levels", "2", "--starts", "split", "--format", "csv"]).stdout);
    assert!(csv.stdout.starts_with("tower,level,"));
    assert_eq!(csv.stdout.lines().count(), 3);
}

#[test]
fn count_agrees_with_oracle() {
    let v = json(&["count", "gs-q2", "--levels", "2", "--oracle"]);
    assert_eq!(v["engine"], v["oracle"]);
    assert_eq!(v["equal"], true);
}

#[test]
fn oracle_size_limit_is_a_usage_error() {
    let o = cli(&["count", "elliptic", "--levels", "3", "--oracle"]);
    assert_eq!(o.code, 2);
    let e: Value = serde_json::from_str(&o.stderr).unwrap();
    assert_eq!(e["error"], "size-exceeded");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(cli(&["frobnicate"]).code, 2);
    assert_eq!(cli(&["analyze", "no-such-tower"]).code, 2);
    assert_eq!(cli(&["analyze", "gs-q2", "--levels", "0"]).code, 2);
    assert_eq!(cli(&["verify", "no-such-group"]).code, 2);
    assert_eq!(cli(&["isogeny-derive", "--q", "3"]).code, 2);
}

#[test]
fn verify_groups_and_known_failure() {
    assert_eq!(cli(&["verify", "level5"]).code, 0);
    assert_eq!(cli(&["verify", "drinfeld"]).code, 0);
    assert_eq!(cli(&["verify", "elliptic"]).code, 0);
    let all = cli(&["verify", "all", "--json"]);
    assert_eq!(all.code, 4);
    let v: Value = serde_json::from_str(&all.stdout).unwrap();
    let failed: Vec<&str> =
        v["checks"].as_array().unwrap().iter().filter(|c| c["passed"] == false).map(|c| c["id"].as_str().unwrap()).collect();
    assert_eq!(failed, ["parameterization/T^2+T"]);
}

#[test]
fn towers_list_has_catalog_towers() {
    let v = json(&["towers", "list", "--json"]);
    let ids: Vec<&str> = v["towers"].as_array().unwrap().iter().map(|t| t["id"].as_str().unwrap()).collect();
    for id in ["gs-q2", "elliptic", "loetter-2401", "loetter-49", "ff-t2t", "ff-t2t1", "drinfeld-t", "elkies-q2"] {
        assert!(ids.contains(&id), "{id}");
    }
}

#[test]
fn isogeny_derive_emits_lists() {
    let v = json(&["isogeny-derive", "--q", "2", "--emit", "json"]);
    assert_eq!(v["curve_constraints"].as_array().unwrap().len(), 11);
    assert_eq!(v["commute_constraints"].as_array().unwrap().len(), 8);
    assert_eq!(v["isogeny_t"].as_array().unwrap().len(), 4);
    assert_eq!(v["specialization"]["gcd_degree"], 3);
}

fn temp(name: &str) -> std::path::PathBuf {
    std::env::temp_dir().join(format!("towerforge-cli-{}-{name}", std::process::id()))
}

#[test]
fn tower_file_input_matches_catalog() {
    let src = towerforge::catalog::golden_dir().join("towers/gs-q2.json");
    let path = temp("gs.json");
    std::fs::copy(&src, &path).unwrap();
    let from_file = json(&["analyze", path.to_str().unwrap(), "--levels", "3", "--starts", "all", "--json"]);
    let from_cat = json(&["analyze", "gs-q2", "--levels", "3", "--starts", "all", "--json"]);
    assert_eq!(from_file["levels"], from_cat["levels"]);
    std::fs::remove_file(path).ok();
}

#[test]
fn corrupted_backtrack_factor_exits_5() {
    let src = towerforge::catalog::golden_dir().join("towers/elliptic.json");
    let mut v: Value = serde_json::from_str(&std::fs::read_to_string(src).unwrap()).unwrap();
    v["backtrack"]["terms"][3]["c"] = serde_json::json!([1, 0, 0, 0, 0]);
    let path = temp("bad-elliptic.json");
    std::fs::write(&path, serde_json::to_string(&v).unwrap()).unwrap();
    let o = cli(&["analyze", path.to_str().unwrap(), "--levels", "2", "--starts", "affine"]);
    assert_eq!(o.code, 5, "{}", o.stderr);
    let e: Value = serde_json::from_str(&o.stderr).unwrap();
    assert_eq!(e["error"], "backtrack-division-fails");
    std::fs::remove_file(path).ok();
}

#[test]
fn binary_maps_missing_data_to_exit_3() {
    let out = Command::new(env!("CARGO_BIN_EXE_towerforge"))
        .args(["verify", "all"])
        .env("TOWERFORGE_DATA", "/nonexistent/towerforge")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let e: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(e["error"], "data");
}

#[test]
fn binary_runs_count() {
    let out = Command::new(env!("CARGO_BIN_EXE_towerforge")).args(["count", "ff-t2t1", "--levels", "2", "--oracle"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["equal"], true);
}
