use assert_cmd::Command;
use predicates::prelude::*;
use serde_json::Value;

fn grothlab() -> Command {
    Command::cargo_bin("grothlab").unwrap()
}

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn poly_2413_both_engines() {
    let expected = "x1*x2^2 + x1^2*x2 - x1^2*x2^2\n";
    grothlab().args(["poly", "2413", "--grothendieck"]).assert().success().stdout(expected);
    grothlab()
        .args(["poly", "2413", "--grothendieck", "--engine", "recursion"])
        .assert()
        .success()
        .stdout(expected);
    grothlab().args(["poly", "2413", "--schubert"]).assert().success().stdout("x1*x2^2 + x1^2*x2\n");
    grothlab().args(["poly", "1", "--schubert"]).assert().success().stdout("1\n");
}

#[test]
fn poly_json() {
    let out = grothlab().args(["poly", "132", "--json"]).assert().success().get_output().stdout.clone();
    let v: Value = serde_json::from_slice(&out).unwrap();
    assert_eq!(v["n_vars"], 3);
    assert_eq!(v["terms"].as_array().unwrap().len(), 3);
}

#[test]
fn bad_permutation_is_a_usage_error() {
    grothlab().args(["poly", "2415"]).assert().code(2);
    grothlab().args(["poly"]).assert().code(2);
    grothlab().args(["frobnicate"]).assert().code(2);
}

#[test]
fn support_formula_matches_enumeration() {
    let a = grothlab().args(["support", "31542"]).assert().success().get_output().stdout.clone();
    let b = grothlab().args(["support", "31542", "--formula"]).assert().success().get_output().stdout.clone();
    assert_eq!(a, b);
    assert!(!a.is_empty());
    grothlab().args(["support", "1"]).assert().success().stdout("(0,)\n");
    grothlab()
        .args(["support", "2413", "--formula"])
        .assert()
        .code(3)
        .stderr(predicate::str::contains("fireworks"));
}

#[test]
fn pipedreams_count_and_list() {
    grothlab().args(["pipedreams", "2413", "--count"]).assert().success().stdout("3\n");
    grothlab().args(["pipedreams", "2413", "--count", "--reduced"]).assert().success().stdout("2\n");
    let out = grothlab().args(["pipedreams", "2413", "--json"]).assert().success().get_output().stdout.clone();
    let v: Value = serde_json::from_slice(&out).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);
    assert_eq!(v[0]["n"], 4);
}

#[test]
fn raise_row_already_at_maximum() {
    grothlab()
        .args(["raise", "--perm", "3162754", "--row", "7", "--file", &data("tiling_3162754.json")])
        .assert()
        .code(3);
}

#[test]
fn raise_132_from_stdin() {
    let out = grothlab()
        .args(["raise", "--perm", "132", "--row", "1"])
        .write_stdin(r#"{"n":3,"crosses":[[2,1]]}"#)
        .assert()
        .success()
        .get_output()
        .stdout
        .clone();
    let v: Value = serde_json::from_slice(&out).unwrap();
    assert_eq!(v["perm"], "132");
    let crosses: Vec<(usize, usize)> = serde_json::from_value(v["final"]["crosses"].clone()).unwrap();
    let row1 = crosses.iter().filter(|c| c.0 == 1).count();
    let row2 = crosses.iter().filter(|c| c.0 == 2).count();
    assert_eq!(row1, 1);
    assert!(row2 <= 1);
    // replay: the final dream must trace back to 132
    let q: grothlab::PipeDream = serde_json::from_value(v["final"].clone()).unwrap();
    assert_eq!(grothlab::trace(&q).demazure.to_string(), "132");
    assert!(!v["steps"].as_array().unwrap().is_empty());
}

#[test]
fn raise_rejects_malformed_json() {
    grothlab().args(["raise", "--perm", "132", "--row", "1"]).write_stdin("{not json").assert().code(2);
    grothlab()
        .args(["raise", "--perm", "132", "--row", "1"])
        .write_stdin(r#"{"n":3,"crosses":[[3,1]]}"#)
        .assert()
        .code(2);
}

#[test]
fn raise_rejects_wrong_permutation() {
    grothlab()
        .args(["raise", "--perm", "213", "--row", "1"])
        .write_stdin(r#"{"n":3,"crosses":[[2,1]]}"#)
        .assert()
        .code(3);
}

#[test]
fn verify_examples() {
    grothlab()
        .args(["verify", "main-support", "--n", "5", "--filter", "fireworks"])
        .assert()
        .success()
        .stdout(predicate::str::contains("checked 52 instances, 0 failures"));
    grothlab()
        .args(["verify", "oracle-equiv", "--n", "4"])
        .assert()
        .success()
        .stdout("checked 24 instances, 0 failures\n");
    grothlab()
        .args(["verify", "m-convex", "--n", "1"])
        .assert()
        .success()
        .stdout("checked 1 instances, 0 failures\n");
}

#[test]
fn verify_json_is_reproducible_across_threads() {
    let run = |threads: &str| {
        grothlab()
            .args(["verify", "psp-formula", "--n", "4", "--seed", "5", "--json"])
            .env("GROTHLAB_THREADS", threads)
            .assert()
            .success()
            .get_output()
            .stdout
            .clone()
    };
    let one = run("1");
    assert_eq!(one, run("3"));
    let v: Value = serde_json::from_slice(&one).unwrap();
    assert_eq!(v["claim"], "psp-formula");
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn verify_limits() {
    grothlab().args(["verify", "oracle-equiv", "--n", "12"]).assert().code(5);
    grothlab().args(["verify", "oracle-equiv", "--n", "0"]).assert().code(3);
    grothlab().args(["verify", "no-such-claim", "--n", "3"]).assert().code(2);
    grothlab().args(["verify", "layered", "--n", "3"]).env("GROTHLAB_THREADS", "x").assert().code(2);
}
