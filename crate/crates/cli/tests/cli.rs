//! End-to-end checks of the command-line interface.

use assert_cmd::Command;
use predicates::prelude::*;

fn fusscat() -> Command {
    Command::cargo_bin("fusscat").unwrap()
}

#[test]
fn count_fuss_catalan() {
    fusscat()
        .args(["count", "--what", "fc", "--n", "2", "--r", "3"])
        .assert()
        .success()
        .stdout(predicate::str::contains("4"));
}

#[test]
fn map_kreweras_worked_example() {
    fusscat()
        .args(["map", "--fn", "kreweras", "--input", "136/2/4/5/78", "--n", "8"])
        .assert()
        .success()
        .stdout(predicate::str::contains("17/23/456/8"));
}

#[test]
fn map_round_trip_via_json() {
    // psi emits a chord diagram; psi-inv accepts both the word and the
    // chord JSON.
    let out = fusscat()
        .args(["map", "--fn", "psi", "--input", "12/3/4", "--format", "json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["word"], "URUURURR");
    let diagram = serde_json::to_string(&v["diagram"]).unwrap();
    fusscat()
        .args(["map", "--fn", "psi-inv", "--input", &diagram])
        .assert()
        .success()
        .stdout(predicate::str::contains("12/3/4"));
}

#[test]
fn enumerate_paths_sorted() {
    fusscat()
        .args(["enumerate", "--what", "paths", "--n", "2", "--r", "3"])
        .assert()
        .success()
        .stdout(predicate::str::contains("URRRURRR\nURRURRRR\nURURRRRR\nUURRRRRR"));
}

#[test]
fn act_on_dyck_path() {
    fusscat()
        .args(["act", "--algebra", "tl", "--word", "E2", "--state", "URUURR"])
        .assert()
        .success()
        .stdout(predicate::str::contains("UURURR"));
}

#[test]
fn verify_ybe_passes() {
    fusscat()
        .args([
            "verify", "--what", "ybe", "--samples", "10", "--seed", "7", "--format", "json",
        ])
        .assert()
        .success()
        .stdout(predicate::str::contains("\"all_pass\": true"));
}

#[test]
fn verify_re_all_branches() {
    for branch in ["generic+", "generic-", "degenerate-e", "degenerate-o"] {
        fusscat()
            .args([
                "verify", "--what", "re", "--samples", "5", "--seed", "3", "--branch", branch,
                "--format", "json",
            ])
            .assert()
            .success()
            .stdout(predicate::str::contains("\"all_pass\": true"));
    }
}

#[test]
fn seeded_reports_are_byte_identical() {
    let run = || {
        fusscat()
            .args([
                "verify", "--what", "ybe", "--samples", "8", "--seed", "99", "--format", "json",
            ])
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run(), run());
}

#[test]
fn usage_errors_exit_two() {
    fusscat()
        .args(["count", "--what", "nonsense", "--n", "2"])
        .assert()
        .code(2);
    fusscat()
        .args(["map", "--fn", "kreweras", "--input", "13/24", "--n", "4"])
        .assert()
        .code(2);
}

#[test]
fn verify_dims_two_boundary_mismatch_exits_one() {
    // The honest two-boundary dimension disagrees with the folded-diagram
    // weight sum at three bundles; the verifier reports it with exit 1.
    fusscat()
        .args([
            "verify", "--what", "dims", "--m", "3", "--r", "1", "--boundary", "both", "--star1",
        ])
        .assert()
        .code(1);
    // The bulk and one-boundary dimension checks pass.
    fusscat()
        .args(["verify", "--what", "dims", "--m", "3", "--r", "2"])
        .assert()
        .success();
    fusscat()
        .args(["verify", "--what", "dims", "--m", "2", "--r", "2", "--boundary", "right"])
        .assert()
        .success();
}

#[test]
fn verify_isomorphisms() {
    fusscat()
        .args(["verify", "--what", "iso-1b", "--n", "4"])
        .assert()
        .success()
        .stdout(predicate::str::contains("\"failures\": 0").or(predicate::str::contains("failures: 0")));
    fusscat()
        .args(["verify", "--what", "iso-2b", "--n", "3", "--r", "2"])
        .assert()
        .success();
}

#[test]
fn verify_relations() {
    fusscat()
        .args(["verify", "--what", "fc-relations", "--m", "3", "--r", "2"])
        .assert()
        .success();
}

#[test]
fn act_product_mode() {
    // Without a state, act multiplies the word out as an algebra element.
    fusscat()
        .args([
            "act", "--algebra", "fc", "--word", "E2^2,E3^1,E1^2,E2^2", "--n", "4", "--r", "2",
            "--format", "json",
        ])
        .assert()
        .success()
        .stdout(predicate::str::contains("\"bundles\": 4"));
}
