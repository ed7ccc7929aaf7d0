use std::process::{Command, Output};

use numsg::{AperySet, GapSet, HilbertSeries, SmoothAnalysis, SylvesterReport};
use serde_json::Value;

fn numsg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_numsg"))
        .args(args)
        .env_remove("NUMSG_ENUMERATION_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let out = numsg(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    stdout(&out)
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    serde_json::from_str(&ok(&full)).expect("stdout is pure JSON")
}

#[test]
fn gaps_of_full_semigroup() {
    assert_eq!(ok(&["gaps", "1"]), "gaps: (none); genus 0; frobenius -1\n");
}

#[test]
fn gaps_text_and_json() {
    assert_eq!(ok(&["gaps", "5,3"]), "gaps: 1, 2, 4, 7; genus 4; frobenius 7\n");
    let v = json(&["gaps", "3,5"]);
    let back: GapSet = serde_json::from_value(v).unwrap();
    assert_eq!(back.gaps, vec![1, 2, 4, 7]);
    assert_eq!(back.frobenius, 7);
}

#[test]
fn frobenius_and_genus() {
    assert_eq!(ok(&["frobenius", "4,6,9"]), "11\n");
    assert_eq!(ok(&["genus", "4,6,9"]), "6\n");
    assert_eq!(json(&["frobenius", "3,5"])["frobenius"], "7");
    assert_eq!(json(&["genus", "3,5"])["genus"], "4");
}

#[test]
fn apery_and_hilbert() {
    assert_eq!(ok(&["apery", "3,5", "--t", "3"]), "0,5,10\n");
    let ap: AperySet = serde_json::from_value(json(&["apery", "3,5", "--t", "5"])).unwrap();
    assert_eq!(ap.sorted(), vec![0, 3, 6, 9, 12]);
    assert_eq!(ok(&["hilbert", "3,5", "--t", "3"]), "(1 + x^5 + x^10) / (1 - x^3)\n");
    let h: HilbertSeries = serde_json::from_value(json(&["hilbert", "3,5", "--t", "3"])).unwrap();
    assert_eq!(h.denominator_exponent, 3);
}

#[test]
fn analyze_reports_smoothness() {
    assert_eq!(ok(&["analyze", "11,10,6"]), "not smooth (c = 11,1)\n");
    let text = ok(&["analyze", "6,10,11"]);
    assert!(text.starts_with("smooth (c = 3,2)\n"), "{text}");
    let a: SmoothAnalysis = serde_json::from_value(json(&["analyze", "4,6,9"])).unwrap();
    assert!(a.is_smooth);
}

#[test]
fn compound_detect_rho() {
    assert_eq!(ok(&["compound", "--a", "2,2", "--b", "3,3"]), "4,6,9\n");
    assert_eq!(ok(&["detect", "4,6,9"]), "compound: A = 2,2; B = 3,3\n");
    assert_eq!(ok(&["detect", "6,4,9"]), "not compound\n");
    assert_eq!(json(&["detect", "6,4,9"])["compound"], false);
    assert_eq!(ok(&["rho", "4,6,9", "--j", "1"]), "6,4,9 (c = 3,2)\n");
}

#[test]
fn represent_negative_numbers() {
    let v = json(&["represent", "4,6,9", "--n", "-5"]);
    assert_eq!(v["digits"], serde_json::json!(["-5", "1", "1"]));
    assert_eq!(v["membership"], "NotInSemigroup");
    assert_eq!(json(&["represent", "4,6,9", "--n", "9"])["membership"], "InApery");
}

#[test]
fn sylvester_table() {
    let text = ok(&["sylvester", "4,6,9"]);
    let rows: Vec<Vec<&str>> = text.lines().skip(1).map(|l| l.split_whitespace().collect()).collect();
    assert_eq!(rows, vec![vec!["0", "6", "-4"], vec!["1", "29", "-25"], vec!["2", "209", "-201"]]);
    let report: SylvesterReport = serde_json::from_value(json(&["alternating", "3,5", "--m", "3"])).unwrap();
    assert!(report.all_agree());
    assert_eq!(report.t.len(), 4);
}

#[test]
fn wangwang_values() {
    assert_eq!(ok(&["wangwang", "--a", "3", "--b", "5", "--m", "2"]), "-30\n");
    assert_eq!(json(&["wangwang", "--a", "2", "--b", "3", "--m", "0"])["T"], "-1");
}

#[test]
fn verify_is_deterministic() {
    let a = json(&["verify", "--count", "8", "--seed", "11"]);
    let b = json(&["verify", "--count", "8", "--seed", "11"]);
    assert_eq!(a, b);
    for check in a["checks"].as_array().unwrap() {
        assert_eq!(check["failed"], 0);
        assert_eq!(check["passed"], 8);
    }
}

#[test]
fn bench_agrees() {
    let v = json(&["bench", "4,6,9"]);
    assert_eq!(v["agree"], true);
}

#[test]
fn failed_internal_assertion_exits_2() {
    // (6,10,11) is smooth but its squares are not, and the relation behind the
    // S_1/S_2 closed forms breaks; the tool must refuse rather than answer.
    let out = numsg(&["sylvester", "6,10,11"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8(out.stderr).unwrap().contains("invariant"));
}

#[test]
fn input_errors_exit_1_with_one_line() {
    for args in [
        &["gaps", "4,6"][..],
        &["gaps", "4,x"],
        &["gaps", "0"],
        &["apery", "3,5", "--t", "4"],
        &["sylvester", "11,10,6"],
        &["wangwang", "--a", "3", "--b", "4", "--m", "1"],
        &["frobenius"],
        &["nonsense"],
        &["--cap", "5", "gaps", "3,5"],
        &["--cap", "0", "gaps", "3,5"],
    ] {
        let out = numsg(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        let err = String::from_utf8(out.stderr).unwrap();
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
    }
}

#[test]
fn cap_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_numsg"))
        .args(["gaps", "3,5"])
        .env("NUMSG_ENUMERATION_CAP", "6")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
}
