//! Behaviour of the `sov` front end: outputs, documents and exit codes.

use serde_json::Value;
use sov_cli::golden::{parse_rendering, Table};
use sov_cli::run;
use std::process::Command;

fn sov(args: &[&str]) -> sov_cli::Output {
    run(std::iter::once("sov").chain(args.iter().copied()))
}

#[test]
fn documented_examples() {
    let out = sov(&["seppoly", "--weight", "0,1,1"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "1 + (l^2+l)*y\n"));
    let out = sov(&["c", "--weight", "0,0,0"]);
    assert_eq!((out.code, out.stdout.as_str()), (0, "1\n"));
}

#[test]
fn macdonald_output_equals_the_factored_form() {
    let out = sov(&["macdonald", "--weight", "0,0,2"]);
    assert_eq!(out.code, 0);
    let got = parse_rendering(Table::Macdonald, 3, &out.stdout).unwrap();
    let want = parse_rendering(Table::Macdonald, 3, "m[0,0,2] + ((1-l)*(1+q)/(q-l))*m[0,1,1]").unwrap();
    assert_eq!(got, want);
    assert_eq!(out.stdout, "m[0,0,2] + ((-q*l+q-l+1)/(q-l))*m[0,1,1]\n");
}

#[test]
fn structured_document() {
    let out = sov(&["--json", "macdonald", "--weight", "0,0,2"]);
    assert_eq!(out.code, 0);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["command"], "macdonald");
    assert_eq!(v["status"], "value");
    assert_eq!(v["inputs"]["weight"], serde_json::json!([0, 0, 2]));
    let p = &v["payload"];
    assert_eq!(p["weight"], serde_json::json!([0, 0, 2]));
    assert!(p["basis"].is_string());
    let cs = p["coefficients"].as_array().unwrap();
    assert_eq!(cs.len(), 2);
    assert_eq!(cs[0]["monomial"], "m[0,0,2]");
    assert_eq!(cs[0]["coefficient"], "1");
    assert!(v["residuals"].as_array().unwrap().is_empty());
}

#[test]
fn json_flag_after_the_subcommand() {
    let out = sov(&["seppoly", "--weight", "0,0,1", "--json"]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["payload"]["coefficients"][1]["power"], 1);
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["macdonald", "--weight", "2,1,0"][..],
        &["macdonald", "--weight", "0,x,1"],
        &["macdonald"],
        &["seppoly", "--weight", "0,1,1", "--n", "4"],
        &["c", "--weight", "0,0,0,1"],
        &["apply-m", "t1"],
        &["apply-m", "t1+"],
        &["verify", "everything"],
        &["verify", "tables", "--min", "3", "--max", "-2"],
        &["frobnicate"],
    ] {
        let out = sov(args);
        assert_eq!(out.code, 2, "{args:?}: {}", out.stderr);
        assert!(out.stdout.is_empty());
        assert!(out.stderr.contains("Usage"), "{args:?}: {}", out.stderr);
    }
}

#[test]
fn negative_parts_are_weights_not_flags() {
    let out = sov(&["seppoly", "--weight", "-1,0,1"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.starts_with("y^-1 + "), "{}", out.stdout);
}

#[test]
fn apply_m_on_the_first_elementary_polynomial() {
    let out = sov(&["apply-m", "t1+t2+t3"]);
    assert_eq!(out.code, 0);
    let c = sov(&["c", "--weight", "0,0,1"]);
    assert_eq!(c.stdout, "(l^2+2*l+1)/(l^2+l+1)\n");
    // c_001 x S_001(y1) S_001(y2) expanded
    assert_eq!(
        out.stdout,
        "((l^4)/(l^2+l+1))*x*y1*y2 + ((l^3+l^2)/(l^2+l+1))*x*y1 + ((l^3+l^2)/(l^2+l+1))*x*y2 + ((l^2+2*l+1)/(l^2+l+1))*x\n"
    );
}

#[test]
fn verify_reports_and_exit_code() {
    let out = sov(&["verify", "tables"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(out.stdout.lines().all(|l| !l.starts_with("FAIL")));
    assert!(out.stdout.ends_with("68/68 checks passed\n"));
    let v: Value = serde_json::from_str(&sov(&["verify", "appendix-b", "--json"]).stdout).unwrap();
    assert_eq!(v["status"], "pass");
    assert!(v["residuals"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}

#[test]
fn a_failing_check_gives_exit_one() {
    let out = sov(&["verify", "numeric", "--grid", "64", "--g", "0.5"]);
    // 64 nodes cannot resolve the kernel to 1e-9
    assert_eq!(out.code, 1, "{}", out.stdout);
    assert!(out.stdout.contains("FAIL "));
}

#[test]
fn output_is_identical_across_thread_counts() {
    let bin = env!("CARGO_BIN_EXE_sov");
    let go = |threads: &str, suite: &str| {
        let o = Command::new(bin).args(["verify", suite, "--json"]).env("RAYON_NUM_THREADS", threads).output().unwrap();
        assert!(o.status.success());
        o.stdout
    };
    for suite in ["classical", "appendix-a"] {
        assert_eq!(go("1", suite), go("4", suite), "{suite}");
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_sov");
    let code = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code();
    assert_eq!(code(&["c", "--weight", "0,0,0"]), Some(0));
    assert_eq!(code(&["c", "--weight", "1,0,0"]), Some(2));
    assert_eq!(code(&["verify", "nothing"]), Some(2));
}
