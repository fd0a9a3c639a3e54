use std::process::Command;

use macbranch::qfield::CoeffRat;
use macbranch_cli::{run, Outcome, EXIT_USAGE};
use serde_json::Value;

fn call(args: &[&str]) -> Outcome {
    run(std::iter::once("macbranch").chain(args.iter().copied()))
}

fn json(out: &Outcome) -> Value {
    serde_json::from_str(&out.stdout).expect("stdout is JSON")
}

fn single_line_error(out: &Outcome) {
    assert_eq!(out.code, EXIT_USAGE, "{out:?}");
    assert!(out.stdout.is_empty());
    assert_eq!(out.stderr.trim_end().lines().count(), 1, "{:?}", out.stderr);
    assert!(out.stderr.starts_with("error: "));
}

#[test]
fn poly_two_zero_generic() {
    let out = call(&["poly", "--lambda", "2,0", "--vars", "2", "--method", "eigen", "--generic"]);
    assert_eq!(out.code, 0);
    let v = json(&out);
    let terms = v["poly"]["terms"].as_array().unwrap();
    let m11 = terms.iter().find(|t| t["sig"] == serde_json::json!([1, 1])).unwrap();
    let one = CoeffRat::one();
    let (q2, t2) = (CoeffRat::q_pow(2), CoeffRat::t_pow(2));
    let expected = (&one + &q2) * (&one - &t2) / (&one - &(&q2 * &t2));
    assert_eq!(m11["coeff"], expected.to_string());
}

#[test]
fn poly_methods_agree() {
    for k in ["--generic", "--k=2"] {
        let outs: Vec<Value> =
            ["eigen", "branch", "gt"].iter().map(|m| json(&call(&["poly", "--lambda", "2,1,0", "--method", m, k]))).collect();
        assert_eq!(outs[0]["poly"], outs[1]["poly"]);
        assert_eq!(outs[0]["poly"], outs[2]["poly"]);
    }
}

#[test]
fn poly_pads_to_vars_and_accepts_negative_parts() {
    let v = json(&call(&["poly", "--lambda", "1", "--vars", "3"]));
    assert_eq!(v["lambda"], "(1,0,0)");
    assert_eq!(v["poly"]["terms"].as_array().unwrap().len(), 1);
    let out = call(&["poly", "--lambda", "1,-1", "--k", "2"]);
    assert_eq!(out.code, 0, "{out:?}");
}

#[test]
fn psi_at_k_one_is_one() {
    let out = call(&["psi", "--lambda", "2,0", "--mu", "1", "--k", "1"]);
    assert_eq!(out.code, 0);
    assert_eq!(json(&out)["value"], "1");
}

#[test]
fn matelt_routes_agree() {
    let get = |route: &str| json(&call(&["matelt", "--lambda", "2,1,0", "--mu", "1,0", "--k", "2", "--route", route]));
    let a = get("mat_elt");
    assert_eq!(a["route"], "mat_elt");
    assert_eq!(a["value"], get("diag_sum")["value"]);
    let c: CoeffRat = macbranch::intertwiner::mat_elt(&"1,0".parse().unwrap(), &"2,1,0".parse().unwrap(), 2).unwrap();
    assert_eq!(get("cg_sq")["value"], (&c * &c).to_string());
}

#[test]
fn trace_output() {
    let v = json(&call(&["trace", "--lambda", "1,0", "--k", "2"]));
    let p = macbranch::macops::macdonald_at_k(&"1,0".parse().unwrap(), 2).unwrap();
    assert_eq!(v["quotient"], p.to_json());
}

#[test]
fn verify_branch_suite_passes() {
    let out = call(&["verify", "--suite", "branch", "--n", "2", "--maxdeg", "4", "--k", "2"]);
    assert_eq!(out.code, 0);
    let v = json(&out);
    assert_eq!(v["suite"], "branch");
    assert_eq!(v["pass"], true);
    assert_eq!(v["seed"], 0);
}

#[test]
fn verify_all_aggregates_every_suite() {
    let out = call(&["verify", "--maxdeg", "2", "--samples", "2", "--l", "1"]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    let v = json(&out);
    let names: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    for s in macbranch::suites::list_suites() {
        assert!(names.iter().any(|n| n.starts_with(&format!("{}/", s.name))), "{}", s.name);
    }
}

#[test]
fn catalog() {
    let v = json(&call(&["verify", "--list"]));
    let suites = v["suites"].as_array().unwrap();
    let names: std::collections::BTreeSet<&str> = suites.iter().map(|s| s["name"].as_str().unwrap()).collect();
    assert_eq!(names.len(), suites.len());
    assert_eq!(names.len(), 12);
    assert!(names.contains("res-diff"));
    assert!(suites.iter().all(|s| !s["description"].as_str().unwrap().is_empty()));
}

#[test]
fn usage_errors_exit_two() {
    single_line_error(&call(&["poly", "--lambda", "2,x"]));
    single_line_error(&call(&["poly", "--lambda", "0,2"]));
    single_line_error(&call(&["poly", "--lambda", "2,0", "--k", "0"]));
    single_line_error(&call(&["poly", "--lambda", "2,0", "--k", "2", "--generic"]));
    single_line_error(&call(&["psi", "--lambda", "2,0", "--mu", "3", "--k", "2"]));
    single_line_error(&call(&["matelt", "--lambda", "2,0", "--mu", "1", "--k", "-1"]));
    single_line_error(&call(&["verify", "--suite", "nope"]));
    single_line_error(&call(&["frobnicate"]));
    single_line_error(&call(&[]));
}

#[test]
fn binary_is_deterministic() {
    let exe = env!("CARGO_BIN_EXE_macbranch");
    let args = ["verify", "--suite", "adjoint", "--samples", "3", "--seed", "17"];
    let a = Command::new(exe).args(args).output().unwrap();
    let b = Command::new(exe).args(args).output().unwrap();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let bad = Command::new(exe).args(["psi", "--lambda", "1,0", "--mu", "5"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(bad.stdout.is_empty());
}
