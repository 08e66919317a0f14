use std::process::Command;

use serde_json::Value;
use topzeta::resolution::ResolutionGraph;

fn topzeta(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_topzeta"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let (code, stdout, stderr) = topzeta(args);
    assert_eq!(code, 0, "{stderr}");
    serde_json::from_str(&stdout).unwrap()
}

fn rat(num: &str, den: &str) -> Value {
    serde_json::json!({ "num": num, "den": den })
}

#[test]
fn cusp_zeta_report() {
    let report = json(&["zeta", "--poly", "y^2+x^3"]);
    assert_eq!(report["schema_version"], "1");
    assert_eq!(report["zeta"]["numerator"], serde_json::json!(["5", "4"]));
    assert_eq!(report["zeta"]["denominator"], serde_json::json!(["5", "11", "6"]));
    assert_eq!(report["lct"], rat("5", "6"));
    let poles = report["poles"].as_array().unwrap();
    assert_eq!(poles.len(), 2);
    assert_eq!(poles[0]["location"], rat("-1", "1"));
    assert_eq!(poles[1]["location"], rat("-5", "6"));
    assert_eq!(poles[1]["residue"], rat("5", "3"));
    assert_eq!(report["verdicts"]["predicted_poles_match"], true);
}

#[test]
fn graph_json_round_trip() {
    for poly in ["y^2+x^3", "x^3*y^2+x^7", "x*y*(x+y)", "y^2"] {
        let report = json(&["resolve", "--poly", poly]);
        let graph: ResolutionGraph = serde_json::from_value(report["graph"].clone()).unwrap();
        let again = serde_json::to_value(&graph).unwrap();
        assert_eq!(again, report["graph"], "{poly}");
    }
}

#[test]
fn latex_and_dot() {
    let (code, latex, _) = topzeta(&["zeta", "--poly", "y^2+x^3", "--format", "latex"]);
    assert_eq!(code, 0);
    assert_eq!(latex.trim(), "\\frac{4s+5}{(s+1)(6s+5)}");
    let (_, dot, _) = topzeta(&["resolve", "--poly", "y^2+x^3", "--format", "dot"]);
    assert_eq!(dot.matches("style=filled").count(), 3);
    assert_eq!(dot.matches(" -- ").count(), 3);
}

#[test]
fn surface_contribution() {
    let report = json(&["surface-contrib", "--preset", "four-general", "--alphas", "2,2,2,-5"]);
    assert_eq!(report["contribution"], rat("3", "20"));
    let report = json(&["surface-contrib", "--lines", "x; y; x+y", "--alphas", "1/3,-4/3,1"]);
    assert_eq!(report["contribution"], rat("0", "1"));
    let (code, _, stderr) = topzeta(&["surface-contrib", "--preset", "three-general", "--alphas", "1,1,1"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("creation relation"));
}

#[test]
fn corrupted_expectations_exit_two() {
    let cases: [(&[&str], &str, &str); 3] = [
        (&["zeta", "--poly", "y^2+x^3"], "(4*s+5)/((s+1)*(6*s+5))", "(4*s+5)/((s+1)*(6*s+7))"),
        (&["lct", "--poly", "y^2+x^3"], "5/6", "6/7"),
        (&["surface-contrib", "--preset", "four-general", "--alphas", "2,2,2,-5"], "3/20", "1/20"),
    ];
    for (args, good, bad) in cases {
        let mut with_good = args.to_vec();
        with_good.extend(["--expect", good]);
        assert_eq!(topzeta(&with_good).0, 0, "{with_good:?}");
        let mut with_bad = args.to_vec();
        with_bad.extend(["--expect", bad]);
        assert_eq!(topzeta(&with_bad).0, 2, "{with_bad:?}");
    }
}

#[test]
fn input_errors_exit_one() {
    assert_eq!(topzeta(&["zeta", "--poly", "y^2+*x"]).0, 1);
    assert_eq!(topzeta(&["zeta", "--poly", "1+x"]).0, 1);
    assert_eq!(topzeta(&["zeta"]).0, 1);
    assert_eq!(topzeta(&["zeta", "--poly", "y^2", "--family", "y2xk", "--k", "3"]).0, 1);
    assert_eq!(topzeta(&["sweep", "--family", "x3y2xk", "--range", "2..6"]).0, 1);
    assert_eq!(topzeta(&["verify", "--suite", "nonsense"]).0, 1);
}

#[test]
fn sweep_and_suspend() {
    let report = json(&["sweep", "--family", "x3y2xk", "--range", "5..8"]);
    assert_eq!(report["passed"], true);
    assert_eq!(report["checks"].as_array().unwrap().len(), 4);
    let report = json(&["sweep", "--family", "threevar", "--n", "1", "--range", "5..9"]);
    assert_eq!(report["passed"], true);
    let report = json(&["suspend", "--poly", "y^2+x^2"]);
    // (s+3)/((s+1)(2s+3))
    assert_eq!(report["zeta"]["numerator"], serde_json::json!(["3", "1"]));
    assert_eq!(report["zeta"]["denominator"], serde_json::json!(["3", "5", "2"]));
}

#[test]
fn hodge_report() {
    let report = json(&["hodge", "--poly", "y^2+x^3", "--specialize", "-1/2,2/7"]);
    let specs = report["specializations"].as_array().unwrap();
    assert_eq!(specs[0]["value"], rat("3", "1"));
    assert!(specs.iter().all(|s| s["matches_topological"] == true));
    let orders = report["candidate_orders"].as_array().unwrap();
    assert!(orders.iter().any(|o| o["location"] == "-5/6" && o["order"] == 1));
}

#[test]
fn verify_is_reproducible() {
    let args = ["verify", "--suite", "configs", "--seed", "12345"];
    let (code, first, _) = topzeta(&args);
    assert_eq!(code, 0);
    let (_, second, _) = topzeta(&args);
    assert_eq!(first, second);
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("topzeta-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cusp.dot");
    let (code, stdout, _) = topzeta(&[
        "resolve",
        "--poly",
        "y^2+x^3",
        "--format",
        "dot",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().starts_with("graph resolution"));
    std::fs::remove_dir_all(&dir).unwrap();
}
