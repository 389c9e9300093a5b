use std::process::{Command, Output};

use groth_lattice::partitions::Partition;
use groth_lattice::transfer::{dual_groth_poly, groth_poly, Encoding};
use groth_lattice_cli::json::{rf_from_json, RfJson};

fn groth(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_groth")).args(args).env("NO_COLOR", "1").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn compute(args: &[&str]) -> String {
    let mut all = vec!["compute"];
    all.extend_from_slice(args);
    let o = groth(&all);
    assert!(o.status.success(), "{:?}: {}", args, String::from_utf8_lossy(&o.stderr));
    stdout(&o).trim_end().to_string()
}

#[test]
fn documented_examples() {
    assert_eq!(
        compute(&["--kind", "g", "--lambda", "1,1", "--nvars", "2", "--format", "plain"]),
        "x1*x2 + b*x1 + b*x2"
    );
    assert_eq!(compute(&["--kind", "G", "--lambda", "", "--nvars", "3"]), "1");
}

#[test]
fn json_output_round_trips() {
    let lam = Partition::new(vec![2, 1]).unwrap();
    let out = compute(&["--kind", "G", "--lambda", "2,1", "--nvars", "2", "--format", "json"]);
    let j: RfJson = serde_json::from_str(&out).unwrap();
    assert_eq!(rf_from_json(&j).unwrap(), groth_poly(&lam, 2, Encoding::Row));

    let out = compute(&["--kind", "g", "--lambda", "2,1", "--nvars", "3", "--encoding", "column", "--format", "json"]);
    let j: RfJson = serde_json::from_str(&out).unwrap();
    let g = rf_from_json(&j).unwrap();
    assert_eq!(g.as_poly(), Some(&dual_groth_poly(&lam, 3, Encoding::Column)));
}

#[test]
fn output_is_byte_deterministic() {
    let args = ["--kind", "G", "--lambda", "2,2", "--nvars", "3", "--format", "json"];
    assert_eq!(compute(&args), compute(&args));
}

#[test]
fn no_variables() {
    let kinds: [&[&str]; 9] = [
        &["--kind", "G"],
        &["--kind", "G", "--encoding", "column"],
        &["--kind", "G", "--route", "dual"],
        &["--kind", "g"],
        &["--kind", "g", "--encoding", "column"],
        &["--kind", "j"],
        &["--kind", "j", "--route", "dual"],
        &["--kind", "J", "--generalized"],
        &["--kind", "s_c", "--generalized"],
    ];
    for kind in kinds {
        for (lam, want) in [("", "1"), ("2,1", "0")] {
            let mut args = kind.to_vec();
            args.extend_from_slice(&["--lambda", lam, "--nvars", "0"]);
            assert_eq!(compute(&args), want, "{:?}", args);
        }
    }
}

#[test]
fn specializations() {
    // G at (α, β) = (0, 0) is the Schur polynomial
    assert_eq!(compute(&["--kind", "G", "--lambda", "1", "--nvars", "2", "--alpha", "0", "--beta", "0"]), "x1 + x2");
    assert_eq!(
        compute(&["--kind", "G", "--lambda", "1", "--nvars", "1", "--alpha", "1/2", "--beta", "0"]),
        "-2*x1/(x1 - 2)"
    );
    assert_eq!(compute(&["--kind", "G", "--lambda", "1", "--nvars", "1", "--generalized", "--z", "3"]), "1/3*x1");
    assert_eq!(compute(&["--kind", "G", "--lambda", "1", "--nvars", "1", "--generalized"]), "x1/z1");
}

#[test]
fn latex_output() {
    let out = compute(&["--kind", "G", "--lambda", "1", "--nvars", "1", "--beta", "0", "--format", "latex"]);
    assert_eq!(out, "\\frac{x_{1}}{1 - \\alpha x_{1}}");
}

#[test]
fn rll_suite_passes() {
    let o = groth(&["verify", "--suite", "rll", "--aux-max", "2", "--phys-max", "3"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 6);
    for l in &lines {
        assert_eq!(l["passed"], true, "{}", l);
        assert!(l["counterexample"].is_null());
        assert!(l["name"].as_str().unwrap().starts_with("rll/"));
    }
}

#[test]
fn failing_checks_exit_one() {
    let o = groth(&["verify", "--suite", "cauchy-literal", "-m", "1", "-n", "1"]);
    assert_eq!(o.status.code(), Some(1));
    let first: serde_json::Value = serde_json::from_str(stdout(&o).lines().next().unwrap()).unwrap();
    assert_eq!(first["passed"], false);
    assert!(first["counterexample"]["lhs"].is_string());
}

#[test]
fn dump_weights_lists_conserving_labels() {
    let o = groth(&["dump-weights", "RowG", "--max-label", "2"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["family"], "RowG");
    for e in v["entries"].as_array().unwrap() {
        let l: Vec<u64> = e["labels"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
        assert_eq!(l[0] + l[1], l[2] + l[3]);
        assert!(l[0] <= 1 && l[2] <= 1);
    }
    let o = groth(&["dump-weights", "ColGR", "--max-label", "2"]);
    assert!(o.status.success());
}

#[test]
fn usage_errors_exit_two() {
    let bad: [&[&str]; 9] = [
        &[],
        &["compute", "--kind", "G", "--lambda", "1,2", "--nvars", "2"],
        &["compute", "--kind", "G", "--lambda", "x", "--nvars", "2"],
        &["compute", "--kind", "Q", "--lambda", "1", "--nvars", "2"],
        &["compute", "--kind", "G", "--lambda", "1", "--nvars", "2", "--alpha", "0.5"],
        &["compute", "--kind", "G", "--lambda", "1", "--nvars", "-1"],
        &["compute", "--kind", "J", "--lambda", "1", "--nvars", "2"],
        &["verify", "--suite", "nope"],
        &["dump-weights", "Nope"],
    ];
    for args in bad {
        let o = groth(args);
        assert_eq!(o.status.code(), Some(2), "{:?}", args);
        assert!(!o.stderr.is_empty(), "{:?}", args);
    }
}
