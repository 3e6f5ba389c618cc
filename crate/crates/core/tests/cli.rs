use std::process::Command;

use gammalog::cli::run;
use gammalog::registry::{Binding, Builtin, Catalog, Evaluator, IdentityRecord, RegistryError, Sides, VerificationReport};

fn go(args: &[&str]) -> gammalog::cli::Outcome {
    let argv = std::iter::once("verify").chain(args.iter().copied());
    run(argv, Catalog::builtin(), &Builtin)
}

#[test]
fn single_id_passes() {
    let out = go(&["--id", "eq08"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    let lines: Vec<&str> = out.stdout.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("PASS  eq08"));
    assert_eq!(lines[1], "passed 1 / failed 0 / errored 0");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["--id", "nonexistent"][..],
        &["--rtol", "1e-16", "--id", "eq08"],
        &["--format", "xml", "--id", "eq08"],
        &["--bogus"],
        &[],
        &["--id", "eq07", "--param", "x=-1"],
        &["--id", "eq07", "--param", "q=1"],
        &["--id", "eq07", "--param", "x"],
    ] {
        let out = go(args);
        assert_eq!(out.code, 2, "{args:?}: {}", out.stdout);
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn residuals_use_three_significant_digits() {
    let out = go(&["--filter", "eq12"]);
    assert_eq!(out.code, 0);
    for line in out.stdout.lines().take(2) {
        let abs = line.split("abs ").nth(1).unwrap().split_whitespace().next().unwrap();
        let mantissa = abs.split('e').next().unwrap();
        assert_eq!(mantissa.len(), 4, "{abs}");
    }
}

#[test]
fn json_matches_report_schema() {
    let out = go(&["--filter", "eq5", "--format", "json", "--rtol", "1e-9"]);
    assert_eq!(out.code, 0);
    let reports: Vec<VerificationReport> = serde_json::from_str(&out.stdout).unwrap();
    assert!(reports.len() > 20);
    let raw: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let keys: Vec<&str> = raw[0].as_object().unwrap().keys().map(|k| k.as_str()).collect();
    for k in ["identity_id", "binding", "lhs", "rhs", "abs_residual", "rel_residual", "pass", "tolerances"] {
        assert!(keys.contains(&k), "{k}");
    }
    assert_eq!(out.stderr.trim(), format!("passed {} / failed 0 / errored 0", reports.len()));
}

#[test]
fn csv_header_and_rows() {
    let out = go(&["--id", "eq07", "--format", "csv"]);
    assert_eq!(out.code, 0);
    let mut lines = out.stdout.lines();
    assert_eq!(lines.next(), Some("id,binding,lhs,rhs,abs_residual,rel_residual,pass"));
    assert_eq!(lines.count(), 27);
}

#[test]
fn param_overrides() {
    // complete binding: one report
    let out = go(&["--id", "eq07", "--param", "m=2", "--param", "n=7", "--param", "x=0.75"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.contains("m=2,n=7,x=0.75"));
    assert_eq!(out.stdout.lines().count(), 2);
    // partial: overlaid on the grid and deduplicated
    let out = go(&["--id", "eq07", "--param", "x=2"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.lines().count(), 9 + 1);
}

#[test]
fn list_mode() {
    let out = go(&["--list", "--filter", "eq12"]);
    assert_eq!(out.code, 0);
    assert_eq!(out.stdout.lines().count(), 2);
    assert!(out.stdout.contains("[corrected]"));
    let out = go(&["--list"]);
    assert_eq!(out.stdout.lines().count(), Catalog::builtin().records().len());
}

struct FailOne(&'static str);

impl Evaluator for FailOne {
    fn sides(&self, record: &IdentityRecord, binding: &Binding, target: f64) -> Result<Sides, RegistryError> {
        let (l, r) = Builtin.sides(record, binding, target)?;
        Ok(if record.id == self.0 { (l, r.shift(1e-3)) } else { (l, r) })
    }
}

#[test]
fn injected_failure_sets_exit_code() {
    let argv = ["verify", "--filter", "eq1"];
    let ok = run(argv, Catalog::builtin(), &Builtin);
    assert_eq!(ok.code, 0);
    let bad = run(argv, Catalog::builtin(), &FailOne("eq16"));
    assert_eq!(bad.code, 1);
    assert!(bad.stdout.lines().any(|l| l.starts_with("FAIL  eq16")));
    let total: usize = Catalog::builtin().list(Some("eq1")).iter().map(|r| r.default_grid.len()).sum();
    assert!(bad.stdout.ends_with(&format!("passed {} / failed 1 / errored 0\n", total - 1)));

    let fast = run(["verify", "--filter", "eq1", "--fail-fast"], Catalog::builtin(), &FailOne("eq13"));
    assert_eq!(fast.code, 1);
    let last_report = fast.stdout.lines().rev().nth(1).unwrap();
    assert!(last_report.starts_with("FAIL  eq13"), "{last_report}");
}

#[test]
fn output_is_deterministic() {
    for fmt in ["text", "json", "csv"] {
        let a = go(&["--filter", "eq9", "--format", fmt]);
        let b = go(&["--filter", "eq9", "--format", fmt]);
        assert_eq!(a, b);
    }
}

#[test]
fn binary_end_to_end() {
    let bin = env!("CARGO_BIN_EXE_verify");
    let out = Command::new(bin).args(["--id", "eq08"]).output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let out = Command::new(bin).args(["--id", "nonexistent"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
    let out = Command::new(bin).args(["--all", "--format", "json", "--rtol", "1e-9"]).env("MALMSTEN_THREADS", "2").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let reports: Vec<VerificationReport> = serde_json::from_slice(&out.stdout).unwrap();
    assert!(reports.iter().all(|r| r.pass));
}
