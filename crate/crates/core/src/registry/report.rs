use std::fmt::Write as _;

use serde::Serialize;

use super::{BindingDisplay, RegistryError, VerificationReport};

/// Pass/fail/error counts over a batch of reports.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub errored: usize,
}

impl Summary {
    pub fn of(reports: &[VerificationReport]) -> Self {
        let mut s = Self::default();
        for r in reports {
            if r.pass {
                s.passed += 1;
            } else if r.is_error() {
                s.errored += 1;
            } else {
                s.failed += 1;
            }
        }
        s
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0 && self.errored == 0
    }
}

pub fn summary_line(reports: &[VerificationReport]) -> String {
    let s = Summary::of(reports);
    format!("passed {} / failed {} / errored {}", s.passed, s.failed, s.errored)
}

fn sci(v: Option<f64>) -> String {
    v.map_or_else(|| "-".to_string(), |x| format!("{x:.2e}"))
}

fn full(v: Option<f64>) -> String {
    v.map_or_else(String::new, |x| format!("{x:e}"))
}

/// One aligned line per report, then the summary line.
pub fn to_text(reports: &[VerificationReport]) -> String {
    let rows: Vec<(String, String, String)> = reports
        .iter()
        .map(|r| {
            let status = if r.pass {
                "PASS"
            } else if r.is_error() {
                "ERROR"
            } else {
                "FAIL"
            };
            let detail = match &r.error {
                Some(e) => e.clone(),
                None => format!("abs {}  rel {}", sci(r.abs_residual), sci(r.rel_residual)),
            };
            (format!("{status:<5} {}", r.identity_id), BindingDisplay(&r.binding).to_string(), detail)
        })
        .collect();
    let w0 = rows.iter().map(|r| r.0.len()).max().unwrap_or(0);
    let w1 = rows.iter().map(|r| r.1.len()).max().unwrap_or(0);
    let mut out = String::new();
    for (a, b, c) in rows {
        let _ = writeln!(out, "{a:<w0$}  {b:<w1$}  {c}");
    }
    out.push_str(&summary_line(reports));
    out.push('\n');
    out
}

pub fn to_json(reports: &[VerificationReport]) -> Result<String, RegistryError> {
    serde_json::to_string_pretty(reports).map_err(|e| RegistryError::Catalog(e.to_string()))
}

pub fn to_csv(reports: &[VerificationReport]) -> Result<String, RegistryError> {
    let err = |e: csv::Error| RegistryError::Catalog(e.to_string());
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["id", "binding", "lhs", "rhs", "abs_residual", "rel_residual", "pass"]).map_err(err)?;
    for r in reports {
        w.write_record([
            r.identity_id.clone(),
            BindingDisplay(&r.binding).to_string(),
            full(r.lhs.map(|v| v.value)),
            full(r.rhs.map(|v| v.value)),
            full(r.abs_residual),
            full(r.rel_residual),
            r.pass.to_string(),
        ])
        .map_err(err)?;
    }
    let bytes = w.into_inner().map_err(|e| RegistryError::Catalog(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| RegistryError::Catalog(e.to_string()))
}
