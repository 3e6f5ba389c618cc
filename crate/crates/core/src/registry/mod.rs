//! Catalog of identities, each checked by computing both sides through
//! different pipelines, plus the verification engine and report writers.
//!
//! Record metadata (domains, default grids, correction notes) lives in
//! `data/catalog.json`; evaluator bodies are compiled in and keyed by id.

mod evaluators;
mod forms;
mod report;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::quad::{EvalResult, QuadError};
use crate::sfcore::SfError;
use crate::sumacc::SeriesError;
use crate::transcendent::TranscendentError;

pub use report::{summary_line, to_csv, to_json, to_text, Summary};

const CATALOG_JSON: &str = include_str!("../../data/catalog.json");

/// Named parameter values, ordered by name so output is deterministic.
pub type Binding = BTreeMap<String, f64>;

/// Left- and right-hand side of one identity at one binding.
pub type Sides = (EvalResult, EvalResult);

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RegistryError {
    #[error("unknown identity {0:?}")]
    UnknownId(String),
    #[error("binding out of domain: {0}")]
    BindingOutOfDomain(String),
    #[error("invalid tolerance: {0}")]
    InvalidTolerance(String),
    #[error("catalog is malformed: {0}")]
    Catalog(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Transcendent(#[from] TranscendentError),
    #[error(transparent)]
    Quad(#[from] QuadError),
    #[error(transparent)]
    Special(#[from] SfError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LhsKind {
    UnitIntegral,
    HalflineIntegral,
    Series,
    TranscendentRelation,
    Constant,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RhsKind {
    ClosedForm,
    Series,
    Integral,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ParamType {
    Real,
    Integer,
}

/// Domain of one named parameter. Bounds are inclusive unless `exclusive`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamDomain {
    pub name: String,
    #[serde(rename = "type")]
    pub kind: ParamType,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max: Option<f64>,
    #[serde(default)]
    pub exclusive: bool,
    /// Constraint checked by the evaluator, e.g. "gcd(m,n) = 1".
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub constraint: String,
}

impl ParamDomain {
    fn check(&self, v: f64) -> Result<(), String> {
        if !v.is_finite() {
            return Err(format!("{} = {v} is not finite", self.name));
        }
        if self.kind == ParamType::Integer && v.fract() != 0.0 {
            return Err(format!("{} = {v} must be an integer", self.name));
        }
        let below = |lo: f64| if self.exclusive { v <= lo } else { v < lo };
        let above = |hi: f64| if self.exclusive { v >= hi } else { v > hi };
        if self.min.is_some_and(below) || self.max.is_some_and(above) {
            let (l, r) = if self.exclusive { ("(", ")") } else { ("[", "]") };
            let lo = self.min.map_or("-inf".to_string(), |x| x.to_string());
            let hi = self.max.map_or("inf".to_string(), |x| x.to_string());
            return Err(format!("{} = {v} outside {l}{lo}, {hi}{r}", self.name));
        }
        Ok(())
    }
}

/// One catalogued identity.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdentityRecord {
    pub id: String,
    pub paper_eq: String,
    pub description: String,
    pub params: Vec<ParamDomain>,
    pub lhs_kind: LhsKind,
    pub rhs_kind: RhsKind,
    pub corrected_from_paper: bool,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub correction_note: String,
    /// Engine and integrand used for each side; the independence audit
    /// requires these to differ.
    pub lhs_pipeline: String,
    pub rhs_pipeline: String,
    pub default_grid: Vec<Binding>,
}

impl IdentityRecord {
    /// Checks that `binding` names exactly the declared parameters and that
    /// each value lies in its domain.
    pub fn check_binding(&self, binding: &Binding) -> Result<(), RegistryError> {
        for key in binding.keys() {
            if !self.params.iter().any(|p| &p.name == key) {
                return Err(RegistryError::BindingOutOfDomain(format!("{} has no parameter {key:?}", self.id)));
            }
        }
        for p in &self.params {
            let v = binding
                .get(&p.name)
                .ok_or_else(|| RegistryError::BindingOutOfDomain(format!("{} needs parameter {:?}", self.id, p.name)))?;
            p.check(*v).map_err(|e| RegistryError::BindingOutOfDomain(format!("{}: {e}", self.id)))?;
        }
        Ok(())
    }
}

/// Relative and absolute tolerances for pass/fail.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ToleranceConfig {
    pub rtol: f64,
    pub atol: f64,
}

impl ToleranceConfig {
    pub const MIN_RTOL: f64 = 1e-14;
    pub const MIN_ATOL: f64 = 1e-15;

    pub fn new(rtol: f64, atol: f64) -> Result<Self, RegistryError> {
        if !(rtol.is_finite() && rtol >= Self::MIN_RTOL) {
            return Err(RegistryError::InvalidTolerance(format!("rtol must be >= {:e}, got {rtol}", Self::MIN_RTOL)));
        }
        if !(atol.is_finite() && atol >= Self::MIN_ATOL) {
            return Err(RegistryError::InvalidTolerance(format!("atol must be >= {:e}, got {atol}", Self::MIN_ATOL)));
        }
        Ok(Self { rtol, atol })
    }

    /// Absolute error target handed to the evaluators: an order below the
    /// pass threshold of an O(1) value, never below 1e-13.
    pub fn work_target(&self) -> f64 {
        (self.rtol / 10.0).min(self.atol).max(1e-13)
    }

    fn threshold(&self, rhs: f64) -> f64 {
        self.atol.max(self.rtol * rhs.abs())
    }
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self { rtol: 1e-9, atol: 1e-12 }
    }
}

/// Result of checking one identity at one binding.
///
/// `lhs`, `rhs` and the residuals are absent when evaluation failed;
/// `error` then says why.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity_id: String,
    pub binding: Binding,
    pub lhs: Option<EvalResult>,
    pub rhs: Option<EvalResult>,
    pub abs_residual: Option<f64>,
    pub rel_residual: Option<f64>,
    pub pass: bool,
    pub tolerances: ToleranceConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl VerificationReport {
    /// Builds a report from computed sides. `rel_residual` is taken
    /// against |rhs|, or equals `abs_residual` when rhs is exactly zero.
    pub fn from_sides(id: &str, binding: Binding, sides: Sides, tol: ToleranceConfig) -> Self {
        let (lhs, rhs) = sides;
        let abs = (lhs.value - rhs.value).abs();
        let rel = if rhs.value == 0.0 { abs } else { abs / rhs.value.abs() };
        let pass = abs <= tol.threshold(rhs.value) && lhs.converged && rhs.converged;
        Self {
            identity_id: id.to_string(),
            binding,
            lhs: Some(lhs),
            rhs: Some(rhs),
            abs_residual: Some(abs),
            rel_residual: Some(rel),
            pass,
            tolerances: tol,
            error: None,
        }
    }

    fn from_error(id: &str, binding: Binding, err: &RegistryError, tol: ToleranceConfig) -> Self {
        Self {
            identity_id: id.to_string(),
            binding,
            lhs: None,
            rhs: None,
            abs_residual: None,
            rel_residual: None,
            pass: false,
            tolerances: tol,
            error: Some(err.to_string()),
        }
    }

    pub fn is_error(&self) -> bool {
        self.error.is_some()
    }
}

/// Computes both sides of a record at a binding with the given work target.
pub trait Evaluator: Sync {
    fn sides(&self, record: &IdentityRecord, binding: &Binding, target: f64) -> Result<Sides, RegistryError>;
}

/// The compiled-in evaluators.
#[derive(Debug, Clone, Copy, Default)]
pub struct Builtin;

impl Evaluator for Builtin {
    fn sides(&self, record: &IdentityRecord, binding: &Binding, target: f64) -> Result<Sides, RegistryError> {
        evaluators::evaluate(&record.id, binding, target)
    }
}

impl<F> Evaluator for F
where
    F: Fn(&IdentityRecord, &Binding, f64) -> Result<Sides, RegistryError> + Sync,
{
    fn sides(&self, record: &IdentityRecord, binding: &Binding, target: f64) -> Result<Sides, RegistryError> {
        self(record, binding, target)
    }
}

/// An immutable, validated set of records sorted by id.
#[derive(Debug, Clone)]
pub struct Catalog {
    records: Vec<IdentityRecord>,
}

impl Catalog {
    /// Parses and validates a catalog document.
    pub fn from_json(text: &str) -> Result<Self, RegistryError> {
        let mut records: Vec<IdentityRecord> = serde_json::from_str(text).map_err(|e| RegistryError::Catalog(e.to_string()))?;
        records.sort_by(|a, b| a.id.cmp(&b.id));
        for w in records.windows(2) {
            if w[0].id == w[1].id {
                return Err(RegistryError::Catalog(format!("duplicate id {:?}", w[0].id)));
            }
        }
        for r in &records {
            if r.corrected_from_paper && r.correction_note.trim().is_empty() {
                return Err(RegistryError::Catalog(format!("{} is flagged corrected without a note", r.id)));
            }
            if r.lhs_pipeline == r.rhs_pipeline {
                return Err(RegistryError::Catalog(format!("{} computes both sides through {}", r.id, r.lhs_pipeline)));
            }
            if r.default_grid.is_empty() {
                return Err(RegistryError::Catalog(format!("{} has an empty default grid", r.id)));
            }
            for b in &r.default_grid {
                r.check_binding(b).map_err(|e| RegistryError::Catalog(e.to_string()))?;
            }
        }
        Ok(Self { records })
    }

    /// The embedded catalog.
    pub fn builtin() -> &'static Catalog {
        static CATALOG: OnceLock<Catalog> = OnceLock::new();
        CATALOG.get_or_init(|| Catalog::from_json(CATALOG_JSON).expect("embedded catalog is valid"))
    }

    pub fn records(&self) -> &[IdentityRecord] {
        &self.records
    }

    pub fn get(&self, id: &str) -> Result<&IdentityRecord, RegistryError> {
        self.records
            .binary_search_by(|r| r.id.as_str().cmp(id))
            .map(|i| &self.records[i])
            .map_err(|_| RegistryError::UnknownId(id.to_string()))
    }

    /// Records whose id or printed reference contains `filter`, by id.
    pub fn list(&self, filter: Option<&str>) -> Vec<&IdentityRecord> {
        self.records
            .iter()
            .filter(|r| filter.is_none_or(|f| r.id.contains(f) || r.paper_eq.contains(f)))
            .collect()
    }

    /// Evaluates one record at one binding with `evaluator`.
    pub fn evaluate_with(
        &self,
        evaluator: &dyn Evaluator,
        id: &str,
        binding: &Binding,
        tol: ToleranceConfig,
    ) -> Result<VerificationReport, RegistryError> {
        let record = self.get(id)?;
        record.check_binding(binding)?;
        let sides = evaluator.sides(record, binding, tol.work_target())?;
        Ok(VerificationReport::from_sides(id, binding.clone(), sides, tol))
    }

    /// Every (record, grid binding) pair in `ids`, as a flat job list.
    fn jobs<'a>(&'a self, records: &[&'a IdentityRecord]) -> Vec<(&'a IdentityRecord, &'a Binding)> {
        records.iter().flat_map(|r| r.default_grid.iter().map(move |b| (*r, b))).collect()
    }

    fn run_job(evaluator: &dyn Evaluator, record: &IdentityRecord, binding: &Binding, tol: ToleranceConfig) -> VerificationReport {
        let out = record
            .check_binding(binding)
            .and_then(|_| evaluator.sides(record, binding, tol.work_target()));
        match out {
            Ok(sides) => VerificationReport::from_sides(&record.id, binding.clone(), sides, tol),
            Err(e) => VerificationReport::from_error(&record.id, binding.clone(), &e, tol),
        }
    }

    /// Reports for every default-grid binding of the selected records, in
    /// id then grid order. Jobs run on a pool capped by `MALMSTEN_THREADS`.
    pub fn verify_records(&self, evaluator: &dyn Evaluator, records: &[&IdentityRecord], tol: ToleranceConfig) -> Vec<VerificationReport> {
        use rayon::prelude::*;
        let jobs = self.jobs(records);
        let work = || jobs.par_iter().map(|(r, b)| Self::run_job(evaluator, r, b, tol)).collect::<Vec<_>>();
        match thread_cap() {
            Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
                Ok(pool) => pool.install(work),
                Err(_) => work(),
            },
            None => work(),
        }
    }

    /// Like [`Catalog::verify_records`] but sequential, stopping after the
    /// first report that does not pass.
    pub fn verify_records_until_failure(
        &self,
        evaluator: &dyn Evaluator,
        records: &[&IdentityRecord],
        tol: ToleranceConfig,
    ) -> Vec<VerificationReport> {
        let mut out = Vec::new();
        for (r, b) in self.jobs(records) {
            let rep = Self::run_job(evaluator, r, b, tol);
            let stop = !rep.pass;
            out.push(rep);
            if stop {
                break;
            }
        }
        out
    }
}

/// Parallelism cap from `MALMSTEN_THREADS`, if set to a positive integer.
pub fn thread_cap() -> Option<usize> {
    std::env::var("MALMSTEN_THREADS").ok()?.trim().parse::<usize>().ok().filter(|n| *n > 0)
}

/// Records matching `filter` (substring of id or printed reference), by id.
pub fn list_identities(filter: Option<&str>) -> Vec<&'static IdentityRecord> {
    Catalog::builtin().list(filter)
}

/// Checks one identity at one binding with the compiled-in evaluators.
pub fn evaluate_identity(id: &str, binding: &Binding, tol: ToleranceConfig) -> Result<VerificationReport, RegistryError> {
    Catalog::builtin().evaluate_with(&Builtin, id, binding, tol)
}

/// Checks every record over its default grid.
pub fn verify_all(tol: ToleranceConfig) -> Vec<VerificationReport> {
    let cat = Catalog::builtin();
    let all: Vec<&IdentityRecord> = cat.records().iter().collect();
    cat.verify_records(&Builtin, &all, tol)
}

/// `k=v` pairs, comma separated, in key order.
pub struct BindingDisplay<'a>(pub &'a Binding);

impl fmt::Display for BindingDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, v) in self.0 {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binding(pairs: &[(&str, f64)]) -> Binding {
        pairs.iter().map(|(k, v)| (k.to_string(), *v)).collect()
    }

    #[test]
    fn domains() {
        let d = ParamDomain { name: "s".into(), kind: ParamType::Real, min: Some(0.0), max: Some(1.0), exclusive: true, constraint: String::new() };
        assert!(d.check(0.5).is_ok());
        assert!(d.check(0.0).is_err());
        assert!(d.check(f64::NAN).is_err());
        let n = ParamDomain { name: "n".into(), kind: ParamType::Integer, min: Some(2.0), max: None, exclusive: false, constraint: String::new() };
        assert!(n.check(2.0).is_ok());
        assert!(n.check(2.5).is_err());
    }

    #[test]
    fn tolerance_floor() {
        assert!(ToleranceConfig::new(1e-15, 1e-12).is_err());
        assert!(ToleranceConfig::new(1e-9, 0.0).is_err());
        assert_eq!(ToleranceConfig::default().work_target(), 1e-12);
        assert_eq!(ToleranceConfig::new(1e-14, 1e-15).unwrap().work_target(), 1e-13);
    }

    #[test]
    fn report_invariants() {
        let tol = ToleranceConfig::default();
        let r = VerificationReport::from_sides("x", Binding::new(), (EvalResult::exact(1.0), EvalResult::exact(1.0 + 5e-10)), tol);
        assert!(r.pass);
        let r = VerificationReport::from_sides("x", Binding::new(), (EvalResult::exact(1.0), EvalResult::exact(1.0 + 2e-9)), tol);
        assert!(!r.pass);
        let mut lhs = EvalResult::exact(1.0);
        lhs.converged = false;
        let r = VerificationReport::from_sides("x", Binding::new(), (lhs, EvalResult::exact(1.0)), tol);
        assert!(!r.pass);
    }

    #[test]
    fn binding_display_is_sorted() {
        let b = binding(&[("x", 0.5), ("m", 1.0), ("n", 3.0)]);
        assert_eq!(BindingDisplay(&b).to_string(), "m=1,n=3,x=0.5");
    }
}
