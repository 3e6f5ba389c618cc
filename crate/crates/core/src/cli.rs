//! Command-line front end of the verifier. Kept in the library so tests can
//! drive it with their own catalog and evaluator.

use std::collections::BTreeSet;

use clap::{Parser, ValueEnum};

use crate::registry::{
    summary_line, to_csv, to_json, to_text, Binding, Catalog, Evaluator, IdentityRecord, RegistryError,
    Summary, ToleranceConfig, VerificationReport,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Verify catalogued identities by computing both sides independently.
#[derive(Debug, Clone, Parser)]
#[command(name = "verify", version)]
pub struct RunConfig {
    /// Identity to check (repeatable).
    #[arg(long = "id")]
    pub ids: Vec<String>,
    /// Check every identity whose id or printed reference contains this.
    #[arg(long)]
    pub filter: Option<String>,
    /// Check the whole catalog.
    #[arg(long)]
    pub all: bool,
    /// List matching identities instead of checking them.
    #[arg(long)]
    pub list: bool,
    #[arg(long, default_value_t = 1e-9)]
    pub rtol: f64,
    #[arg(long, default_value_t = 1e-12)]
    pub atol: f64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Stop at the first entry that does not pass.
    #[arg(long)]
    pub fail_fast: bool,
    /// Parameter override `name=value` (repeatable). With every parameter
    /// given this checks one binding, otherwise it is applied to each
    /// default-grid binding.
    #[arg(long = "param", value_parser = parse_param)]
    pub params: Vec<(String, f64)>,
}

fn parse_param(s: &str) -> Result<(String, f64), String> {
    let (k, v) = s.split_once('=').ok_or_else(|| format!("expected name=value, got {s:?}"))?;
    let v: f64 = v.trim().parse().map_err(|e| format!("bad value in {s:?}: {e}"))?;
    Ok((k.trim().to_string(), v))
}

/// Exit status, captured output and error text of one run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: impl Into<String>) -> Self {
        Self { code: 2, stdout: String::new(), stderr: msg.into() }
    }
}

/// Parses `args` (program name first) and runs. Exit code 0 when every
/// checked entry passes, 1 when some fail or error, 2 on usage errors.
pub fn run<I, T>(args: I, catalog: &Catalog, evaluator: &dyn Evaluator) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match RunConfig::try_parse_from(args) {
        Ok(cfg) => run_config(&cfg, catalog, evaluator),
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome::usage(text)
            }
        }
    }
}

pub fn run_config(cfg: &RunConfig, catalog: &Catalog, evaluator: &dyn Evaluator) -> Outcome {
    let tol = match ToleranceConfig::new(cfg.rtol, cfg.atol) {
        Ok(t) => t,
        Err(e) => return Outcome::usage(format!("{e}\n")),
    };
    let records = match select(cfg, catalog) {
        Ok(r) => r,
        Err(e) => return Outcome::usage(format!("{e}\n")),
    };
    if cfg.list {
        return Outcome { code: 0, stdout: listing(&records, cfg.format), stderr: String::new() };
    }
    if records.is_empty() {
        return Outcome::usage("no identity selected; use --id, --filter or --all\n");
    }

    let reports = if cfg.params.is_empty() {
        if cfg.fail_fast {
            catalog.verify_records_until_failure(evaluator, &records, tol)
        } else {
            catalog.verify_records(evaluator, &records, tol)
        }
    } else {
        let mut out = Vec::new();
        for r in &records {
            let bindings = match overridden_bindings(r, &cfg.params) {
                Ok(b) => b,
                Err(e) => return Outcome::usage(format!("{e}\n")),
            };
            for b in bindings {
                let rep = match catalog.evaluate_with(evaluator, &r.id, &b, tol) {
                    Ok(rep) => rep,
                    Err(RegistryError::BindingOutOfDomain(msg)) => return Outcome::usage(format!("binding out of domain: {msg}\n")),
                    Err(e) => VerificationReport {
                        identity_id: r.id.clone(),
                        binding: b,
                        lhs: None,
                        rhs: None,
                        abs_residual: None,
                        rel_residual: None,
                        pass: false,
                        tolerances: tol,
                        error: Some(e.to_string()),
                    },
                };
                let stop = cfg.fail_fast && !rep.pass;
                out.push(rep);
                if stop {
                    break;
                }
            }
            if cfg.fail_fast && out.last().is_some_and(|r| !r.pass) {
                break;
            }
        }
        out
    };

    let stdout = match cfg.format {
        Format::Text => Ok(to_text(&reports)),
        Format::Json => to_json(&reports).map(|s| s + "\n"),
        Format::Csv => to_csv(&reports),
    };
    let stdout = match stdout {
        Ok(s) => s,
        Err(e) => return Outcome { code: 1, stdout: String::new(), stderr: format!("{e}\n") },
    };
    let summary = Summary::of(&reports);
    let stderr = if cfg.format == Format::Text { String::new() } else { summary_line(&reports) + "\n" };
    Outcome { code: if summary.all_passed() { 0 } else { 1 }, stdout, stderr }
}

fn select<'a>(cfg: &RunConfig, catalog: &'a Catalog) -> Result<Vec<&'a IdentityRecord>, RegistryError> {
    let mut ids = BTreeSet::new();
    for id in &cfg.ids {
        ids.insert(catalog.get(id)?.id.as_str());
    }
    if let Some(f) = &cfg.filter {
        ids.extend(catalog.list(Some(f)).into_iter().map(|r| r.id.as_str()));
    }
    if cfg.all || (cfg.list && cfg.ids.is_empty() && cfg.filter.is_none()) {
        ids.extend(catalog.records().iter().map(|r| r.id.as_str()));
    }
    ids.into_iter().map(|id| catalog.get(id)).collect()
}

fn overridden_bindings(record: &IdentityRecord, params: &[(String, f64)]) -> Result<Vec<Binding>, RegistryError> {
    for (k, _) in params {
        if !record.params.iter().any(|p| &p.name == k) {
            return Err(RegistryError::BindingOutOfDomain(format!("{} has no parameter {k:?}", record.id)));
        }
    }
    let complete = record.params.iter().all(|p| params.iter().any(|(k, _)| k == &p.name));
    let apply = |mut b: Binding| {
        for (k, v) in params {
            b.insert(k.clone(), *v);
        }
        b
    };
    if complete {
        return Ok(vec![apply(Binding::new())]);
    }
    let mut seen = Vec::new();
    for b in &record.default_grid {
        let b = apply(b.clone());
        if !seen.contains(&b) {
            seen.push(b);
        }
    }
    Ok(seen)
}

fn listing(records: &[&IdentityRecord], format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(records).unwrap_or_default() + "\n",
        Format::Csv => {
            let mut s = String::from("id,paper_eq,params,grid_size,corrected_from_paper\n");
            for r in records {
                let names: Vec<&str> = r.params.iter().map(|p| p.name.as_str()).collect();
                s.push_str(&format!(
                    "{},\"{}\",{},{},{}\n",
                    r.id,
                    r.paper_eq,
                    names.join(" "),
                    r.default_grid.len(),
                    r.corrected_from_paper
                ));
            }
            s
        }
        Format::Text => {
            let w = records.iter().map(|r| r.id.len()).max().unwrap_or(0);
            let mut s = String::new();
            for r in records {
                let flag = if r.corrected_from_paper { " [corrected]" } else { "" };
                s.push_str(&format!("{:<w$}  {:<12}  {}{flag}\n", r.id, r.paper_eq, r.description));
            }
            s
        }
    }
}
