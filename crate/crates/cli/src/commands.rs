//! Subcommand execution and record assembly.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::time::Instant;

use kmittag_core::identities::{IdentityReport, Status, VerifyConfig};
use rayon::prelude::*;

use crate::config::{CommandKind, Format, ParamMap, RunConfig};
use crate::error::{exit, CliError};
use crate::fixtures::{self, SELFTEST_TOL};
use crate::record::{write_csv, write_json, Record};
use crate::registry::{evaluate, verify, Diagnostics, Function, IdentityTag};

/// Records produced by a run, plus the summary and exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub records: Vec<Record>,
    pub summary: Option<Record>,
    pub exit_code: i32,
    /// Reported on `stderr` after the records are written.
    pub error: Option<CliError>,
}

fn header(record_type: &str) -> Record {
    let mut r = Record::new();
    r.push("record_type", record_type)
        .push("version", kmittag_core::VERSION);
    r
}

fn push_params(r: &mut Record, params: &ParamMap) {
    for (k, v) in params {
        r.push(format!("param_{k}"), *v);
    }
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn eval_record(function: Function, index: usize, params: &ParamMap, value: f64, diag: Diagnostics, ms: f64) -> Record {
    let mut r = header("eval");
    r.push("function", function.name()).push("grid_index", index);
    push_params(&mut r, params);
    r.push("value", value)
        .push("converged", diag.converged)
        .push("terms_used", diag.terms_used)
        .push("evaluations", diag.evaluations)
        .push("error_estimate", diag.error_estimate)
        .push("wall_time_ms", ms);
    r
}

fn invalid_record(record_type: &str, tag: &str, index: usize, params: &ParamMap, err: &CliError, ms: f64) -> Record {
    let mut r = header(record_type);
    r.push(if record_type == "eval" { "function" } else { "identity" }, tag)
        .push("grid_index", index);
    push_params(&mut r, params);
    r.push("status", "invalid")
        .push("error", err.to_string())
        .push("wall_time_ms", ms);
    r
}

pub fn report_record(report: &IdentityReport, index: usize, params: &ParamMap, ms: f64) -> Record {
    let mut r = header("report");
    r.push("identity", report.identity.tag())
        .push("parent", report.parent.tag())
        .push("label", report.label)
        .push("grid_index", index);
    push_params(&mut r, params);
    r.push("status", report.status.as_str())
        .push("k", report.k)
        .push("lhs", report.lhs.value)
        .push("lhs_error_estimate", report.lhs.abs_error_estimate)
        .push("lhs_evaluations", report.lhs.evaluations)
        .push("lhs_converged", report.lhs.converged)
        .push("rhs", report.rhs.value)
        .push("rhs_outer_terms", report.rhs.outer_terms)
        .push("rhs_inner_terms", report.rhs.inner_terms)
        .push("rhs_truncation_estimate", report.rhs.truncation_estimate)
        .push("rhs_converged", report.rhs.converged)
        .push("abs_err", report.abs_err)
        .push("rel_err", report.rel_err)
        .push("ratio", report.ratio)
        .push("tolerance", report.tolerance);
    let exponent = report.exponent;
    r.push("exponent", exponent.map(|e| e.convention.as_str()))
        .push("exponent_literal_rel_err", exponent.map(|e| e.literal_rel_err))
        .push("exponent_minus1_rel_err", exponent.map(|e| e.minus_one_rel_err))
        .push("exponent_matched", exponent.map(|e| e.matched.as_str()))
        .push("printed_rhs", report.printed_rhs)
        .push("wall_time_ms", ms);
    r
}

#[derive(Debug, Default, Clone, Copy)]
struct Tally {
    reports: usize,
    verified: usize,
    flagged_factor_k: usize,
    asymptotic_only: usize,
    failed: usize,
    invalid: usize,
}

impl Tally {
    fn add(&mut self, status: Status) {
        self.reports += 1;
        match status {
            Status::Verified => self.verified += 1,
            Status::FlaggedFactorK => self.flagged_factor_k += 1,
            Status::AsymptoticOnly => self.asymptotic_only += 1,
            Status::Failed => self.failed += 1,
        }
    }

    fn exit_code(&self) -> i32 {
        if self.failed > 0 {
            exit::FAILED_REPORT
        } else if self.invalid > 0 {
            exit::USAGE
        } else {
            exit::OK
        }
    }
}

fn run_eval(cfg: &RunConfig, function: Function) -> Result<Output, CliError> {
    let points = cfg.points();
    let single = cfg.grid.is_empty();
    let rows: Vec<Result<Record, CliError>> = points
        .par_iter()
        .enumerate()
        .map(|(i, (params, _))| {
            let start = Instant::now();
            match evaluate(function, params, cfg.tol) {
                Ok((value, diag, resolved)) => Ok(eval_record(function, i, &resolved, value, diag, elapsed_ms(start))),
                Err(e) if single => Err(e),
                Err(e) => Ok(invalid_record(
                    "eval",
                    function.name(),
                    i,
                    params,
                    &e,
                    elapsed_ms(start),
                )),
            }
        })
        .collect();
    let records = rows.into_iter().collect::<Result<Vec<_>, _>>()?;
    let invalid = records.iter().filter(|r| r.get("status").is_some()).count();
    Ok(Output {
        records,
        summary: None,
        exit_code: if invalid > 0 { exit::USAGE } else { exit::OK },
        error: None,
    })
}

fn run_verify(cfg: &RunConfig, tag: IdentityTag, tag_text: &str) -> Result<Output, CliError> {
    let mut base = VerifyConfig {
        tol: cfg.tol,
        ..VerifyConfig::default()
    };
    if let Some(p) = cfg.r_policy {
        base.r_policy = p;
    }
    if let Some(e) = cfg.exponent {
        base.exponent = e;
    }
    let start_all = Instant::now();
    let points = cfg.points();
    let single = cfg.grid.is_empty();
    let rows: Vec<Result<Vec<Record>, CliError>> = points
        .par_iter()
        .enumerate()
        .map(|(i, (params, _))| {
            let start = Instant::now();
            match verify(tag, params, &base) {
                Ok(reports) => {
                    let ms = elapsed_ms(start);
                    Ok(reports
                        .iter()
                        .map(|(r, resolved)| report_record(r, i, resolved, ms))
                        .collect())
                }
                Err(e) if single => Err(e),
                Err(e) => Ok(vec![invalid_record(
                    "report",
                    tag_text,
                    i,
                    params,
                    &e,
                    elapsed_ms(start),
                )]),
            }
        })
        .collect();
    let records: Vec<Record> = rows
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();

    let mut tally = Tally::default();
    for r in &records {
        match r.get("status") {
            Some(crate::record::Value::Str(s)) => match s.as_str() {
                "verified" => tally.add(Status::Verified),
                "flagged_factor_k" => tally.add(Status::FlaggedFactorK),
                "asymptotic_only" => tally.add(Status::AsymptoticOnly),
                "failed" => tally.add(Status::Failed),
                _ => tally.invalid += 1,
            },
            _ => tally.invalid += 1,
        }
    }
    let mut summary = header("summary");
    summary
        .push("identity", tag_text)
        .push("points", points.len())
        .push("reports", tally.reports)
        .push("verified", tally.verified)
        .push("flagged_factor_k", tally.flagged_factor_k)
        .push("asymptotic_only", tally.asymptotic_only)
        .push("failed", tally.failed)
        .push("invalid", tally.invalid)
        .push("wall_time_ms", elapsed_ms(start_all));
    Ok(Output {
        records,
        summary: Some(summary),
        exit_code: tally.exit_code(),
        error: None,
    })
}

fn run_selftest(cfg: &RunConfig) -> Result<Output, CliError> {
    let path = cfg.fixtures.clone().unwrap_or_else(fixtures::default_path);
    let start_all = Instant::now();
    let entries = fixtures::load(&path)?;
    let checks: Vec<(Result<fixtures::FixtureCheck, CliError>, f64)> = entries
        .par_iter()
        .map(|f| {
            let start = Instant::now();
            (fixtures::check(f), elapsed_ms(start))
        })
        .collect();

    let mut records = Vec::new();
    let mut offending = Vec::new();
    let mut max_dev: f64 = 0.0;
    for (fixture, (check, ms)) in entries.iter().zip(checks) {
        let mut r = header("fixture");
        r.push("id", fixture.id.as_str())
            .push("function", fixture.function.as_str());
        push_params(&mut r, &fixture.parameters);
        r.push("expected", fixture.value);
        match check {
            Ok(c) => {
                max_dev = max_dev.max(c.rel_deviation);
                if !c.passed() {
                    offending.push(c.id.clone());
                }
                r.push("computed", c.computed)
                    .push("rel_deviation", c.rel_deviation)
                    .push("pass", c.passed());
            }
            Err(e) => {
                max_dev = f64::INFINITY;
                offending.push(fixture.id.clone());
                r.push("pass", false).push("error", e.to_string());
            }
        }
        r.push("wall_time_ms", ms);
        records.push(r);
    }
    let pass = offending.is_empty();
    let error = (!pass).then(|| CliError::FixtureMismatch(offending.clone()));
    let mut summary = header("selftest");
    summary
        .push("fixtures", path.display().to_string())
        .push("entries", entries.len())
        .push("max_rel_deviation", max_dev)
        .push("tolerance", SELFTEST_TOL)
        .push("pass", pass)
        .push("offending", offending.join(";"))
        .push("wall_time_ms", elapsed_ms(start_all));
    Ok(Output {
        records,
        summary: Some(summary),
        exit_code: if pass { exit::OK } else { exit::FIXTURE },
        error,
    })
}

/// Runs the configured command without writing anything.
pub fn execute(cfg: &RunConfig) -> Result<Output, CliError> {
    match cfg.command {
        CommandKind::Eval => run_eval(cfg, cfg.tag.parse()?),
        CommandKind::Verify => run_verify(cfg, cfg.tag.parse()?, &cfg.tag),
        CommandKind::Sweep => match cfg.tag.parse::<Function>() {
            Ok(function) => run_eval(cfg, function),
            Err(_) => match cfg.tag.parse::<IdentityTag>() {
                Ok(tag) => run_verify(cfg, tag, &cfg.tag),
                Err(_) => Err(CliError::Usage(format!("unknown function or identity `{}`", cfg.tag))),
            },
        },
        CommandKind::Selftest => run_selftest(cfg),
    }
}

/// Serializes `output` per the configured format. In JSON the summary is the
/// last array element; in CSV it goes to `stderr` as a JSON line.
pub fn write_output(cfg: &RunConfig, output: &Output) -> Result<(), CliError> {
    let sink: Box<dyn Write> = match &cfg.output_path {
        Some(path) => Box::new(File::create(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?),
        None => Box::new(io::stdout().lock()),
    };
    let mut sink = BufWriter::new(sink);
    match cfg.format {
        Format::Json => {
            let mut all = output.records.clone();
            all.extend(output.summary.clone());
            write_json(&mut sink, &all)?;
        }
        Format::Csv => {
            write_csv(&mut sink, &output.records)?;
            if let Some(summary) = &output.summary {
                eprintln!("{}", summary.to_json());
            }
        }
    }
    sink.flush().map_err(|e| CliError::Io(e.to_string()))
}

/// Executes, writes and returns the process exit code. Errors go to `stderr`.
pub fn run(cfg: &RunConfig) -> i32 {
    let result = execute(cfg).and_then(|output| {
        write_output(cfg, &output)?;
        if let Some(e) = &output.error {
            eprintln!("kmittag {}: error: {e}", cfg.command.as_str());
        }
        Ok(output.exit_code)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("kmittag {}: error: {e}", cfg.command.as_str());
            e.exit_code()
        }
    }
}
