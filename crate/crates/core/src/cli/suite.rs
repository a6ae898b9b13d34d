//! Suite configs, concurrent execution, and report emission.

use std::fmt::Write as _;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::engine::{evaluate_with, InequalityReport, InequalityVerdict, Problem, TheoremId, Variant};
use crate::error::{Error, Result};
use crate::falsifier::{falsify_with, FalsificationResult, FalsifyOptions, SearchSpace};
use crate::functions::{check_class, make_function, Interval};
use crate::kernels::{kernel_properties, make_kernel};
use crate::means::{verify_chain, verify_proposition, ChainReport};
use crate::quadrature::Moment;
use crate::sampling::{PropertyId, PropertyReport, Sampler, Verdict};

/// Environment variable capping the number of worker threads.
pub const WORKERS_ENV: &str = "HHAUDIT_WORKERS";

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_SAMPLES: usize = 1000;
pub const DEFAULT_BUDGET: u64 = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    #[default]
    Json,
    Csv,
    Text,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            _ => Err(Error::parse(s, "format must be json, csv or text")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Command {
    /// One inequality (theorems and propositions).
    Check,
    /// One sampled property of a kernel or function.
    Property,
    Falsify,
    /// The means chain on `[a, b]`.
    Chain,
}

impl Command {
    fn as_str(self) -> &'static str {
        match self {
            Command::Check => "check",
            Command::Property => "property",
            Command::Falsify => "falsify",
            Command::Chain => "chain",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Job {
    pub command: Command,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theorem: Option<TheoremId>,
    #[serde(default)]
    pub variant: Variant,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub property: Option<PropertyId>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<i32>,
    /// Search space for `falsify`; defaults to the theorem's built-in space.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub space: Option<SearchSpace>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub samples: Option<usize>,
}

impl Job {
    pub fn new(command: Command) -> Self {
        Job {
            command,
            theorem: None,
            variant: Variant::Stated,
            f: None,
            g: None,
            h: None,
            property: None,
            a: None,
            b: None,
            n: None,
            space: None,
            tol: None,
            seed: None,
            budget: None,
            samples: None,
        }
    }

    /// A `check` job for a theorem instance.
    pub fn check(theorem: TheoremId, variant: Variant, f: &str, g: &str, h: &str, a: f64, b: f64) -> Self {
        Job {
            theorem: Some(theorem),
            variant,
            f: Some(f.into()),
            g: Some(g.into()),
            h: Some(h.into()),
            a: Some(a),
            b: Some(b),
            ..Job::new(Command::Check)
        }
    }

    /// A `check` job for a special-means proposition.
    pub fn proposition(prop: TheoremId, a: f64, b: f64, n: Option<i32>) -> Self {
        Job {
            theorem: Some(prop),
            a: Some(a),
            b: Some(b),
            n,
            ..Job::new(Command::Check)
        }
    }

    pub fn chain(a: f64, b: f64) -> Self {
        Job {
            a: Some(a),
            b: Some(b),
            ..Job::new(Command::Chain)
        }
    }

    pub fn kernel_property(h: &str, property: PropertyId) -> Self {
        Job {
            h: Some(h.into()),
            property: Some(property),
            ..Job::new(Command::Property)
        }
    }

    pub fn falsify(theorem: TheoremId, variant: Variant, space: Option<SearchSpace>, budget: u64) -> Self {
        Job {
            theorem: Some(theorem),
            variant,
            space,
            budget: Some(budget),
            ..Job::new(Command::Falsify)
        }
    }

    /// A short human-readable description of the job.
    pub fn label(&self) -> String {
        let mut s = String::new();
        if let Some(t) = self.theorem {
            let _ = write!(s, "{t}");
            if self.variant == Variant::Derived {
                s.push_str("/derived");
            }
        }
        if let Some(p) = self.property {
            let _ = write!(s, "{p}");
        }
        let specs: Vec<&str> = [&self.f, &self.g, &self.h]
            .into_iter()
            .flatten()
            .map(String::as_str)
            .collect();
        if !specs.is_empty() {
            let _ = write!(s, " {}", specs.join(" "));
        }
        if let (Some(a), Some(b)) = (self.a, self.b) {
            let _ = write!(s, " [{a}, {b}]");
        }
        if let Some(n) = self.n {
            let _ = write!(s, " n={n}");
        }
        s.trim().to_string()
    }

    fn theorem(&self) -> Result<TheoremId> {
        self.theorem
            .ok_or_else(|| Error::Config(format!("{} job needs a theorem", self.command.as_str())))
    }

    fn endpoints(&self) -> Result<(f64, f64)> {
        match (self.a, self.b) {
            (Some(a), Some(b)) => Ok((a, b)),
            _ => Err(Error::Config(format!("{} job needs a and b", self.command.as_str()))),
        }
    }

    fn sampler(&self) -> Sampler {
        Sampler::new(self.seed.unwrap_or(0), self.samples.unwrap_or(DEFAULT_SAMPLES))
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct SuiteConfig {
    #[serde(default)]
    pub jobs: Vec<Job>,
    #[serde(default)]
    pub format: Format,
}

impl SuiteConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// Hex SHA-256 of the canonical JSON form of the config.
    pub fn digest(&self) -> String {
        let canonical = serde_json::to_string(self).expect("configs always serialize");
        hex::encode(Sha256::digest(canonical.as_bytes()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum JobOutcome {
    Inequality {
        report: InequalityReport,
    },
    Property {
        report: PropertyReport,
    },
    Falsification {
        result: FalsificationResult,
    },
    Chain {
        report: ChainReport,
    },
    NonEvaluable {
        theorem: TheoremId,
        moment: Moment,
        message: String,
    },
    Error {
        message: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tally {
    Satisfied,
    Violated,
    Inconclusive,
    NonEvaluable,
    Errored,
}

impl Tally {
    pub fn as_str(self) -> &'static str {
        match self {
            Tally::Satisfied => "satisfied",
            Tally::Violated => "violated",
            Tally::Inconclusive => "inconclusive",
            Tally::NonEvaluable => "non_evaluable",
            Tally::Errored => "error",
        }
    }
}

impl JobOutcome {
    pub fn tally(&self) -> Tally {
        match self {
            JobOutcome::Inequality { report } => match report.verdict {
                InequalityVerdict::Satisfied => Tally::Satisfied,
                InequalityVerdict::Violated => Tally::Violated,
                InequalityVerdict::Inconclusive => Tally::Inconclusive,
            },
            JobOutcome::Property { report } => match report.verdict {
                Verdict::NoViolationFound => Tally::Satisfied,
                Verdict::Violated => Tally::Violated,
            },
            JobOutcome::Falsification { result } => {
                if result.counterexample.is_some() {
                    Tally::Violated
                } else {
                    Tally::Satisfied
                }
            }
            JobOutcome::Chain { report } => {
                if report.holds {
                    Tally::Satisfied
                } else {
                    Tally::Violated
                }
            }
            JobOutcome::NonEvaluable { .. } => Tally::NonEvaluable,
            JobOutcome::Error { .. } => Tally::Errored,
        }
    }

    /// `(lhs, rhs, margin)` for the tabular formats.
    fn numbers(&self) -> (Option<f64>, Option<f64>, Option<f64>) {
        match self {
            JobOutcome::Inequality { report } => (Some(report.lhs), Some(report.rhs), Some(report.margin)),
            JobOutcome::Property { report } => match &report.witness {
                Some(w) => (Some(w.lhs), Some(w.rhs), Some(w.rhs - w.lhs)),
                None => (None, None, None),
            },
            JobOutcome::Falsification { result } => match &result.counterexample {
                Some(c) => (Some(c.lhs), Some(c.rhs), Some(c.rhs - c.lhs)),
                None => (None, None, result.stats.min_margin),
            },
            JobOutcome::Chain { report } => {
                let worst = report.links.iter().map(|l| l.margin).fold(f64::INFINITY, f64::min);
                (None, None, worst.is_finite().then_some(worst))
            }
            _ => (None, None, None),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JobResult {
    pub job: usize,
    pub command: Command,
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theorem: Option<TheoremId>,
    pub variant: Variant,
    pub outcome: JobOutcome,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub satisfied: usize,
    pub violated: usize,
    pub inconclusive: usize,
    pub non_evaluable: usize,
    pub errored: usize,
}

impl Summary {
    pub fn total(&self) -> usize {
        self.satisfied + self.violated + self.inconclusive + self.non_evaluable + self.errored
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub version: String,
    pub config_digest: String,
    pub jobs: Vec<JobResult>,
    pub summary: Summary,
}

impl SuiteReport {
    /// True when some job could not run because its configuration was invalid.
    pub fn has_config_errors(&self) -> bool {
        self.summary.errored > 0
    }

    pub fn exit_code(&self) -> i32 {
        i32::from(self.has_config_errors())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

fn run_check(job: &Job) -> Result<JobOutcome> {
    let theorem = job.theorem()?;
    let (a, b) = job.endpoints()?;
    if theorem.is_proposition() {
        let report = verify_proposition(theorem, a, b, job.n)?;
        return Ok(JobOutcome::Inequality { report });
    }
    let f = job
        .f
        .as_deref()
        .ok_or_else(|| Error::Config("check job needs f".into()))?;
    let g = job.g.as_deref().unwrap_or(f);
    let h = match (job.h.as_deref(), theorem) {
        (Some(h), _) => h,
        (None, TheoremId::Hadamard) => "id",
        (None, _) => return Err(Error::Config("check job needs h".into())),
    };
    let problem = Problem::from_specs(f, g, h, a, b)?;
    let report = evaluate_with(
        theorem,
        job.variant,
        &problem,
        job.tol.unwrap_or(DEFAULT_TOL),
        &job.sampler(),
    )?;
    Ok(JobOutcome::Inequality { report })
}

fn run_property(job: &Job) -> Result<JobOutcome> {
    let property = job
        .property
        .ok_or_else(|| Error::Config("property job needs a property".into()))?;
    let sampler = job.sampler();
    let report = if property.is_kernel_property() {
        let h = job
            .h
            .as_deref()
            .ok_or_else(|| Error::Config(format!("{property} needs h")))?;
        kernel_properties(&make_kernel(h)?, property, &sampler)?
    } else {
        let (a, b) = job.endpoints()?;
        let interval = Interval::new(a, b)?;
        let f = job
            .f
            .as_deref()
            .ok_or_else(|| Error::Config(format!("{property} needs f")))?;
        let f = make_function(f, interval)?;
        let g = job.g.as_deref().map(|g| make_function(g, interval)).transpose()?;
        let h = job.h.as_deref().map(make_kernel).transpose()?;
        check_class(property, &f, g.as_ref(), h.as_ref(), interval, &sampler)?
    };
    Ok(JobOutcome::Property { report })
}

fn run_falsify(job: &Job) -> Result<JobOutcome> {
    let theorem = job.theorem()?;
    let space = match &job.space {
        Some(s) => s.clone(),
        None => SearchSpace::builtin(theorem),
    };
    let mut options = FalsifyOptions::default();
    if let Some(tol) = job.tol {
        options.search_tol = tol;
    }
    if let Some(samples) = job.samples {
        options.samples = samples;
    }
    let result = falsify_with(
        theorem,
        job.variant,
        &space,
        job.budget.unwrap_or(DEFAULT_BUDGET),
        job.seed.unwrap_or(0),
        &options,
    )?;
    Ok(JobOutcome::Falsification { result })
}

fn run_chain(job: &Job) -> Result<JobOutcome> {
    let (a, b) = job.endpoints()?;
    let report = verify_chain(a, b, job.tol.unwrap_or(1e-12))?;
    Ok(JobOutcome::Chain { report })
}

/// Runs a single job; failures become `NonEvaluable` or `Error` outcomes.
pub fn run_job(job: &Job) -> JobOutcome {
    let result = match job.command {
        Command::Check => run_check(job),
        Command::Property => run_property(job),
        Command::Falsify => run_falsify(job),
        Command::Chain => run_chain(job),
    };
    match result {
        Ok(outcome) => outcome,
        Err(Error::NonEvaluable { theorem, moment }) => JobOutcome::NonEvaluable {
            theorem,
            moment,
            message: Error::NonEvaluable { theorem, moment }.to_string(),
        },
        Err(e) => JobOutcome::Error { message: e.to_string() },
    }
}

fn worker_cap() -> Option<usize> {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|n| *n > 0)
}

/// Runs every job, concurrently up to the worker cap, keeping config order.
pub fn run_suite(config: &SuiteConfig) -> SuiteReport {
    let execute = || -> Vec<JobResult> {
        config
            .jobs
            .par_iter()
            .enumerate()
            .map(|(i, job)| JobResult {
                job: i + 1,
                command: job.command,
                label: job.label(),
                theorem: job.theorem,
                variant: job.variant,
                outcome: run_job(job),
            })
            .collect()
    };
    let jobs = match worker_cap().map(|n| rayon::ThreadPoolBuilder::new().num_threads(n).build()) {
        Some(Ok(pool)) => pool.install(execute),
        _ => execute(),
    };
    let mut summary = Summary::default();
    for j in &jobs {
        match j.outcome.tally() {
            Tally::Satisfied => summary.satisfied += 1,
            Tally::Violated => summary.violated += 1,
            Tally::Inconclusive => summary.inconclusive += 1,
            Tally::NonEvaluable => summary.non_evaluable += 1,
            Tally::Errored => summary.errored += 1,
        }
    }
    SuiteReport {
        version: env!("CARGO_PKG_VERSION").to_string(),
        config_digest: config.digest(),
        jobs,
        summary,
    }
}

fn number(x: Option<f64>) -> String {
    x.map(|v| serde_json::to_string(&v).unwrap_or_default())
        .unwrap_or_default()
}

fn emit_csv(report: &SuiteReport) -> Vec<u8> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "job", "command", "theorem", "variant", "lhs", "rhs", "margin", "verdict",
    ])
    .expect("writing to memory");
    for j in &report.jobs {
        let (lhs, rhs, margin) = j.outcome.numbers();
        w.write_record([
            j.job.to_string(),
            j.command.as_str().to_string(),
            j.theorem.map(|t| t.to_string()).unwrap_or_default(),
            j.variant.to_string(),
            number(lhs),
            number(rhs),
            number(margin),
            j.outcome.tally().as_str().to_string(),
        ])
        .expect("writing to memory");
    }
    w.into_inner().expect("flushing to memory")
}

fn emit_text(report: &SuiteReport) -> Vec<u8> {
    let header = ["job", "command", "instance", "lhs", "rhs", "margin", "verdict"];
    let rows: Vec<[String; 7]> = report
        .jobs
        .iter()
        .map(|j| {
            let (lhs, rhs, margin) = j.outcome.numbers();
            let verdict = match &j.outcome {
                JobOutcome::Error { message } => format!("error: {message}"),
                o => o.tally().as_str().to_string(),
            };
            [
                j.job.to_string(),
                j.command.as_str().to_string(),
                j.label.clone(),
                number(lhs),
                number(rhs),
                number(margin),
                verdict,
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &[String]| {
        let padded: Vec<String> = cells.iter().zip(widths).map(|(c, w)| format!("{c:<w$}")).collect();
        out.push_str(padded.join("  ").trim_end());
        out.push('\n');
    };
    line(&header.map(String::from));
    for row in &rows {
        line(row);
    }
    let s = report.summary;
    let _ = writeln!(
        out,
        "\n{} jobs: {} satisfied, {} violated, {} inconclusive, {} non-evaluable, {} errors",
        s.total(),
        s.satisfied,
        s.violated,
        s.inconclusive,
        s.non_evaluable,
        s.errored
    );
    let _ = writeln!(out, "version {}  config {}", report.version, report.config_digest);
    out.into_bytes()
}

/// Serializes a report; byte-identical for identical reports.
pub fn emit(report: &SuiteReport, format: Format) -> Vec<u8> {
    match format {
        Format::Json => {
            let mut bytes = serde_json::to_vec_pretty(report).expect("reports always serialize");
            bytes.push(b'\n');
            bytes
        }
        Format::Csv => emit_csv(report),
        Format::Text => emit_text(report),
    }
}
