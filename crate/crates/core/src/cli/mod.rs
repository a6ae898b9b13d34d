//! Command-line front end: every subcommand builds a [`SuiteConfig`], runs it
//! and emits the report.

mod audit;
mod suite;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

pub use audit::audit_config;
pub use suite::{
    emit, run_job, run_suite, Command, Format, Job, JobOutcome, JobResult, SuiteConfig, SuiteReport, Summary, Tally,
    DEFAULT_BUDGET, DEFAULT_SAMPLES, DEFAULT_TOL, WORKERS_ENV,
};

use crate::engine::{TheoremId, Variant};
use crate::error::{Error, Result};
use crate::falsifier::{FunctionSpace, IntervalBox, KernelSpace, SearchSpace};

#[derive(Debug, Parser)]
#[command(
    name = "hhaudit",
    version,
    about = "Evaluate and falsify h-convexity integral inequalities"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Sub,
}

#[derive(Debug, Subcommand)]
pub enum Sub {
    /// Evaluate one inequality.
    Check(CheckArgs),
    /// Run a JSON suite config.
    Suite(SuiteArgs),
    /// Search for a counterexample.
    Falsify(FalsifyArgs),
    /// Check the means chain on [a, b], optionally with a proposition.
    Means(MeansArgs),
    /// Run the built-in audit config.
    Audit(AuditArgs),
}

#[derive(Debug, Args)]
pub struct Output {
    #[arg(long, default_value = "text")]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(long)]
    pub theorem: TheoremId,
    #[arg(long, default_value = "stated")]
    pub variant: Variant,
    #[arg(long)]
    pub f: Option<String>,
    /// Defaults to f.
    #[arg(long)]
    pub g: Option<String>,
    #[arg(long)]
    pub h: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub a: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub b: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub n: Option<i32>,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    pub tol: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    pub samples: usize,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct SuiteArgs {
    pub config: PathBuf,
    /// Overrides the format named in the config.
    #[arg(long)]
    pub format: Option<Format>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FalsifyArgs {
    #[arg(long)]
    pub theorem: TheoremId,
    #[arg(long, default_value = "stated")]
    pub variant: Variant,
    /// Fix f (and g, h) instead of using the built-in families.
    #[arg(long)]
    pub f: Option<String>,
    #[arg(long)]
    pub g: Option<String>,
    #[arg(long)]
    pub h: Option<String>,
    /// Fix the interval; otherwise the box flags or the built-in box apply.
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<f64>,
    #[arg(long, allow_hyphen_values = true, num_args = 4, value_names = ["A_MIN", "A_MAX", "B_MIN", "B_MAX"])]
    pub r#box: Option<Vec<f64>>,
    #[arg(long)]
    pub respect_hypotheses: bool,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Search tolerance; confirmation always runs at 1e-12.
    #[arg(long)]
    pub tol: Option<f64>,
    #[arg(long)]
    pub samples: Option<usize>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct MeansArgs {
    #[arg(long)]
    pub a: f64,
    #[arg(long)]
    pub b: f64,
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    /// Also evaluate a proposition (PROP301..PROP306) on [a, b].
    #[arg(long)]
    pub theorem: Option<TheoremId>,
    #[arg(long, allow_hyphen_values = true)]
    pub n: Option<i32>,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub output: Output,
}

fn falsify_space(args: &FalsifyArgs) -> Result<Option<SearchSpace>> {
    let bx = match (&args.r#box, args.a, args.b) {
        (Some(v), _, _) => Some(IntervalBox::new(v[0], v[1], v[2], v[3])?),
        (None, Some(a), Some(b)) => Some(IntervalBox::fixed(a, b)?),
        (None, None, None) => None,
        _ => return Err(Error::Config("give both --a and --b, or --box".into())),
    };
    let fixed = args.f.is_some() || args.g.is_some() || args.h.is_some();
    if bx.is_none() && !fixed && !args.respect_hypotheses {
        return Ok(None);
    }
    let mut space = SearchSpace::builtin(args.theorem);
    if let Some(bx) = bx {
        space.interval = bx;
    }
    if let Some(f) = &args.f {
        space.functions = vec![FunctionSpace::Fixed { spec: f.clone() }];
        match &args.g {
            Some(g) if g != f => space.g_functions = Some(vec![FunctionSpace::Fixed { spec: g.clone() }]),
            _ => space.same_function = true,
        }
    } else if let Some(g) = &args.g {
        space.g_functions = Some(vec![FunctionSpace::Fixed { spec: g.clone() }]);
    }
    if let Some(h) = &args.h {
        space.kernels = vec![KernelSpace::Fixed { spec: h.clone() }];
    }
    space.respect_hypotheses = args.respect_hypotheses;
    Ok(Some(space))
}

fn build(command: &Sub) -> Result<(SuiteConfig, Format, Option<PathBuf>)> {
    let single = |job: Job, out: &Output| {
        Ok((
            SuiteConfig {
                jobs: vec![job],
                format: out.format,
            },
            out.format,
            out.out.clone(),
        ))
    };
    match command {
        Sub::Check(c) => {
            let job = Job {
                theorem: Some(c.theorem),
                variant: c.variant,
                f: c.f.clone(),
                g: c.g.clone(),
                h: c.h.clone(),
                a: Some(c.a),
                b: Some(c.b),
                n: c.n,
                tol: Some(c.tol),
                seed: Some(c.seed),
                samples: Some(c.samples),
                ..Job::new(Command::Check)
            };
            single(job, &c.output)
        }
        Sub::Falsify(c) => {
            let job = Job {
                seed: Some(c.seed),
                tol: c.tol,
                samples: c.samples,
                ..Job::falsify(c.theorem, c.variant, falsify_space(c)?, c.budget)
            };
            single(job, &c.output)
        }
        Sub::Means(c) => {
            let mut jobs = vec![Job {
                tol: Some(c.tol),
                ..Job::chain(c.a, c.b)
            }];
            if let Some(t) = c.theorem {
                jobs.push(Job::proposition(t, c.a, c.b, c.n));
            }
            Ok((
                SuiteConfig {
                    jobs,
                    format: c.output.format,
                },
                c.output.format,
                c.output.out.clone(),
            ))
        }
        Sub::Audit(c) => {
            let mut config = audit_config(c.seed);
            config.format = c.output.format;
            Ok((config, c.output.format, c.output.out.clone()))
        }
        Sub::Suite(c) => {
            let text = std::fs::read_to_string(&c.config)?;
            let config = SuiteConfig::from_json(&text)?;
            let format = c.format.unwrap_or(config.format);
            Ok((config, format, c.out.clone()))
        }
    }
}

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: &Cli) -> Result<i32> {
    let (config, format, out) = build(&cli.command)?;
    let report = run_suite(&config);
    let bytes = emit(&report, format);
    match out {
        Some(path) => std::fs::write(path, bytes)?,
        None => std::io::stdout().write_all(&bytes)?,
    }
    Ok(report.exit_code())
}

/// Entry point for the binary.
pub fn main() -> std::process::ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => std::process::ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("hhaudit: {e}");
            std::process::ExitCode::from(2)
        }
    }
}
