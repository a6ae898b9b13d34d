use std::path::PathBuf;
use std::process::{Command, Output};

use hhaudit::cli::{audit_config, emit, run_suite, Format, Job, SuiteConfig, SuiteReport};
use hhaudit::{PropertyId, TheoremId, Variant};

fn hhaudit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hhaudit")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hhaudit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn check_prints_a_violation_but_exits_zero() {
    let o = hhaudit(&[
        "check",
        "--theorem",
        "TH1",
        "--f",
        "pow:1",
        "--h",
        "id",
        "--a",
        "1",
        "--b",
        "2",
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("job,command,theorem,variant,lhs,rhs,margin,verdict"));
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(&row[..4], ["1", "check", "TH1", "stated"]);
    assert_eq!(row[7], "violated");
    assert!((row[6].parse::<f64>().unwrap() + 2.5).abs() < 1e-12);
    assert!(lines.next().is_none());
}

#[test]
fn bad_specs_and_flags() {
    let o = hhaudit(&[
        "check",
        "--theorem",
        "TH2",
        "--f",
        "pow:x",
        "--h",
        "id",
        "--a",
        "0",
        "--b",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("parse error"));

    let o = hhaudit(&["check", "--theorem", "TH9", "--a", "0", "--b", "1"]);
    assert_eq!(o.status.code(), Some(2));

    let o = hhaudit(&["suite", "/nonexistent/config.json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("hhaudit: "));
}

#[test]
fn suite_file_round_trips() {
    let config = SuiteConfig {
        jobs: vec![
            Job::check(TheoremId::Hadamard, Variant::Stated, "pow:2", "pow:2", "id", 0.0, 1.0),
            Job::check(TheoremId::Th2, Variant::Stated, "pow:2", "pow:2", "recip", 1.0, 2.0),
            Job::proposition(TheoremId::Prop305, 1.0, 2.0, Some(1)),
            Job::kernel_property("pow:0.5", PropertyId::Superadditive),
            Job::chain(1.0, 1e6),
        ],
        format: Format::Json,
    };
    let cfg = scratch("suite.json");
    let out = scratch("report.json");
    std::fs::write(&cfg, serde_json::to_string(&config).unwrap()).unwrap();
    let o = hhaudit(&["suite", cfg.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());

    let text = std::fs::read_to_string(&out).unwrap();
    let report = SuiteReport::from_json(&text).unwrap();
    assert_eq!(report.jobs.len(), 5);
    assert_eq!(report.config_digest, config.digest());
    let s = &report.summary;
    assert_eq!((s.satisfied, s.violated, s.non_evaluable, s.errored), (2, 2, 1, 0));
    assert_eq!(s.total(), 5);
    // in-process run gives the same bytes
    assert_eq!(emit(&run_suite(&config), Format::Json), text.as_bytes());

    let o = hhaudit(&["suite", cfg.to_str().unwrap(), "--format", "csv"]);
    let csv = stdout(&o);
    assert_eq!(csv.lines().count(), 6);
    assert_eq!(csv.lines().nth(2).unwrap(), "2,check,TH2,stated,,,,non_evaluable");
}

#[test]
fn empty_suite_exits_zero() {
    let cfg = scratch("empty.json");
    std::fs::write(&cfg, r#"{"jobs": []}"#).unwrap();
    let o = hhaudit(&["suite", cfg.to_str().unwrap(), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let report = SuiteReport::from_json(&stdout(&o)).unwrap();
    assert!(report.jobs.is_empty());
    assert_eq!(report.summary.total(), 0);
}

#[test]
fn falsify_and_means_subcommands() {
    let o = hhaudit(&[
        "falsify",
        "--theorem",
        "TH1",
        "--f",
        "pow:1",
        "--h",
        "id",
        "--a",
        "1",
        "--b",
        "2",
        "--budget",
        "1",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let report = SuiteReport::from_json(&stdout(&o)).unwrap();
    assert_eq!(report.summary.violated, 1);

    let o = hhaudit(&[
        "falsify",
        "--theorem",
        "PROP303",
        "--box",
        "0.05",
        "1",
        "0.05",
        "1",
        "--budget",
        "100",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("violated"));

    let o = hhaudit(&[
        "means",
        "--a",
        "1",
        "--b",
        "2",
        "--theorem",
        "PROP305",
        "--n",
        "1",
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let csv = stdout(&o);
    assert!(csv.lines().nth(1).unwrap().ends_with("satisfied"));
    assert!(csv.lines().nth(2).unwrap().starts_with("2,check,PROP305,stated,"));
    assert!(csv.lines().nth(2).unwrap().ends_with("violated"));
}

#[test]
fn audit_reports_the_stated_form_failures() {
    let report = run_suite(&audit_config(0));
    assert_eq!(report.summary.errored, 0);
    assert!(report.summary.violated >= 1);
    for t in [TheoremId::Th1, TheoremId::Prop303, TheoremId::Prop305] {
        assert!(
            report
                .jobs
                .iter()
                .any(|j| j.theorem == Some(t) && j.outcome.tally().as_str() == "violated"),
            "no violated {t} entry"
        );
    }
    assert_eq!(report.summary.total(), report.jobs.len());
}

#[test]
fn worker_cap_does_not_change_output() {
    let run = |workers: &str| {
        Command::new(env!("CARGO_BIN_EXE_hhaudit"))
            .args(["audit", "--format", "json"])
            .env("HHAUDIT_WORKERS", workers)
            .output()
            .unwrap()
    };
    let (one, four) = (run("1"), run("4"));
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
}
