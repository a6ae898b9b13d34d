//! Builds a suite config, prints it as JSON, runs it and emits CSV.
//!
//! cargo run --example suite_config > suite.json   # the config goes to stderr, the report to stdout

use hhaudit::cli::{emit, run_suite, Format, Job, SuiteConfig};
use hhaudit::falsifier::IntervalBox;
use hhaudit::{PropertyId, SearchSpace, TheoremId, Variant};

fn main() -> hhaudit::Result<()> {
    let mut space = SearchSpace::builtin(TheoremId::Prop303);
    space.interval = IntervalBox::new(0.3, 0.5, 0.4, 0.6)?;
    let config = SuiteConfig {
        jobs: vec![
            Job::check(TheoremId::Th2, Variant::Stated, "pow:1", "pow:1", "id", 0.0, 1.0),
            Job::check(
                TheoremId::Th6,
                Variant::Stated,
                "symquad",
                "symquad",
                "pow:0.5",
                0.0,
                1.0,
            ),
            Job::check(TheoremId::Th2, Variant::Stated, "pow:2", "pow:2", "recip", 1.0, 2.0),
            Job::kernel_property("pow:0.5", PropertyId::Superadditive),
            Job::proposition(TheoremId::Prop305, 1.0, 2.0, Some(1)),
            Job::chain(1.0, 1e6),
            Job {
                seed: Some(4),
                ..Job::falsify(TheoremId::Prop303, Variant::Stated, Some(space), 500)
            },
        ],
        format: Format::Csv,
    };
    eprintln!("{}", serde_json::to_string_pretty(&config).expect("config serializes"));
    let report = run_suite(&config);
    print!("{}", String::from_utf8_lossy(&emit(&report, config.format)));
    std::process::exit(report.exit_code());
}
