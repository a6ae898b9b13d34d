//! Runs the built-in audit config in-process and lists every violated entry.
//!
//! cargo run --example audit

use hhaudit::cli::{audit_config, run_suite};

fn main() {
    let report = run_suite(&audit_config(0));
    for j in &report.jobs {
        if j.outcome.tally().as_str() == "violated" {
            println!("{:>4}  {}", j.job, j.label);
        }
    }
    let s = &report.summary;
    println!(
        "{} jobs: {} satisfied, {} violated, {} inconclusive, {} non-evaluable, {} errored",
        s.total(),
        s.satisfied,
        s.violated,
        s.inconclusive,
        s.non_evaluable,
        s.errored
    );
}
