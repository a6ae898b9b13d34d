//! The built-in audit: every theorem over the corollary kernels and a grid of
//! function pairs, the propositions at their witnesses, the means chain, and
//! a few seeded falsification runs.

use crate::engine::{TheoremId, Variant};
use crate::falsifier::SearchSpace;
use crate::sampling::PropertyId;

use super::suite::{Format, Job, SuiteConfig};

const KERNELS: [&str; 3] = ["one", "id", "pow:0.5"];
const PAIRS: [(&str, &str); 5] = [
    ("pow:1", "pow:1"),
    ("pow:2", "pow:2"),
    ("exp:1", "exp:1"),
    ("pow:1", "pow:3"),
    ("symquad", "symquad"),
];
const INTERVALS: [(f64, f64); 2] = [(0.0, 1.0), (1.0, 2.0)];
const CONVEX: [&str; 5] = ["pow:2", "pow:4", "exp:1", "symquad", "poly:1,0,2"];

const FALSIFY_BUDGET: u64 = 200;

/// The audit config; `seed` feeds every sampled check and search.
pub fn audit_config(seed: u64) -> SuiteConfig {
    let mut jobs = Vec::new();

    for f in CONVEX {
        for (a, b) in INTERVALS {
            jobs.push(Job::check(TheoremId::Hadamard, Variant::Stated, f, f, "id", a, b));
        }
    }
    jobs.push(Job::check(
        TheoremId::Hadamard,
        Variant::Stated,
        "recip",
        "recip",
        "id",
        1.0,
        2.0,
    ));

    let variants = [
        (TheoremId::Th1, Variant::Stated),
        (TheoremId::Th1, Variant::Derived),
        (TheoremId::Th2, Variant::Stated),
        (TheoremId::Th3, Variant::Stated),
        (TheoremId::Th4, Variant::Stated),
        (TheoremId::Th4, Variant::Derived),
        (TheoremId::Th5, Variant::Stated),
        (TheoremId::Th6, Variant::Stated),
    ];
    for (theorem, variant) in variants {
        for h in KERNELS {
            for (f, g) in PAIRS {
                for (a, b) in INTERVALS {
                    jobs.push(Job::check(theorem, variant, f, g, h, a, b));
                }
            }
        }
    }
    jobs.push(Job::check(
        TheoremId::Th2,
        Variant::Stated,
        "pow:2",
        "pow:2",
        "recip",
        1.0,
        2.0,
    ));

    for h in ["id", "one", "pow:0.5", "recip"] {
        for p in [
            PropertyId::Supermultiplicative,
            PropertyId::Superadditive,
            PropertyId::DominatesIdentity,
            PropertyId::Nonnegative,
        ] {
            jobs.push(Job::kernel_property(h, p));
        }
    }

    for prop in [
        TheoremId::Prop301,
        TheoremId::Prop302,
        TheoremId::Prop304,
        TheoremId::Prop305,
    ] {
        for n in [1, 2] {
            jobs.push(Job::proposition(prop, 1.0, 2.0, Some(n)));
        }
    }
    jobs.push(Job::proposition(TheoremId::Prop303, 0.4, 0.5, None));
    jobs.push(Job::proposition(TheoremId::Prop303, 1.0, 2.0, None));
    jobs.push(Job::proposition(TheoremId::Prop306, 1.0, 4.0, None));

    jobs.push(Job::chain(1.0, 2.0));
    jobs.push(Job::chain(1.0, 1e6));

    let th1_witness = SearchSpace::fixed("pow:1", "pow:1", "id", 1.0, 2.0).expect("valid box");
    jobs.push(Job::falsify(TheoremId::Th1, Variant::Stated, Some(th1_witness), 1));
    jobs.push(Job::falsify(TheoremId::Prop303, Variant::Stated, None, FALSIFY_BUDGET));
    jobs.push(Job::falsify(TheoremId::Hadamard, Variant::Stated, None, FALSIFY_BUDGET));
    for theorem in [TheoremId::Th2, TheoremId::Th3, TheoremId::Th6] {
        let space = SearchSpace::builtin(theorem).respecting();
        jobs.push(Job::falsify(theorem, Variant::Stated, Some(space), FALSIFY_BUDGET));
    }

    for job in &mut jobs {
        job.seed = Some(seed);
    }
    SuiteConfig {
        jobs,
        format: Format::Json,
    }
}
