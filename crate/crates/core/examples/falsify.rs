//! Seeded counterexample search over built-in families, then confirmation.
//!
//! cargo run --example falsify

use hhaudit::{confirm, falsify, SearchSpace, TheoremId, Variant};

fn main() -> hhaudit::Result<()> {
    let runs = [
        (TheoremId::Th1, Variant::Stated, SearchSpace::builtin(TheoremId::Th1)),
        (
            TheoremId::Th1,
            Variant::Derived,
            SearchSpace::builtin(TheoremId::Th1).respecting(),
        ),
        (TheoremId::Th4, Variant::Derived, SearchSpace::builtin(TheoremId::Th4)),
        (
            TheoremId::Th6,
            Variant::Stated,
            SearchSpace::builtin(TheoremId::Th6).respecting(),
        ),
        (
            TheoremId::Prop303,
            Variant::Stated,
            SearchSpace::builtin(TheoremId::Prop303),
        ),
        (
            TheoremId::Hadamard,
            Variant::Stated,
            SearchSpace::builtin(TheoremId::Hadamard),
        ),
    ];
    for (t, v, space) in runs {
        let r = falsify(t, v, &space, 2_000, 0)?;
        let s = &r.stats;
        print!(
            "{t:<8} {v:<8} evaluated {:>5}  filtered {:>5}  min margin {:>12.4e}  ",
            s.evaluated,
            s.filtered,
            s.min_margin.unwrap_or(f64::NAN)
        );
        match r.counterexample {
            Some(c) => {
                let at = if t.is_proposition() {
                    format!("n={}", c.n.map_or("-".to_string(), |n| n.to_string()))
                } else {
                    format!("f={} g={} h={}", c.f, c.g, c.h)
                };
                println!(
                    "counterexample {at} [{:.6}, {:.6}] violation {:.6} ({:?} at 1e-13)",
                    c.interval.a,
                    c.interval.b,
                    c.violation,
                    confirm(&c, 1e-13)?
                );
            }
            None => println!("none"),
        }
    }
    Ok(())
}
