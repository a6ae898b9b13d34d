//! f((a+b)/2) ≤ mean of f ≤ (f(a)+f(b))/2 for convex f, and what happens without convexity.
//!
//! cargo run --example hadamard

use hhaudit::{evaluate, Problem, TheoremId, Variant};

fn main() -> hhaudit::Result<()> {
    for (f, a, b) in [
        ("pow:2", 0.0, 1.0),
        ("exp:1", -1.0, 2.0),
        ("recip", 1.0, 4.0),
        ("poly:1,0,0,1", 0.0, 2.0),
    ] {
        let p = Problem::from_specs(f, f, "id", a, b)?;
        let r = evaluate(TheoremId::Hadamard, Variant::Stated, &p, 1e-12)?;
        println!("{f} on [{a}, {b}]: {:?}", r.verdict);
        for l in &r.links {
            println!("  {:<16} {:.9} <= {:.9}  margin {:.3e}", l.name, l.lhs, l.rhs, l.margin);
        }
    }
    Ok(())
}
