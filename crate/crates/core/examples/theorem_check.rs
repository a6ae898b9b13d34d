//! Both sides of each product inequality for one (f, g, h, [a, b]), with hypotheses.
//!
//! cargo run --example theorem_check -- pow:1 pow:1 id 1 2

use hhaudit::{evaluate, Problem, TheoremId, Variant};

fn main() -> hhaudit::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let arg = |i: usize, default: &str| args.get(i).cloned().unwrap_or_else(|| default.to_string());
    let (f, g, h) = (arg(0, "pow:1"), arg(1, "pow:1"), arg(2, "id"));
    let a: f64 = arg(3, "1").parse().expect("a");
    let b: f64 = arg(4, "2").parse().expect("b");
    let p = Problem::from_specs(&f, &g, &h, a, b)?;
    println!("f = {f}, g = {g}, h = {h}, [{a}, {b}]");

    for t in TheoremId::ALL
        .into_iter()
        .filter(|t| !t.is_proposition() && *t != TheoremId::Hadamard)
    {
        let variants: &[Variant] = if t.has_derived_variant() {
            &[Variant::Stated, Variant::Derived]
        } else {
            &[Variant::Stated]
        };
        for &v in variants {
            match evaluate(t, v, &p, 1e-10) {
                Ok(r) => {
                    let failed: Vec<_> = r
                        .hypothesis_results
                        .iter()
                        .filter(|h| h.verdict != hhaudit::Verdict::NoViolationFound)
                        .map(|h| h.name.as_str())
                        .collect();
                    println!(
                        "{t:<4} {v:<8} {:>14.9} <= {:<14.9} {:<12?} failed hypotheses: {failed:?}",
                        r.lhs, r.rhs, r.verdict
                    );
                }
                Err(e) => println!("{t:<4} {v:<8} {e}"),
            }
        }
    }
    Ok(())
}
