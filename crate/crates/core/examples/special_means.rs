//! Special means of two positive numbers, the classical chain, and the mean propositions.
//!
//! cargo run --example special_means -- 1 2

use hhaudit::{mean, verify_chain, verify_proposition, MeanKind, TheoremId};

fn main() -> hhaudit::Result<()> {
    let args: Vec<f64> = std::env::args().skip(1).map(|s| s.parse().expect("number")).collect();
    let (a, b) = (
        args.first().copied().unwrap_or(1.0),
        args.get(1).copied().unwrap_or(2.0),
    );

    let chain = verify_chain(a, b, 1e-12)?;
    for m in &chain.means {
        println!("{:<3} {:.15}", m.kind.to_string(), m.value);
    }
    println!("H <= G <= L <= I <= A <= K: {}", chain.holds);

    for p in [-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 3.0] {
        println!("L_{p:<4} {:.15}", mean(MeanKind::Lp(p), a, b)?.value);
    }

    for (prop, n) in [
        (TheoremId::Prop301, Some(1)),
        (TheoremId::Prop302, Some(1)),
        (TheoremId::Prop303, None),
        (TheoremId::Prop304, Some(2)),
        (TheoremId::Prop305, Some(1)),
        (TheoremId::Prop306, None),
    ] {
        let r = verify_proposition(prop, a, b, n)?;
        println!("{prop:<8} {:.9} <= {:.9}  {:?}", r.lhs, r.rhs, r.verdict);
    }
    Ok(())
}
