//! Kernel moments, the Beta function, and the two readings of the s-convex bracket.
//!
//! cargo run --example h_moments

use hhaudit::quadrature::adjudicate_bracket;
use hhaudit::{beta, h_moments, integrate, make_kernel};

fn main() -> hhaudit::Result<()> {
    let quarter_disc = integrate(|t: f64| (t * (1.0 - t)).sqrt(), 0.0, 1.0, 1e-12)?;
    println!(
        "∫ sqrt(t(1-t)) = {} ± {:.1e}",
        quarter_disc.value, quarter_disc.error_estimate
    );
    println!("B(3/2, 3/2)     = {}", beta(1.5, 1.5)?);

    println!("{:<12} {:>10} {:>12} {:>10} {:>10}", "h", "∫h(t²)", "∫h(t(1-t))", "∫h(t)", "h(1)");
    for spec in ["id", "one", "pow:0.5", "pow:-0.25", "scaled:2,id"] {
        let h = make_kernel(spec)?;
        let m = h_moments(&h, 1e-12)?;
        println!(
            "{spec:<12} {:>10.6} {:>12.6} {:>10.6} {:>10.6}",
            m.m_sq.value,
            m.m_cross.value,
            m.m_lin.value,
            h.h_one()
        );
    }
    match h_moments(&make_kernel("recip")?, 1e-10) {
        Err(e) => println!("recip: {e}"),
        Ok(_) => unreachable!(),
    }

    for s in [0.0, 0.5, 1.0] {
        let r = adjudicate_bracket(s, 1e-12)?;
        println!(
            "s = {s}: quadrature {:.9}, B(2s+1,2s+1) form {:.9}, B(s+1,s+1) form {:.9} -> {:?}",
            r.quadrature.value, r.doubled, r.integral, r.reading
        );
    }
    Ok(())
}
