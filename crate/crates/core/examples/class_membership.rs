//! Sampled membership of test functions in the convex, P, Godunova-Levin and s-convex classes.
//!
//! cargo run --example class_membership

use hhaudit::{
    check_class, check_membership, make_function, make_kernel, FunctionClass, Interval, PropertyId, Sampler,
};

fn main() -> hhaudit::Result<()> {
    let sampler = Sampler::new(7, 2000);
    let i = Interval::new(0.5, 2.0)?;
    let id = make_kernel("id")?;
    let classes = [
        FunctionClass::PFunction,
        FunctionClass::GodunovaLevin,
        FunctionClass::SConvex(0.5),
    ];
    for spec in ["pow:2", "exp:-1", "symquad", "pow:-1"] {
        let f = make_function(spec, i)?;
        let convex = check_class(PropertyId::HConvex, &f, None, Some(&id), i, &sampler)?;
        print!("{spec:<10}  convex={}", if convex.holds() { "yes" } else { "no" });
        for c in classes {
            let r = check_membership(c, &f, i, &sampler)?;
            print!("  {c:?}={}", if r.holds() { "yes" } else { "no" });
        }
        println!();
    }

    // x ↦ x⁴ is h-convex for h(t) = max(t, t), built from x² · x²
    let quartic = make_function("prod:pow:2,pow:2", i)?;
    let h = make_kernel("scaled:1,max:id,id")?;
    let r = check_class(PropertyId::HConvex, &quartic, None, Some(&h), i, &sampler)?;
    println!("x^4 h-convex wrt {h}: {:?}", r.verdict);

    let (f, g) = (make_function("pow:1", i)?, make_function("exp:-1", i)?);
    let r = check_class(PropertyId::SimilarlyOrdered, &f, Some(&g), None, i, &sampler)?;
    println!(
        "x and e^-x similarly ordered: {:?} {:?}",
        r.verdict,
        r.witness.map(|w| w.point)
    );
    Ok(())
}
