//! Sampled properties of a few kernels h.
//!
//! cargo run --example kernel_properties

use hhaudit::{kernel_properties, make_kernel, PropertyId, Sampler};

fn main() -> hhaudit::Result<()> {
    let sampler = Sampler::new(0, 1000);
    let props = [
        PropertyId::Nonnegative,
        PropertyId::Supermultiplicative,
        PropertyId::Superadditive,
        PropertyId::DominatesIdentity,
    ];
    for spec in ["id", "one", "pow:0.5", "recip", "scaled:2,id"] {
        let h = make_kernel(spec)?;
        print!("{spec:<12}");
        for p in props {
            let r = kernel_properties(&h, p, &sampler)?;
            print!("  {p:?}={}", if r.holds() { "ok" } else { "FAIL" });
        }
        println!();
    }

    // a failing property carries a witness that can be re-evaluated by hand
    let sqrt = make_kernel("pow:0.5")?;
    let r = kernel_properties(&sqrt, PropertyId::Superadditive, &sampler)?;
    if let Some(w) = r.witness {
        println!(
            "sqrt(x + y) < sqrt(x) + sqrt(y) at {:?}: {} vs {}",
            w.point, w.rhs, w.lhs
        );
    }
    Ok(())
}
