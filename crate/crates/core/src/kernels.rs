//! The kernel `h` of an h-convexity class and sampled checks of its algebraic
//! properties.
//!
//! Kernels are built from a closed grammar:
//!
//! ```text
//! id | one | pow:<k> | recip | scaled:<c>,<spec> | max:<spec>,<spec>
//! ```
//!
//! with `k <= 1` and `c > 0`. The textual form is canonical: `Display`
//! reproduces a string that parses back to an equal kernel.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::parse::Cursor;
use crate::sampling::{self, PropertyId, PropertyReport, Relation, Sampler};

#[derive(Debug, Clone, PartialEq)]
pub enum KernelFamily {
    Identity,
    One,
    Power(f64),
    Reciprocal,
    Scaled(f64, Box<HKernel>),
    Max(Box<HKernel>, Box<HKernel>),
}

/// A nonnegative kernel on the positive ray, with `h(1)` cached.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct HKernel {
    family: KernelFamily,
    h_one: f64,
}

impl HKernel {
    fn from_family(family: KernelFamily) -> Self {
        let mut k = HKernel { family, h_one: 0.0 };
        k.h_one = k.eval(1.0);
        k
    }

    pub fn identity() -> Self {
        Self::from_family(KernelFamily::Identity)
    }

    pub fn one() -> Self {
        Self::from_family(KernelFamily::One)
    }

    pub fn reciprocal() -> Self {
        Self::from_family(KernelFamily::Reciprocal)
    }

    pub fn power(k: f64) -> Result<Self> {
        if !k.is_finite() || k > 1.0 {
            return Err(Error::Domain(format!(
                "power kernel exponent must satisfy k <= 1, got {k}"
            )));
        }
        Ok(Self::from_family(KernelFamily::Power(k)))
    }

    pub fn scaled(c: f64, inner: HKernel) -> Result<Self> {
        if !(c.is_finite() && c > 0.0) {
            return Err(Error::Domain(format!("scale factor must be positive, got {c}")));
        }
        Ok(Self::from_family(KernelFamily::Scaled(c, Box::new(inner))))
    }

    pub fn max(first: HKernel, second: HKernel) -> Self {
        Self::from_family(KernelFamily::Max(Box::new(first), Box::new(second)))
    }

    pub fn family(&self) -> &KernelFamily {
        &self.family
    }

    /// `h(1)`, used by the superadditive-kernel inequalities.
    pub fn h_one(&self) -> f64 {
        self.h_one
    }

    pub fn eval(&self, t: f64) -> f64 {
        match &self.family {
            KernelFamily::Identity => t,
            KernelFamily::One => 1.0,
            KernelFamily::Power(k) => t.powf(*k),
            KernelFamily::Reciprocal => 1.0 / t,
            KernelFamily::Scaled(c, h) => c * h.eval(t),
            KernelFamily::Max(h1, h2) => h1.eval(t).max(h2.eval(t)),
        }
    }

    /// Exponent `e` of the leading behaviour `h(t) ~ C t^e` as `t -> 0+`.
    ///
    /// Moment integrability and the endpoint substitution in the quadrature
    /// module are decided from this value, never by probing.
    pub fn exponent_at_zero(&self) -> f64 {
        match &self.family {
            KernelFamily::Identity => 1.0,
            KernelFamily::One => 0.0,
            KernelFamily::Power(k) => *k,
            KernelFamily::Reciprocal => -1.0,
            KernelFamily::Scaled(_, h) => h.exponent_at_zero(),
            KernelFamily::Max(h1, h2) => h1.exponent_at_zero().min(h2.exponent_at_zero()),
        }
    }
}

impl fmt::Display for HKernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.family {
            KernelFamily::Identity => f.write_str("id"),
            KernelFamily::One => f.write_str("one"),
            KernelFamily::Power(k) => write!(f, "pow:{k}"),
            KernelFamily::Reciprocal => f.write_str("recip"),
            KernelFamily::Scaled(c, h) => write!(f, "scaled:{c},{h}"),
            KernelFamily::Max(h1, h2) => write!(f, "max:{h1},{h2}"),
        }
    }
}

fn parse_kernel(cur: &mut Cursor<'_>) -> Result<HKernel> {
    let tok = cur.token();
    match cur.ident()? {
        "id" => Ok(HKernel::identity()),
        "one" => Ok(HKernel::one()),
        "recip" => Ok(HKernel::reciprocal()),
        "pow" => {
            cur.expect(':')?;
            HKernel::power(cur.real()?)
        }
        "scaled" => {
            cur.expect(':')?;
            let c = cur.real()?;
            cur.expect(',')?;
            let inner = parse_kernel(cur)?;
            HKernel::scaled(c, inner)
        }
        "max" => {
            cur.expect(':')?;
            let first = parse_kernel(cur)?;
            cur.expect(',')?;
            let second = parse_kernel(cur)?;
            Ok(HKernel::max(first, second))
        }
        _ => Err(Error::parse(tok, "unknown kernel family")),
    }
}

/// Parses a kernel spec string.
pub fn make_kernel(spec: &str) -> Result<HKernel> {
    let mut cur = Cursor::new(spec.trim());
    let k = parse_kernel(&mut cur)?;
    cur.finish()?;
    Ok(k)
}

impl FromStr for HKernel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        make_kernel(s)
    }
}

impl TryFrom<String> for HKernel {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        make_kernel(&s)
    }
}

impl From<HKernel> for String {
    fn from(k: HKernel) -> String {
        k.to_string()
    }
}

fn in_domain(v: f64, (lo, hi): (f64, f64)) -> bool {
    v > lo && v <= hi
}

/// Sampled check of one algebraic kernel property.
///
/// Points are drawn from the sampler domain, (0,1] by default. For the binary
/// properties a pair is rejected and redrawn when its product or sum leaves
/// the domain. The dominates-identity check additionally restricts to t < 1.
pub fn kernel_properties(h: &HKernel, property: PropertyId, sampler: &Sampler) -> Result<PropertyReport> {
    let domain = sampler.domain.unwrap_or((0.0, 1.0));
    if domain.0 < 0.0 {
        return Err(Error::Config(format!(
            "kernel sampler domain must lie in the positive ray, got ({}, {}]",
            domain.0, domain.1
        )));
    }
    let sampler = Sampler {
        domain: Some(domain),
        ..*sampler
    };
    let (lo, hi) = domain;
    let subject = h.to_string();
    let draw1 = |rng: &mut _| Some(vec![sampling::uniform_open_closed(rng, lo, hi)]);

    match property {
        PropertyId::Supermultiplicative => sampling::scan(
            property,
            subject,
            &sampler,
            Relation::AtMost,
            |rng| {
                let x = sampling::uniform_open_closed(rng, lo, hi);
                let y = sampling::uniform_open_closed(rng, lo, hi);
                in_domain(x * y, domain).then(|| vec![x, y])
            },
            |p| (h.eval(p[0]) * h.eval(p[1]), h.eval(p[0] * p[1])),
        ),
        PropertyId::Superadditive => sampling::scan(
            property,
            subject,
            &sampler,
            Relation::AtMost,
            |rng| {
                let x = sampling::uniform_open_closed(rng, lo, hi);
                let y = sampling::uniform_open_closed(rng, lo, hi);
                in_domain(x + y, domain).then(|| vec![x, y])
            },
            |p| (h.eval(p[0]) + h.eval(p[1]), h.eval(p[0] + p[1])),
        ),
        PropertyId::DominatesIdentity => sampling::scan(
            property,
            subject,
            &sampler,
            Relation::AtMost,
            |rng| {
                let t = sampling::uniform_open_closed(rng, lo, hi);
                (t < 1.0).then(|| vec![t])
            },
            |p| (p[0], h.eval(p[0])),
        ),
        PropertyId::Nonnegative => sampling::scan(property, subject, &sampler, Relation::AtMost, draw1, |p| {
            (0.0, h.eval(p[0]))
        }),
        other => Err(Error::Config(format!("{other} is not a kernel property"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::Verdict;

    #[test]
    fn families_evaluate_exactly() {
        assert_eq!(make_kernel("pow:0.5").unwrap().eval(0.25), 0.5);
        assert_eq!(make_kernel("id").unwrap().eval(0.3), 0.3);
        assert_eq!(make_kernel("one").unwrap().eval(0.3), 1.0);
        assert_eq!(make_kernel("recip").unwrap().eval(0.25), 4.0);
        assert_eq!(make_kernel("scaled:2,id").unwrap().eval(0.25), 0.5);
        assert_eq!(make_kernel("max:id,pow:0.5").unwrap().eval(0.25), 0.5);
        assert_eq!(make_kernel("scaled:3,one").unwrap().h_one(), 3.0);
    }

    #[test]
    fn power_above_one_is_domain_error() {
        assert!(matches!(make_kernel("pow:2"), Err(Error::Domain(_))));
        assert!(matches!(make_kernel("scaled:0,id"), Err(Error::Domain(_))));
        assert!(matches!(make_kernel("scaled:-1,id"), Err(Error::Domain(_))));
    }

    #[test]
    fn malformed_specs_name_the_token() {
        match make_kernel("pow:abc") {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "abc"),
            other => panic!("unexpected {other:?}"),
        }
        match make_kernel("foo") {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "foo"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(make_kernel("id,"), Err(Error::Parse { .. })));
        assert!(matches!(make_kernel("max:id"), Err(Error::Parse { .. })));
        assert!(matches!(make_kernel(""), Err(Error::Parse { .. })));
    }

    #[test]
    fn nested_specs_round_trip() {
        for spec in ["scaled:1,max:id,id", "max:pow:0.25,scaled:2.5,recip", "pow:-0.5"] {
            let k = make_kernel(spec).unwrap();
            assert_eq!(k.to_string(), spec);
            assert_eq!(make_kernel(&k.to_string()).unwrap(), k);
        }
    }

    #[test]
    fn identity_passes_its_properties() {
        let h = HKernel::identity();
        for p in [
            PropertyId::Supermultiplicative,
            PropertyId::Superadditive,
            PropertyId::DominatesIdentity,
            PropertyId::Nonnegative,
        ] {
            let r = kernel_properties(&h, p, &Sampler::new(11, 500)).unwrap();
            assert_eq!(r.verdict, Verdict::NoViolationFound, "{p}");
        }
    }

    #[test]
    fn sqrt_kernel_is_not_superadditive() {
        let h = make_kernel("pow:0.5").unwrap();
        let r = kernel_properties(&h, PropertyId::Superadditive, &Sampler::new(0, 100)).unwrap();
        assert_eq!(r.verdict, Verdict::Violated);
        let w = r.witness.unwrap();
        let (x, y) = (w.point[0], w.point[1]);
        assert!(x + y <= 1.0);
        assert!(h.eval(x) + h.eval(y) > h.eval(x + y));

        // fixed witness x = y = 0.5
        assert!(h.eval(1.0) < 2.0 * h.eval(0.5));

        let r = kernel_properties(&h, PropertyId::DominatesIdentity, &Sampler::new(0, 1000)).unwrap();
        assert_eq!(r.verdict, Verdict::NoViolationFound);
    }

    #[test]
    fn function_property_is_rejected() {
        let r = kernel_properties(&HKernel::identity(), PropertyId::HConvex, &Sampler::default());
        assert!(matches!(r, Err(Error::Config(_))));
        let r = kernel_properties(
            &HKernel::identity(),
            PropertyId::Nonnegative,
            &Sampler::default().with_domain(0.5, 0.5),
        );
        assert!(matches!(r, Err(Error::Config(_))));
    }

    #[test]
    fn exponents_at_zero() {
        assert_eq!(make_kernel("max:id,pow:0.25").unwrap().exponent_at_zero(), 0.25);
        assert_eq!(make_kernel("scaled:4,recip").unwrap().exponent_at_zero(), -1.0);
    }
}
