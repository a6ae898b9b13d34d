//! Nonnegative test functions on an interval, and sampled checks of the
//! function classes and pairwise relations the inequalities assume.
//!
//! Function grammar:
//!
//! ```text
//! pow:<n> | exp:<c> | poly:<c0,c1,...> | recip | symquad | prod:<spec>,<spec>
//! ```
//!
//! `pow` takes a nonzero integer, `poly` nonnegative coefficients in
//! ascending degree, and `symquad` is `(x - m)^2` about the midpoint `m` of
//! the interval the function was built on.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernels::HKernel;
use crate::parse::Cursor;
use crate::sampling::{self, PropertyId, PropertyReport, Relation, Sampler};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub a: f64,
    pub b: f64,
}

impl Interval {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if !(a.is_finite() && b.is_finite()) || a >= b {
            return Err(Error::Domain(format!("interval requires finite a < b, got [{a}, {b}]")));
        }
        Ok(Interval { a, b })
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.a + self.b)
    }

    pub fn width(&self) -> f64 {
        self.b - self.a
    }

    pub fn contains(&self, other: &Interval) -> bool {
        self.a <= other.a && other.b <= self.b
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.a, self.b)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum FunctionFamily {
    Power(i32),
    Exp(f64),
    Poly(Vec<f64>),
    Recip,
    /// `(x - center)^2`; the center is fixed at construction.
    SymQuad {
        center: f64,
    },
    Product(Box<ScalarFunction>, Box<ScalarFunction>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Monotone {
    Constant,
    Nondecreasing,
    Nonincreasing,
}

/// A nonnegative function of one real variable with its declared interval.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarFunction {
    family: FunctionFamily,
    interval: Interval,
}

impl ScalarFunction {
    pub fn family(&self) -> &FunctionFamily {
        &self.family
    }

    pub fn interval(&self) -> Interval {
        self.interval
    }

    pub fn eval(&self, x: f64) -> f64 {
        match &self.family {
            FunctionFamily::Power(n) => x.powi(*n),
            FunctionFamily::Exp(c) => (c * x).exp(),
            FunctionFamily::Poly(cs) => cs.iter().rev().fold(0.0, |acc, c| acc * x + c),
            FunctionFamily::Recip => 1.0 / x,
            FunctionFamily::SymQuad { center } => (x - center) * (x - center),
            FunctionFamily::Product(f, g) => f.eval(x) * g.eval(x),
        }
    }

    /// Analytic monotonicity on the declared interval, when known.
    pub fn monotonicity(&self) -> Option<Monotone> {
        let Interval { a, b } = self.interval;
        match &self.family {
            FunctionFamily::Power(n) if *n < 0 => Some(Monotone::Nonincreasing),
            FunctionFamily::Power(_) if a >= 0.0 => Some(Monotone::Nondecreasing),
            FunctionFamily::Power(n) if n % 2 == 0 && b <= 0.0 => Some(Monotone::Nonincreasing),
            FunctionFamily::Power(_) => None,
            FunctionFamily::Exp(c) if *c > 0.0 => Some(Monotone::Nondecreasing),
            FunctionFamily::Exp(c) if *c < 0.0 => Some(Monotone::Nonincreasing),
            FunctionFamily::Exp(_) => Some(Monotone::Constant),
            FunctionFamily::Poly(cs) => {
                let odd_zero = cs.iter().skip(1).step_by(2).all(|c| *c == 0.0);
                if cs.iter().skip(1).all(|c| *c == 0.0) {
                    Some(Monotone::Constant)
                } else if a >= 0.0 {
                    Some(Monotone::Nondecreasing)
                } else if b <= 0.0 && odd_zero {
                    Some(Monotone::Nonincreasing)
                } else {
                    None
                }
            }
            FunctionFamily::Recip => Some(Monotone::Nonincreasing),
            FunctionFamily::SymQuad { .. } => None,
            FunctionFamily::Product(f, g) => match (f.monotonicity()?, g.monotonicity()?) {
                (Monotone::Constant, m) | (m, Monotone::Constant) => Some(m),
                (m1, m2) if m1 == m2 => Some(m1),
                _ => None,
            },
        }
    }

    /// Analytic convexity on the declared interval. `false` means "not known
    /// to be convex", not "known to be non-convex".
    pub fn is_convex(&self) -> bool {
        match &self.family {
            // the nonnegativity constraints enforced at construction leave
            // every primitive family convex on its interval
            FunctionFamily::Product(f, g) => {
                f.is_convex()
                    && g.is_convex()
                    && match (f.monotonicity(), g.monotonicity()) {
                        (Some(Monotone::Constant), _) | (_, Some(Monotone::Constant)) => true,
                        (Some(m1), Some(m2)) => m1 == m2,
                        _ => false,
                    }
            }
            _ => true,
        }
    }

    /// Whether `f(a+b-x) = f(x)` holds analytically on the declared interval.
    pub fn is_symmetric(&self) -> bool {
        match &self.family {
            FunctionFamily::SymQuad { .. } => true,
            FunctionFamily::Product(f, g) => f.is_symmetric() && g.is_symmetric(),
            _ => self.monotonicity() == Some(Monotone::Constant),
        }
    }
}

impl fmt::Display for ScalarFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.family {
            FunctionFamily::Power(n) => write!(f, "pow:{n}"),
            FunctionFamily::Exp(c) => write!(f, "exp:{c}"),
            FunctionFamily::Poly(cs) => {
                f.write_str("poly:")?;
                for (i, c) in cs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{c}")?;
                }
                Ok(())
            }
            FunctionFamily::Recip => f.write_str("recip"),
            FunctionFamily::SymQuad { .. } => f.write_str("symquad"),
            FunctionFamily::Product(g, h) => write!(f, "prod:{g},{h}"),
        }
    }
}

fn parse_function(cur: &mut Cursor<'_>, interval: Interval) -> Result<ScalarFunction> {
    let tok = cur.token();
    let Interval { a, b } = interval;
    let family = match cur.ident()? {
        "pow" => {
            cur.expect(':')?;
            let n = cur.integer()?;
            if n == 0 {
                return Err(Error::Domain("pow requires |n| >= 1".into()));
            }
            if n < 0 && a <= 0.0 {
                return Err(Error::Domain(format!("pow:{n} requires a > 0, interval is {interval}")));
            }
            if n > 0 && n % 2 == 1 && a < 0.0 {
                return Err(Error::Domain(format!("pow:{n} is negative on {interval}")));
            }
            FunctionFamily::Power(n)
        }
        "exp" => {
            cur.expect(':')?;
            FunctionFamily::Exp(cur.real()?)
        }
        "poly" => {
            cur.expect(':')?;
            let mut cs = vec![cur.real()?];
            // coefficients continue while the next comma-separated token is numeric
            loop {
                let save = cur.save();
                if cur.eat(',') && cur.at_number() {
                    cs.push(cur.real()?);
                } else {
                    cur.restore(save);
                    break;
                }
            }
            if let Some(c) = cs.iter().find(|c| **c < 0.0) {
                return Err(Error::Domain(format!("poly coefficients must be nonnegative, got {c}")));
            }
            let odd_terms = cs.iter().skip(1).step_by(2).any(|c| *c != 0.0);
            if odd_terms && a < 0.0 {
                return Err(Error::Domain(format!(
                    "poly with odd-degree terms needs a >= 0, interval is {interval}"
                )));
            }
            FunctionFamily::Poly(cs)
        }
        "recip" => {
            if a <= 0.0 {
                return Err(Error::Domain(format!("recip requires a > 0, interval is {interval}")));
            }
            FunctionFamily::Recip
        }
        "symquad" => FunctionFamily::SymQuad { center: 0.5 * (a + b) },
        "prod" => {
            cur.expect(':')?;
            let f = parse_function(cur, interval)?;
            cur.expect(',')?;
            let g = parse_function(cur, interval)?;
            FunctionFamily::Product(Box::new(f), Box::new(g))
        }
        _ => return Err(Error::parse(tok, "unknown function family")),
    };
    Ok(ScalarFunction { family, interval })
}

/// Parses a function spec on the given interval, enforcing nonnegativity.
pub fn make_function(spec: &str, interval: Interval) -> Result<ScalarFunction> {
    let interval = Interval::new(interval.a, interval.b)?;
    let mut cur = Cursor::new(spec.trim());
    let f = parse_function(&mut cur, interval)?;
    cur.finish()?;
    Ok(f)
}

/// The classical classes expressed as h-convexity with a fixed kernel.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FunctionClass {
    /// Godunova-Levin class Q(I), kernel 1/t.
    GodunovaLevin,
    /// P-functions, kernel 1.
    PFunction,
    /// s-convex in the second sense, kernel t^s.
    SConvex(f64),
}

impl FunctionClass {
    pub fn kernel(self) -> Result<HKernel> {
        match self {
            FunctionClass::GodunovaLevin => Ok(HKernel::reciprocal()),
            FunctionClass::PFunction => Ok(HKernel::one()),
            FunctionClass::SConvex(s) => HKernel::power(s),
        }
    }
}

/// Sampled membership check for one class or pairwise relation.
///
/// Points are drawn from `interval` (or the sampler domain, which must lie
/// inside it). `HConvex` needs `h`, `SimilarlyOrdered` needs `g`.
pub fn check_class(
    property: PropertyId,
    f: &ScalarFunction,
    g: Option<&ScalarFunction>,
    h: Option<&HKernel>,
    interval: Interval,
    sampler: &Sampler,
) -> Result<PropertyReport> {
    if !f.interval().contains(&interval) {
        return Err(Error::Domain(format!(
            "{f} is declared on {} which does not contain {interval}",
            f.interval()
        )));
    }
    let (lo, hi) = sampler.domain.unwrap_or((interval.a, interval.b));
    let sampler = Sampler {
        domain: Some((lo, hi)),
        ..*sampler
    };
    sampler.validate()?;
    if lo < interval.a || hi > interval.b {
        return Err(Error::Config(format!("sampler domain ({lo}, {hi}] leaves {interval}")));
    }
    let draw = |rng: &mut _| Some(vec![sampling::uniform_open_closed(rng, lo, hi)]);
    let draw2 = |rng: &mut _| {
        Some(vec![
            sampling::uniform_open_closed(rng, lo, hi),
            sampling::uniform_open_closed(rng, lo, hi),
        ])
    };

    match property {
        PropertyId::HConvex => {
            let h = h.ok_or_else(|| Error::Config("h_convex needs a kernel h".into()))?;
            sampling::scan(
                property,
                format!("{f} wrt {h}"),
                &sampler,
                Relation::AtMost,
                |rng| {
                    let x = sampling::uniform_open_closed(rng, lo, hi);
                    let y = sampling::uniform_open_closed(rng, lo, hi);
                    let t = sampling::unit_open(rng);
                    Some(vec![x, y, t])
                },
                |p| {
                    let (x, y, t) = (p[0], p[1], p[2]);
                    let z = (t * x + (1.0 - t) * y).clamp(interval.a, interval.b);
                    (f.eval(z), h.eval(t) * f.eval(x) + h.eval(1.0 - t) * f.eval(y))
                },
            )
        }
        PropertyId::SimilarlyOrdered => {
            let g = g.ok_or_else(|| Error::Config("similarly_ordered needs g".into()))?;
            if !g.interval().contains(&interval) {
                return Err(Error::Domain(format!(
                    "{g} is declared on {} which does not contain {interval}",
                    g.interval()
                )));
            }
            // (f(x)-f(y))(g(x)-g(y)) >= 0  <=>  f(x)g(y)+f(y)g(x) <= f(x)g(x)+f(y)g(y)
            sampling::scan(
                property,
                format!("{f} and {g}"),
                &sampler,
                Relation::AtMost,
                draw2,
                |p| {
                    let (fx, fy, gx, gy) = (f.eval(p[0]), f.eval(p[1]), g.eval(p[0]), g.eval(p[1]));
                    (fx * gy + fy * gx, fx * gx + fy * gy)
                },
            )
        }
        PropertyId::SymmetricAboutMidpoint => {
            sampling::scan(property, f.to_string(), &sampler, Relation::Equal, draw, |p| {
                (f.eval(interval.a + interval.b - p[0]), f.eval(p[0]))
            })
        }
        PropertyId::Nonnegative => sampling::scan(property, f.to_string(), &sampler, Relation::AtMost, draw, |p| {
            (0.0, f.eval(p[0]))
        }),
        PropertyId::DominatesIdentityOnInterval => {
            sampling::scan(property, f.to_string(), &sampler, Relation::AtMost, draw, |p| {
                (p[0], f.eval(p[0]))
            })
        }
        other => Err(Error::Config(format!("{other} is not a function property"))),
    }
}

/// `check_class(HConvex, ..)` with the kernel of a named class.
pub fn check_membership(
    class: FunctionClass,
    f: &ScalarFunction,
    interval: Interval,
    sampler: &Sampler,
) -> Result<PropertyReport> {
    let h = class.kernel()?;
    check_class(PropertyId::HConvex, f, None, Some(&h), interval, sampler)
}
