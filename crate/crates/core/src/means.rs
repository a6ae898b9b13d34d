//! Special means of two positive numbers and the propositions built on them.
//!
//! `H`, `L` and `I` follow the usual definitions: `H = 2ab/(a+b)`,
//! `L = (b−a)/(ln b − ln a)`, `I = e⁻¹(bᵇ/aᵃ)^{1/(b−a)}`. Everything is
//! computed from `lo = min(a,b)` and `d = (hi−lo)/lo` with `ln_1p`/`expm1`,
//! so nearby arguments do not cancel and every mean is exactly symmetric.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::engine::{classify, InequalityReport, InequalityVerdict, Link, TheoremId, Variant};
use crate::error::{Error, Result};

/// Half-width of the window around p ∈ {−1, 0, 1} where `Lp` switches to
/// its limit mean.
pub const LIMIT_WINDOW: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MeanKind {
    A,
    G,
    K,
    H,
    L,
    I,
    Lp(f64),
}

impl fmt::Display for MeanKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MeanKind::A => f.write_str("A"),
            MeanKind::G => f.write_str("G"),
            MeanKind::K => f.write_str("K"),
            MeanKind::H => f.write_str("H"),
            MeanKind::L => f.write_str("L"),
            MeanKind::I => f.write_str("I"),
            MeanKind::Lp(p) => write!(f, "L_{p}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeanValue {
    pub kind: MeanKind,
    pub value: f64,
}

fn check_positive(a: f64, b: f64) -> Result<()> {
    if a > 0.0 && b > 0.0 && a.is_finite() && b.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "means need finite positive arguments, got ({a}, {b})"
        )))
    }
}

/// ln|eˣ − 1| without overflow for large x.
fn ln_abs_expm1(x: f64) -> f64 {
    if x > 1.0 {
        x + (-(-x).exp()).ln_1p()
    } else {
        x.exp_m1().abs().ln()
    }
}

fn log_mean(lo: f64, d: f64) -> f64 {
    if d == 0.0 {
        lo
    } else {
        lo * d / d.ln_1p()
    }
}

fn identric(lo: f64, d: f64) -> f64 {
    if d == 0.0 {
        lo
    } else {
        let l = d.ln_1p();
        (lo.ln() + (1.0 + d) * l / d - 1.0).exp()
    }
}

fn p_log(lo: f64, d: f64, p: f64) -> f64 {
    if d == 0.0 {
        return lo;
    }
    if (p - 1.0).abs() < LIMIT_WINDOW {
        return lo * (1.0 + d / 2.0);
    }
    if p.abs() < LIMIT_WINDOW {
        return identric(lo, d);
    }
    if (p + 1.0).abs() < LIMIT_WINDOW {
        return log_mean(lo, d);
    }
    let q = p + 1.0;
    let l = d.ln_1p();
    let ln_ratio = ln_abs_expm1(q * l) - (q * d).abs().ln();
    (lo.ln() + ln_ratio / p).exp()
}

/// Evaluates one mean; `Lp` near p ∈ {−1, 0, 1} resolves to `L`, `I`, `A`.
pub fn mean(kind: MeanKind, a: f64, b: f64) -> Result<MeanValue> {
    check_positive(a, b)?;
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    let d = (hi - lo) / lo;
    let value = match kind {
        MeanKind::A => lo + (hi - lo) / 2.0,
        MeanKind::G => (lo * hi).sqrt(),
        MeanKind::K => lo.hypot(hi) / std::f64::consts::SQRT_2,
        MeanKind::H => 2.0 * lo * hi / (lo + hi),
        MeanKind::L => log_mean(lo, d),
        MeanKind::I => identric(lo, d),
        MeanKind::Lp(p) => {
            if !p.is_finite() {
                return Err(Error::Domain(format!("L_p needs a finite p, got {p}")));
            }
            p_log(lo, d, p)
        }
    };
    Ok(MeanValue {
        kind,
        value: value.clamp(lo, hi),
    })
}

fn a_of(x: f64, y: f64) -> f64 {
    (x + y) / 2.0
}

/// `L_{2n}^{2n}(a, b) = (b^{2n+1} − a^{2n+1}) / ((2n+1)(b−a))`.
fn l2n_pow(a: f64, b: f64, n: i32) -> f64 {
    let k = f64::from(2 * n + 1);
    let d = (b - a) / a;
    a.powi(2 * n) * (k * d.ln_1p()).exp_m1() / (k * d)
}

/// Evaluates one of the special-means propositions in closed form
/// (`quad_error` is zero). `n` is required for 301, 302, 304 and 305 and
/// ignored by 303 and 306.
pub fn verify_proposition(prop: TheoremId, a: f64, b: f64, n: Option<i32>) -> Result<InequalityReport> {
    check_positive(a, b)?;
    if a >= b {
        return Err(Error::Domain(format!("propositions need a < b, got ({a}, {b})")));
    }
    let need_n = || -> Result<i32> {
        match n {
            Some(0) => Err(Error::Domain("n must satisfy |n| >= 1".into())),
            Some(n) => Ok(n),
            None => Err(Error::Config(format!("{prop} needs n"))),
        }
    };
    let g2 = a * b;
    let (lhs, rhs) = match prop {
        TheoremId::Prop301 => {
            let n = need_n()?;
            let lhs = 4.0 / 3.0 * a_of(a.powi(n + 1), b.powi(n + 1)) + 2.0 * g2 * a_of(a.powi(n - 1), b.powi(n - 1));
            (lhs, l2n_pow(a, b, n) + a_of(a.powi(2 * n), b.powi(2 * n)))
        }
        TheoremId::Prop302 => {
            let n = need_n()?;
            ((a * b).powi(n), 2.0 * a_of(a.powi(2 * n), b.powi(2 * n)))
        }
        TheoremId::Prop303 => (1.0 / g2, mean(MeanKind::K, a, b)?.value),
        TheoremId::Prop304 => {
            let n = need_n()?;
            ((a * b).powi(n), a_of(a.powi(2 * n), b.powi(2 * n)))
        }
        TheoremId::Prop305 => {
            let n = need_n()?;
            (
                l2n_pow(a, b, n),
                (a_of(a.powi(2 * n), b.powi(2 * n)) + (a * b).powi(n)) / 2.0,
            )
        }
        TheoremId::Prop306 => (mean(MeanKind::G, a, b)?.value, mean(MeanKind::A, a, b)?.value),
        other => return Err(Error::Config(format!("{other} is not a special-means proposition"))),
    };
    let (margin, verdict) = classify(lhs, rhs, 0.0);
    Ok(InequalityReport {
        theorem: prop,
        variant: Variant::Stated,
        hypothesis_results: Vec::new(),
        lhs,
        rhs,
        margin,
        quad_error: 0.0,
        verdict,
        links: Vec::new(),
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChainReport {
    pub a: f64,
    pub b: f64,
    pub tol: f64,
    /// H, G, L, I, A, K in chain order.
    pub means: Vec<MeanValue>,
    pub links: Vec<Link>,
    pub holds: bool,
}

/// Checks `H ≤ G ≤ L ≤ I ≤ A ≤ K`; a link fails when its margin is below
/// `−tol` relative to the larger side.
pub fn verify_chain(a: f64, b: f64, tol: f64) -> Result<ChainReport> {
    check_positive(a, b)?;
    if a >= b {
        return Err(Error::Domain(format!("the chain needs a < b, got ({a}, {b})")));
    }
    if !(tol >= 0.0) {
        return Err(Error::Config(format!("tolerance must be nonnegative, got {tol}")));
    }
    let kinds = [
        MeanKind::H,
        MeanKind::G,
        MeanKind::L,
        MeanKind::I,
        MeanKind::A,
        MeanKind::K,
    ];
    let means = kinds.iter().map(|&k| mean(k, a, b)).collect::<Result<Vec<_>>>()?;
    let links: Vec<Link> = means
        .windows(2)
        .map(|w| {
            let (lhs, rhs) = (w[0].value, w[1].value);
            let margin = rhs - lhs;
            let verdict = if margin >= -tol * lhs.abs().max(rhs.abs()) {
                InequalityVerdict::Satisfied
            } else {
                InequalityVerdict::Violated
            };
            Link {
                name: format!("{} <= {}", w[0].kind, w[1].kind),
                lhs,
                rhs,
                margin,
                verdict,
            }
        })
        .collect();
    let holds = links.iter().all(|l| l.verdict == InequalityVerdict::Satisfied);
    Ok(ChainReport {
        a,
        b,
        tol,
        means,
        links,
        holds,
    })
}
