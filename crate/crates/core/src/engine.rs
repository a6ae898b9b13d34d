//! Both sides of each inequality, its hypotheses, and a margin-based verdict.
//!
//! Every theorem is evaluated for a pair of nonnegative functions `f`, `g` on
//! `[a, b]` and a kernel `h`. Integrals carry error estimates which are
//! folded into `quad_error`; a report is `Violated` only when the deficit
//! exceeds that error plus a relative strictness band.
//!
//! Two theorems have a `Derived` variant next to the `Stated` one:
//!
//! * `TH1`: left-hand coefficients `(2a+b)/6`, `(a+2b)/6`, obtained by
//!   integrating `α(αa+(1−α)b)` and `(1−α)(αa+(1−α)b)` over [0, 1].
//! * `TH4`: right-hand side `fg(mid) + h(1)²(M+N)/4`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::functions::{check_class, make_function, Interval, ScalarFunction};
use crate::kernels::{kernel_properties, make_kernel, HKernel, KernelFamily};
use crate::quadrature::{beta, integrate, moment, Moment, QuadratureResult};
use crate::sampling::{derive_seed, PropertyId, PropertyReport, Sampler, Verdict};

/// Relative band a deficit must clear, beyond integration error, to count as
/// a violation.
pub const STRICTNESS: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    #[serde(rename = "HADAMARD")]
    Hadamard,
    #[serde(rename = "TH1")]
    Th1,
    #[serde(rename = "TH2")]
    Th2,
    #[serde(rename = "TH3")]
    Th3,
    #[serde(rename = "TH4")]
    Th4,
    #[serde(rename = "TH5")]
    Th5,
    #[serde(rename = "TH6")]
    Th6,
    #[serde(rename = "PROP301")]
    Prop301,
    #[serde(rename = "PROP302")]
    Prop302,
    #[serde(rename = "PROP303")]
    Prop303,
    #[serde(rename = "PROP304")]
    Prop304,
    #[serde(rename = "PROP305")]
    Prop305,
    #[serde(rename = "PROP306")]
    Prop306,
}

impl TheoremId {
    pub const ALL: [TheoremId; 13] = [
        TheoremId::Hadamard,
        TheoremId::Th1,
        TheoremId::Th2,
        TheoremId::Th3,
        TheoremId::Th4,
        TheoremId::Th5,
        TheoremId::Th6,
        TheoremId::Prop301,
        TheoremId::Prop302,
        TheoremId::Prop303,
        TheoremId::Prop304,
        TheoremId::Prop305,
        TheoremId::Prop306,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Hadamard => "HADAMARD",
            TheoremId::Th1 => "TH1",
            TheoremId::Th2 => "TH2",
            TheoremId::Th3 => "TH3",
            TheoremId::Th4 => "TH4",
            TheoremId::Th5 => "TH5",
            TheoremId::Th6 => "TH6",
            TheoremId::Prop301 => "PROP301",
            TheoremId::Prop302 => "PROP302",
            TheoremId::Prop303 => "PROP303",
            TheoremId::Prop304 => "PROP304",
            TheoremId::Prop305 => "PROP305",
            TheoremId::Prop306 => "PROP306",
        }
    }

    pub fn is_proposition(self) -> bool {
        matches!(
            self,
            TheoremId::Prop301
                | TheoremId::Prop302
                | TheoremId::Prop303
                | TheoremId::Prop304
                | TheoremId::Prop305
                | TheoremId::Prop306
        )
    }

    pub fn has_derived_variant(self) -> bool {
        matches!(self, TheoremId::Th1 | TheoremId::Th4)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let upper = s.trim().to_ascii_uppercase();
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == upper)
            .ok_or_else(|| Error::parse(s, "unknown theorem id"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    #[default]
    Stated,
    Derived,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Stated => "stated",
            Variant::Derived => "derived",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "stated" => Ok(Variant::Stated),
            "derived" => Ok(Variant::Derived),
            _ => Err(Error::parse(s, "variant must be `stated` or `derived`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InequalityVerdict {
    Satisfied,
    Violated,
    Inconclusive,
}

/// `M = f(a)g(a) + f(b)g(b)` and `N = f(a)g(b) + f(b)g(a)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EndpointProducts {
    pub m: f64,
    pub n: f64,
}

impl EndpointProducts {
    pub fn new(f: &ScalarFunction, g: &ScalarFunction, interval: Interval) -> Self {
        let (fa, fb) = (f.eval(interval.a), f.eval(interval.b));
        let (ga, gb) = (g.eval(interval.a), g.eval(interval.b));
        EndpointProducts {
            m: fa * ga + fb * gb,
            n: fa * gb + fb * ga,
        }
    }
}

/// Margin and verdict for `lhs ≤ rhs` with the given integration error.
pub fn classify(lhs: f64, rhs: f64, quad_error: f64) -> (f64, InequalityVerdict) {
    let margin = rhs - lhs;
    let strict = STRICTNESS * (1.0 + lhs.abs() + rhs.abs());
    let verdict = if margin >= -quad_error {
        InequalityVerdict::Satisfied
    } else if margin < -quad_error - strict {
        InequalityVerdict::Violated
    } else {
        InequalityVerdict::Inconclusive
    };
    (margin, verdict)
}

/// One link of a chained inequality (used for the two halves of Hadamard's).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Link {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub verdict: InequalityVerdict,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HypothesisSummary {
    pub name: String,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub proof_only: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InequalityReport {
    pub theorem: TheoremId,
    pub variant: Variant,
    pub hypothesis_results: Vec<HypothesisSummary>,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub quad_error: f64,
    pub verdict: InequalityVerdict,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub links: Vec<Link>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HypothesisResult {
    pub name: String,
    pub proof_only: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub report: PropertyReport,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HypothesisReport {
    pub theorem: TheoremId,
    pub results: Vec<HypothesisResult>,
}

impl HypothesisReport {
    pub fn all_hold(&self) -> bool {
        self.results.iter().all(|r| r.report.holds())
    }

    pub fn summaries(&self) -> Vec<HypothesisSummary> {
        self.results
            .iter()
            .map(|r| HypothesisSummary {
                name: r.name.clone(),
                verdict: r.report.verdict,
                proof_only: r.proof_only,
            })
            .collect()
    }
}

/// The inputs of one theorem instance.
#[derive(Debug, Clone, PartialEq)]
pub struct Problem {
    pub f: ScalarFunction,
    pub g: ScalarFunction,
    pub h: HKernel,
    pub interval: Interval,
}

impl Problem {
    pub fn new(f: ScalarFunction, g: ScalarFunction, h: HKernel, interval: Interval) -> Result<Self> {
        for func in [&f, &g] {
            if !func.interval().contains(&interval) {
                return Err(Error::Domain(format!(
                    "{func} is declared on {} which does not contain {interval}",
                    func.interval()
                )));
            }
        }
        Ok(Problem { f, g, h, interval })
    }

    /// Builds both functions on `[a, b]` from their specs.
    pub fn from_specs(f: &str, g: &str, h: &str, a: f64, b: f64) -> Result<Self> {
        let interval = Interval::new(a, b)?;
        Problem::new(
            make_function(f, interval)?,
            make_function(g, interval)?,
            make_kernel(h)?,
            interval,
        )
    }

    pub fn endpoint_products(&self) -> EndpointProducts {
        EndpointProducts::new(&self.f, &self.g, self.interval)
    }
}

enum Check {
    Kernel(PropertyId),
    F(PropertyId),
    G(PropertyId),
    FWithId,
    Pair,
}

struct Hyp {
    name: &'static str,
    check: Check,
    proof_only: bool,
    note: Option<&'static str>,
}

const fn hyp(name: &'static str, check: Check) -> Hyp {
    Hyp {
        name,
        check,
        proof_only: false,
        note: None,
    }
}

fn hypothesis_set(theorem: TheoremId) -> Vec<Hyp> {
    use PropertyId as P;
    let convex = || {
        [
            hyp("h_convex(f)", Check::F(P::HConvex)),
            hyp("h_convex(g)", Check::G(P::HConvex)),
        ]
    };
    let reading = Some("conjunctive reading of (f,g)(x) >= x: both f(x) >= x and g(x) >= x");
    match theorem {
        TheoremId::Hadamard => vec![hyp("convex(f)", Check::FWithId)],
        TheoremId::Th1 => {
            let mut v: Vec<Hyp> = convex().into();
            v.extend([
                hyp("supermultiplicative(h)", Check::Kernel(P::Supermultiplicative)),
                hyp("similarly_ordered(f,g)", Check::Pair),
                Hyp {
                    note: reading,
                    ..hyp("dominates_identity(f)", Check::F(P::DominatesIdentityOnInterval))
                },
                Hyp {
                    note: reading,
                    ..hyp("dominates_identity(g)", Check::G(P::DominatesIdentityOnInterval))
                },
                hyp("dominates_identity(h)", Check::Kernel(P::DominatesIdentity)),
            ]);
            v
        }
        TheoremId::Th2 | TheoremId::Th3 => {
            let mut v: Vec<Hyp> = convex().into();
            v.extend([
                hyp("superadditive(h)", Check::Kernel(P::Superadditive)),
                hyp("nonnegative(h)", Check::Kernel(P::Nonnegative)),
                hyp("dominates_identity(h)", Check::Kernel(P::DominatesIdentity)),
                hyp("similarly_ordered(f,g)", Check::Pair),
            ]);
            v
        }
        TheoremId::Th4 => {
            let mut v: Vec<Hyp> = convex().into();
            v.push(hyp("superadditive(h)", Check::Kernel(P::Superadditive)));
            v
        }
        TheoremId::Th5 => {
            let mut v: Vec<Hyp> = convex().into();
            v.extend([
                hyp("supermultiplicative(h)", Check::Kernel(P::Supermultiplicative)),
                Hyp {
                    proof_only: true,
                    note: Some("used in the proof; the statement's clause is incomplete"),
                    ..hyp("similarly_ordered(f,g)", Check::Pair)
                },
            ]);
            v
        }
        TheoremId::Th6 => {
            let mut v: Vec<Hyp> = convex().into();
            v.extend([
                hyp("supermultiplicative(h)", Check::Kernel(P::Supermultiplicative)),
                hyp("symmetric(f)", Check::F(P::SymmetricAboutMidpoint)),
                hyp("symmetric(g)", Check::G(P::SymmetricAboutMidpoint)),
            ]);
            v
        }
        _ => Vec::new(),
    }
}

fn run_hypotheses(
    theorem: TheoremId,
    problem: &Problem,
    sampler: &Sampler,
    stop_early: bool,
) -> Result<HypothesisReport> {
    let Problem { f, g, h, interval } = problem;
    let mut results = Vec::new();
    let identity = HKernel::identity();
    for (i, hy) in hypothesis_set(theorem).into_iter().enumerate() {
        let s = Sampler {
            seed: derive_seed(sampler.seed, i as u64),
            domain: None,
            ..*sampler
        };
        let report = match hy.check {
            Check::Kernel(p) => kernel_properties(h, p, &s)?,
            Check::F(p) => check_class(p, f, None, Some(h), *interval, &s)?,
            Check::G(p) => check_class(p, g, None, Some(h), *interval, &s)?,
            Check::FWithId => check_class(PropertyId::HConvex, f, None, Some(&identity), *interval, &s)?,
            Check::Pair => check_class(PropertyId::SimilarlyOrdered, f, Some(g), None, *interval, &s)?,
        };
        let failed = !report.holds();
        results.push(HypothesisResult {
            name: hy.name.to_string(),
            proof_only: hy.proof_only,
            note: hy.note.map(str::to_string),
            report,
        });
        if stop_early && failed {
            break;
        }
    }
    Ok(HypothesisReport { theorem, results })
}

/// Runs every hypothesis named for the theorem (plus proof-only ones, flagged).
pub fn check_hypotheses(theorem: TheoremId, problem: &Problem, sampler: &Sampler) -> Result<HypothesisReport> {
    run_hypotheses(theorem, problem, sampler, false)
}

/// Like [`check_hypotheses`] but stops at the first failing hypothesis.
pub fn hypotheses_hold(theorem: TheoremId, problem: &Problem, sampler: &Sampler) -> Result<bool> {
    Ok(run_hypotheses(theorem, problem, sampler, true)?.all_hold())
}

/// Both sides of an inequality before classification.
#[derive(Debug, Clone, PartialEq)]
pub struct Sides {
    pub lhs: f64,
    pub rhs: f64,
    pub quad_error: f64,
    pub links: Vec<Link>,
}

fn need(theorem: TheoremId, h: &HKernel, which: Moment, tol: f64) -> Result<QuadratureResult> {
    moment(h, which, tol).map_err(|e| match e {
        Error::Divergent { moment } => Error::NonEvaluable { theorem, moment },
        other => other,
    })
}

fn mean_of_product(problem: &Problem, tol: f64) -> Result<(f64, f64)> {
    let Problem { f, g, interval, .. } = problem;
    let r = integrate(|x| f.eval(x) * g.eval(x), interval.a, interval.b, tol)?;
    let w = interval.width();
    Ok((r.value / w, r.error_estimate / w))
}

/// Evaluates both sides without running hypotheses.
pub fn evaluate_sides(theorem: TheoremId, variant: Variant, problem: &Problem, tol: f64) -> Result<Sides> {
    if theorem.is_proposition() {
        return Err(Error::Config(format!(
            "{theorem} is a special-means proposition; use means::verify_proposition"
        )));
    }
    if variant == Variant::Derived && !theorem.has_derived_variant() {
        return Err(Error::Config(format!("{theorem} has no derived variant")));
    }
    if !(tol > 0.0) {
        return Err(Error::Config(format!("tolerance must be positive, got {tol}")));
    }
    let Problem { f, g, h, interval } = problem;
    let (a, b) = (interval.a, interval.b);
    let mid = interval.midpoint();
    let fg = |x: f64| f.eval(x) * g.eval(x);
    let EndpointProducts { m, n } = problem.endpoint_products();

    let sides = match theorem {
        TheoremId::Hadamard => {
            let r = integrate(|x| f.eval(x), a, b, tol)?;
            let w = interval.width();
            let mean = r.value / w;
            let err = r.error_estimate / w;
            let at_mid = f.eval(mid);
            let chord = 0.5 * (f.eval(a) + f.eval(b));
            let link = |name: &str, lhs: f64, rhs: f64| {
                let (margin, verdict) = classify(lhs, rhs, err);
                Link {
                    name: name.to_string(),
                    lhs,
                    rhs,
                    margin,
                    verdict,
                }
            };
            let links = vec![
                link("midpoint <= mean", at_mid, mean),
                link("mean <= chord", mean, chord),
            ];
            let worst = if links[0].margin <= links[1].margin {
                &links[0]
            } else {
                &links[1]
            };
            Sides {
                lhs: worst.lhs,
                rhs: worst.rhs,
                quad_error: err,
                links,
            }
        }
        TheoremId::Th1 => {
            let sq = need(theorem, h, Moment::Sq, tol)?;
            let cross = need(theorem, h, Moment::Cross, tol)?;
            let compsq = need(theorem, h, Moment::CompSq, tol)?;
            let (mean, mean_err) = mean_of_product(problem, tol)?;
            let (ca, cb) = match variant {
                Variant::Stated => ((2.0 * a + 3.0 * b) / 6.0, (3.0 * a + 2.0 * b) / 6.0),
                Variant::Derived => ((2.0 * a + b) / 6.0, (a + 2.0 * b) / 6.0),
            };
            let lhs = ca * (f.eval(a) + g.eval(a)) + cb * (f.eval(b) + g.eval(b));
            let (fga, fgb) = (fg(a), fg(b));
            let rhs = mean + fga * (cross.value + sq.value) + fgb * (cross.value + compsq.value);
            let quad_error = mean_err
                + fga.abs() * (cross.error_estimate + sq.error_estimate)
                + fgb.abs() * (cross.error_estimate + compsq.error_estimate);
            Sides {
                lhs,
                rhs,
                quad_error,
                links: vec![],
            }
        }
        TheoremId::Th2 | TheoremId::Th3 => {
            let lin = need(theorem, h, Moment::Lin, tol)?;
            let comp = need(theorem, h, Moment::Comp, tol)?;
            let lhs = if theorem == TheoremId::Th2 {
                m / 6.0 + n / 3.0
            } else {
                m / 3.0 + n / 6.0
            };
            let h1 = h.h_one();
            let (fga, fgb) = (fg(a), fg(b));
            let rhs = h1 * (fga * lin.value + fgb * comp.value);
            let quad_error = h1.abs() * (fga.abs() * lin.error_estimate + fgb.abs() * comp.error_estimate);
            Sides {
                lhs,
                rhs,
                quad_error,
                links: vec![],
            }
        }
        TheoremId::Th4 => {
            let lin = need(theorem, h, Moment::Lin, tol)?;
            let comp = need(theorem, h, Moment::Comp, tol)?;
            let bracket = f.eval(mid) * (g.eval(a) + g.eval(b)) / 2.0 + g.eval(mid) * (f.eval(a) + f.eval(b)) / 2.0;
            let lhs = bracket * (lin.value + comp.value);
            let h1 = h.h_one();
            let tail = h1 * h1 * (m + n);
            let rhs = fg(mid)
                + match variant {
                    Variant::Stated => tail,
                    Variant::Derived => tail / 4.0,
                };
            let quad_error = bracket.abs() * (lin.error_estimate + comp.error_estimate);
            Sides {
                lhs,
                rhs,
                quad_error,
                links: vec![],
            }
        }
        TheoremId::Th5 | TheoremId::Th6 => {
            let sq = need(theorem, h, Moment::Sq, tol)?;
            let cross = need(theorem, h, Moment::Cross, tol)?;
            let compsq = need(theorem, h, Moment::CompSq, tol)?;
            let bracket = sq.value + 2.0 * cross.value + compsq.value;
            let bracket_err = sq.error_estimate + 2.0 * cross.error_estimate + compsq.error_estimate;
            if theorem == TheoremId::Th5 {
                // product form: 2·fg(mid) ≤ M·bracket, so M = 0 is harmless
                Sides {
                    lhs: 2.0 * fg(mid),
                    rhs: m * bracket,
                    quad_error: m.abs() * bracket_err,
                    links: vec![],
                }
            } else {
                let (mean, mean_err) = mean_of_product(problem, tol)?;
                let scale = (m + n) / 4.0;
                Sides {
                    lhs: mean,
                    rhs: scale * bracket,
                    quad_error: mean_err + scale.abs() * bracket_err,
                    links: vec![],
                }
            }
        }
        _ => unreachable!("propositions rejected above"),
    };
    Ok(sides)
}

/// Evaluates an inequality with hypotheses sampled by `Sampler::default()`.
pub fn evaluate(theorem: TheoremId, variant: Variant, problem: &Problem, tol: f64) -> Result<InequalityReport> {
    evaluate_with(theorem, variant, problem, tol, &Sampler::default())
}

/// Evaluates an inequality; hypotheses annotate the report but never change
/// its verdict.
pub fn evaluate_with(
    theorem: TheoremId,
    variant: Variant,
    problem: &Problem,
    tol: f64,
    sampler: &Sampler,
) -> Result<InequalityReport> {
    let sides = evaluate_sides(theorem, variant, problem, tol)?;
    let hypotheses = check_hypotheses(theorem, problem, sampler)?;
    Ok(report_from_sides(theorem, variant, sides, hypotheses.summaries()))
}

pub(crate) fn report_from_sides(
    theorem: TheoremId,
    variant: Variant,
    sides: Sides,
    hypothesis_results: Vec<HypothesisSummary>,
) -> InequalityReport {
    let verdict = if sides.links.is_empty() {
        classify(sides.lhs, sides.rhs, sides.quad_error).1
    } else if sides.links.iter().any(|l| l.verdict == InequalityVerdict::Violated) {
        InequalityVerdict::Violated
    } else if sides.links.iter().any(|l| l.verdict == InequalityVerdict::Inconclusive) {
        InequalityVerdict::Inconclusive
    } else {
        InequalityVerdict::Satisfied
    };
    InequalityReport {
        theorem,
        variant,
        hypothesis_results,
        lhs: sides.lhs,
        rhs: sides.rhs,
        margin: sides.rhs - sides.lhs,
        quad_error: sides.quad_error,
        verdict,
        links: sides.links,
    }
}

/// Kernel families for which the corollaries give closed forms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CorollaryKernel {
    One,
    Identity,
    Power(f64),
}

impl CorollaryKernel {
    pub fn from_kernel(h: &HKernel) -> Result<Self> {
        match h.family() {
            KernelFamily::One => Ok(CorollaryKernel::One),
            KernelFamily::Identity => Ok(CorollaryKernel::Identity),
            KernelFamily::Power(s) => Ok(CorollaryKernel::Power(*s)),
            _ => Err(Error::Config(format!("no closed form for kernel {h}"))),
        }
    }
}

const CLOSED_FORM_TOL: f64 = 1e-13;

/// The corollary closed form of the right-hand side (product form for TH5).
///
/// For `pow:s` the cross moment is `B(s+1, s+1)`; see
/// [`crate::quadrature::adjudicate_bracket`] for the doubled-argument reading.
pub fn closed_form_rhs(
    theorem: TheoremId,
    kernel: CorollaryKernel,
    f: &ScalarFunction,
    g: &ScalarFunction,
    interval: Interval,
) -> Result<f64> {
    let EndpointProducts { m, n } = EndpointProducts::new(f, g, interval);
    let mean_fg = || -> Result<f64> {
        let r = integrate(|x| f.eval(x) * g.eval(x), interval.a, interval.b, CLOSED_FORM_TOL)?;
        Ok(r.value / interval.width())
    };
    // s-convex bracket ∫ t^{2s} + 2t^s(1−t)^s + (1−t)^{2s}
    let bracket = |s: f64| -> Result<f64> { Ok(2.0 / (2.0 * s + 1.0) + 2.0 * beta(s + 1.0, s + 1.0)?) };
    use CorollaryKernel as K;
    match (theorem, kernel) {
        (TheoremId::Th1, K::One) => Ok(mean_fg()? + 2.0 * m),
        (TheoremId::Th1, K::Identity) => Ok(mean_fg()? + m / 2.0),
        (TheoremId::Th1, K::Power(s)) => Ok(mean_fg()? + m * (beta(s + 1.0, s + 1.0)? + beta(2.0 * s + 1.0, 1.0)?)),
        (TheoremId::Th2 | TheoremId::Th3, K::One) => Ok(m),
        (TheoremId::Th2 | TheoremId::Th3, K::Identity) => Ok(m / 2.0),
        (TheoremId::Th2 | TheoremId::Th3, K::Power(s)) => Ok(m / (s + 1.0)),
        (TheoremId::Th4, _) => {
            let mid = interval.midpoint();
            Ok(f.eval(mid) * g.eval(mid) + m + n)
        }
        (TheoremId::Th5, K::One) => Ok(4.0 * m),
        (TheoremId::Th5, K::Identity) => Ok(m),
        (TheoremId::Th5, K::Power(s)) => Ok(m * bracket(s)?),
        (TheoremId::Th6, K::One) => Ok(m + n),
        (TheoremId::Th6, K::Identity) => Ok((m + n) / 4.0),
        (TheoremId::Th6, K::Power(s)) => Ok((m + n) / 4.0 * bracket(s)?),
        (other, _) => Err(Error::Config(format!("{other} has no corollary closed form"))),
    }
}
