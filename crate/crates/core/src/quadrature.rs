//! Adaptive quadrature, the Euler Beta function, and the kernel moments
//! `∫₀¹ h(·) dt` that appear on the right-hand sides of the inequalities.

use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kernels::HKernel;

/// Bisection depth beyond which a segment is not split further.
pub const MAX_DEPTH: u32 = 60;
const MAX_SEGMENTS: usize = 2000;

// 15-point Kronrod abscissae on [-1, 1] (non-negative half) with the
// embedded 7-point Gauss weights on the odd-indexed nodes.
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.000_000_000_000_000_000_000_000_000_000_000,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: usize,
}

#[derive(Debug, Clone, Copy)]
struct Segment {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
    /// Error the rule cannot get below because of rounding.
    floor: f64,
    depth: u32,
}

fn rescale_error(err: f64, resabs: f64, resasc: f64) -> f64 {
    let mut err = err.abs();
    if resasc != 0.0 && err != 0.0 {
        let scale = (200.0 * err / resasc).powf(1.5);
        err = if scale < 1.0 { resasc * scale } else { resasc };
    }
    if resabs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * resabs);
    }
    err
}

fn gauss_kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, depth: u32) -> Result<Segment> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let checked = |x: f64| -> Result<f64> {
        let v = f(x);
        if v.is_finite() {
            Ok(v)
        } else {
            Err(Error::NonFinite { x, value: v })
        }
    };

    let fc = checked(center)?;
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut resabs = fc.abs() * WGK[7];
    let mut fv = [(0.0, 0.0); 7];
    for (j, pair) in fv.iter_mut().enumerate() {
        let dx = half * XGK[j];
        let f1 = checked(center - dx)?;
        let f2 = checked(center + dx)?;
        *pair = (f1, f2);
        kronrod += WGK[j] * (f1 + f2);
        resabs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * kronrod;
    let mut resasc = WGK[7] * (fc - mean).abs();
    for (j, (f1, f2)) in fv.iter().enumerate() {
        resasc += WGK[j] * ((f1 - mean).abs() + (f2 - mean).abs());
    }
    let half = half.abs();
    let resabs = resabs * half;
    let resasc = resasc * half;
    Ok(Segment {
        a,
        b,
        value: kronrod * half,
        error: rescale_error((kronrod - gauss) * half, resabs, resasc),
        floor: 50.0 * f64::EPSILON * resabs,
        depth,
    })
}

/// Globally adaptive Gauss-Kronrod (7/15) quadrature with bisection.
///
/// Iterates until the summed error estimate is at most `tol`, or until every
/// remaining segment is limited by rounding. A segment that would need
/// splitting beyond [`MAX_DEPTH`] levels yields [`Error::Convergence`] with the
/// best estimate so far.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<QuadratureResult> {
    if !(tol > 0.0) {
        return Err(Error::Config(format!("tolerance must be positive, got {tol}")));
    }
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::Domain(format!(
            "integration limits must be finite, got [{a}, {b}]"
        )));
    }
    if a == b {
        return Ok(QuadratureResult {
            value: 0.0,
            error_estimate: 0.0,
            evaluations: 0,
        });
    }

    let mut segments = vec![gauss_kronrod(&f, a, b, 0)?];
    let mut evaluations = 15;
    loop {
        let total_error: f64 = segments.iter().map(|s| s.error).sum();
        let total_floor: f64 = segments.iter().map(|s| s.floor).sum();
        let worst = segments
            .iter()
            .enumerate()
            .filter(|(_, s)| s.error > 2.0 * s.floor)
            .max_by(|(_, x), (_, y)| x.error.total_cmp(&y.error))
            .map(|(i, _)| i);

        let done = total_error <= tol.max(2.0 * total_floor) || worst.is_none();
        if done {
            segments.sort_by(|x, y| x.a.total_cmp(&y.a));
            return Ok(QuadratureResult {
                value: segments.iter().map(|s| s.value).sum(),
                error_estimate: total_error,
                evaluations,
            });
        }

        let i = worst.expect("checked above");
        let seg = segments[i];
        if seg.depth >= MAX_DEPTH || segments.len() >= MAX_SEGMENTS {
            return Err(Error::Convergence {
                estimate: segments.iter().map(|s| s.value).sum(),
                error_estimate: total_error,
            });
        }
        let mid = 0.5 * (seg.a + seg.b);
        segments[i] = gauss_kronrod(&f, seg.a, mid, seg.depth + 1)?;
        segments.push(gauss_kronrod(&f, mid, seg.b, seg.depth + 1)?);
        evaluations += 30;
    }
}

/// Natural logarithm of the Gamma function for x > 0 (Lanczos, g = 7).
pub fn ln_gamma(x: f64) -> f64 {
    const G: f64 = 7.0;
    const COEF: [f64; 9] = [
        0.999_999_999_999_809_93,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_13,
        -176.615_029_162_140_59,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_571_6e-6,
        1.505_632_735_149_311_6e-7,
    ];
    if x < 0.5 {
        // reflection
        return (PI / (PI * x).sin().abs()).ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut acc = COEF[0];
    for (i, c) in COEF.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + G + 0.5;
    0.5 * (2.0 * PI).ln() + (x + 0.5) * t.ln() - t + acc.ln()
}

/// Euler Beta function `B(x, y) = Γ(x)Γ(y)/Γ(x+y)` via log-Gamma.
pub fn beta(x: f64, y: f64) -> Result<f64> {
    if !(x > 0.0 && y > 0.0 && x.is_finite() && y.is_finite()) {
        return Err(Error::Domain(format!(
            "beta requires positive finite arguments, got ({x}, {y})"
        )));
    }
    Ok((ln_gamma(x) + ln_gamma(y) - ln_gamma(x + y)).exp())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Moment {
    /// ∫₀¹ h(t²) dt
    #[serde(rename = "m_sq")]
    Sq,
    /// ∫₀¹ h(t(1−t)) dt
    #[serde(rename = "m_cross")]
    Cross,
    /// ∫₀¹ h((1−t)²) dt
    #[serde(rename = "m_compsq")]
    CompSq,
    /// ∫₀¹ h(t) dt
    #[serde(rename = "m_lin")]
    Lin,
    /// ∫₀¹ h(1−t) dt
    #[serde(rename = "m_comp")]
    Comp,
}

impl Moment {
    pub const ALL: [Moment; 5] = [Moment::Sq, Moment::Cross, Moment::CompSq, Moment::Lin, Moment::Comp];

    pub fn name(self) -> &'static str {
        match self {
            Moment::Sq => "m_sq",
            Moment::Cross => "m_cross",
            Moment::CompSq => "m_compsq",
            Moment::Lin => "m_lin",
            Moment::Comp => "m_comp",
        }
    }

    /// Argument of `h` given `t` and `s = 1 − t`.
    fn argument(self, t: f64, s: f64) -> f64 {
        match self {
            Moment::Sq => t * t,
            Moment::Cross => t * s,
            Moment::CompSq => s * s,
            Moment::Lin => t,
            Moment::Comp => s,
        }
    }

    /// Leading exponents of the integrand at t = 0 and t = 1 (None when the
    /// argument of h stays away from zero there).
    fn endpoint_exponents(self, e: f64) -> (Option<f64>, Option<f64>) {
        match self {
            Moment::Sq => (Some(2.0 * e), None),
            Moment::Cross => (Some(e), Some(e)),
            Moment::CompSq => (None, Some(2.0 * e)),
            Moment::Lin => (Some(e), None),
            Moment::Comp => (None, Some(e)),
        }
    }
}

impl fmt::Display for Moment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Order `m` of the substitution `t = u^m` that flattens `t^p` at an endpoint.
fn substitution_order(p: Option<f64>) -> i32 {
    match p {
        Some(p) if p < 0.0 || p.fract() != 0.0 => ((2.0 / (p + 1.0)).ceil() as i32).clamp(1, 32),
        _ => 1,
    }
}

/// Integrates `phi(t, 1 − t)` over [0, 1/2] in the variable `d` = distance to
/// the endpoint, with `d = u^m` when the endpoint is singular.
fn half_integral<F: Fn(f64) -> f64>(phi: F, order: i32, tol: f64) -> Result<QuadratureResult> {
    if order == 1 {
        return integrate(phi, 0.0, 0.5, tol);
    }
    let m = order as f64;
    let upper = 0.5f64.powf(1.0 / m);
    integrate(
        |u| {
            let d = u.powi(order);
            phi(d) * m * u.powi(order - 1)
        },
        0.0,
        upper,
        tol,
    )
}

/// One kernel moment. Divergence is decided from the kernel's exponent at
/// zero; convergent endpoint singularities are removed by substitution.
pub fn moment(h: &HKernel, which: Moment, tol: f64) -> Result<QuadratureResult> {
    let e = h.exponent_at_zero();
    let (left, right) = which.endpoint_exponents(e);
    if left.is_some_and(|p| p <= -1.0) || right.is_some_and(|p| p <= -1.0) {
        return Err(Error::Divergent { moment: which });
    }
    let half_tol = 0.5 * tol;
    // left half: d = t
    let lo = half_integral(
        |d| h.eval(which.argument(d, 1.0 - d)),
        substitution_order(left),
        half_tol,
    )?;
    // right half: d = 1 − t
    let hi = half_integral(
        |d| h.eval(which.argument(1.0 - d, d)),
        substitution_order(right),
        half_tol,
    )?;
    Ok(QuadratureResult {
        value: lo.value + hi.value,
        error_estimate: lo.error_estimate + hi.error_estimate,
        evaluations: lo.evaluations + hi.evaluations,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HMoments {
    pub m_sq: QuadratureResult,
    pub m_cross: QuadratureResult,
    pub m_compsq: QuadratureResult,
    pub m_lin: QuadratureResult,
    pub m_comp: QuadratureResult,
}

impl HMoments {
    pub fn get(&self, which: Moment) -> QuadratureResult {
        match which {
            Moment::Sq => self.m_sq,
            Moment::Cross => self.m_cross,
            Moment::CompSq => self.m_compsq,
            Moment::Lin => self.m_lin,
            Moment::Comp => self.m_comp,
        }
    }
}

/// All five kernel moments; fails on the first divergent one.
pub fn h_moments(h: &HKernel, tol: f64) -> Result<HMoments> {
    Ok(HMoments {
        m_sq: moment(h, Moment::Sq, tol)?,
        m_cross: moment(h, Moment::Cross, tol)?,
        m_compsq: moment(h, Moment::CompSq, tol)?,
        m_lin: moment(h, Moment::Lin, tol)?,
        m_comp: moment(h, Moment::Comp, tol)?,
    })
}

/// Which Beta-function reading of the s-convex bracket
/// `∫₀¹ t^{2s} + 2 t^s(1−t)^s + (1−t)^{2s} dt` a computed value agrees with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BracketReading {
    /// `B(2s+1,1) + 2B(2s+1,2s+1) + B(1,2s+1)`, the doubled-argument reading
    Doubled,
    /// `B(2s+1,1) + 2B(s+1,s+1) + B(1,2s+1)`
    Integral,
    Both,
    Neither,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BracketAdjudication {
    pub s: f64,
    pub quadrature: QuadratureResult,
    pub doubled: f64,
    pub integral: f64,
    pub reading: BracketReading,
}

/// Computes the s-convex bracket by quadrature and reports which closed form
/// it matches within `max(10·error_estimate, 1e-10)`.
pub fn adjudicate_bracket(s: f64, tol: f64) -> Result<BracketAdjudication> {
    let h = HKernel::power(s)?;
    let m = h_moments(&h, tol)?;
    let value = m.m_sq.value + 2.0 * m.m_cross.value + m.m_compsq.value;
    let err = m.m_sq.error_estimate + 2.0 * m.m_cross.error_estimate + m.m_compsq.error_estimate;
    let edge = beta(2.0 * s + 1.0, 1.0)? + beta(1.0, 2.0 * s + 1.0)?;
    let doubled = edge + 2.0 * beta(2.0 * s + 1.0, 2.0 * s + 1.0)?;
    let integral = edge + 2.0 * beta(s + 1.0, s + 1.0)?;
    let band = (10.0 * err).max(1e-10);
    let reading = match ((value - doubled).abs() <= band, (value - integral).abs() <= band) {
        (true, true) => BracketReading::Both,
        (true, false) => BracketReading::Doubled,
        (false, true) => BracketReading::Integral,
        (false, false) => BracketReading::Neither,
    };
    Ok(BracketAdjudication {
        s,
        quadrature: QuadratureResult {
            value,
            error_estimate: err,
            evaluations: m.m_sq.evaluations + m.m_cross.evaluations + m.m_compsq.evaluations,
        },
        doubled,
        integral,
        reading,
    })
}
