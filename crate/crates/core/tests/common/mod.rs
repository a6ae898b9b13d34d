//! Independent oracles shared by the integration tests.
//!
//! The library integrates with Gauss–Kronrod and computes Beta through
//! log-Gamma; the oracles here use tanh-sinh quadrature and closed-form
//! antiderivatives instead, so agreement is evidence rather than repetition.

#![allow(dead_code)]

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// ∫₀¹ f(t, 1−t) dt by tanh-sinh quadrature. `f` receives both `t` and
/// `1 − t` so integrands singular at either endpoint keep full precision.
pub fn tanh_sinh<F: Fn(f64, f64) -> f64>(f: F) -> f64 {
    let node = |u: f64| -> (f64, f64, f64) {
        let s = PI * u.sinh();
        let t = 1.0 / (1.0 + (-s).exp());
        let c = 1.0 / (1.0 + s.exp());
        let w = PI * u.cosh() * t * c;
        (t, c, w)
    };
    // Σ over u = start, start + step, ... and their mirrors
    let sum_at = |start: f64, step: f64| -> f64 {
        let mut sum = 0.0;
        let mut k = 0usize;
        loop {
            let u = start + k as f64 * step;
            if u > 4.5 {
                break;
            }
            for v in if u == 0.0 { vec![0.0] } else { vec![u, -u] } {
                let (t, c, w) = node(v);
                if t > 0.0 && c > 0.0 && w > 0.0 {
                    let y = w * f(t, c);
                    if y.is_finite() {
                        sum += y;
                    }
                }
            }
            k += 1;
        }
        sum
    };
    let mut h = 0.5;
    let mut sum = sum_at(0.0, h);
    let mut estimate = h * sum;
    for _ in 0..12 {
        // add the midpoints of the previous level
        sum += sum_at(h / 2.0, h);
        h /= 2.0;
        let next = h * sum;
        if (next - estimate).abs() <= 1e-15 * next.abs().max(1e-300) {
            return next;
        }
        estimate = next;
    }
    estimate
}

/// ∫ₐᵇ f by tanh-sinh after mapping to [0, 1].
pub fn tanh_sinh_on<F: Fn(f64) -> f64>(a: f64, b: f64, f: F) -> f64 {
    let w = b - a;
    w * tanh_sinh(|t, c| f(if t <= 0.5 { a + w * t } else { b - w * c }))
}

/// B(x, y) = ∫₀¹ t^{x−1} (1−t)^{y−1} dt.
pub fn beta_oracle(x: f64, y: f64) -> f64 {
    tanh_sinh(|t, c| t.powf(x - 1.0) * c.powf(y - 1.0))
}

pub fn rel_close(x: f64, y: f64, tol: f64) -> bool {
    (x - y).abs() <= tol * (1.0 + x.abs().max(y.abs()))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    lo + (hi - lo) * rng.random::<f64>()
}

/// A test function as a spec string plus an independent closed form.
pub struct TestFn {
    pub spec: String,
    pub eval: Box<dyn Fn(f64) -> f64 + Send + Sync>,
}

/// Draws a nonnegative function valid on intervals inside (0, ∞): pow:n for
/// n ∈ {1, 2, 3, -1}, exp:c, a quadratic with nonnegative coefficients,
/// recip, or the midpoint-centred square on `[a, b]`.
pub fn random_fn(rng: &mut ChaCha8Rng, a: f64, b: f64) -> TestFn {
    match rng.random_range(0..6) {
        0 => {
            let n = [1, 2, 3, -1][rng.random_range(0..4)];
            TestFn {
                spec: format!("pow:{n}"),
                eval: Box::new(move |x| x.powi(n)),
            }
        }
        1 => {
            let c = uniform(rng, -1.0, 1.0);
            TestFn {
                spec: format!("exp:{c}"),
                eval: Box::new(move |x| (c * x).exp()),
            }
        }
        2 => {
            let cs = [uniform(rng, 0.0, 2.0), uniform(rng, 0.0, 2.0), uniform(rng, 0.0, 2.0)];
            TestFn {
                spec: format!("poly:{},{},{}", cs[0], cs[1], cs[2]),
                eval: Box::new(move |x| cs[0] + cs[1] * x + cs[2] * x * x),
            }
        }
        3 => TestFn {
            spec: "recip".into(),
            eval: Box::new(|x| 1.0 / x),
        },
        4 => {
            let m = 0.5 * (a + b);
            TestFn {
                spec: "symquad".into(),
                eval: Box::new(move |x| (x - m) * (x - m)),
            }
        }
        _ => {
            let c = uniform(rng, 0.0, 3.0);
            TestFn {
                spec: format!("poly:{c}"),
                eval: Box::new(move |_| c),
            }
        }
    }
}
