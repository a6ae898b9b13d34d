mod common;

use common::{rel_close, rng, tanh_sinh_on, uniform};
use hhaudit::means::LIMIT_WINDOW;
use hhaudit::{mean, verify_chain, verify_proposition, Error, InequalityVerdict, MeanKind, TheoremId};
use proptest::prelude::*;

use MeanKind::*;

fn m(kind: MeanKind, a: f64, b: f64) -> f64 {
    mean(kind, a, b).unwrap().value
}

// Averages over [a, b]: Lₚ = (⨍ xᵖ)^{1/p}, G = L₋₂, L = 1/⨍ x⁻¹, I = exp ⨍ ln x.
fn integral_oracle(kind: MeanKind, a: f64, b: f64) -> f64 {
    let avg = |f: &dyn Fn(f64) -> f64| tanh_sinh_on(a, b, f) / (b - a);
    match kind {
        A => avg(&|x| x),
        G => avg(&|x| x.powi(-2)).powf(-0.5),
        L => 1.0 / avg(&|x| 1.0 / x),
        I => avg(&|x| x.ln()).exp(),
        Lp(p) => avg(&|x| x.powf(p)).powf(1.0 / p),
        K | H => unreachable!("not an average of a power"),
    }
}

#[test]
fn examples() {
    assert_eq!(m(A, 1.0, 3.0), 2.0);
    assert!(rel_close(m(Lp(1.0), 1.0, 2.0), 1.5, 1e-15));
    assert!(rel_close(m(Lp(2.0), 1.0, 2.0), (7.0f64 / 3.0).sqrt(), 1e-15));
    assert!(matches!(mean(G, 0.0, 1.0), Err(Error::Domain(_))));
    assert!(matches!(mean(A, -1.0, 1.0), Err(Error::Domain(_))));
    for kind in [A, G, K, H, L, I, Lp(2.0), Lp(-3.0)] {
        assert_eq!(m(kind, 2.5, 2.5), 2.5, "{kind}");
    }
}

#[test]
fn agrees_with_integral_oracle() {
    for (a, b) in [(1.0, 2.0), (0.1, 7.0), (3.0, 3.5), (1e-3, 1.0)] {
        for kind in [A, G, L, I, Lp(2.0), Lp(-2.0), Lp(0.5), Lp(-0.5), Lp(3.0)] {
            let (got, want) = (m(kind, a, b), integral_oracle(kind, a, b));
            assert!(rel_close(got, want, 1e-12), "{kind}({a}, {b}) = {got}, oracle {want}");
        }
    }
    assert!(rel_close(m(K, 1.0, 2.0), 2.5f64.sqrt(), 1e-15));
    assert!(rel_close(m(H, 1.0, 2.0), 4.0 / 3.0, 1e-15));
}

#[test]
fn proposition_examples() {
    let r = verify_proposition(TheoremId::Prop306, 1.0, 4.0, None).unwrap();
    assert_eq!((r.lhs, r.rhs, r.verdict), (2.0, 2.5, InequalityVerdict::Satisfied));

    let r = verify_proposition(TheoremId::Prop305, 1.0, 2.0, Some(1)).unwrap();
    assert!(rel_close(r.lhs, 7.0 / 3.0, 1e-15) && rel_close(r.rhs, 9.0 / 4.0, 1e-15));
    assert_eq!(r.verdict, InequalityVerdict::Violated);

    let r = verify_proposition(TheoremId::Prop302, 1.0, 2.0, Some(1)).unwrap();
    assert!(rel_close(r.lhs, 2.0, 1e-15) && rel_close(r.rhs, 5.0, 1e-15));
    assert_eq!(r.verdict, InequalityVerdict::Satisfied);

    // n = 1 on [1, 2]: 4/3·5/2 + 2·2·1 against 7/3 + 5/2, the product inequality at f = g = x
    let r = verify_proposition(TheoremId::Prop301, 1.0, 2.0, Some(1)).unwrap();
    assert!(rel_close(r.lhs, 22.0 / 3.0, 1e-15) && rel_close(r.rhs, 29.0 / 6.0, 1e-15));
    assert_eq!(r.verdict, InequalityVerdict::Violated);

    let r = verify_proposition(TheoremId::Prop303, 0.4, 0.5, None).unwrap();
    assert!(rel_close(r.lhs, 5.0, 1e-15));
    assert!(rel_close(r.rhs, (0.205f64).sqrt(), 1e-15));
    assert!((r.rhs - 0.45277).abs() < 1e-5);
    assert_eq!(r.verdict, InequalityVerdict::Violated);
    assert_eq!(r.quad_error, 0.0);

    assert!(matches!(
        verify_proposition(TheoremId::Prop306, 2.0, 1.0, None),
        Err(Error::Domain(_))
    ));
    assert!(matches!(
        verify_proposition(TheoremId::Prop301, 1.0, 2.0, None),
        Err(Error::Config(_))
    ));
    assert!(matches!(
        verify_proposition(TheoremId::Th1, 1.0, 2.0, Some(1)),
        Err(Error::Config(_))
    ));
}

// L₂ₙ²ⁿ is ⨍ x²ⁿ; the oracle integrates instead of using the closed form.
#[test]
fn propositions_match_integral_forms() {
    for (a, b) in [(1.0, 2.0), (0.3, 0.9), (2.0, 7.0)] {
        for n in [1, 2, 3, -1, -2] {
            let avg = tanh_sinh_on(a, b, |x: f64| x.powi(2 * n)) / (b - a);
            let a2n = (a.powi(2 * n) + b.powi(2 * n)) / 2.0;
            let g2 = (a * b).powi(n);
            let r = verify_proposition(TheoremId::Prop305, a, b, Some(n)).unwrap();
            assert!(rel_close(r.lhs, avg, 1e-12), "305 n={n} [{a},{b}]: {} vs {avg}", r.lhs);
            assert!(rel_close(r.rhs, (a2n + g2) / 2.0, 1e-14));

            let r = verify_proposition(TheoremId::Prop301, a, b, Some(n)).unwrap();
            let lhs =
                4.0 / 3.0 * (a.powi(n + 1) + b.powi(n + 1)) / 2.0 + 2.0 * a * b * (a.powi(n - 1) + b.powi(n - 1)) / 2.0;
            assert!(rel_close(r.lhs, lhs, 1e-14));
            assert!(rel_close(r.rhs, avg + a2n, 1e-12));

            let r = verify_proposition(TheoremId::Prop304, a, b, Some(n)).unwrap();
            assert!(rel_close(r.lhs, g2, 1e-14) && rel_close(r.rhs, a2n, 1e-14));
        }
    }
    assert!(matches!(
        verify_proposition(TheoremId::Prop302, 1.0, 2.0, Some(0)),
        Err(Error::Domain(_))
    ));
}

#[test]
fn chain_examples() {
    let r = verify_chain(1.0, 2.0, 1e-12).unwrap();
    assert!(r.holds);
    assert_eq!(r.links.len(), 5);
    assert!(r.links.iter().all(|l| l.margin >= 0.0));
    let want = [
        4.0 / 3.0,
        2f64.sqrt(),
        1.0 / 2f64.ln(),
        4.0 / std::f64::consts::E,
        1.5,
        2.5f64.sqrt(),
    ];
    for (got, w) in r.means.iter().zip(want) {
        assert!(rel_close(got.value, w, 1e-14), "{}: {} vs {w}", got.kind, got.value);
    }
    let r = verify_chain(1.0, 1e6, 1e-12).unwrap();
    assert!(r.holds && r.links.iter().all(|l| l.margin >= 0.0));

    let r = verify_chain(1.0, 1.0 + 1e-9, 1e-12).unwrap();
    assert!(r.holds);
    assert!(r.links.iter().all(|l| l.margin.abs() < 1e-9));
    assert!(matches!(verify_chain(2.0, 1.0, 1e-12), Err(Error::Domain(_))));
}

#[test]
fn lp_is_monotone_in_p() {
    let mut rng = rng(11);
    let grid = [-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0, 3.0];
    for _ in 0..100 {
        let a = uniform(&mut rng, 0.01, 10.0);
        let b = a * uniform(&mut rng, 1.0, 100.0);
        let vals: Vec<f64> = grid.iter().map(|&p| m(Lp(p), a, b)).collect();
        for w in vals.windows(2) {
            assert!(w[1] >= w[0] * (1.0 - 1e-12), "({a}, {b}): {vals:?}");
        }
    }
}

#[test]
fn lp_limits() {
    for (a, b) in [(1.0, 2.0), (0.5, 30.0), (4.0, 4.1)] {
        for (p0, limit) in [(0.0, I), (-1.0, L), (1.0, A)] {
            let want = m(limit, a, b);
            assert_eq!(m(Lp(p0), a, b), want);
            for d in [LIMIT_WINDOW, -LIMIT_WINDOW, 1e-6, -1e-6] {
                let got = m(Lp(p0 + d), a, b);
                assert!(
                    (got - want).abs() <= 1e-6 * want,
                    "L_{}({a},{b}) = {got} vs {want}",
                    p0 + d
                );
            }
        }
    }
}

fn pair() -> impl Strategy<Value = (f64, f64)> {
    (1e-3f64..1e3, 1e-3f64..1e3)
}

fn kind() -> impl Strategy<Value = MeanKind> {
    prop_oneof![
        Just(A),
        Just(G),
        Just(K),
        Just(H),
        Just(L),
        Just(I),
        (-4.0f64..4.0).prop_map(Lp),
    ]
}

proptest! {
    #[test]
    fn means_are_symmetric(k in kind(), (a, b) in pair()) {
        let (x, y) = (m(k, a, b), m(k, b, a));
        prop_assert!((x - y).abs() <= 2.0 * f64::EPSILON * x, "{k}: {x} vs {y}");
    }

    #[test]
    fn means_are_internal(k in kind(), (a, b) in pair()) {
        let v = m(k, a, b);
        prop_assert!(v >= a.min(b) && v <= a.max(b), "{k}({a}, {b}) = {v}");
    }

    #[test]
    fn am_gm_propositions_hold(a in 1e-3f64..1e3, r in 1.0001f64..100.0, n in prop_oneof![-4i32..=-1, 1i32..=4]) {
        let b = a * r;
        let s = verify_proposition(TheoremId::Prop306, a, b, None).unwrap();
        prop_assert_eq!(s.verdict, InequalityVerdict::Satisfied);
        let s = verify_proposition(TheoremId::Prop304, a, b, Some(n)).unwrap();
        prop_assert_eq!(s.verdict, InequalityVerdict::Satisfied);
    }

    #[test]
    fn chain_holds_everywhere(a in 1e-3f64..1e3, r in 1.0f64..1e4) {
        let b = a * r;
        prop_assume!(b > a);
        prop_assert!(verify_chain(a, b, 1e-12).unwrap().holds);
    }
}
