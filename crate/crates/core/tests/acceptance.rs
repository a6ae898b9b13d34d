//! Acceptance criteria, one line each. Runs without the libtest harness so
//! the lines always reach the output; exits non-zero if any criterion fails.

mod common;

use std::process::{Command, ExitCode};

use common::{beta_oracle, rel_close, rng, tanh_sinh, tanh_sinh_on, uniform};
use hhaudit::engine::{evaluate_sides, EndpointProducts};
use hhaudit::falsifier::{confirm, falsify, Confirmation, SearchSpace};
use hhaudit::functions::{check_class, make_function, Interval};
use hhaudit::means::{mean, verify_chain, verify_proposition, MeanKind};
use hhaudit::quadrature::{beta, h_moments};
use hhaudit::sampling::{PropertyId, Sampler, Verdict};
use hhaudit::{make_kernel, InequalityVerdict, Problem, TheoremId, Variant};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn beta_engine() -> Outcome {
    let grid = [0.5, 1.0, 1.5, 2.0, 3.0];
    let mut worst = 0.0f64;
    for x in grid {
        for y in grid {
            let got = beta(x, y).map_err(|e| e.to_string())?;
            let err = (got - beta_oracle(x, y)).abs();
            worst = worst.max(err);
            ensure(err <= 1e-8, || format!("B({x}, {y}) = {got} off by {err:e}"))?;
        }
    }
    Ok(format!("25 pairs, worst |Δ| = {worst:.1e} (limit 1e-8)"))
}

fn moment_closed_forms() -> Outcome {
    let mut worst = 0.0f64;
    for s in [0.25, 0.5, 0.75, 1.0] {
        let h = make_kernel(&format!("pow:{s}")).map_err(|e| e.to_string())?;
        let m = h_moments(&h, 1e-12).map_err(|e| e.to_string())?;
        let cross = tanh_sinh(|t, c| (t * c).powf(s));
        let checks = [
            ("m_sq", m.m_sq.value, 1.0 / (2.0 * s + 1.0)),
            ("m_cross", m.m_cross.value, cross),
            ("m_lin", m.m_lin.value, 1.0 / (s + 1.0)),
        ];
        for (name, got, want) in checks {
            let err = (got - want).abs();
            worst = worst.max(err);
            ensure(err <= 1e-10, || format!("pow:{s} {name} = {got}, expected {want}"))?;
        }
        // the integral is B(s+1, s+1), not B(2s+1, 2s+1)
        let doubled = beta_oracle(2.0 * s + 1.0, 2.0 * s + 1.0);
        ensure((m.m_cross.value - doubled).abs() > 1e-3, || {
            format!("pow:{s}: cross moment unexpectedly matches B(2s+1,2s+1)")
        })?;
    }
    Ok(format!(
        "s ∈ {{0.25, 0.5, 0.75, 1}}, worst |Δ| = {worst:.1e}; cross moment is B(s+1,s+1)"
    ))
}

type Pair = (&'static str, fn(f64) -> f64);

const GRID_FNS: [Pair; 4] = [
    ("pow:1", |x| x),
    ("pow:2", |x| x * x),
    ("exp:1", f64::exp),
    ("poly:1,2", |x| 1.0 + 2.0 * x),
];
const GRID_INTERVALS: [(f64, f64); 3] = [(0.0, 1.0), (1.0, 2.0), (0.5, 3.0)];

fn corollary_constants() -> Outcome {
    let mut count = 0;
    for (spec, f) in GRID_FNS {
        for (a, b) in GRID_INTERVALS {
            let m = f(a) * f(a) + f(b) * f(b);
            let n = 2.0 * f(a) * f(b);
            let mean_fg = tanh_sinh_on(a, b, |x| f(x) * f(x)) / (b - a);
            let side = |theorem, h: &str| -> Result<f64, String> {
                let p = Problem::from_specs(spec, spec, h, a, b).map_err(|e| e.to_string())?;
                Ok(evaluate_sides(theorem, Variant::Stated, &p, 1e-12)
                    .map_err(|e| e.to_string())?
                    .rhs)
            };
            for s in [0.25, 0.5, 0.75, 1.0] {
                let got = side(TheoremId::Th2, &format!("pow:{s}"))?;
                let want = m / (s + 1.0);
                ensure(rel_close(got, want, 1e-10), || {
                    format!("TH2 pow:{s} {spec} [{a},{b}]: rhs {got} vs M/(s+1) = {want}")
                })?;
                count += 1;
            }
            let got = side(TheoremId::Th6, "id")?;
            ensure(rel_close(got, (m + n) / 4.0, 1e-10), || {
                format!("TH6 id {spec} [{a},{b}]: rhs {got} vs (M+N)/4 = {}", (m + n) / 4.0)
            })?;
            let got = side(TheoremId::Th1, "id")?;
            ensure(rel_close(got, mean_fg + m / 2.0, 1e-10), || {
                format!(
                    "TH1 id {spec} [{a},{b}]: rhs {got} vs mean + M/2 = {}",
                    mean_fg + m / 2.0
                )
            })?;
            count += 2;
        }
    }
    Ok(format!(
        "{count} right-hand sides match M/(s+1), (M+N)/4 and mean(fg) + M/2 within 1e-10"
    ))
}

fn endpoint_identity() -> Outcome {
    let mut rng = rng(4);
    let sampler = Sampler::new(0, 200);
    let mut ordered = 0;
    for draw in 0..1000 {
        let a = uniform(&mut rng, 0.1, 2.0);
        let b = a + uniform(&mut rng, 0.1, 2.0);
        let interval = Interval::new(a, b).map_err(|e| e.to_string())?;
        let fs = common::random_fn(&mut rng, a, b);
        let gs = common::random_fn(&mut rng, a, b);
        let f = make_function(&fs.spec, interval).map_err(|e| e.to_string())?;
        let g = make_function(&gs.spec, interval).map_err(|e| e.to_string())?;
        let EndpointProducts { m, n } = EndpointProducts::new(&f, &g, interval);
        let (fa, fb, ga, gb) = ((fs.eval)(a), (fs.eval)(b), (gs.eval)(a), (gs.eval)(b));
        let product = (fa - fb) * (ga - gb);
        ensure(
            (m - n - product).abs() <= 1e-12 * (m.abs() + n.abs()).max(1e-300),
            || {
                format!(
                    "draw {draw}: {} {} on [{a},{b}]: M−N = {}, product {product}",
                    fs.spec,
                    gs.spec,
                    m - n
                )
            },
        )?;
        let similar = check_class(PropertyId::SimilarlyOrdered, &f, Some(&g), None, interval, &sampler)
            .map_err(|e| e.to_string())?;
        if similar.verdict == Verdict::NoViolationFound {
            ordered += 1;
            let p = Problem::new(f, g, make_kernel("id").unwrap(), interval).map_err(|e| e.to_string())?;
            for theorem in [TheoremId::Th2, TheoremId::Th3] {
                let s = evaluate_sides(theorem, Variant::Stated, &p, 1e-10).map_err(|e| e.to_string())?;
                let margin = s.rhs - s.lhs;
                ensure(margin >= -s.quad_error, || {
                    format!(
                        "{theorem} {} {} [{a},{b}]: margin {margin:e} below −{:e}",
                        fs.spec, gs.spec, s.quad_error
                    )
                })?;
            }
        }
    }
    Ok(format!(
        "1000 draws satisfy M−N = (f(a)−f(b))(g(a)−g(b)); {ordered} similarly ordered with TH2/TH3 margins ≥ 0"
    ))
}

fn hadamard_suite() -> Outcome {
    let families = [
        "pow:1",
        "pow:2",
        "pow:3",
        "pow:4",
        "pow:-1",
        "pow:-2",
        "exp:1",
        "exp:-1",
        "exp:2",
        "poly:1,0,2",
        "poly:0.5,1,1,1",
        "symquad",
        "recip",
        "prod:pow:2,exp:1",
    ];
    let mut rng = rng(5);
    let mut total = 0;
    for _ in 0..100 {
        let a = uniform(&mut rng, 0.05, 3.0);
        let b = a + uniform(&mut rng, 0.01, 3.0);
        for f in families {
            let p = Problem::from_specs(f, f, "id", a, b).map_err(|e| e.to_string())?;
            let r = hhaudit::evaluate_with(TheoremId::Hadamard, Variant::Stated, &p, 1e-9, &Sampler::new(0, 1))
                .map_err(|e| e.to_string())?;
            ensure(r.verdict != InequalityVerdict::Violated, || {
                format!("{f} on [{a}, {b}] violated: {:?}", r.links)
            })?;
            total += 1;
        }
    }
    Ok(format!(
        "{total} evaluations ({} families × 100 intervals), zero violations",
        families.len()
    ))
}

fn stated_form_failures() -> Outcome {
    let space = SearchSpace::fixed("pow:1", "pow:1", "id", 1.0, 2.0).map_err(|e| e.to_string())?;
    let result = falsify(TheoremId::Th1, Variant::Stated, &space, 1, 0).map_err(|e| e.to_string())?;
    let ce = result.counterexample.ok_or("TH1 stated: no counterexample")?;
    // lhs = 8/6·2 + 7/6·4 = 22/3, rhs = 7/3 + 1·1/2 + 4·1/2 = 29/6
    let exact = 22.0 / 3.0 - 29.0 / 6.0;
    ensure((ce.violation - exact).abs() <= 1e-12, || {
        format!("violation {} ≠ 5/2", ce.violation)
    })?;
    ensure(confirm(&ce, 1e-12) == Ok(Confirmation::Confirmed), || {
        "witness not confirmed".into()
    })?;

    let p = Problem::from_specs("pow:1", "pow:1", "id", 1.0, 2.0).map_err(|e| e.to_string())?;
    let derived = hhaudit::evaluate(TheoremId::Th1, Variant::Derived, &p, 1e-12).map_err(|e| e.to_string())?;
    ensure(derived.verdict == InequalityVerdict::Satisfied, || {
        format!("TH1 derived: {:?}", derived.verdict)
    })?;
    ensure(rel_close(derived.lhs, 14.0 / 3.0, 1e-12), || {
        format!("TH1 derived lhs {}", derived.lhs)
    })?;

    let r = verify_proposition(TheoremId::Prop303, 0.4, 0.5, None).map_err(|e| e.to_string())?;
    let k = ((0.4f64 * 0.4 + 0.5 * 0.5) / 2.0).sqrt();
    ensure(
        r.verdict == InequalityVerdict::Violated && rel_close(r.lhs, 5.0, 1e-12) && rel_close(r.rhs, k, 1e-12),
        || format!("PROP303: lhs {} rhs {} {:?}", r.lhs, r.rhs, r.verdict),
    )?;

    let r = verify_proposition(TheoremId::Prop305, 1.0, 2.0, Some(1)).map_err(|e| e.to_string())?;
    ensure(
        r.verdict == InequalityVerdict::Violated && rel_close(r.lhs, 7.0 / 3.0, 1e-12) && rel_close(r.rhs, 2.25, 1e-12),
        || format!("PROP305: lhs {} rhs {} {:?}", r.lhs, r.rhs, r.verdict),
    )?;
    Ok(format!(
        "TH1 stated violation {} confirmed, TH1 derived satisfied, PROP303 5 > {k:.5}, PROP305 7/3 > 9/4",
        ce.violation
    ))
}

fn respecting_falsification() -> Outcome {
    let mut parts = Vec::new();
    for theorem in [TheoremId::Th2, TheoremId::Th3, TheoremId::Th6] {
        let space = SearchSpace::builtin(theorem).respecting();
        let r = falsify(theorem, Variant::Stated, &space, 10_000, 0).map_err(|e| e.to_string())?;
        ensure(r.counterexample.is_none(), || {
            format!("{theorem}: {:?}", r.counterexample)
        })?;
        parts.push(format!("{theorem} {} evaluated", r.stats.evaluated));
    }
    Ok(format!("no counterexample in 10⁴ draws ({})", parts.join(", ")))
}

fn means_chain() -> Outcome {
    let mut rng = rng(8);
    let mut pairs = 0;
    while pairs < 10_000 {
        let x = 10.0 * (1.0 - rng_unit(&mut rng));
        let y = 10.0 * (1.0 - rng_unit(&mut rng));
        if x == y {
            continue;
        }
        let (a, b) = if x < y { (x, y) } else { (y, x) };
        let r = verify_chain(a, b, 1e-12).map_err(|e| e.to_string())?;
        ensure(r.holds, || format!("chain fails at ({a}, {b}): {:?}", r.links))?;
        pairs += 1;
    }
    let mut worst = 0.0f64;
    for (a, b) in [(1.0f64, 2.0f64), (0.3, 7.0), (2.0, 2.5), (1.0, 100.0)] {
        let l = (b - a) / (b.ln() - a.ln());
        let i = ((b * b.ln() - a * a.ln()) / (b - a) - 1.0).exp();
        let arith = (a + b) / 2.0;
        for (p0, want) in [(-1.0, l), (0.0, i), (1.0, arith)] {
            for dp in [0.0, 1e-8, -1e-8, 1e-6, -1e-6] {
                let got = mean(MeanKind::Lp(p0 + dp), a, b).map_err(|e| e.to_string())?.value;
                let err = (got - want).abs() / want;
                worst = worst.max(err);
                ensure(err <= 1e-6, || {
                    format!("L_{} ({a}, {b}) = {got}, limit {want}", p0 + dp)
                })?;
            }
        }
    }
    Ok(format!(
        "10⁴ pairs hold the chain; L_p limits at −1, 0, 1 within {worst:.1e} relative"
    ))
}

fn rng_unit(rng: &mut rand_chacha::ChaCha8Rng) -> f64 {
    uniform(rng, 0.0, 1.0)
}

fn deterministic_audit() -> Outcome {
    let run = || -> Result<Vec<u8>, String> {
        let out = Command::new(env!("CARGO_BIN_EXE_hhaudit"))
            .args(["audit", "--seed", "0", "--format", "json"])
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), || format!("audit exited with {}", out.status))?;
        Ok(out.stdout)
    };
    let first = run()?;
    let second = run()?;
    ensure(first == second, || "audit outputs differ".into())?;
    Ok(format!("two runs, {} identical bytes", first.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("beta engine vs quadrature oracle", beta_engine),
        ("kernel moment closed forms", moment_closed_forms),
        ("corollary constants", corollary_constants),
        ("endpoint product identity", endpoint_identity),
        ("Hadamard suite", hadamard_suite),
        ("stated-form failures reproduced", stated_form_failures),
        ("hypothesis-respecting falsification", respecting_falsification),
        ("means chain and L_p limits", means_chain),
        ("audit determinism", deterministic_audit),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {}. {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}. {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
