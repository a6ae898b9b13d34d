//! Seeded random search for counterexamples, with local refinement and
//! confirmation at a tighter tolerance.
//!
//! Candidate `i` is drawn from its own generator seeded with
//! `derive_seed(seed, i)`, so results do not depend on how candidates are
//! spread over threads. Candidates are evaluated in parallel chunks and
//! scanned in index order; the search stops at the first confirmed
//! counterexample.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::engine::{
    check_hypotheses, classify, evaluate_sides, hypotheses_hold, HypothesisSummary, InequalityVerdict, Problem, Sides,
    TheoremId, Variant,
};
use crate::error::{Error, Result};
use crate::functions::Interval;
use crate::means::verify_proposition;
use crate::sampling::{derive_seed, Sampler};

/// Extra margin, beyond `quad_error`, a candidate must miss by to trigger
/// refinement.
pub const TRIGGER: f64 = 1e-9;

const CHUNK: usize = 256;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FunctionSpace {
    Fixed {
        spec: String,
    },
    /// `pow:n` for nonzero integers `n` in `[min, max]`.
    Power {
        min: i32,
        max: i32,
    },
    /// `exp:c` with `c` uniform in `[min, max]`.
    Exp {
        min: f64,
        max: f64,
    },
    /// Polynomials of the given degree with coefficients uniform in `[0, max_coeff]`.
    Poly {
        degree: usize,
        max_coeff: f64,
    },
    Recip,
    #[serde(rename = "symquad")]
    SymQuad,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum KernelSpace {
    Fixed {
        spec: String,
    },
    /// `pow:s` with `s` uniform in `[min, max]`.
    Power {
        min: f64,
        max: f64,
    },
    Identity,
    One,
    /// `scaled:c,id` with `c` uniform in `[min, max]`.
    Scaled {
        min: f64,
        max: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntervalBox {
    pub a_min: f64,
    pub a_max: f64,
    pub b_min: f64,
    pub b_max: f64,
}

impl IntervalBox {
    pub fn new(a_min: f64, a_max: f64, b_min: f64, b_max: f64) -> Result<Self> {
        let bx = IntervalBox {
            a_min,
            a_max,
            b_min,
            b_max,
        };
        bx.validate()?;
        Ok(bx)
    }

    /// The degenerate box holding exactly one interval.
    pub fn fixed(a: f64, b: f64) -> Result<Self> {
        IntervalBox::new(a, a, b, b)
    }

    pub fn validate(&self) -> Result<()> {
        let all_finite = [self.a_min, self.a_max, self.b_min, self.b_max]
            .iter()
            .all(|v| v.is_finite());
        if !all_finite || self.a_min > self.a_max || self.b_min > self.b_max || self.a_min >= self.b_max {
            return Err(Error::Config(format!(
                "invalid interval box a ∈ [{}, {}], b ∈ [{}, {}]",
                self.a_min, self.a_max, self.b_min, self.b_max
            )));
        }
        Ok(())
    }

    fn min_gap(&self) -> f64 {
        1e-6 * (self.b_max - self.a_min)
    }

    fn admits(&self, a: f64, b: f64) -> bool {
        b > a + self.min_gap()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchSpace {
    pub functions: Vec<FunctionSpace>,
    /// Families for `g`; `None` draws `g` from `functions` as well.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g_functions: Option<Vec<FunctionSpace>>,
    pub kernels: Vec<KernelSpace>,
    pub interval: IntervalBox,
    /// Draw `g` equal to `f` instead of independently.
    #[serde(default)]
    pub same_function: bool,
    #[serde(default)]
    pub respect_hypotheses: bool,
    /// Range of the integer `n` used by the special-means propositions.
    #[serde(default = "default_n_range")]
    pub n_range: (i32, i32),
}

fn default_n_range() -> (i32, i32) {
    (1, 3)
}

impl SearchSpace {
    /// A space holding one fixed instance on a degenerate interval box.
    pub fn fixed(f: &str, g: &str, h: &str, a: f64, b: f64) -> Result<Self> {
        Ok(SearchSpace {
            functions: vec![FunctionSpace::Fixed { spec: f.into() }],
            g_functions: (f != g).then(|| vec![FunctionSpace::Fixed { spec: g.into() }]),
            kernels: vec![KernelSpace::Fixed { spec: h.into() }],
            interval: IntervalBox::fixed(a, b)?,
            same_function: f == g,
            respect_hypotheses: false,
            n_range: default_n_range(),
        })
    }

    /// The built-in families used for each theorem.
    pub fn builtin(theorem: TheoremId) -> Self {
        let general = vec![
            FunctionSpace::Power { min: 1, max: 3 },
            FunctionSpace::Exp { min: -1.0, max: 1.0 },
            FunctionSpace::Poly {
                degree: 2,
                max_coeff: 2.0,
            },
            FunctionSpace::Poly {
                degree: 0,
                max_coeff: 2.0,
            },
            FunctionSpace::Recip,
            FunctionSpace::SymQuad,
        ];
        let kernels = vec![
            KernelSpace::Identity,
            KernelSpace::One,
            KernelSpace::Power { min: 0.25, max: 1.0 },
            KernelSpace::Scaled { min: 1.0, max: 2.0 },
        ];
        let (functions, kernels, interval) = match theorem {
            TheoremId::Hadamard => (
                vec![
                    FunctionSpace::Power { min: -2, max: 4 },
                    FunctionSpace::Exp { min: -2.0, max: 2.0 },
                    FunctionSpace::Poly {
                        degree: 3,
                        max_coeff: 3.0,
                    },
                    FunctionSpace::Recip,
                    FunctionSpace::SymQuad,
                ],
                vec![KernelSpace::Identity],
                IntervalBox {
                    a_min: 0.05,
                    a_max: 2.0,
                    b_min: 0.1,
                    b_max: 4.0,
                },
            ),
            t if t.is_proposition() => (
                Vec::new(),
                Vec::new(),
                IntervalBox {
                    a_min: 0.05,
                    a_max: 1.0,
                    b_min: 0.05,
                    b_max: 1.0,
                },
            ),
            _ => (
                general,
                kernels,
                IntervalBox {
                    a_min: 0.1,
                    a_max: 2.0,
                    b_min: 0.2,
                    b_max: 3.0,
                },
            ),
        };
        SearchSpace {
            functions,
            g_functions: None,
            kernels,
            interval,
            same_function: false,
            respect_hypotheses: false,
            n_range: default_n_range(),
        }
    }

    pub fn respecting(mut self) -> Self {
        self.respect_hypotheses = true;
        self
    }

    fn validate(&self, theorem: TheoremId) -> Result<()> {
        self.interval.validate()?;
        if theorem.is_proposition() {
            let (lo, hi) = self.n_range;
            if lo > hi || (lo == 0 && hi == 0) {
                return Err(Error::Config(format!("empty n range ({lo}, {hi})")));
            }
            return Ok(());
        }
        if self.functions.is_empty() || self.g_functions.as_ref().is_some_and(Vec::is_empty) {
            return Err(Error::Config("search space has no function families".into()));
        }
        if self.kernels.is_empty() && theorem != TheoremId::Hadamard {
            return Err(Error::Config("search space has no kernel families".into()));
        }
        for f in self.functions.iter().chain(self.g_functions.iter().flatten()) {
            match f {
                FunctionSpace::Power { min, max } if min > max || (*min == 0 && *max == 0) => {
                    return Err(Error::Config(format!("empty power range [{min}, {max}]")))
                }
                FunctionSpace::Exp { min, max } if !(min <= max) => {
                    return Err(Error::Config(format!("empty exp range [{min}, {max}]")))
                }
                FunctionSpace::Poly { max_coeff, .. } if !(*max_coeff >= 0.0) => {
                    return Err(Error::Config(format!(
                        "poly max_coeff must be nonnegative, got {max_coeff}"
                    )))
                }
                _ => {}
            }
        }
        for k in &self.kernels {
            match k {
                KernelSpace::Power { min, max } if !(min <= max && *max <= 1.0) => {
                    return Err(Error::Config(format!(
                        "kernel power range [{min}, {max}] must lie below 1"
                    )))
                }
                KernelSpace::Scaled { min, max } if !(0.0 < *min && min <= max) => {
                    return Err(Error::Config(format!("scale range [{min}, {max}] must be positive")))
                }
                _ => {}
            }
        }
        Ok(())
    }
}

/// A real parameter together with the range it may be refined within.
#[derive(Debug, Clone, Copy, PartialEq)]
struct Param {
    value: f64,
    lo: f64,
    hi: f64,
}

impl Param {
    fn draw(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> Self {
        Param {
            value: lo + (hi - lo) * rng.random::<f64>(),
            lo,
            hi,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum FunctionDraw {
    Fixed(String),
    Power(i32),
    Exp(Param),
    Poly(Vec<Param>),
    Recip,
    SymQuad,
}

impl FunctionDraw {
    fn spec(&self) -> String {
        match self {
            FunctionDraw::Fixed(s) => s.clone(),
            FunctionDraw::Power(n) => format!("pow:{n}"),
            FunctionDraw::Exp(c) => format!("exp:{}", c.value),
            FunctionDraw::Poly(cs) => {
                let cs: Vec<String> = cs.iter().map(|c| c.value.to_string()).collect();
                format!("poly:{}", cs.join(","))
            }
            FunctionDraw::Recip => "recip".into(),
            FunctionDraw::SymQuad => "symquad".into(),
        }
    }

    fn params_mut(&mut self) -> Vec<&mut Param> {
        match self {
            FunctionDraw::Exp(c) => vec![c],
            FunctionDraw::Poly(cs) => cs.iter_mut().collect(),
            _ => Vec::new(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum KernelDraw {
    Fixed(String),
    Power(Param),
    Identity,
    One,
    Scaled(Param),
}

impl KernelDraw {
    fn spec(&self) -> String {
        match self {
            KernelDraw::Fixed(s) => s.clone(),
            KernelDraw::Power(s) => format!("pow:{}", s.value),
            KernelDraw::Identity => "id".into(),
            KernelDraw::One => "one".into(),
            KernelDraw::Scaled(c) => format!("scaled:{},id", c.value),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
struct Candidate {
    f: FunctionDraw,
    /// `None` when `g` is `f`.
    g: Option<FunctionDraw>,
    h: KernelDraw,
    a: Param,
    b: Param,
    n: Option<i32>,
}

impl Candidate {
    fn g_spec(&self) -> String {
        self.g.as_ref().unwrap_or(&self.f).spec()
    }

    fn params_mut(&mut self) -> Vec<&mut Param> {
        let mut v = vec![&mut self.a, &mut self.b];
        v.extend(self.f.params_mut());
        if let Some(g) = &mut self.g {
            v.extend(g.params_mut());
        }
        match &mut self.h {
            KernelDraw::Power(p) | KernelDraw::Scaled(p) => v.push(p),
            _ => {}
        }
        v
    }
}

fn nonzero_in(rng: &mut ChaCha8Rng, min: i32, max: i32) -> i32 {
    let choices: Vec<i32> = (min..=max).filter(|n| *n != 0).collect();
    choices[rng.random_range(0..choices.len())]
}

fn draw_function(rng: &mut ChaCha8Rng, spaces: &[FunctionSpace]) -> FunctionDraw {
    match &spaces[rng.random_range(0..spaces.len())] {
        FunctionSpace::Fixed { spec } => FunctionDraw::Fixed(spec.clone()),
        FunctionSpace::Power { min, max } => FunctionDraw::Power(nonzero_in(rng, *min, *max)),
        FunctionSpace::Exp { min, max } => FunctionDraw::Exp(Param::draw(rng, *min, *max)),
        FunctionSpace::Poly { degree, max_coeff } => {
            FunctionDraw::Poly((0..=*degree).map(|_| Param::draw(rng, 0.0, *max_coeff)).collect())
        }
        FunctionSpace::Recip => FunctionDraw::Recip,
        FunctionSpace::SymQuad => FunctionDraw::SymQuad,
    }
}

fn draw_kernel(rng: &mut ChaCha8Rng, spaces: &[KernelSpace]) -> KernelDraw {
    if spaces.is_empty() {
        return KernelDraw::Identity;
    }
    match &spaces[rng.random_range(0..spaces.len())] {
        KernelSpace::Fixed { spec } => KernelDraw::Fixed(spec.clone()),
        KernelSpace::Power { min, max } => KernelDraw::Power(Param::draw(rng, *min, *max)),
        KernelSpace::Identity => KernelDraw::Identity,
        KernelSpace::One => KernelDraw::One,
        KernelSpace::Scaled { min, max } => KernelDraw::Scaled(Param::draw(rng, *min, *max)),
    }
}

fn draw(theorem: TheoremId, space: &SearchSpace, index: u64, seed: u64) -> Option<Candidate> {
    let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, index));
    let bx = &space.interval;
    let a = Param::draw(&mut rng, bx.a_min, bx.a_max);
    let b_lo = bx.b_min.max(a.value + bx.min_gap());
    if b_lo > bx.b_max {
        return None;
    }
    let b = Param {
        value: b_lo + (bx.b_max - b_lo) * rng.random::<f64>(),
        lo: bx.b_min,
        hi: bx.b_max,
    };
    if theorem.is_proposition() {
        let (lo, hi) = space.n_range;
        return Some(Candidate {
            f: FunctionDraw::Fixed(String::new()),
            g: None,
            h: KernelDraw::Identity,
            a,
            b,
            n: Some(nonzero_in(&mut rng, lo, hi)),
        });
    }
    let f = draw_function(&mut rng, &space.functions);
    let g = (!space.same_function)
        .then(|| draw_function(&mut rng, space.g_functions.as_deref().unwrap_or(&space.functions)));
    let h = draw_kernel(&mut rng, &space.kernels);
    Some(Candidate { f, g, h, a, b, n: None })
}

/// Options controlling tolerances and the refinement loop.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FalsifyOptions {
    pub search_tol: f64,
    pub confirm_tol: f64,
    /// Samples per hypothesis check.
    pub samples: usize,
    pub refine_steps: usize,
}

impl Default for FalsifyOptions {
    fn default() -> Self {
        FalsifyOptions {
            search_tol: 1e-8,
            confirm_tol: 1e-12,
            samples: 200,
            refine_steps: 100,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CounterExample {
    pub theorem: TheoremId,
    pub variant: Variant,
    pub f: String,
    pub g: String,
    pub h: String,
    pub interval: Interval,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<i32>,
    pub lhs: f64,
    pub rhs: f64,
    /// `lhs − rhs`.
    pub violation: f64,
    pub quad_error: f64,
    pub hypothesis_results: Vec<HypothesisSummary>,
}

impl CounterExample {
    fn problem(&self) -> Result<Problem> {
        Problem::from_specs(&self.f, &self.g, &self.h, self.interval.a, self.interval.b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Confirmation {
    Confirmed,
    Retracted,
}

fn sides_of(c: &CounterExample, tol: f64) -> Result<Sides> {
    if c.theorem.is_proposition() {
        let r = verify_proposition(c.theorem, c.interval.a, c.interval.b, c.n)?;
        return Ok(Sides {
            lhs: r.lhs,
            rhs: r.rhs,
            quad_error: 0.0,
            links: Vec::new(),
        });
    }
    evaluate_sides(c.theorem, c.variant, &c.problem()?, tol)
}

/// Re-evaluates a candidate at `tol`; `Confirmed` only if the violation
/// still exceeds the integration error plus the engine's strictness band.
pub fn confirm(candidate: &CounterExample, tol: f64) -> Result<Confirmation> {
    Ok(confirm_sides(candidate, tol)?.0)
}

fn confirm_sides(candidate: &CounterExample, tol: f64) -> Result<(Confirmation, Sides)> {
    if !(tol > 0.0) {
        return Err(Error::Config(format!(
            "confirmation tolerance must be positive, got {tol}"
        )));
    }
    let sides = sides_of(candidate, tol)?;
    let verdict = classify(sides.lhs, sides.rhs, sides.quad_error).1;
    let c = if verdict == InequalityVerdict::Violated {
        Confirmation::Confirmed
    } else {
        Confirmation::Retracted
    };
    Ok((c, sides))
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct SearchStats {
    pub drawn: u64,
    pub evaluated: u64,
    pub rejected_domain: u64,
    pub filtered: u64,
    pub non_evaluable: u64,
    /// Candidates whose evaluation failed for numerical reasons.
    pub failed: u64,
    pub refined: u64,
    pub retracted: u64,
    pub min_margin: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FalsificationResult {
    pub theorem: TheoremId,
    pub variant: Variant,
    pub seed: u64,
    pub budget: u64,
    pub counterexample: Option<CounterExample>,
    pub stats: SearchStats,
}

enum Outcome {
    Rejected,
    Filtered,
    NonEvaluable,
    Failed,
    Evaluated(Sides),
}

struct Search<'a> {
    theorem: TheoremId,
    variant: Variant,
    space: &'a SearchSpace,
    options: FalsifyOptions,
    seed: u64,
}

impl Search<'_> {
    fn counterexample(&self, c: &Candidate, sides: &Sides) -> CounterExample {
        let (f, g, h) = if self.theorem.is_proposition() {
            (String::new(), String::new(), String::new())
        } else {
            (c.f.spec(), c.g_spec(), c.h.spec())
        };
        CounterExample {
            theorem: self.theorem,
            variant: self.variant,
            f,
            g,
            h,
            interval: Interval {
                a: c.a.value,
                b: c.b.value,
            },
            n: c.n,
            lhs: sides.lhs,
            rhs: sides.rhs,
            violation: sides.lhs - sides.rhs,
            quad_error: sides.quad_error,
            hypothesis_results: Vec::new(),
        }
    }

    fn sampler(&self, index: u64) -> Sampler {
        Sampler::new(derive_seed(self.seed ^ 0x5eed, index), self.options.samples)
    }

    fn evaluate(&self, c: &Candidate, index: u64, check_hypotheses: bool) -> Outcome {
        let (a, b) = (c.a.value, c.b.value);
        if !self.space.interval.admits(a, b) {
            return Outcome::Rejected;
        }
        if self.theorem.is_proposition() {
            return match verify_proposition(self.theorem, a, b, c.n) {
                Ok(r) => Outcome::Evaluated(Sides {
                    lhs: r.lhs,
                    rhs: r.rhs,
                    quad_error: 0.0,
                    links: Vec::new(),
                }),
                Err(_) => Outcome::Rejected,
            };
        }
        let problem = match Problem::from_specs(&c.f.spec(), &c.g_spec(), &c.h.spec(), a, b) {
            Ok(p) => p,
            Err(_) => return Outcome::Rejected,
        };
        if check_hypotheses && self.space.respect_hypotheses {
            match hypotheses_hold(self.theorem, &problem, &self.sampler(index)) {
                Ok(true) => {}
                Ok(false) => return Outcome::Filtered,
                Err(_) => return Outcome::Rejected,
            }
        }
        match evaluate_sides(self.theorem, self.variant, &problem, self.options.search_tol) {
            Ok(s) => Outcome::Evaluated(s),
            Err(e) if e.is_non_evaluable() => Outcome::NonEvaluable,
            Err(_) => Outcome::Failed,
        }
    }

    fn objective(&self, c: &Candidate, index: u64) -> Option<Sides> {
        match self.evaluate(c, index, true) {
            Outcome::Evaluated(s) => Some(s),
            _ => None,
        }
    }

    /// Coordinate search on a, b and the real family parameters with
    /// shrinking steps; keeps any move that lowers the margin.
    fn refine(&self, mut best: Candidate, mut best_sides: Sides, index: u64) -> (Candidate, Sides) {
        let mut steps: Vec<f64> = best.clone().params_mut().iter().map(|p| 0.1 * (p.hi - p.lo)).collect();
        let dims = steps.len();
        for step in 0..self.options.refine_steps {
            let j = step % dims;
            if steps[j] <= 0.0 {
                continue;
            }
            let mut improved = false;
            for dir in [1.0, -1.0] {
                let mut trial = best.clone();
                {
                    let mut params = trial.params_mut();
                    let p = &mut params[j];
                    p.value = (p.value + dir * steps[j]).clamp(p.lo, p.hi);
                }
                if trial == best {
                    continue;
                }
                if let Some(s) = self.objective(&trial, index) {
                    if s.rhs - s.lhs < best_sides.rhs - best_sides.lhs {
                        best = trial;
                        best_sides = s;
                        improved = true;
                        break;
                    }
                }
            }
            if !improved {
                steps[j] *= 0.5;
            }
        }
        (best, best_sides)
    }

    fn run(&self, budget: u64) -> Result<FalsificationResult> {
        let mut stats = SearchStats::default();
        let mut found = None;
        let mut start = 0u64;
        'outer: while start < budget {
            let end = (start + CHUNK as u64).min(budget);
            let outcomes: Vec<(Option<Candidate>, Outcome)> = (start..end)
                .into_par_iter()
                .map(|i| match draw(self.theorem, self.space, i, self.seed) {
                    Some(c) => {
                        let o = self.evaluate(&c, i, true);
                        (Some(c), o)
                    }
                    None => (None, Outcome::Rejected),
                })
                .collect();
            for (offset, (cand, outcome)) in outcomes.into_iter().enumerate() {
                let index = start + offset as u64;
                stats.drawn += 1;
                let sides = match outcome {
                    Outcome::Rejected => {
                        stats.rejected_domain += 1;
                        continue;
                    }
                    Outcome::Filtered => {
                        stats.filtered += 1;
                        continue;
                    }
                    Outcome::NonEvaluable => {
                        stats.non_evaluable += 1;
                        continue;
                    }
                    Outcome::Failed => {
                        stats.failed += 1;
                        continue;
                    }
                    Outcome::Evaluated(s) => s,
                };
                stats.evaluated += 1;
                let cand = cand.expect("evaluated candidates were drawn");
                let margin = sides.rhs - sides.lhs;
                lower(&mut stats.min_margin, margin);
                if margin >= -(sides.quad_error + TRIGGER) {
                    continue;
                }
                stats.refined += 1;
                let (cand, sides) = self.refine(cand, sides, index);
                lower(&mut stats.min_margin, sides.rhs - sides.lhs);
                let mut ce = self.counterexample(&cand, &sides);
                match confirm_sides(&ce, self.options.confirm_tol) {
                    Ok((Confirmation::Confirmed, s)) => {
                        ce.lhs = s.lhs;
                        ce.rhs = s.rhs;
                        ce.violation = s.lhs - s.rhs;
                        ce.quad_error = s.quad_error;
                        if !self.theorem.is_proposition() {
                            let problem = ce.problem()?;
                            ce.hypothesis_results =
                                check_hypotheses(self.theorem, &problem, &self.sampler(index))?.summaries();
                        }
                        found = Some(ce);
                        break 'outer;
                    }
                    Ok((Confirmation::Retracted, _)) => stats.retracted += 1,
                    Err(_) => stats.retracted += 1,
                }
            }
            start = end;
        }
        if stats.evaluated == 0 {
            return Err(Error::Exhausted {
                drawn: stats.drawn,
                rejected_domain: stats.rejected_domain,
                filtered: stats.filtered,
                non_evaluable: stats.non_evaluable + stats.failed,
            });
        }
        Ok(FalsificationResult {
            theorem: self.theorem,
            variant: self.variant,
            seed: self.seed,
            budget,
            counterexample: found,
            stats,
        })
    }
}

fn lower(slot: &mut Option<f64>, v: f64) {
    if slot.is_none_or(|m| v < m) {
        *slot = Some(v);
    }
}

/// Searches `space` with default options.
pub fn falsify(
    theorem: TheoremId,
    variant: Variant,
    space: &SearchSpace,
    budget: u64,
    seed: u64,
) -> Result<FalsificationResult> {
    falsify_with(theorem, variant, space, budget, seed, &FalsifyOptions::default())
}

pub fn falsify_with(
    theorem: TheoremId,
    variant: Variant,
    space: &SearchSpace,
    budget: u64,
    seed: u64,
    options: &FalsifyOptions,
) -> Result<FalsificationResult> {
    if budget == 0 {
        return Err(Error::Config("budget must be at least 1".into()));
    }
    if !(options.search_tol > 0.0 && options.confirm_tol > 0.0 && options.confirm_tol < options.search_tol) {
        return Err(Error::Config(format!(
            "confirmation tolerance {} must be positive and below the search tolerance {}",
            options.confirm_tol, options.search_tol
        )));
    }
    if options.samples == 0 {
        return Err(Error::Config("hypothesis checks need at least one sample".into()));
    }
    if variant == Variant::Derived && !theorem.has_derived_variant() {
        return Err(Error::Config(format!("{theorem} has no derived variant")));
    }
    space.validate(theorem)?;
    Search {
        theorem,
        variant,
        space,
        options: *options,
        seed,
    }
    .run(budget)
}
