//! Deterministic sampling harness shared by the kernel and function property
//! checks.
//!
//! A check draws points from a seeded ChaCha stream, evaluates both sides of
//! the defining relation and stops at the first strict violation. Sampling
//! cannot prove a universally quantified statement, so the best verdict is
//! [`Verdict::NoViolationFound`].

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Relative slack below which a deficit counts as rounding noise.
pub const PROPERTY_TOLERANCE: f64 = 1e-12;

/// Attempts allowed per accepted sample before the domain is declared empty.
const MAX_REJECTIONS: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Sampler {
    pub seed: u64,
    pub samples: usize,
    /// Coordinate range for the sampled points; `None` uses the subject's
    /// natural domain ((0,1] for kernels, the interval for functions).
    pub domain: Option<(f64, f64)>,
}

impl Sampler {
    pub fn new(seed: u64, samples: usize) -> Self {
        Sampler {
            seed,
            samples,
            domain: None,
        }
    }

    pub fn with_domain(mut self, lo: f64, hi: f64) -> Self {
        self.domain = Some((lo, hi));
        self
    }

    pub(crate) fn rng(&self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed)
    }

    pub(crate) fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(Error::Config("sampler needs at least one sample".into()));
        }
        if let Some((lo, hi)) = self.domain {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(Error::Config(format!("empty sampler domain ({lo}, {hi}]")));
            }
        }
        Ok(())
    }
}

impl Default for Sampler {
    fn default() -> Self {
        Sampler::new(0, 1000)
    }
}

/// Uniform draw from the half-open range (lo, hi].
pub(crate) fn uniform_open_closed(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    let u: f64 = rng.random();
    lo + (hi - lo) * (1.0 - u)
}

/// Uniform draw from the open unit interval.
pub(crate) fn unit_open(rng: &mut ChaCha8Rng) -> f64 {
    loop {
        let u: f64 = rng.random();
        if u > 0.0 {
            return u;
        }
    }
}

/// SplitMix64 finaliser; used to derive independent per-index seeds.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed
        .wrapping_add(index.wrapping_mul(0x9E37_79B9_7F4A_7C15))
        .wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PropertyId {
    // kernel properties
    Supermultiplicative,
    Superadditive,
    DominatesIdentity,
    // shared
    Nonnegative,
    // function properties
    HConvex,
    SimilarlyOrdered,
    SymmetricAboutMidpoint,
    DominatesIdentityOnInterval,
}

impl PropertyId {
    pub const ALL: [PropertyId; 8] = [
        PropertyId::Supermultiplicative,
        PropertyId::Superadditive,
        PropertyId::DominatesIdentity,
        PropertyId::Nonnegative,
        PropertyId::HConvex,
        PropertyId::SimilarlyOrdered,
        PropertyId::SymmetricAboutMidpoint,
        PropertyId::DominatesIdentityOnInterval,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PropertyId::Supermultiplicative => "supermultiplicative",
            PropertyId::Superadditive => "superadditive",
            PropertyId::DominatesIdentity => "dominates_identity",
            PropertyId::Nonnegative => "nonnegative",
            PropertyId::HConvex => "h_convex",
            PropertyId::SimilarlyOrdered => "similarly_ordered",
            PropertyId::SymmetricAboutMidpoint => "symmetric_about_midpoint",
            PropertyId::DominatesIdentityOnInterval => "dominates_identity_on_interval",
        }
    }

    pub fn is_kernel_property(self) -> bool {
        matches!(
            self,
            PropertyId::Supermultiplicative
                | PropertyId::Superadditive
                | PropertyId::DominatesIdentity
                | PropertyId::Nonnegative
        )
    }
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for PropertyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PropertyId::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| Error::parse(s, "unknown property id"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    NoViolationFound,
    Violated,
}

/// How the two sides of a sampled relation must compare.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Relation {
    /// lhs ≤ rhs
    AtMost,
    /// lhs = rhs
    Equal,
}

/// A sampled point together with both sides of the relation evaluated there.
///
/// For order relations the property holds iff `lhs <= rhs`; for the symmetry
/// check it holds iff `lhs == rhs`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub point: Vec<f64>,
    pub lhs: f64,
    pub rhs: f64,
    pub deficit: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub property: PropertyId,
    pub subject: String,
    pub samples_tested: usize,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub seed: u64,
}

impl PropertyReport {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::NoViolationFound
    }
}

pub(crate) fn deficit(relation: Relation, lhs: f64, rhs: f64) -> Option<f64> {
    let d = match relation {
        Relation::AtMost => lhs - rhs,
        Relation::Equal => (lhs - rhs).abs(),
    };
    let slack = match relation {
        Relation::AtMost => PROPERTY_TOLERANCE * (1.0 + lhs.abs() + rhs.abs()),
        Relation::Equal => PROPERTY_TOLERANCE * (1.0 + rhs.abs()),
    };
    // NaN on either side is a violation: the relation cannot be confirmed.
    if d.is_nan() || d > slack {
        Some(d)
    } else {
        None
    }
}

/// Runs a sampled check. `draw` returns `None` to reject a point (e.g. when a
/// combined coordinate leaves the domain); `sides` evaluates the relation.
pub(crate) fn scan<D, S>(
    property: PropertyId,
    subject: String,
    sampler: &Sampler,
    relation: Relation,
    mut draw: D,
    sides: S,
) -> Result<PropertyReport>
where
    D: FnMut(&mut ChaCha8Rng) -> Option<Vec<f64>>,
    S: Fn(&[f64]) -> (f64, f64),
{
    sampler.validate()?;
    let mut rng = sampler.rng();
    for tested in 0..sampler.samples {
        let mut rejected = 0;
        let point = loop {
            if let Some(p) = draw(&mut rng) {
                break p;
            }
            rejected += 1;
            if rejected >= MAX_REJECTIONS {
                return Err(Error::Config(format!(
                    "sampler domain admits no valid points for {property}"
                )));
            }
        };
        let (lhs, rhs) = sides(&point);
        if let Some(d) = deficit(relation, lhs, rhs) {
            return Ok(PropertyReport {
                property,
                subject,
                samples_tested: tested + 1,
                verdict: Verdict::Violated,
                witness: Some(Witness {
                    point,
                    lhs,
                    rhs,
                    deficit: d,
                }),
                seed: sampler.seed,
            });
        }
    }
    Ok(PropertyReport {
        property,
        subject,
        samples_tested: sampler.samples,
        verdict: Verdict::NoViolationFound,
        witness: None,
        seed: sampler.seed,
    })
}
