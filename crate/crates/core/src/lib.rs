//! Numerical audit of integral inequalities for h-convex functions.
//!
//! * [`kernels`] and [`functions`]: kernels `h`, test functions, and sampled
//!   property checks.
//! * [`quadrature`]: adaptive Gauss–Kronrod integration, the Beta function and
//!   kernel moments.
//! * [`engine`]: both sides of each inequality with a margin-based verdict.
//! * [`falsifier`]: seeded counterexample search.
//! * [`means`]: special means, their propositions and the classical chain.
//! * [`cli`]: suite configs, reports and the command-line front end.

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod cli;
pub mod engine;
pub mod error;
pub mod falsifier;
pub mod functions;
pub mod kernels;
pub mod means;
mod parse;
pub mod quadrature;
pub mod sampling;

pub use engine::{
    check_hypotheses, closed_form_rhs, evaluate, evaluate_with, CorollaryKernel, EndpointProducts, InequalityReport,
    InequalityVerdict, Problem, TheoremId, Variant,
};
pub use error::{Error, Result};
pub use falsifier::{confirm, falsify, Confirmation, CounterExample, FalsificationResult, SearchSpace};
pub use functions::{check_class, check_membership, make_function, FunctionClass, Interval, ScalarFunction};
pub use kernels::{kernel_properties, make_kernel, HKernel};
pub use means::{mean, verify_chain, verify_proposition, MeanKind, MeanValue};
pub use quadrature::{beta, h_moments, integrate, HMoments, Moment, QuadratureResult};
pub use sampling::{PropertyId, PropertyReport, Sampler, Verdict};
