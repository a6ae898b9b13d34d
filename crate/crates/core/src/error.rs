use thiserror::Error;

use crate::engine::TheoremId;
use crate::quadrature::Moment;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// A kernel or function spec string did not match the grammar.
    #[error("parse error at `{token}`: {message}")]
    Parse { token: String, message: String },

    /// A value lies outside the domain an operation requires.
    #[error("domain error: {0}")]
    Domain(String),

    /// Missing or inconsistent inputs (absent g/h, empty sampler domain, bad job).
    #[error("configuration error: {0}")]
    Config(String),

    /// The integrand produced NaN or an infinity.
    #[error("integrand is not finite at x = {x} (value {value})")]
    NonFinite { x: f64, value: f64 },

    /// Adaptive subdivision hit its cap before reaching the requested tolerance.
    #[error("quadrature did not converge: best estimate {estimate} with error {error_estimate}")]
    Convergence { estimate: f64, error_estimate: f64 },

    #[error("moment {moment} diverges for this kernel")]
    Divergent { moment: Moment },

    /// A theorem needs a moment that diverges for the chosen kernel.
    #[error("{theorem} is not evaluable: moment {moment} diverges")]
    NonEvaluable { theorem: TheoremId, moment: Moment },

    /// Every candidate of a search space was rejected before evaluation.
    #[error("search space exhausted: {drawn} drawn, {rejected_domain} rejected by domain, {filtered} filtered by hypotheses, {non_evaluable} non-evaluable")]
    Exhausted {
        drawn: u64,
        rejected_domain: u64,
        filtered: u64,
        non_evaluable: u64,
    },

    #[error("i/o error: {0}")]
    Io(String),

    #[error("json error: {0}")]
    Json(String),
}

impl Error {
    pub(crate) fn parse(token: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            message: message.into(),
        }
    }

    /// True for errors that mean "this inequality cannot be evaluated" rather
    /// than "this input was wrong".
    pub fn is_non_evaluable(&self) -> bool {
        matches!(self, Error::NonEvaluable { .. } | Error::Divergent { .. })
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
