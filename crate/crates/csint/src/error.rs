//! Error taxonomy shared by every module in the crate.

use thiserror::Error;

/// Everything that can go wrong during evaluation or verification.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Gamma-type evaluation hit a pole at a nonpositive integer.
    #[error("pole at nonpositive integer argument {argument}")]
    PoleAtNonpositiveInteger { argument: f64 },

    /// A series or quadrature exhausted its budget before meeting the tolerance.
    #[error("did not converge after {terms_used} terms/evaluations (error estimate {error_estimate:.3e})")]
    NotConverged {
        terms_used: usize,
        error_estimate: f64,
    },

    /// Series parameters place the argument outside any convergent regime.
    #[error("divergent series: p={p}, q={q}, |z|={z_abs} (non-terminating)")]
    DivergentSeries { p: usize, q: usize, z_abs: f64 },

    /// A lower parameter reached a nonpositive integer before the series terminated.
    #[error("lower parameter {parameter} hits a pole at term {term}")]
    LowerParameterPole { parameter: f64, term: usize },

    /// Exact zero denominator in a closed-form expression.
    #[error("division by zero in {context}")]
    DivisionByZero { context: &'static str },

    /// A coherent-state label lies outside the convergence disc of its family.
    #[error("|z|={z_abs} is outside the convergence disc (radius {radius})")]
    OutsideConvergenceDisc { z_abs: f64, radius: f64 },

    /// Point lies outside the support of a weight function.
    #[error("x={x} is outside the weight support (0, {support_upper})")]
    OutOfSupport { x: f64, support_upper: f64 },

    /// Slater expansion requested for congruent (integer-separated) exponents.
    #[error("confluent exponents: {detail}")]
    ConfluentParameters { detail: String },

    /// Parameter combination is outside what the operation supports.
    #[error("unsupported parameters: {detail}")]
    UnsupportedParameters { detail: String },

    /// The weight cannot be evaluated pointwise; moment-only verification applies.
    #[error("unsupported weight: {detail}")]
    UnsupportedWeight { detail: String },

    /// Unknown special-case dictionary key.
    #[error("unknown dictionary case `{name}`")]
    UnknownCase { name: String },

    /// Unknown built-in suite name.
    #[error("unknown suite `{name}`")]
    UnknownSuite { name: String },

    /// Instance construction rejected (missing scalars, bad parameter lists, ...).
    #[error("invalid instance: {detail}")]
    InvalidInstance { detail: String },

    /// Malformed instance record in an instance file.
    #[error("parse error at record {record}: {detail}")]
    ParseError { record: usize, detail: String },

    /// Argument outside an operation's stated domain.
    #[error("invalid argument: {detail}")]
    InvalidArgument { detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
