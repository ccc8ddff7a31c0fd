use thiserror::Error;

/// Errors produced by the numerical routines in this crate.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("domain error in {func}: argument {arg} = {value} out of range ({constraint})")]
    Domain {
        func: &'static str,
        arg: &'static str,
        value: f64,
        constraint: &'static str,
    },

    #[error("{func} overflows in double precision for argument {value}; use the log-scale variant")]
    Overflow { func: &'static str, value: f64 },

    #[error("unsupported dimension d = {d} for {what}")]
    UnsupportedDimension { d: usize, what: &'static str },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("eigensolver failed to converge after {iterations} iterations (matrix size {size})")]
    EigenNonConvergence { size: usize, iterations: usize },

    #[error("quadrature encountered a non-finite integrand value at node {node}")]
    NonFiniteIntegrand { node: f64 },

    #[error("quadrature under-resolved: doubling the node count moved the result by {shift:e}")]
    QuadratureInaccuracy { shift: f64 },

    #[error("truncation K = {k} insufficient: coefficient tail did not certify after {doublings} doublings")]
    TruncationFailure { k: usize, doublings: usize },

    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
