use thiserror::Error;

/// Failure modes shared by every evaluation path in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("gamma function pole at x = {0}")]
    Pole(f64),

    #[error("overflow: argument {arg} exceeds the supported maximum {max}")]
    Overflow { arg: f64, max: f64 },

    #[error("integer order {0} is not supported here")]
    IntegerOrder(f64),

    #[error("{what} did not converge after {iterations} iterations")]
    NoConvergence { what: &'static str, iterations: usize },

    #[error("tolerance not met: error estimate {estimate:e} exceeds target {target:e} after {panels} panels")]
    ToleranceNotMet { estimate: f64, target: f64, panels: usize },

    #[error("root bracketing failed for phase target {0}")]
    RootBracket(f64),

    #[error("finite-difference step too large: {0}")]
    StepTooLarge(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
