use thiserror::Error;

/// Errors produced by the library.
///
/// Parse problems and invalid arguments are kept apart from numerical
/// failures so that front ends can map them to different exit statuses.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("empty expression")]
    EmptyInput,

    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("unknown function `{name}` at offset {offset}")]
    UnknownFunction { name: String, offset: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("alpha must lie in (0, 1], got {0}")]
    InvalidAlpha(f64),

    #[error("invalid interval [{a}, {b}]: need 0 <= a < b")]
    InvalidInterval { a: f64, b: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("point {0} is negative; conformable operators live on [0, inf)")]
    NegativePoint(f64),

    #[error("derivative of order {requested} requested, only {available} available")]
    InsufficientSmoothness { requested: usize, available: usize },

    #[error("finite-difference estimate unstable (relative error estimate {estimate:.3e})")]
    Instability { estimate: f64 },

    #[error("right limit at t = 0 does not converge")]
    LimitDiverged,

    #[error("quadrature did not reach tolerance after {subdivisions} subdivisions (error estimate {error_estimate:.3e})")]
    QuadratureTolerance {
        subdivisions: usize,
        error_estimate: f64,
    },

    #[error("non-finite integrand value at t = {0}")]
    NonFiniteSample(f64),

    #[error("ODE step produced a non-finite state at u = {0}")]
    StepFailure(f64),

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
}

impl Error {
    /// True for errors caused by malformed user input rather than numerics.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            Error::EmptyInput
                | Error::Syntax { .. }
                | Error::UnknownFunction { .. }
                | Error::InvalidAlpha(_)
                | Error::InvalidInterval { .. }
                | Error::InvalidArgument(_)
                | Error::NegativePoint(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
