use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument sits on (or numerically at) a pole or branch point.
    #[error("domain error: {0}")]
    Domain(String),

    /// A series denominator vanishes (to within the guard distance).
    #[error("pole: {0}")]
    Pole(String),

    /// A series could not be truncated within `max_terms`, or the requested
    /// accuracy was not reached.
    #[error("precision error: {0}")]
    Precision(String),

    /// An exact computation exceeded its configured size cap.
    #[error("resource limit: {0}")]
    Resource(String),

    /// An input failed validation.
    #[error("validation error: {0}")]
    Validation(String),

    /// The requested parameter combination is outside the supported cases.
    #[error("unsupported case: {0}")]
    Unsupported(String),

    #[error("no suitable root: {0}")]
    NoSuchRoot(String),

    #[error("ill-conditioned: {0}")]
    IllConditioned(String),

    #[error("not a polynomial: {0}")]
    NotAPolynomial(String),

    #[error("root iteration did not converge: {0}")]
    Convergence(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
