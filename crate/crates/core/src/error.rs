use thiserror::Error;

/// Crate-wide error type.
#[derive(Error, Debug, Clone)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("domain error: {0}")]
    DomainError(String),

    /// Cholesky breakdown or similar loss of positivity; raise `mantissa_bits` and retry.
    #[error("precision failure at {bits} bits: {context}")]
    PrecisionFailure { bits: u32, context: String },

    /// Integrator/fitter could not reach the requested tolerance. Carries the
    /// best estimate together with the achieved error bound.
    #[error("accuracy failure: best estimate {estimate:e}, error bound {bound:e}")]
    AccuracyFailure { estimate: f64, bound: f64 },

    #[error("range error: magnitude out of range, log-scale value {log_value}")]
    RangeError { log_value: f64 },

    #[error("unsupported parameters: {0}")]
    UnsupportedParameters(String),

    #[error("unsupported method: {0}")]
    UnsupportedMethod(String),

    /// Riccati integration hit R_n in {0, 1}; carries the last good state.
    #[error("singularity abort at t={t}: R={big_r}, r={little_r}")]
    SingularityAbort { t: f64, big_r: f64, little_r: f64 },

    #[error("stiffness failure: step size underflow at t={t}")]
    StiffnessFailure { t: f64 },

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    /// Forward discrete recursion found no acceptable real root.
    #[error("root failure: no real root near hint; candidates {candidates:?}")]
    RootFailure { candidates: Vec<f64> },

    #[error("trajectory coverage error: {0}")]
    CoverageError(String),

    #[error("insufficient samples: have {have}, need {need}")]
    InsufficientSamples { have: usize, need: usize },

    #[error("numeric failure: {0}")]
    NumericFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
