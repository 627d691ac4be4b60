use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Input outside an operation's documented domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Evaluation requested at (or within tolerance of) a pole.
    #[error("pole error: input within {tolerance:e} of the pole at {nearest}")]
    Pole { nearest: Complex64, tolerance: f64 },

    /// No closed or real-trigonometric form exists for the requested argument.
    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A series would need more terms than the configured cap allows.
    #[error("capacity error: {needed} terms needed, cap is {cap}")]
    Capacity { needed: u64, cap: u64 },

    /// Adaptive quadrature could not reach the requested tolerance.
    #[error("quadrature error on {segment}: panel error {error:.3e} exceeds {tolerance:.3e}")]
    Quadrature {
        segment: &'static str,
        error: f64,
        tolerance: f64,
    },
}

impl Error {
    /// Process exit code: 1 for domain/validation errors, 2 for numeric or
    /// capacity failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Domain(_) | Error::Pole { .. } | Error::Unsupported(_) => 1,
            Error::Capacity { .. } | Error::Quadrature { .. } => 2,
        }
    }
}
