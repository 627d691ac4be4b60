//! Report types shared by the library surface and the CLI's JSON output.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// How a value was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    ClosedForm,
    RealForm,
    Series,
}

/// A single numeric evaluation together with its accuracy bookkeeping.
///
/// `error_bound` is a guaranteed bound on the truncation error (the analytic
/// tail bound for series, a fixed rounding budget for closed forms).
/// `terms_used` is the truncation index N of the tail bound, 0 for closed
/// forms. `residual_imag` records the magnitude of the imaginary part
/// discarded when a conjugate-pair root sum was collapsed to a real value;
/// it is the primary health metric for that cancellation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalResult {
    pub value: f64,
    pub method: Method,
    pub error_bound: f64,
    pub terms_used: u64,
    pub residual_imag: f64,
}

/// Which summation identity an [`IdentityReport`] refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum IdentityId {
    EulerGoldbach,
    ShallitZikan,
    #[serde(rename = "even_sum_3_4")]
    EvenSum34,
    Zeta4kSum,
    Zeta2mkSum,
}

/// Partial sum of an identity, its proven tail bound, and the target value.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity_id: IdentityId,
    pub partial_sum: f64,
    pub tail_bound: f64,
    pub target: f64,
    /// |partial_sum - target|
    pub residual: f64,
}

/// The two meromorphic kernels under contour verification:
/// `F` = cot(pi z)/(z^{2m}+1), `G` = cot(pi z)/(z^{2m}-1).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kernel {
    F,
    G,
}

impl std::fmt::Display for Kernel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Kernel::F => write!(f, "f"),
            Kernel::G => write!(f, "g"),
        }
    }
}

/// Outcome of one square-contour verification run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ContourReport {
    pub function_id: Kernel,
    pub m: u32,
    #[serde(rename = "N")]
    pub n: u32,
    pub integral: Complex64,
    pub residue_sum_times_2pi_i: Complex64,
    /// Analytic bound on |integral| for this contour.
    pub integral_bound: f64,
    pub passed: bool,
}

/// Analytic residue against its independent numeric oracle at one pole.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResidueReport {
    pub pole: Complex64,
    pub order: u8,
    pub analytic: Complex64,
    pub numeric: Complex64,
    pub abs_diff: f64,
}
