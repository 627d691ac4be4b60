//! Closed-form values of the zeta-one functions at even arguments.
//!
//! For s = 2m the residue theorem collapses each function to a finite sum
//! over the unit-circle roots of z^{2m} -+ 1:
//!
//! ```text
//! zp1(2m) = -1/2 + (1/2m) sum_{k=1..m}  pi a^{2k-1} cot(pi a^{2k-1}),   a = exp(i pi / 2m)
//! zm1(2m) =  1/2 + (2m-1)/(4m)
//!            - (pi/4m) sum_{k=1..2m-1, k!=m}  b^k cot(pi b^k),          b = exp(i pi / m)
//! ```
//!
//! Both sums are accumulated pair-by-pair: the k-th and (m+1-k)-th plus-family
//! terms (resp. k and 2m-k for the minus family) are complex conjugates, so
//! each pair is real up to rounding. The leftover imaginary part is recorded
//! in `residual_imag` instead of being silently dropped.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::complexfn::{alpha_root, beta_root, cot_pi, coth_real, tanh_real};
use crate::error::{Error, Result};
use crate::report::{EvalResult, Method};

/// Largest supported half-order m in the closed forms.
pub const MAX_HALF_ORDER: u32 = 50;

/// Rounding budget for a closed-form evaluation (a handful of f64
/// operations per root, all acceptance comparisons sit at 1e-11 or looser).
const CLOSED_FORM_ERROR_BOUND: f64 = 1e-12;

fn check_half_order(m: u32) -> Result<()> {
    if (1..=MAX_HALF_ORDER).contains(&m) {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "m must be in 1..={MAX_HALF_ORDER}, got {m}"
        )))
    }
}

/// The conjugate-paired terms `pi a^{2k-1} cot(pi a^{2k-1})` of the
/// plus-family root sum: one entry per pair (k, m+1-k) in ascending k, plus
/// the lone middle term `pi i cot(pi i)` when m is odd. Each entry is real
/// up to rounding; the diagnostics are public so tests can assert that.
pub fn plus_pair_sums(m: u32) -> Result<Vec<Complex64>> {
    check_half_order(m)?;
    let term = |k: u32| -> Result<Complex64> {
        let w = alpha_root(m, k)?;
        Ok(PI * w * cot_pi(w)?)
    };
    let mut pairs = Vec::with_capacity((m as usize + 1) / 2);
    for k in 1..=m / 2 {
        pairs.push(term(k)? + term(m + 1 - k)?);
    }
    if m % 2 == 1 {
        pairs.push(term(m / 2 + 1)?);
    }
    Ok(pairs)
}

/// The conjugate-paired terms `b^k cot(pi b^k)` of the minus-family root
/// sum, one entry per pair (k, 2m-k) in ascending k. Empty for m = 1.
pub fn minus_pair_sums(m: u32) -> Result<Vec<Complex64>> {
    check_half_order(m)?;
    let term = |k: u32| -> Result<Complex64> {
        let w = beta_root(m, k)?;
        Ok(w * cot_pi(w)?)
    };
    let mut pairs = Vec::with_capacity(m as usize - 1);
    for k in 1..m {
        pairs.push(term(k)? + term(2 * m - k)?);
    }
    Ok(pairs)
}

/// zp1(2m) by the closed form.
pub fn zeta_plus_one_even(m: u32) -> Result<EvalResult> {
    let total: Complex64 = plus_pair_sums(m)?.into_iter().sum();
    let scaled = total / (2 * m) as f64;
    Ok(EvalResult {
        value: -0.5 + scaled.re,
        method: Method::ClosedForm,
        error_bound: CLOSED_FORM_ERROR_BOUND,
        terms_used: 0,
        residual_imag: scaled.im.abs(),
    })
}

/// zm1(2m) by the closed form. For m = 1 the root sum is empty and the
/// value is exactly 3/4.
pub fn zeta_minus_one_even(m: u32) -> Result<EvalResult> {
    let total: Complex64 = minus_pair_sums(m)?.into_iter().sum();
    let scaled = total * (PI / (4 * m) as f64);
    Ok(EvalResult {
        value: 0.5 + (2 * m - 1) as f64 / (4 * m) as f64 - scaled.re,
        method: Method::ClosedForm,
        error_bound: CLOSED_FORM_ERROR_BOUND,
        terms_used: 0,
        residual_imag: scaled.im.abs(),
    })
}

/// zp1(2m) from only real trigonometric/hyperbolic functions; available for
/// m in {1, 2, 3}.
pub fn zeta_plus_one_real(m: u32) -> Result<EvalResult> {
    let value = match m {
        1 => -0.5 + PI / 2.0 * coth_real(PI)?,
        2 => {
            let a = std::f64::consts::SQRT_2 * PI;
            -0.5 + a / 4.0 * ((a.sin() + a.sinh()) / (a.cosh() - a.cos()))
        }
        3 => {
            let r3 = 3.0f64.sqrt();
            let bracket =
                (r3 * (r3 * PI).sin() + PI.sinh()) / (PI.cosh() - (r3 * PI).cos()) + coth_real(PI)?;
            -0.5 + PI / 6.0 * bracket
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "no real-trigonometric form for m={m}; only m in {{1,2,3}}"
            )))
        }
    };
    Ok(real_form(value))
}

/// zm1(2m) from only real functions; available for m in {1, 2, 3}.
pub fn zeta_minus_one_real(m: u32) -> Result<EvalResult> {
    let value = match m {
        1 => 0.75,
        2 => 7.0 / 8.0 - PI / 4.0 * coth_real(PI)?,
        3 => {
            let r3 = 3.0f64.sqrt();
            11.0 / 12.0 - r3 / 6.0 * PI * tanh_real(r3 * PI / 2.0)
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "no real-trigonometric form for m={m}; only m in {{1,2,3}}"
            )))
        }
    };
    Ok(real_form(value))
}

fn real_form(value: f64) -> EvalResult {
    EvalResult {
        value,
        method: Method::RealForm,
        error_bound: CLOSED_FORM_ERROR_BOUND,
        terms_used: 0,
        residual_imag: 0.0,
    }
}
