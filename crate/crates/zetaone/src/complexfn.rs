//! Complex cotangent and hyperbolic kernels plus the unit-circle roots used
//! by the closed forms and residue formulas.
//!
//! The workhorse is the rectangular form
//!
//! ```text
//! cot(x + iy) = (sin 2x - i sinh 2y) / (cosh 2y - cos 2x)
//! ```
//!
//! which stays accurate as long as the input keeps distance from the real
//! poles at multiples of pi. For |y| beyond [`COT_SATURATION`] the value is
//! within ~1e-17 of the limit -i·sign(y), so the limit is returned directly
//! and sinh/cosh never overflow, no matter how tall the contour.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Rectangular complex number over f64.
pub type ComplexValue = Complex64;

/// Inputs closer than this to a pole are rejected with a pole error.
pub const POLE_TOLERANCE: f64 = 1e-12;

/// |Im| threshold (in the cot argument) beyond which cot is saturated at -+i.
pub const COT_SATURATION: f64 = 20.0;

/// cot(x + iy) in rectangular form.
pub fn cot_rect(x: f64, y: f64) -> Result<Complex64> {
    if y.abs() > COT_SATURATION {
        return Ok(Complex64::new(0.0, -y.signum()));
    }
    let nearest = (x / PI).round() * PI;
    if (x - nearest).hypot(y) < POLE_TOLERANCE {
        return Err(Error::Pole {
            nearest: Complex64::new(nearest, 0.0),
            tolerance: POLE_TOLERANCE,
        });
    }
    Ok(cot_rect_raw(x, y))
}

/// `cot_rect` without the pole guard. At a pole the division yields inf/NaN;
/// callers must keep their distance.
pub(crate) fn cot_rect_raw(x: f64, y: f64) -> Complex64 {
    if y.abs() > COT_SATURATION {
        return Complex64::new(0.0, -y.signum());
    }
    let (sin2x, cos2x) = (2.0 * x).sin_cos();
    let denom = (2.0 * y).cosh() - cos2x;
    Complex64::new(sin2x / denom, -(2.0 * y).sinh() / denom)
}

/// cot(pi z); the poles are exactly the integers.
pub fn cot_pi(z: Complex64) -> Result<Complex64> {
    let nearest = z.re.round();
    if (z.re - nearest).hypot(z.im) < POLE_TOLERANCE {
        return Err(Error::Pole {
            nearest: Complex64::new(nearest, 0.0),
            tolerance: POLE_TOLERANCE,
        });
    }
    Ok(cot_rect_raw(PI * z.re, PI * z.im))
}

pub(crate) fn cot_pi_raw(z: Complex64) -> Complex64 {
    cot_rect_raw(PI * z.re, PI * z.im)
}

/// coth(t) for t > 0, computed as 1 + 2/expm1(2t) so it neither overflows
/// nor loses accuracy for small t. Strictly decreasing.
pub fn coth_real(t: f64) -> Result<f64> {
    if !(t > 0.0) {
        return Err(Error::Domain(format!("coth requires t > 0, got {t}")));
    }
    Ok(1.0 + 2.0 / (2.0 * t).exp_m1())
}

pub fn tanh_real(t: f64) -> f64 {
    t.tanh()
}

/// The root exp(i pi (2k-1) / (2m)) of z^{2m} + 1 = 0, for 1 <= k <= m.
/// Computed straight from the angle, never by repeated multiplication.
pub fn alpha_root(m: u32, k: u32) -> Result<Complex64> {
    if m == 0 {
        return Err(Error::Domain("alpha_root requires m >= 1".into()));
    }
    if k < 1 || k > m {
        return Err(Error::Domain(format!(
            "alpha_root requires 1 <= k <= m, got k={k}, m={m}"
        )));
    }
    let theta = PI * (2 * k as u64 - 1) as f64 / (2 * m as u64) as f64;
    Ok(Complex64::from_polar(1.0, theta))
}

/// The root exp(i pi k / m) of z^{2m} - 1 = 0 for 1 <= k <= 2m-1, k != m.
/// k = m would be the point -1, which is a double pole of the minus-family
/// kernel and handled separately.
pub fn beta_root(m: u32, k: u32) -> Result<Complex64> {
    if m == 0 {
        return Err(Error::Domain("beta_root requires m >= 1".into()));
    }
    if k < 1 || k as u64 > 2 * m as u64 - 1 || k == m {
        return Err(Error::Domain(format!(
            "beta_root requires 1 <= k <= 2m-1 with k != m, got k={k}, m={m}"
        )));
    }
    let theta = PI * k as f64 / m as f64;
    Ok(Complex64::from_polar(1.0, theta))
}
