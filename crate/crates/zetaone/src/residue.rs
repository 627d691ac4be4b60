//! Residues and square-contour verification for the two cotangent kernels
//!
//! ```text
//! F: cot(pi z)/(z^{2m}+1)       G: cot(pi z)/(z^{2m}-1)
//! ```
//!
//! Analytic residues:
//!
//! * `Res(F, n) = 1/(pi (n^{2m}+1))` at every integer n;
//! * `Res(F, +-a^{2k-1}) = -a^{2k-1} cot(pi a^{2k-1})/(2m)`, the same value
//!   at both signs, where a = exp(i pi/2m);
//! * `Res(G, n) = 1/(pi (n^{2m}-1))` at integers n != +-1;
//! * `Res(G, b^k) = b^k cot(pi b^k)/(2m)` with b = exp(i pi/m), k != m;
//! * `Res(G, +-1) = -(2m-1)/(4m pi)` at the two double poles, obtained from
//!   d/dz[(z -+ 1)^2 G(z)].
//!
//! Each formula is checked against an oracle that never sees it: simple
//! poles against a 512-node trapezoid integral over a small circle (the
//! rule is spectrally accurate there), double poles against a central
//! finite difference of (z -+ 1)^2 G(z).
//!
//! The contour C(N) is the counterclockwise square with corners at
//! +-(N+1/2) +- (N+1/2)i, which threads exactly between the poles. On it,
//! |cot(pi z)| <= coth(3 pi/2) and |z^{2m} +- 1| >= (N+1/2)^{2m} - 1, so
//!
//! ```text
//! |integral over C(N)| <= coth(3 pi/2) * 8 (N+1/2) / ((N+1/2)^{2m} - 1)
//! ```
//!
//! which is the `integral_bound` reported alongside each verification.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::complexfn::{alpha_root, beta_root, cot_pi, cot_pi_raw, coth_real};
use crate::error::{Error, Result};
use crate::quad::integrate_segment;
pub use crate::report::{ContourReport, Kernel, ResidueReport};

/// Caps for contour verification; the kernels steepen near the unit circle
/// as m grows and nothing desk-scale needs more.
pub const MAX_CONTOUR_M: u32 = 6;
pub const MAX_CONTOUR_N: u32 = 20;

/// Acceptance threshold on |integral - 2 pi i * residue sum|.
pub const RESIDUE_MATCH_TOL: f64 = 1e-6;
/// Relative slack allowed on the analytic bound check.
pub const BOUND_SLACK: f64 = 1e-6;

/// Absolute quadrature tolerance per contour side.
const SEGMENT_TOL: f64 = 1e-9;
/// Trapezoid nodes for the small-circle residue oracle.
const CIRCLE_NODES: usize = 512;
const MAX_CIRCLE_RADIUS: f64 = 0.25;
/// Step for the double-pole finite-difference oracle.
const FD_STEP: f64 = 1e-5;

/// The kernel value at z. No pole guard: callers keep their distance, and a
/// hit would surface as a non-finite value downstream.
pub fn kernel_eval(kernel: Kernel, m: u32, z: Complex64) -> Complex64 {
    let zp = z.powu(2 * m);
    let denom = match kernel {
        Kernel::F => zp + 1.0,
        Kernel::G => zp - 1.0,
    };
    cot_pi_raw(z) / denom
}

fn check_m(m: u32) -> Result<()> {
    if m >= 1 {
        Ok(())
    } else {
        Err(Error::Domain("m must be >= 1".into()))
    }
}

// n^{2m} saturates to inf well before the exponent clamp can matter
fn integer_power(n: i64, m: u32) -> f64 {
    (n as f64).powi((2 * m.min(1 << 20)) as i32)
}

/// Res(F, n) at an integer pole: 1/(pi (n^{2m}+1)).
pub fn residue_f_integer(n: i64, m: u32) -> Result<Complex64> {
    check_m(m)?;
    Ok(Complex64::new(
        1.0 / (PI * (integer_power(n, m) + 1.0)),
        0.0,
    ))
}

/// Res(F, sign * a^{2k-1}): the value is independent of the sign.
pub fn residue_f_root(k: u32, m: u32, sign: i32) -> Result<Complex64> {
    if sign != 1 && sign != -1 {
        return Err(Error::Domain(format!("sign must be +-1, got {sign}")));
    }
    let w = alpha_root(m, k)?;
    Ok(-w * cot_pi(w)? / (2 * m) as f64)
}

/// Res(G, n) at a simple integer pole, n not in {-1, 1}.
pub fn residue_g_integer(n: i64, m: u32) -> Result<Complex64> {
    check_m(m)?;
    if n == 1 || n == -1 {
        return Err(Error::Domain(format!(
            "z = {n} is an order-2 pole; use residue_g_double"
        )));
    }
    Ok(Complex64::new(
        1.0 / (PI * (integer_power(n, m) - 1.0)),
        0.0,
    ))
}

/// Res(G, b^k) at a unit-circle root, k != m.
pub fn residue_g_root(k: u32, m: u32) -> Result<Complex64> {
    let w = beta_root(m, k)?;
    Ok(w * cot_pi(w)? / (2 * m) as f64)
}

/// Res(G, +-1) at the double poles: -(2m-1)/(4m pi), independent of sign.
pub fn residue_g_double(sign: i32, m: u32) -> Result<Complex64> {
    check_m(m)?;
    if sign != 1 && sign != -1 {
        return Err(Error::Domain(format!("sign must be +-1, got {sign}")));
    }
    Ok(Complex64::new(
        -((2 * m - 1) as f64) / ((4 * m) as f64 * PI),
        0.0,
    ))
}

fn unit_circle_poles(kernel: Kernel, m: u32) -> Vec<Complex64> {
    match kernel {
        Kernel::F => (1..=m)
            .flat_map(|k| {
                let w = alpha_root(m, k).expect("k in range");
                [w, -w]
            })
            .collect(),
        Kernel::G => (1..=2 * m - 1)
            .filter(|&k| k != m)
            .map(|k| beta_root(m, k).expect("k in range"))
            .chain([Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)])
            .collect(),
    }
}

fn nearest_other_pole_distance(kernel: Kernel, m: u32, pole: Complex64) -> f64 {
    let mut dist = f64::INFINITY;
    let center = pole.re.round() as i64;
    for n in center - 2..=center + 2 {
        let d = (pole - Complex64::new(n as f64, 0.0)).norm();
        if d > 1e-9 {
            dist = dist.min(d);
        }
    }
    for w in unit_circle_poles(kernel, m) {
        let d = (pole - w).norm();
        if d > 1e-9 {
            dist = dist.min(d);
        }
    }
    dist
}

/// Residue by quadrature: (1/2 pi i) times the kernel integrated over a
/// small circle around `pole`. Radius: half the distance to the nearest
/// other pole, capped at 0.25, so the rule converges geometrically.
pub fn numeric_residue(kernel: Kernel, m: u32, pole: Complex64) -> Complex64 {
    let radius = (0.5 * nearest_other_pole_distance(kernel, m, pole)).min(MAX_CIRCLE_RADIUS);
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..CIRCLE_NODES {
        let theta = 2.0 * PI * j as f64 / CIRCLE_NODES as f64;
        let e = Complex64::from_polar(1.0, theta);
        acc += kernel_eval(kernel, m, pole + radius * e) * e;
    }
    acc * (radius / CIRCLE_NODES as f64)
}

/// Double-pole residue of G at sign*1 by central finite difference of
/// (z - sign)^2 G(z).
pub fn numeric_residue_double(sign: i32, m: u32) -> Result<Complex64> {
    check_m(m)?;
    if sign != 1 && sign != -1 {
        return Err(Error::Domain(format!("sign must be +-1, got {sign}")));
    }
    let a = sign as f64;
    let phi = |x: f64| -> Complex64 {
        let z = Complex64::new(x, 0.0);
        let d = z - a;
        d * d * kernel_eval(Kernel::G, m, z)
    };
    Ok((phi(a + FD_STEP) - phi(a - FD_STEP)) / (2.0 * FD_STEP))
}

/// The square contour with corners +-(N+1/2) +- (N+1/2)i.
#[derive(Debug, Clone, Copy)]
pub struct ContourSpec {
    pub n: u32,
}

impl ContourSpec {
    pub fn new(n: u32) -> Result<Self> {
        if !(1..=MAX_CONTOUR_N).contains(&n) {
            return Err(Error::Domain(format!(
                "N must be in 1..={MAX_CONTOUR_N}, got {n}"
            )));
        }
        Ok(ContourSpec { n })
    }

    pub fn half_side(&self) -> f64 {
        self.n as f64 + 0.5
    }

    /// The four sides, counterclockwise: right (up), top (leftward),
    /// left (down), bottom (rightward).
    pub fn segments(&self) -> [(Complex64, Complex64, &'static str); 4] {
        let h = self.half_side();
        let br = Complex64::new(h, -h);
        let tr = Complex64::new(h, h);
        let tl = Complex64::new(-h, h);
        let bl = Complex64::new(-h, -h);
        [
            (br, tr, "C1 (right)"),
            (tr, tl, "C2 (top)"),
            (tl, bl, "C3 (left)"),
            (bl, br, "C4 (bottom)"),
        ]
    }

    /// Point at perimeter fraction t in [0, 1), walking the sides in order.
    pub fn point_at(&self, t: f64) -> Complex64 {
        let u = (t.rem_euclid(1.0)) * 4.0;
        let side = (u as usize).min(3);
        let frac = u - side as f64;
        let (a, b, _) = self.segments()[side];
        a + (b - a) * frac
    }
}

/// Numeric contour integral of the kernel over C(N), counterclockwise.
pub fn contour_integral(kernel: Kernel, m: u32, n: u32) -> Result<Complex64> {
    check_m(m)?;
    let spec = ContourSpec::new(n)?;
    let f = move |z: Complex64| kernel_eval(kernel, m, z);
    let mut total = Complex64::new(0.0, 0.0);
    for (a, b, label) in spec.segments() {
        total += integrate_segment(&f, a, b, SEGMENT_TOL, label)?;
    }
    Ok(total)
}

/// Analytic bound on |contour integral| over C(N):
/// coth(3 pi/2) * 8(N+1/2) / ((N+1/2)^{2m} - 1). Strictly decreasing in N.
pub fn integral_bound(m: u32, n: u32) -> Result<f64> {
    check_m(m)?;
    if n < 1 {
        return Err(Error::Domain("N must be >= 1".into()));
    }
    let h = n as f64 + 0.5;
    Ok(coth_real(1.5 * PI)? * 8.0 * h / (h.powi(2 * m as i32) - 1.0))
}

/// Poles of the kernel enclosed by C(N): simple integer poles, unit-circle
/// root count, and order-2 pole count (G only).
pub fn pole_census(kernel: Kernel, m: u32, n: u32) -> Result<(Vec<i64>, usize, usize)> {
    check_m(m)?;
    ContourSpec::new(n)?;
    let bound = n as i64;
    match kernel {
        Kernel::F => Ok(((-bound..=bound).collect(), 2 * m as usize, 0)),
        Kernel::G => Ok((
            (-bound..=bound).filter(|&j| j != 1 && j != -1).collect(),
            2 * m as usize - 2,
            2,
        )),
    }
}

/// Sum of the analytic residues over every pole inside C(N), in a fixed
/// order: integers ascending, then unit-circle roots, then double poles.
pub fn enclosed_residue_sum(kernel: Kernel, m: u32, n: u32) -> Result<Complex64> {
    let (integers, _, _) = pole_census(kernel, m, n)?;
    let mut sum = Complex64::new(0.0, 0.0);
    match kernel {
        Kernel::F => {
            for j in integers {
                sum += residue_f_integer(j, m)?;
            }
            for k in 1..=m {
                sum += residue_f_root(k, m, 1)?;
                sum += residue_f_root(k, m, -1)?;
            }
        }
        Kernel::G => {
            for j in integers {
                sum += residue_g_integer(j, m)?;
            }
            for k in (1..=2 * m - 1).filter(|&k| k != m) {
                sum += residue_g_root(k, m)?;
            }
            sum += residue_g_double(1, m)?;
            sum += residue_g_double(-1, m)?;
        }
    }
    Ok(sum)
}

/// Full verification at one (kernel, m, N): quadrature integral vs
/// 2 pi i times the analytic residue sum, plus the magnitude bound.
pub fn verify(kernel: Kernel, m: u32, n: u32) -> Result<ContourReport> {
    if !(1..=MAX_CONTOUR_M).contains(&m) {
        return Err(Error::Domain(format!(
            "verify supports m in 1..={MAX_CONTOUR_M}, got {m}"
        )));
    }
    let integral = contour_integral(kernel, m, n)?;
    let residue_sum = enclosed_residue_sum(kernel, m, n)?;
    let rhs = Complex64::new(0.0, 2.0 * PI) * residue_sum;
    let bound = integral_bound(m, n)?;
    let passed = (integral - rhs).norm() <= RESIDUE_MATCH_TOL
        && integral.norm() <= bound * (1.0 + BOUND_SLACK);
    Ok(ContourReport {
        function_id: kernel,
        m,
        n,
        integral,
        residue_sum_times_2pi_i: rhs,
        integral_bound: bound,
        passed,
    })
}

/// Analytic-vs-oracle reports for every pole class of one kernel at one m:
/// integer poles |n| <= 3, all unit-circle roots (both signs for F), and
/// for G the two double poles checked by finite difference.
pub fn residue_reports(kernel: Kernel, m: u32) -> Result<Vec<ResidueReport>> {
    check_m(m)?;
    let mut reports = Vec::new();
    let mut push = |pole: Complex64, order: u8, analytic: Complex64, numeric: Complex64| {
        reports.push(ResidueReport {
            pole,
            order,
            analytic,
            numeric,
            abs_diff: (analytic - numeric).norm(),
        });
    };
    match kernel {
        Kernel::F => {
            for j in -3..=3i64 {
                let pole = Complex64::new(j as f64, 0.0);
                push(
                    pole,
                    1,
                    residue_f_integer(j, m)?,
                    numeric_residue(kernel, m, pole),
                );
            }
            for k in 1..=m {
                for sign in [1i32, -1] {
                    let pole = alpha_root(m, k)? * sign as f64;
                    push(
                        pole,
                        1,
                        residue_f_root(k, m, sign)?,
                        numeric_residue(kernel, m, pole),
                    );
                }
            }
        }
        Kernel::G => {
            for j in [-3i64, -2, 0, 2, 3] {
                let pole = Complex64::new(j as f64, 0.0);
                push(
                    pole,
                    1,
                    residue_g_integer(j, m)?,
                    numeric_residue(kernel, m, pole),
                );
            }
            for k in (1..=2 * m - 1).filter(|&k| k != m) {
                let pole = beta_root(m, k)?;
                push(
                    pole,
                    1,
                    residue_g_root(k, m)?,
                    numeric_residue(kernel, m, pole),
                );
            }
            for sign in [1i32, -1] {
                push(
                    Complex64::new(sign as f64, 0.0),
                    2,
                    residue_g_double(sign, m)?,
                    numeric_residue_double(sign, m)?,
                );
            }
        }
    }
    Ok(reports)
}
