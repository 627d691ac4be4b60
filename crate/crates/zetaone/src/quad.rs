//! Adaptive Gauss quadrature along straight segments in the complex plane.
//!
//! Each panel is estimated with a fixed 15-point Gauss-Legendre rule and
//! bisected until the whole-vs-halves discrepancy meets the tolerance.

use num_complex::Complex64;

use crate::error::{Error, Result};

// 15-point Gauss-Legendre nodes and weights on [-1, 1].
const GL15: [(f64, f64); 15] = [
    (-9.87992518020485377e-1, 3.07532419961186465e-2),
    (-9.37273392400705951e-1, 7.03660474881080689e-2),
    (-8.48206583410427206e-1, 1.07159220467171773e-1),
    (-7.24417731360170070e-1, 1.39570677926153908e-1),
    (-5.70972172608538830e-1, 1.66269205816993781e-1),
    (-3.94151347077563385e-1, 1.86161000015561878e-1),
    (-2.01194093997434514e-1, 1.98431485327111246e-1),
    (0.0, 2.02578241925560898e-1),
    (2.01194093997434514e-1, 1.98431485327111246e-1),
    (3.94151347077563385e-1, 1.86161000015561878e-1),
    (5.70972172608538830e-1, 1.66269205816993781e-1),
    (7.24417731360170070e-1, 1.39570677926153908e-1),
    (8.48206583410427206e-1, 1.07159220467171773e-1),
    (9.37273392400705951e-1, 7.03660474881080689e-2),
    (9.87992518020485377e-1, 3.07532419961186465e-2),
];

const MAX_DEPTH: u32 = 30;

fn gl15<F: Fn(Complex64) -> Complex64>(f: &F, a: Complex64, b: Complex64) -> Complex64 {
    let mid = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let mut acc = Complex64::new(0.0, 0.0);
    for (node, weight) in GL15 {
        acc += weight * f(mid + node * half);
    }
    half * acc
}

/// Integrate `f` along the segment a -> b to absolute tolerance `tol`.
pub(crate) fn integrate_segment<F>(
    f: &F,
    a: Complex64,
    b: Complex64,
    tol: f64,
    label: &'static str,
) -> Result<Complex64>
where
    F: Fn(Complex64) -> Complex64,
{
    fn recurse<F: Fn(Complex64) -> Complex64>(
        f: &F,
        a: Complex64,
        b: Complex64,
        whole: Complex64,
        tol: f64,
        depth: u32,
        label: &'static str,
    ) -> Result<Complex64> {
        let mid = 0.5 * (a + b);
        let left = gl15(f, a, mid);
        let right = gl15(f, mid, b);
        let refined = left + right;
        let err = (refined - whole).norm();
        if err <= tol {
            return Ok(refined);
        }
        if depth >= MAX_DEPTH {
            return Err(Error::Quadrature {
                segment: label,
                error: err,
                tolerance: tol,
            });
        }
        let half_tol = 0.5 * tol;
        Ok(recurse(f, a, mid, left, half_tol, depth + 1, label)?
            + recurse(f, mid, b, right, half_tol, depth + 1, label)?)
    }

    let whole = gl15(f, a, b);
    recurse(f, a, b, whole, tol, 0, label)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn polynomial_segment() {
        // int_0^{1+i} z^2 dz = (1+i)^3 / 3
        let b = Complex64::new(1.0, 1.0);
        let got = integrate_segment(&|z| z * z, Complex64::new(0.0, 0.0), b, 1e-12, "t").unwrap();
        let expect = b * b * b / 3.0;
        assert!((got - expect).norm() < 1e-12);
    }

    #[test]
    fn cauchy_integral_around_origin() {
        // closed square around 0: integral of 1/z = 2 pi i
        let c = [
            Complex64::new(1.0, -1.0),
            Complex64::new(1.0, 1.0),
            Complex64::new(-1.0, 1.0),
            Complex64::new(-1.0, -1.0),
        ];
        let f = |z: Complex64| 1.0 / z;
        let mut total = Complex64::new(0.0, 0.0);
        for i in 0..4 {
            total += integrate_segment(&f, c[i], c[(i + 1) % 4], 1e-10, "side").unwrap();
        }
        let expect = Complex64::new(0.0, 2.0 * PI);
        assert!((total - expect).norm() < 1e-9, "{total}");
    }
}
