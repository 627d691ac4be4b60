//! Signed Bernoulli numbers and even zeta values as exact rationals.
//!
//! The even zeta values are rational multiples of powers of pi:
//!
//! ```text
//! zeta(2k) = -(1/2) * (2*pi*i)^{2k} / (2k)! * B_{2k}
//!          = (-1)^{k+1} * 2^{2k-1} / (2k)! * B_{2k} * pi^{2k}
//! ```
//!
//! so `zeta(2k)/pi^{2k}` is computed exactly and only the final multiply by
//! `pi^{2k}` rounds. The Bernoulli numbers use the signed convention
//! B_1 = -1/2, obtained from the recurrence
//! `sum_{j=0}^{n} C(n+1, j) B_j = 0` with B_0 = 1.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact fraction of arbitrary-precision integers. Stored in lowest terms
/// with a positive denominator; equality is structural.
pub type Rational = BigRational;

/// Default cap on the Bernoulli index; numerators grow fast beyond this.
pub const DEFAULT_BERNOULLI_CAP: u32 = 64;

/// zeta(2k) written exactly as `coefficient * pi^{2k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaEvenExact {
    /// The even order 2k.
    pub order: u32,
    /// zeta(2k) / pi^{2k}, exact and always positive.
    pub coefficient: Rational,
}

impl ZetaEvenExact {
    /// Floating-point value `coefficient * pi^{2k}`, good to ~1 ulp: plain
    /// `powi` drifts past the 4-ulp budget near order 50, where zeta(2k)
    /// sits barely above 1, so the power is carried in double-double.
    pub fn value(&self) -> f64 {
        let coeff = self
            .coefficient
            .to_f64()
            .expect("coefficient is finite and within f64 range");
        let (hi, lo) = dd_pow((PI_HI, PI_LO), self.order);
        coeff.mul_add(hi, coeff * lo)
    }
}

const PI_HI: f64 = std::f64::consts::PI;
const PI_LO: f64 = 1.224_646_799_147_353_2e-16; // pi - PI_HI

fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

fn dd_mul(a: (f64, f64), b: (f64, f64)) -> (f64, f64) {
    let (p, e) = two_prod(a.0, b.0);
    let e = e + (a.0 * b.1 + a.1 * b.0);
    let s = p + e;
    (s, e - (s - p))
}

fn dd_pow(base: (f64, f64), mut n: u32) -> (f64, f64) {
    let mut result = (1.0, 0.0);
    let mut b = base;
    while n > 0 {
        if n & 1 == 1 {
            result = dd_mul(result, b);
        }
        b = dd_mul(b, b);
        n >>= 1;
    }
    result
}

/// Signed Bernoulli number B_n, exact. Capped at [`DEFAULT_BERNOULLI_CAP`].
pub fn bernoulli(n: u32) -> Result<Rational> {
    bernoulli_with_cap(n, DEFAULT_BERNOULLI_CAP)
}

/// Signed Bernoulli number B_n with a caller-chosen cap.
pub fn bernoulli_with_cap(n: u32, cap: u32) -> Result<Rational> {
    if n > cap {
        return Err(Error::Capacity {
            needed: n as u64,
            cap: cap as u64,
        });
    }
    let mut row = bernoulli_row(n);
    Ok(row.pop().expect("row holds B_0..B_n"))
}

/// B_0..B_n via the binomial-sum recurrence. Pure; recomputed per call.
fn bernoulli_row(n: u32) -> Vec<Rational> {
    let mut b: Vec<Rational> = Vec::with_capacity(n as usize + 1);
    b.push(Rational::one());
    for r in 1..=n as u64 {
        // C(r+1, j) built incrementally over j = 0..r-1.
        let mut binom = BigInt::one();
        let mut acc = Rational::zero();
        for (j, bj) in b.iter().enumerate() {
            let j = j as u64;
            acc += bj * Rational::from_integer(binom.clone());
            binom = binom * BigInt::from(r + 1 - j) / BigInt::from(j + 1);
        }
        b.push(-acc / Rational::from_integer(BigInt::from(r + 1)));
    }
    b
}

/// Exact coefficient of pi^{2k} in zeta(2k), for k >= 1.
pub fn zeta_even_exact(k: u32) -> Result<ZetaEvenExact> {
    if k == 0 {
        return Err(Error::Domain("zeta_even_exact requires k >= 1".into()));
    }
    let b2k = bernoulli(2 * k)?;
    let mut factorial = BigInt::one();
    for i in 2..=(2 * k) as u64 {
        factorial *= BigInt::from(i);
    }
    let pow2 = BigInt::one() << (2 * k - 1) as usize;
    let sign = if k % 2 == 0 { -1 } else { 1 };
    let coefficient = b2k * Rational::new(BigInt::from(sign) * pow2, factorial);
    Ok(ZetaEvenExact {
        order: 2 * k,
        coefficient,
    })
}

/// Floating-point zeta(2k) from the exact coefficient.
pub fn zeta_even(k: u32) -> Result<f64> {
    Ok(zeta_even_exact(k)?.value())
}
