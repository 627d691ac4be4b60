//! Brute-force series oracles with proven tail bounds, plus the classical
//! summation identities they feed.
//!
//! Every bound comes from the integral test on a decreasing positive term.
//!
//! * `sum_{n>N} n^{-s} <= int_N^inf x^{-s} dx = N^{1-s}/(s-1)`.
//! * `sum_{n>N} 1/(n^s+1)` is bounded by the same quantity, term by term.
//! * `1/(n^s-1) = n^{-s}/(1 - n^{-s})`, so
//!   `sum_{n>N} 1/(n^s-1) <= (1/(1-(N+1)^{-s})) * N^{1-s}/(s-1)`.
//! * `sum_{k>K} (zeta(k)-1) = sum_{n>=2} n^{-K}/(n-1)
//!   <= 2^{-K} + (1/2) int_2^inf x^{-K} dx <= 2^{-K} (1 + 2/(K-1))`.
//! * `sum_{k>K} (zeta(2mk)-1) = sum_{n>=2} n^{-2mK} n^{-2m}/(1-n^{-2m})`
//!   is dominated by its n = 2 column: `<= 2 * 4^{-mK}`.
//! * Perfect powers above P: every such p = n^e with n, e >= 2 appears in
//!   some exponent class, so summing the classes overcounts. Per exponent e
//!   with a = floor(P^{1/e}) + 1:
//!   `sum_{n>=a} 1/(n^e-1) <= (1/(1-a^{-e})) (a^{-e} + a^{1-e}/(e-1))`;
//!   exponents past ceil(log2 P) close with the geometric bound
//!   `(1/(1-2^{-(E+1)})) (1 + 2/E) 2^{-E}`.
//!
//! Terms are accumulated in ascending n through a fixed deterministic
//! scheme: 4096-wide chunks, each chunk pairwise-reduced, chunks combined
//! with Neumaier compensation. Identical inputs give bit-identical sums,
//! and the rounding error stays a few ulp even across 1e10 terms (a naive
//! running sum would swallow terms below the accumulator's ulp and lose
//! ~1e-8 on the s = 2 series, far above the 1e-10 tolerances used here).

use std::collections::BTreeSet;

use crate::bernoulli::zeta_even;
use crate::closed::zeta_minus_one_even;
use crate::error::{Error, Result};
use crate::report::{EvalResult, IdentityId, IdentityReport, Method};

/// Default per-call cap on series terms; keeps one invocation desk-scale.
/// The CLI honors `ZETAONE_TERM_CAP` as an override, and every series
/// operation has a `_with_cap` variant.
pub const DEFAULT_TERM_CAP: u64 = 100_000_000;

/// Smallest accepted tolerance.
pub const MIN_TOL: f64 = 1e-14;

/// Cap on the perfect-power search limit P.
pub const MAX_POWER_LIMIT: u64 = 1_000_000_000_000;

/// The truncation index is padded by this factor past the minimal N so the
/// true error sits clearly below `tol` rather than exactly at it.
const TERM_HEADROOM: f64 = 1.02;

const CHUNK: usize = 4096;

/// Deterministic sum of `term(n as f64)` for n in lo..=hi, ascending.
fn sum_series<F: Fn(f64) -> f64>(lo: u64, hi: u64, term: F) -> f64 {
    debug_assert!(lo >= 1 && lo <= hi);
    let mut buf = [0.0f64; CHUNK];
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    let mut n = lo;
    while n <= hi {
        let len = (hi - n + 1).min(CHUNK as u64) as usize;
        let base = n as f64;
        for (i, slot) in buf[..len].iter_mut().enumerate() {
            *slot = term(base + i as f64);
        }
        if len < CHUNK {
            buf[len..].fill(0.0);
        }
        let mut width = CHUNK / 2;
        while width > 0 {
            for i in 0..width {
                buf[i] = buf[2 * i] + buf[2 * i + 1];
            }
            width /= 2;
        }
        let block = buf[0];
        let t = sum + block;
        comp += if sum.abs() >= block.abs() {
            (sum - t) + block
        } else {
            (block - t) + sum
        };
        sum = t;
        n += len as u64;
    }
    sum + comp
}

/// Neumaier-compensated sum for short sequences in a fixed order.
pub(crate) fn neumaier_sum<I: IntoIterator<Item = f64>>(items: I) -> f64 {
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for x in items {
        let t = sum + x;
        comp += if sum.abs() >= x.abs() {
            (sum - t) + x
        } else {
            (x - t) + sum
        };
        sum = t;
    }
    sum + comp
}

fn check_series_args(s: u32, tol: f64) -> Result<()> {
    if s < 2 {
        return Err(Error::Domain(format!("series require s >= 2, got {s}")));
    }
    if !(tol >= MIN_TOL) {
        return Err(Error::Domain(format!(
            "tolerance must be >= {MIN_TOL:e}, got {tol:e}"
        )));
    }
    Ok(())
}

/// Integral-test bound on `sum_{n>N} n^{-s}`.
fn power_tail_bound(s: u32, n: u64) -> f64 {
    if n == 1 {
        return 1.0 / (s as f64 - 1.0);
    }
    if s > 1100 {
        // true tail < 2^{-1100}; report the smallest normal instead of a
        // misleading hard zero
        return f64::MIN_POSITIVE;
    }
    (n as f64).powi(1 - s as i32) / (s as f64 - 1.0)
}

/// Tail bound for the minus family, `sum_{n>N} 1/(n^s-1)`.
fn minus_tail_bound(s: u32, n: u64) -> f64 {
    let correction = if s > 1100 {
        1.0
    } else {
        1.0 / (1.0 - ((n + 1) as f64).powi(-(s as i32)))
    };
    power_tail_bound(s, n) * correction
}

/// Smallest truncation index meeting `bound(N) <= tol`, padded by
/// [`TERM_HEADROOM`].
fn choose_terms(s: u32, tol: f64, bound: impl Fn(u32, u64) -> f64) -> u64 {
    let exact = (tol * (s as f64 - 1.0)).powf(-1.0 / (s as f64 - 1.0));
    let mut n = if exact.is_finite() && exact >= 1.0 {
        exact.ceil() as u64
    } else {
        1
    };
    while bound(s, n) > tol {
        n += (n / 64).max(1);
    }
    let padded = (n as f64 * TERM_HEADROOM).ceil() as u64;
    padded.max(n + 1)
}

fn series_result(value: f64, error_bound: f64, terms_used: u64) -> EvalResult {
    EvalResult {
        value,
        method: Method::Series,
        error_bound,
        terms_used,
        residual_imag: 0.0,
    }
}

/// Sum of `1/(x^s + shift)` for x in lo..=hi with the hot exponents
/// special-cased; s = 2 alone can run to 1e10 terms.
fn sum_power_series(s: u32, lo: u64, hi: u64, shift: f64) -> f64 {
    match s {
        2 => sum_series(lo, hi, |x| 1.0 / (x * x + shift)),
        3 => sum_series(lo, hi, |x| 1.0 / (x * x * x + shift)),
        4 => sum_series(lo, hi, |x| {
            let q = x * x;
            1.0 / (q * q + shift)
        }),
        _ => {
            let e = s.min(1_100_000) as i32;
            sum_series(lo, hi, move |x| 1.0 / (x.powi(e) + shift))
        }
    }
}

/// Truncated `zeta(s) = sum n^{-s}` with its integral tail bound.
pub fn zeta_int_series(s: u32, tol: f64) -> Result<EvalResult> {
    zeta_int_series_with_cap(s, tol, DEFAULT_TERM_CAP)
}

pub fn zeta_int_series_with_cap(s: u32, tol: f64, cap: u64) -> Result<EvalResult> {
    check_series_args(s, tol)?;
    let n = choose_terms(s, tol, power_tail_bound);
    if n > cap {
        return Err(Error::Capacity { needed: n, cap });
    }
    let value = sum_power_series(s, 1, n, 0.0);
    Ok(series_result(value, power_tail_bound(s, n), n))
}

/// Truncated `zp1(s) = sum_{n>=1} 1/(n^s+1)`.
pub fn zeta_plus_one_series(s: u32, tol: f64) -> Result<EvalResult> {
    zeta_plus_one_series_with_cap(s, tol, DEFAULT_TERM_CAP)
}

pub fn zeta_plus_one_series_with_cap(s: u32, tol: f64, cap: u64) -> Result<EvalResult> {
    check_series_args(s, tol)?;
    let n = choose_terms(s, tol, power_tail_bound);
    if n > cap {
        return Err(Error::Capacity { needed: n, cap });
    }
    let value = sum_power_series(s, 1, n, 1.0);
    Ok(series_result(value, power_tail_bound(s, n), n))
}

/// Truncated `zm1(s) = sum_{n>=2} 1/(n^s-1)`.
pub fn zeta_minus_one_series(s: u32, tol: f64) -> Result<EvalResult> {
    zeta_minus_one_series_with_cap(s, tol, DEFAULT_TERM_CAP)
}

pub fn zeta_minus_one_series_with_cap(s: u32, tol: f64, cap: u64) -> Result<EvalResult> {
    check_series_args(s, tol)?;
    let n = choose_terms(s, tol, minus_tail_bound);
    if n > cap {
        return Err(Error::Capacity { needed: n, cap });
    }
    let value = sum_power_series(s, 2, n, -1.0);
    Ok(series_result(value, minus_tail_bound(s, n), n))
}

/// zeta(s) for the identity sums: the exact Bernoulli route where it
/// applies (even s up to the Bernoulli cap), the truncated series at the
/// tightest accepted tolerance otherwise. Odd arguments have no closed
/// form, and for s > 64 the series needs only a couple of terms.
fn zeta_for_identities(s: u32) -> f64 {
    if s % 2 == 0 && s <= 64 {
        zeta_even(s / 2).expect("s/2 within Bernoulli cap")
    } else {
        zeta_int_series(s, MIN_TOL)
            .expect("small series within default cap")
            .value
    }
}

/// Partial sum `sum_{k=2..K} (zeta(k)-1)`, which converges to 1.
pub fn shallit_zikan_partial(k_max: u32) -> Result<IdentityReport> {
    if !(2..=200).contains(&k_max) {
        return Err(Error::Domain(format!("K must be in 2..=200, got {k_max}")));
    }
    let partial_sum = neumaier_sum((2..=k_max).map(|k| zeta_for_identities(k) - 1.0));
    let kf = k_max as f64;
    let tail_bound = 2.0f64.powi(-(k_max as i32)) * (1.0 + 2.0 / (kf - 1.0));
    Ok(identity_report(
        IdentityId::ShallitZikan,
        partial_sum,
        tail_bound,
        1.0,
    ))
}

/// Partial sum `sum_{k=1..K} (zeta(2k)-1)`, which converges to 3/4.
pub fn even_sum_partial(k_max: u32) -> Result<IdentityReport> {
    if !(1..=100).contains(&k_max) {
        return Err(Error::Domain(format!("K must be in 1..=100, got {k_max}")));
    }
    let partial_sum = neumaier_sum((1..=k_max).map(|k| zeta_for_identities(2 * k) - 1.0));
    let tail_bound = 2.0 * 4.0f64.powi(-(k_max as i32));
    Ok(identity_report(
        IdentityId::EvenSum34,
        partial_sum,
        tail_bound,
        0.75,
    ))
}

/// Partial sum `sum_{k=1..K} (zeta(2mk)-1)`, which converges to zm1(2m).
pub fn zeta_mod_sum_partial(m: u32, k_max: u32) -> Result<IdentityReport> {
    if !(1..=10).contains(&m) {
        return Err(Error::Domain(format!("m must be in 1..=10, got {m}")));
    }
    if !(1..=100).contains(&k_max) {
        return Err(Error::Domain(format!("K must be in 1..=100, got {k_max}")));
    }
    let partial_sum = neumaier_sum((1..=k_max).map(|k| zeta_for_identities(2 * m * k) - 1.0));
    let mk = (m * k_max) as i32;
    let tail_bound = if mk > 530 {
        f64::MIN_POSITIVE
    } else {
        2.0 * 4.0f64.powi(-mk)
    };
    let target = zeta_minus_one_even(m)?.value;
    let id = if m == 2 {
        IdentityId::Zeta4kSum
    } else {
        IdentityId::Zeta2mkSum
    };
    Ok(identity_report(id, partial_sum, tail_bound, target))
}

fn identity_report(
    identity_id: IdentityId,
    partial_sum: f64,
    tail_bound: f64,
    target: f64,
) -> IdentityReport {
    IdentityReport {
        identity_id,
        partial_sum,
        tail_bound,
        target,
        residual: (partial_sum - target).abs(),
    }
}

/// All distinct perfect powers n^e (n, e >= 2) up to and including P,
/// ascending. 16 = 2^4 = 4^2 appears once.
pub fn perfect_powers_upto(p_max: u64) -> Result<Vec<u64>> {
    if p_max < 4 {
        return Err(Error::Domain(format!("P must be >= 4, got {p_max}")));
    }
    if p_max > MAX_POWER_LIMIT {
        return Err(Error::Capacity {
            needed: p_max,
            cap: MAX_POWER_LIMIT,
        });
    }
    let mut powers = BTreeSet::new();
    for e in 2..=p_max.ilog2() {
        let mut base = 2u64;
        loop {
            match base.checked_pow(e) {
                Some(p) if p <= p_max => {
                    powers.insert(p);
                }
                _ => break,
            }
            base += 1;
        }
    }
    Ok(powers.into_iter().collect())
}

/// Partial sum `sum 1/(p-1)` over distinct perfect powers p <= P; the
/// Euler-Goldbach value is 1.
pub fn euler_goldbach_partial(p_max: u64) -> Result<IdentityReport> {
    let powers = perfect_powers_upto(p_max)?;
    let partial_sum = neumaier_sum(powers.iter().map(|&p| 1.0 / (p - 1) as f64));
    Ok(identity_report(
        IdentityId::EulerGoldbach,
        partial_sum,
        euler_goldbach_tail_bound(p_max),
        1.0,
    ))
}

/// floor(p^(1/e)), exact.
fn floor_root(p: u64, e: u32) -> u64 {
    let mut r = (p as f64).powf(1.0 / e as f64).round() as u64;
    while r > 1 && r.checked_pow(e).map_or(true, |v| v > p) {
        r -= 1;
    }
    while (r + 1).checked_pow(e).map_or(false, |v| v <= p) {
        r += 1;
    }
    r
}

/// Rigorous bound on the perfect-power tail beyond P; see the module docs
/// for the derivation. Dominated by the squares, i.e. ~1/sqrt(P).
fn euler_goldbach_tail_bound(p_max: u64) -> f64 {
    let e_cut = p_max.ilog2();
    let mut per_exponent = Vec::with_capacity(e_cut as usize);
    for e in 2..=e_cut {
        let a = (floor_root(p_max, e) + 1) as f64;
        let ei = e as i32;
        let geom = 1.0 / (1.0 - a.powi(-ei));
        per_exponent.push(geom * (a.powi(-ei) + a.powi(1 - ei) / (e as f64 - 1.0)));
    }
    let ef = e_cut as f64;
    let closure = 1.0 / (1.0 - 2.0f64.powi(-(e_cut as i32 + 1)))
        * (1.0 + 2.0 / ef)
        * 2.0f64.powi(-(e_cut as i32));
    neumaier_sum(per_exponent) + closure
}

#[cfg(test)]
mod tests {
    use super::*;

    const ZETA_2: f64 = 1.644_934_066_848_226_4;
    const ZETA_3: f64 = 1.202_056_903_159_594_3;

    #[test]
    fn zeta_int_basic_values() {
        let r = zeta_int_series(2, 1e-6).unwrap();
        assert!(r.error_bound <= 1e-6);
        assert!((r.value - ZETA_2).abs() <= r.error_bound);
        assert_eq!(r.method, Method::Series);

        let r = zeta_int_series(3, 1e-6).unwrap();
        assert!((r.value - ZETA_3).abs() <= r.error_bound);
    }

    #[test]
    fn zeta_int_large_s_is_dominated_by_first_terms() {
        for s in [40u32, 50, 60] {
            let r = zeta_int_series(s, 1e-10).unwrap();
            let expect = 1.0 + 2.0f64.powi(-(s as i32));
            assert!(
                (r.value - expect).abs() <= 2.0 * 3.0f64.powi(-(s as i32)) + f64::EPSILON,
                "s={s}"
            );
        }
    }

    #[test]
    fn argument_validation() {
        assert!(matches!(zeta_int_series(1, 1e-6), Err(Error::Domain(_))));
        assert!(matches!(zeta_int_series(2, 1e-15), Err(Error::Domain(_))));
        assert!(matches!(
            zeta_int_series(2, 1e-10),
            Err(Error::Capacity { .. })
        ));
        // the reported need exceeds even a raised-but-too-small cap
        match zeta_plus_one_series_with_cap(2, 1e-10, 1_000_000_000) {
            Err(Error::Capacity { needed, cap }) => {
                assert!(needed > 10_000_000_000 && cap == 1_000_000_000);
            }
            other => panic!("expected capacity error, got {other:?}"),
        }
    }

    #[test]
    fn plus_series_matches_closed_form() {
        let closed = crate::closed::zeta_plus_one_even(1).unwrap().value;
        let r = zeta_plus_one_series_with_cap(2, 1e-8, 200_000_000).unwrap();
        assert!((r.value - closed).abs() <= 1e-8);

        let closed = crate::closed::zeta_plus_one_even(2).unwrap().value;
        let r = zeta_plus_one_series(4, 1e-10).unwrap();
        assert!((r.value - closed).abs() <= 1e-9);
    }

    #[test]
    fn plus_series_large_s() {
        let r = zeta_plus_one_series(60, 1e-10).unwrap();
        let expect = 0.5 + 1.0 / (2.0f64.powi(60) + 1.0);
        assert!((r.value - expect).abs() <= 2.0 * 3.0f64.powi(-60) + f64::EPSILON);
    }

    #[test]
    fn minus_series_values() {
        let r = zeta_minus_one_series(2, 1e-6).unwrap();
        assert!((r.value - 0.75).abs() <= r.error_bound);

        let closed = crate::closed::zeta_minus_one_even(2).unwrap().value;
        let r = zeta_minus_one_series(4, 1e-10).unwrap();
        assert!((r.value - closed).abs() <= 1e-9);

        let closed = crate::closed::zeta_minus_one_even(3).unwrap().value;
        let r = zeta_minus_one_series(6, 1e-10).unwrap();
        assert!((r.value - closed).abs() <= 1e-9);
    }

    #[test]
    fn tail_bound_soundness() {
        // refining the tolerance moves the value by at most the looser bound
        for s in [2u32, 3, 5] {
            let coarse = zeta_int_series(s, 1e-5).unwrap();
            let fine = zeta_int_series(s, 1e-7).unwrap();
            assert!((coarse.value - fine.value).abs() <= coarse.error_bound);
        }
        let coarse = zeta_minus_one_series(2, 1e-5).unwrap();
        let fine = zeta_minus_one_series(2, 1e-7).unwrap();
        assert!((coarse.value - fine.value).abs() <= coarse.error_bound);
    }

    #[test]
    fn summation_is_deterministic() {
        let a = zeta_plus_one_series(3, 1e-9).unwrap().value;
        let b = zeta_plus_one_series(3, 1e-9).unwrap().value;
        assert_eq!(a.to_bits(), b.to_bits());
    }

    #[test]
    fn shallit_zikan_partials() {
        let r = shallit_zikan_partial(2).unwrap();
        assert!((r.partial_sum - (ZETA_2 - 1.0)).abs() < 1e-12);
        assert_eq!(r.target, 1.0);

        let r = shallit_zikan_partial(3).unwrap();
        assert!((r.partial_sum - 0.846_990_970_007_820_7).abs() < 1e-12);

        assert!(shallit_zikan_partial(1).is_err());
        assert!(shallit_zikan_partial(201).is_err());
    }

    #[test]
    fn even_sum_partials() {
        let r = even_sum_partial(1).unwrap();
        assert!((r.partial_sum - (ZETA_2 - 1.0)).abs() < 1e-14);
        assert_eq!(r.target, 0.75);
        assert!(even_sum_partial(0).is_err());
        assert!(even_sum_partial(101).is_err());
    }

    #[test]
    fn zeta_mod_sum_matches_even_sum_for_m1() {
        let a = zeta_mod_sum_partial(1, 20).unwrap();
        let b = even_sum_partial(20).unwrap();
        assert_eq!(a.partial_sum.to_bits(), b.partial_sum.to_bits());
        assert_eq!(a.target, 0.75);
        assert_eq!(a.identity_id, IdentityId::Zeta2mkSum);
        assert_eq!(
            zeta_mod_sum_partial(2, 20).unwrap().identity_id,
            IdentityId::Zeta4kSum
        );
    }

    #[test]
    fn zeta_mod_sum_monotone_below_target() {
        let mut prev = 0.0;
        for k_max in [1u32, 2, 5, 10, 20, 40] {
            let r = zeta_mod_sum_partial(2, k_max).unwrap();
            assert!(r.partial_sum >= prev);
            assert!(r.partial_sum <= r.target + r.tail_bound + 1e-10);
            prev = r.partial_sum;
        }
    }

    #[test]
    fn perfect_power_enumeration() {
        assert_eq!(
            perfect_powers_upto(36).unwrap(),
            vec![4, 8, 9, 16, 25, 27, 32, 36]
        );
        assert_eq!(perfect_powers_upto(4).unwrap(), vec![4]);

        let p100 = perfect_powers_upto(100).unwrap();
        assert_eq!(p100.iter().filter(|&&p| p == 64).count(), 1);
        assert_eq!(p100, vec![4, 8, 9, 16, 25, 27, 32, 36, 49, 64, 81, 100]);

        assert!(matches!(perfect_powers_upto(3), Err(Error::Domain(_))));
        assert!(matches!(
            perfect_powers_upto(MAX_POWER_LIMIT + 1),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn euler_goldbach_small_limit() {
        // exact hand-checkable enumeration at P = 36
        let r = euler_goldbach_partial(36).unwrap();
        let exact: f64 = [3u64, 7, 8, 15, 24, 26, 31, 35]
            .iter()
            .map(|&d| 1.0 / d as f64)
            .sum();
        assert!((r.partial_sum - exact).abs() < 1e-15);
        assert!((r.partial_sum - 6845.0 / 8463.0).abs() < 1e-15);
        assert!(
            r.residual <= r.tail_bound,
            "{} > {}",
            r.residual,
            r.tail_bound
        );
    }

    #[test]
    fn euler_goldbach_residual_within_tail() {
        for p in [1_000u64, 100_000, 1_000_000] {
            let r = euler_goldbach_partial(p).unwrap();
            assert!(
                r.residual <= r.tail_bound,
                "P={p}: {} > {}",
                r.residual,
                r.tail_bound
            );
            // the bound is dominated by the squares tail ~ 1/sqrt(P)
            assert!(r.tail_bound < 5.0 / (p as f64).sqrt());
        }
    }

    #[test]
    fn identity_residuals_sit_within_tail_bounds() {
        for k in [2u32, 5, 10, 20, 60] {
            let r = shallit_zikan_partial(k).unwrap();
            assert!(r.residual <= r.tail_bound + 1e-10, "shallit K={k}");
        }
        for k in [1u32, 5, 10, 30] {
            let r = even_sum_partial(k).unwrap();
            assert!(r.residual <= r.tail_bound + 1e-10, "even sum K={k}");
        }
        for m in 1..=10u32 {
            let r = zeta_mod_sum_partial(m, 10).unwrap();
            assert!(r.residual <= r.tail_bound + 1e-10, "mod sum m={m}");
        }
    }

    #[test]
    fn floor_root_is_exact() {
        assert_eq!(floor_root(36, 2), 6);
        assert_eq!(floor_root(35, 2), 5);
        assert_eq!(floor_root(1_000_000_000_000, 2), 1_000_000);
        assert_eq!(floor_root(999_999_999_999, 2), 999_999);
        assert_eq!(floor_root(27, 3), 3);
        assert_eq!(floor_root(26, 3), 2);
    }
}
