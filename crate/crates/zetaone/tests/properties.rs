//! Property tests for the spec-level invariants that hold over whole input
//! ranges rather than at pinned points.

use num_complex::Complex64;
use proptest::prelude::*;
use zetaone::complexfn::{alpha_root, beta_root, cot_pi, coth_real};
use zetaone::residue::ContourSpec;
use zetaone::series::{perfect_powers_upto, zeta_int_series_with_cap, zeta_plus_one_series};
use zetaone::{ContourReport, EvalResult, IdentityReport, Kernel, Method};

/// Points that keep a safe distance from the integer poles of cot(pi z).
fn off_pole_point() -> impl Strategy<Value = Complex64> {
    (-9.0f64..9.0, -9.0f64..9.0)
        .prop_map(|(re, im)| Complex64::new(re, im))
        .prop_filter("away from poles", |z| {
            (z.re - z.re.round()).hypot(z.im) > 1e-3
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn cot_conjugate_symmetry(z in off_pole_point()) {
        let direct = cot_pi(z.conj()).unwrap();
        let conjugated = cot_pi(z).unwrap().conj();
        prop_assert!((direct - conjugated).norm() <= 1e-12);
    }

    #[test]
    fn cot_oddness(z in off_pole_point()) {
        let negated = cot_pi(-z).unwrap();
        let reflected = -cot_pi(z).unwrap();
        prop_assert!((negated - reflected).norm() <= 1e-12);
    }

    #[test]
    fn cot_bounded_on_contours(n in 1u32..=20, t in 0.0f64..1.0) {
        let spec = ContourSpec::new(n).unwrap();
        let z = spec.point_at(t);
        let bound = coth_real(1.5 * std::f64::consts::PI).unwrap();
        prop_assert!(cot_pi(z).unwrap().norm() <= bound * (1.0 + 1e-10));
    }

    #[test]
    fn alpha_pairing(m in 1u32..=50, k_seed in 0u32..50) {
        let k = k_seed % m + 1;
        let paired = alpha_root(m, m + 1 - k).unwrap();
        let reflected = -alpha_root(m, k).unwrap().conj();
        prop_assert!((paired - reflected).norm() <= 1e-12);
    }

    #[test]
    fn beta_pairing(m in 2u32..=50, k_seed in 0u32..50) {
        let k = k_seed % (m - 1) + 1; // 1..=m-1, never the excluded k = m
        let paired = beta_root(m, 2 * m - k).unwrap();
        let conjugated = beta_root(m, k).unwrap().conj();
        prop_assert!((paired - conjugated).norm() <= 1e-12);
    }

    #[test]
    fn series_values_are_bit_deterministic(s in 2u32..=20, exp in 4u32..=7) {
        let tol = 10f64.powi(-(exp as i32));
        let a = zeta_plus_one_series(s, tol).unwrap();
        let b = zeta_plus_one_series(s, tol).unwrap();
        prop_assert_eq!(a.value.to_bits(), b.value.to_bits());
        prop_assert_eq!(a.terms_used, b.terms_used);
    }

    #[test]
    fn refining_tolerance_stays_within_bound(s in 2u32..=10, exp in 4u32..=6) {
        let tol = 10f64.powi(-(exp as i32));
        // s = 2 at tol/100 = 1e-8 slightly exceeds the default cap
        let cap = 200_000_000;
        let coarse = zeta_int_series_with_cap(s, tol, cap).unwrap();
        let fine = zeta_int_series_with_cap(s, tol / 100.0, cap).unwrap();
        prop_assert!((coarse.value - fine.value).abs() <= coarse.error_bound);
        prop_assert!(coarse.error_bound <= tol);
    }

    #[test]
    fn perfect_powers_are_powers_and_distinct(p_max in 4u64..=200_000) {
        let powers = perfect_powers_upto(p_max).unwrap();
        // ascending and duplicate-free
        prop_assert!(powers.windows(2).all(|w| w[0] < w[1]));
        for &p in &powers {
            prop_assert!(p <= p_max);
            // independent membership check by integer root extraction
            let is_power = (2..=p.ilog2()).any(|e| {
                let root = (p as f64).powf(1.0 / e as f64).round() as u64;
                (root.saturating_sub(1)..=root + 1).any(|r| r.checked_pow(e) == Some(p))
            });
            prop_assert!(is_power, "{p} reported but no n^e representation found");
        }
    }
}

#[test]
fn report_types_roundtrip_through_json() {
    let eval = EvalResult {
        value: 0.578_477_579_667_136_8,
        method: Method::ClosedForm,
        error_bound: 1e-12,
        terms_used: 0,
        residual_imag: 3.2e-17,
    };
    let text = serde_json::to_string(&eval).unwrap();
    assert_eq!(serde_json::from_str::<EvalResult>(&text).unwrap(), eval);

    let identity = zetaone::series::euler_goldbach_partial(1000).unwrap();
    let text = serde_json::to_string(&identity).unwrap();
    assert_eq!(
        serde_json::from_str::<IdentityReport>(&text).unwrap(),
        identity
    );

    let contour = zetaone::residue::verify(Kernel::G, 1, 2).unwrap();
    let text = serde_json::to_string(&contour).unwrap();
    assert_eq!(
        serde_json::from_str::<ContourReport>(&text).unwrap(),
        contour
    );
}

#[test]
fn perfect_powers_compare_with_exhaustive_scan() {
    // brute-force reference on a small range
    let limit = 5000u64;
    let mut expect: Vec<u64> = (2..=limit)
        .filter(|&p| {
            (2..=p.ilog2()).any(|e| {
                let root = (p as f64).powf(1.0 / e as f64).round() as u64;
                (root.saturating_sub(1)..=root + 1).any(|r| r.checked_pow(e) == Some(p))
            })
        })
        .collect();
    expect.sort_unstable();
    assert_eq!(perfect_powers_upto(limit).unwrap(), expect);
}
