// Copyright 2026 The twisted-fourier Authors
// SPDX-License-Identifier: Apache-2.0

mod common;

use common::{c, rel, rgamma};
use num_complex::Complex64;
use proptest::prelude::*;
use twisted_fourier::coeff_series::{
    log_case_i, log_case_k, p_coeff, q_coeff, r_coeff, resonant_set, snap_to_resonant,
};

#[test]
fn resonant_sets() {
    assert_eq!(resonant_set(1), vec![0.5]);
    assert_eq!(resonant_set(2), vec![0.5]);
    assert_eq!(resonant_set(5), vec![-1.5, -0.5, 0.5, 1.5, 2.5]);
    for d in 1..=12 {
        let e = resonant_set(d);
        assert_eq!(e.len(), 2 * ((d - 1) / 2) + 1);
        for x in &e {
            assert!(e.contains(&(1.0 - x)));
        }
    }
}

#[test]
fn snapping() {
    let s = snap_to_resonant(c(1.5 + 4e-13, 0.0), 4);
    assert_eq!(s.member, Some(1.5));
    assert!(s.moved);
    assert_eq!(s.value, c(1.5, 0.0));
    let far = snap_to_resonant(c(1.5 + 1e-9, 0.0), 4);
    assert_eq!(far.member, None);
    assert_eq!(snap_to_resonant(c(1.5, 0.0), 2).member, None);
    assert_eq!(log_case_i(2, c(0.0, 0.0), 3), None);
    assert_eq!(log_case_i(2, c(0.5, 0.0), 3), Some(0.5));
    assert_eq!(log_case_i(2, c(-0.5, 0.0), 3), Some(-0.5));
    assert_eq!(log_case_k(2, c(1.5, 0.0), 2), None);
    assert_eq!(log_case_k(1, c(1.5, 0.0), 4), None);
    assert_eq!(log_case_k(2, c(1.5, 0.0), 4), Some(1.5));
    assert_eq!(log_case_k(3, c(1.5, 0.0), 4), Some(1.5));
}

#[test]
fn p_values() {
    for s in [c(0.0, 0.0), c(0.3, -2.0), c(-7.0, 1.0)] {
        assert_eq!(p_coeff(0, s).value, c(1.0, 0.0));
        assert_eq!(p_coeff(1, s).value, c(1.0, 0.0));
    }
    let s = c(0.7, 0.4);
    assert!(rel(p_coeff(2, s).value, -1.0 / (2.0 * s + 1.0)) < 1e-15);
    assert!(rel(p_coeff(2, c(0.0, 0.0)).value, c(-1.0, 0.0)) < 1e-15);
    assert!(rel(p_coeff(3, c(1.0, 0.0)).value, c(-1.0, 0.0)) < 1e-15);
    let ext = p_coeff(4, c(-1.5, 0.0));
    assert!(ext.extended);
    assert!(!p_coeff(4, c(-2.5, 0.0)).extended);
}

#[test]
fn q_and_r_values() {
    assert_eq!(q_coeff(0, 0.5).unwrap(), 1.0);
    assert!((q_coeff(0, -0.5).unwrap() + 1.0).abs() < 1e-15);
    assert!((q_coeff(2, 0.5).unwrap() + 0.5).abs() < 1e-15);
    assert_eq!(r_coeff(0, 0.5).unwrap(), 0.0);
    assert_eq!(r_coeff(1, 0.5).unwrap(), 0.0);
    assert!((r_coeff(2, 0.5).unwrap() - 0.5).abs() < 1e-15);
    assert!(q_coeff(2, 1.5).is_err());
    assert!(r_coeff(2, 0.3).is_err());
}

/// `p(k, s)` through Gamma ratios.
fn p_gamma(k: usize, s: Complex64) -> Complex64 {
    let h = k / 2;
    let fact = |n: usize| (1..=n).fold(1.0, |a, i| a * i as f64);
    let sign = if h.is_multiple_of(2) { 1.0 } else { -1.0 };
    let pre = sign * fact(k) / (fact(k % 2) * 4f64.powi(h as i32) * fact(h));
    pre * rgamma(s + h as f64 + 0.5) / rgamma(s + 0.5)
}

fn arb_s() -> impl Strategy<Value = Complex64> {
    (-4.0..4.0f64, -3.0..3.0f64).prop_map(|(a, b)| c(a, b))
}

proptest! {
    #[test]
    fn p_recursion(m in 2usize..=12, s in arb_s()) {
        let h = (m / 2) as f64;
        prop_assume!((2.0 * s - 1.0 + 2.0 * h).norm() > 1e-3);
        let p = p_coeff(m, s);
        let pm2 = p_coeff(m - 2, s);
        prop_assume!(!p.extended && !pm2.extended);
        let lhs = 2.0 * h * (2.0 * s - 1.0 + 2.0 * h) * p.value;
        let rhs = (m as f64) * (1.0 - m as f64) * pm2.value;
        prop_assert!(rel(lhs, rhs) < 1e-12);
    }

    #[test]
    fn p_matches_gamma_form(k in 0usize..=12, s in arb_s()) {
        let p = p_coeff(k, s);
        prop_assume!(!p.extended);
        prop_assert!(rel(p.value, p_gamma(k, s)) < 1e-12);
    }
}
