// Copyright 2026 The twisted-fourier Authors
// SPDX-License-Identifier: Apache-2.0

//! Rational coefficient sequences of the `α = 0` solution family.
//!
//! `p(k, s)` multiplies the pure power solutions. `q(k, s)` and `r(k, s)`
//! multiply `y^a log y` and `y^a` in the logarithmic solutions that appear
//! when `s` lies in the resonant set `E(d) = {1/2 ± j : 0 ≤ j ≤ ⌊(d−1)/2⌋}`.
//! `q` and `r` are only defined for half-integers `s ≤ 1/2`.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Parameters within this distance of a lattice point are snapped onto it.
pub const SNAP_TOL: f64 = 1e-12;

/// `E(d)`, sorted ascending.
pub fn resonant_set(d: usize) -> Vec<f64> {
    if d == 0 {
        return Vec::new();
    }
    let jmax = (d - 1) / 2;
    let mut v: Vec<f64> = (0..=jmax).map(|j| 0.5 - j as f64).collect();
    v.extend((1..=jmax).map(|j| 0.5 + j as f64));
    v.sort_by(|a, b| a.partial_cmp(b).unwrap());
    v
}

/// Outcome of snapping `s` onto `E(d)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Snap {
    /// `s`, replaced by the lattice point when it was within [`SNAP_TOL`].
    pub value: Complex64,
    /// The member of `E(d)` that `s` equals, if any.
    pub member: Option<f64>,
    /// `s` was moved by a nonzero amount.
    pub moved: bool,
}

pub fn snap_to_resonant(s: Complex64, d: usize) -> Snap {
    for e in resonant_set(d) {
        let dist = (s - e).norm();
        if dist <= SNAP_TOL {
            return Snap { value: Complex64::new(e, 0.0), member: Some(e), moved: dist > 0.0 };
        }
    }
    Snap { value: s, member: None, moved: false }
}

/// Member `e` of `E(d)` with `1/2 − m/2 ≤ e ≤ 1/2`, if `s` snaps onto one.
/// These are the parameters where `𝐈(m, 0, ·, s)` carries a logarithm.
pub fn log_case_i(m: usize, s: Complex64, d: usize) -> Option<f64> {
    let e = snap_to_resonant(s, d).member?;
    (e >= 0.5 - m as f64 / 2.0 && e <= 0.5).then_some(e)
}

/// Member `e` of `E(d)` with `3/2 ≤ e ≤ 1/2 + m/2`, the logarithmic cases
/// of `𝐊(m, 0, ·, s)`.
pub fn log_case_k(m: usize, s: Complex64, d: usize) -> Option<f64> {
    let e = snap_to_resonant(s, d).member?;
    (e >= 1.5 && e <= 0.5 + m as f64 / 2.0).then_some(e)
}

/// Value of `p(k, s)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PValue {
    pub value: Complex64,
    /// `s` was one of the poles `1/2 − j`, `1 ≤ j ≤ ⌊k/2⌋`; the value is the
    /// extension by 1.
    pub extended: bool,
}

/// `p(0,s) = p(1,s) = 1` and
/// `p(k,s) = (−1)^h k! / (2^h h! Π_{j=1}^{h} (2j+2s−1))`, `h = ⌊k/2⌋`.
pub fn p_coeff(k: usize, s: Complex64) -> PValue {
    let h = k / 2;
    for j in 1..=h {
        if (s - (0.5 - j as f64)).norm() <= SNAP_TOL {
            return PValue { value: Complex64::new(1.0, 0.0), extended: true };
        }
    }
    let mut p = Complex64::new(1.0, 0.0);
    let mut kk = k % 2 + 2;
    while kk <= k {
        let hh = (kk / 2) as f64;
        let kf = kk as f64;
        p *= -kf * (kf - 1.0) / (2.0 * hh * (2.0 * hh + 2.0 * s - 1.0));
        kk += 2;
    }
    PValue { value: p, extended: false }
}

fn half_integer_at_most_half(s: f64) -> Result<f64> {
    let j = (0.5 - s).round();
    if j < 0.0 || (s - (0.5 - j)).abs() > SNAP_TOL {
        return Err(Error::Domain(format!("q, r need s ∈ 1/2 − ℕ₀, got {s}")));
    }
    Ok(0.5 - j)
}

/// `q(k, s)` for `s ∈ {1/2, −1/2, −3/2, …}`.
pub fn q_coeff(k: usize, s: f64) -> Result<f64> {
    let s = half_integer_at_most_half(s)?;
    let sc = Complex64::new(s, 0.0);
    let base = |parity: usize| -> f64 {
        if s == 0.5 {
            1.0
        } else if parity == 0 {
            2.0 * s * p_coeff((-2.0 * s - 1.0) as usize, sc).value.re
        } else {
            (2.0 * s - 2.0) * p_coeff((-2.0 * s) as usize, sc).value.re
        }
    };
    let mut q = base(k % 2);
    let mut kk = k % 2 + 2;
    while kk <= k {
        let h = (kk / 2) as f64;
        let kf = kk as f64;
        q *= -0.25 * (1.0 - 2.0 * s + kf) * (-2.0 * s + kf) / (h * (0.5 - s + h));
        kk += 2;
    }
    Ok(q)
}

/// `r(k, s)` for `s ∈ {1/2, −1/2, −3/2, …}`.
pub fn r_coeff(k: usize, s: f64) -> Result<f64> {
    let s = half_integer_at_most_half(s)?;
    if k < 2 {
        return Ok(0.0);
    }
    let h = k / 2;
    let odd = k % 2;
    let hf = h as f64;
    let mut r = -(0.5 - s + 2.0 * hf) / (2.0 * hf * (0.5 - s + hf)) * q_coeff(k, s)?;
    for j in 1..h {
        let jf = j as f64;
        let sign = if (h + j + 1).is_multiple_of(2) { 1.0 } else { -1.0 };
        let lead = (0.5 - s + 2.0 * jf) / (2.0 * jf * (0.5 - s + jf));
        let quarter = 0.25f64.powi((h - j) as i32);
        let num: f64 = (2 * j + 1 + odd..=k).map(|l| 1.0 - 2.0 * s + l as f64).product();
        let den: f64 = (j + 1..=h).map(|l| l as f64 * (0.5 - s + l as f64)).product();
        r += sign * lead * quarter * num / den * q_coeff(2 * j + odd, s)?;
    }
    Ok(r)
}
