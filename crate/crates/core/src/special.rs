// Copyright 2026 The twisted-fourier Authors
// SPDX-License-Identifier: Apache-2.0

//! Modified Bessel functions of complex order on a movable branch.
//!
//! `I_η(z; ω)` is the power series with the transcendental prefactor
//! `(z/2)^η` taken on the branch of the cut ray `ω`. `K_η(z; ω)` is related
//! to the principal-branch `K_η(z)` by the sector relations
//!
//! ```text
//! K_η(z; ω) = K_η(z)                                          arg z ∈ Ω_ω
//! K_η(z; ω) = e^{−2πiησ} K_η(z) + 2πiσ cos(πη) I_{−η}(z)      otherwise
//! ```
//!
//! which hold for integer and non-integer `η` alike. The principal `K_η` is
//! evaluated with Temme's series for `|z| ≤ 2` and Steed's continued fraction
//! beyond, so integer orders need no limiting procedure and no cancellation
//! between exponentially large `I` values occurs.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::branch_log::{cut_log, CutRay};
use crate::error::{Error, Result};

const SERIES_SMALL: f64 = 1e-17;
const SERIES_MAX_TERMS: usize = 10_000;
const CF_MAX_ITER: usize = 20_000;
/// Term growth tolerated in [`bessel_k`] before the alternative route is tried.
const DIRECT_ROUTE_SLACK: f64 = 10.0;
/// Above `|z| − |Re z|` of this size the power series for `I` loses more
/// than three digits to cancellation.
const SERIES_CANCELLATION_LIMIT: f64 = 7.0;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Taylor coefficients of `1/Γ(1 + x) = Σ_j RGAMMA_TAYLOR[j] x^j`.
const RGAMMA_TAYLOR: [f64; 30] = [
    1.0,
    0.577_215_664_901_532_9,
    -0.655_878_071_520_253_9,
    -0.042_002_635_034_095_24,
    0.166_538_611_382_291_48,
    -0.042_197_734_555_544_33,
    -0.009_621_971_527_876_973,
    0.007_218_943_246_663_1,
    -0.001_165_167_591_859_065_2,
    -0.000_215_241_674_114_950_98,
    0.000_128_050_282_388_116_2,
    -0.000_020_134_854_780_788_24,
    -1.250_493_482_142_670_6e-6,
    1.133_027_231_981_696e-6,
    -2.056_338_416_977_607e-7,
    6.116_095_104_481_416e-9,
    5.002_007_644_469_223e-9,
    -1.181_274_570_487_02e-9,
    1.043_426_711_691_100_5e-10,
    7.782_263_439_905_071e-12,
    -3.696_805_618_642_206e-12,
    5.100_370_287_454_476e-13,
    -2.058_326_053_566_506_6e-14,
    -5.348_122_539_423_018e-15,
    1.226_778_628_238_260_8e-15,
    -1.181_259_301_697_458_8e-16,
    1.186_692_254_751_600_4e-18,
    1.412_380_655_318_031_9e-18,
    -2.298_745_684_435_37e-19,
    1.714_406_321_927_337_4e-20,
];

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Nearest integer to `z` if `z` is exactly a real integer.
fn as_integer(z: Complex64) -> Option<i64> {
    if z.im == 0.0 && z.re == z.re.round() && z.re.abs() < 1e15 {
        Some(z.re as i64)
    } else {
        None
    }
}

/// `z = n + f` with `n` the nearest integer to `Re z`; the subtraction is
/// exact, so `f` keeps full relative accuracy near the integers.
fn split_nearest(z: Complex64) -> (f64, Complex64) {
    let n = z.re.round();
    let sign = if n.rem_euclid(2.0) == 0.0 { 1.0 } else { -1.0 };
    (sign, c(z.re - n, z.im))
}

/// `sin(πz)` with exact zeros at the integers.
pub fn sin_pi(z: Complex64) -> Complex64 {
    let (sign, f) = split_nearest(z);
    if f.re == 0.0 && f.im == 0.0 {
        return c(0.0, 0.0);
    }
    sign * (f * PI).sin()
}

/// `cos(πz)` with exact zeros at the half-integers.
pub fn cos_pi(z: Complex64) -> Complex64 {
    if z.im == 0.0 && (z.re - z.re.floor()) == 0.5 {
        return c(0.0, 0.0);
    }
    let (sign, f) = split_nearest(z);
    sign * (f * PI).cos()
}

/// `ln Γ(z)` up to a multiple of `2πi`, for `Re z ≥ 1/2`.
fn ln_gamma_right(z: Complex64) -> Complex64 {
    let z = z - 1.0;
    let mut x = c(LANCZOS[0], 0.0);
    for (i, &p) in LANCZOS.iter().enumerate().skip(1) {
        x += p / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (z + 0.5) * t.ln() - t + x.ln()
}

/// `1/Γ(z)`, entire. Lanczos approximation with reflection for `Re z < 1/2`.
pub fn recip_gamma(z: Complex64) -> Complex64 {
    if let Some(n) = as_integer(z) {
        if n <= 0 {
            return c(0.0, 0.0);
        }
    }
    if z.re < 0.5 {
        sin_pi(z) / PI * ln_gamma_right(1.0 - z).exp()
    } else {
        (-ln_gamma_right(z)).exp()
    }
}

/// `Γ(z)`; errors at the poles.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    let r = recip_gamma(z);
    if r.norm() == 0.0 {
        return Err(Error::Domain(format!("Γ has a pole at {z}")));
    }
    Ok(1.0 / r)
}

/// `(1/Γ(1−μ) − 1/Γ(1+μ)) / (2μ)` and `(1/Γ(1−μ) + 1/Γ(1+μ)) / 2`.
fn temme_gammas(mu: Complex64) -> (Complex64, Complex64) {
    if mu.norm() <= 1.0 {
        let mu2 = mu * mu;
        let mut g1 = c(0.0, 0.0);
        let mut g2 = c(0.0, 0.0);
        let mut pw = c(1.0, 0.0);
        for k in 0..RGAMMA_TAYLOR.len() / 2 {
            g2 += RGAMMA_TAYLOR[2 * k] * pw;
            g1 -= RGAMMA_TAYLOR[2 * k + 1] * pw;
            pw *= mu2;
        }
        (g1, g2)
    } else {
        let a = recip_gamma(1.0 - mu);
        let b = recip_gamma(1.0 + mu);
        ((a - b) / (2.0 * mu), (a + b) / 2.0)
    }
}

fn sinhc(e: Complex64) -> Complex64 {
    if e.norm() < 1e-3 {
        let e2 = e * e;
        1.0 + e2 / 6.0 * (1.0 + e2 / 20.0 * (1.0 + e2 / 42.0))
    } else {
        e.sinh() / e
    }
}

fn x_over_sin(x: Complex64) -> Complex64 {
    if x.norm() < 1e-3 {
        let x2 = x * x;
        1.0 + x2 / 6.0 + 7.0 * x2 * x2 / 360.0
    } else {
        x / x.sin()
    }
}

/// Temme's series for `(K_μ(z), K_{μ+1}(z))`, `|Re μ| ≤ 1/2`, small `|z|`.
fn k_temme(mu: Complex64, z: Complex64) -> Result<(Complex64, Complex64)> {
    let x2 = z / 2.0;
    let d = -x2.ln();
    let e = mu * d;
    let (gam1, gam2) = temme_gammas(mu);
    let gampl = gam2 - mu * gam1;
    let gammi = gam2 + mu * gam1;
    let fact = x_over_sin(mu * PI);
    let mut ff = fact * (gam1 * e.cosh() + gam2 * sinhc(e) * d);
    let ee = e.exp();
    let mut p = 0.5 * ee / gampl;
    let mut q = 0.5 / (ee * gammi);
    let mut cc = c(1.0, 0.0);
    let w = x2 * x2;
    let mu2 = mu * mu;
    let mut sum = ff;
    let mut sum1 = p;
    for i in 1..SERIES_MAX_TERMS {
        let fi = i as f64;
        ff = (fi * ff + p + q) / (fi * fi - mu2);
        cc *= w / fi;
        p /= fi - mu;
        q /= fi + mu;
        let del = cc * ff;
        sum += del;
        let del1 = cc * (p - fi * ff);
        sum1 += del1;
        if del.norm() <= f64::EPSILON * 0.5 * sum.norm()
            && del1.norm() <= f64::EPSILON * 0.5 * sum1.norm()
        {
            return Ok((sum, sum1 * 2.0 / z));
        }
    }
    Err(Error::Overflow(format!("Temme series for K_{mu}({z}) did not converge")))
}

/// Steed's continued fraction for `(K_μ(z), K_{μ+1}(z))`, `Re z ≥ 0`.
fn k_steed(mu: Complex64, z: Complex64) -> Result<(Complex64, Complex64)> {
    let mut b = 2.0 * (1.0 + z);
    let mut d = 1.0 / b;
    let mut h = d;
    let mut delh = d;
    let mut q1 = c(0.0, 0.0);
    let mut q2 = c(1.0, 0.0);
    let a1 = 0.25 - mu * mu;
    let mut q = a1;
    let mut cc = a1;
    let mut a = -a1;
    let mut s = 1.0 + q * delh;
    let mut converged = false;
    for i in 1..CF_MAX_ITER {
        let fi = i as f64;
        a -= 2.0 * fi;
        cc = -a * cc / (fi + 1.0);
        // cc grows like a factorial and q like its reciprocal; only the
        // product enters the sum, so move the scale from one to the other.
        if cc.norm() > 1e100 {
            cc *= 1e-100;
            q1 *= 1e100;
            q2 *= 1e100;
        }
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += cc * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        let dels = q * delh;
        s += dels;
        if dels.norm() <= f64::EPSILON * 0.5 * s.norm()
            && delh.norm() <= f64::EPSILON * 0.5 * h.norm()
        {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::Overflow(format!(
            "continued fraction for K_{mu}({z}) did not converge"
        )));
    }
    let h = a1 * h;
    let kmu = (PI / (2.0 * z)).sqrt() * (-z).exp() / s;
    let k1 = kmu * (mu + z + 0.5 - h) / z;
    Ok((kmu, k1))
}

/// Principal-branch `K_ν(z)` for `Re z ≥ 0`, `z ≠ 0`.
fn k_right(nu: Complex64, z: Complex64) -> Result<Complex64> {
    let nu = if nu.re < 0.0 { -nu } else { nu };
    let n = nu.re.round();
    let mu = nu - n;
    let (mut k0, mut k1) = if z.norm() <= 2.0 { k_temme(mu, z)? } else { k_steed(mu, z)? };
    if n == 0.0 {
        return Ok(k0);
    }
    for k in 1..(n as usize) {
        let k2 = k0 + 2.0 * (mu + k as f64) / z * k1;
        k0 = k1;
        k1 = k2;
    }
    Ok(k1)
}

/// Principal-branch `K_ν(z)`.
pub fn bessel_k_principal(nu: Complex64, z: Complex64) -> Result<Complex64> {
    bessel_k(nu, z, &CutRay::principal())
}

/// Principal `K_ν(z)` from the right half-plane, with the largest term
/// magnitude that entered the result.
fn k_principal_terms(nu: Complex64, z: Complex64) -> Result<(Complex64, f64)> {
    check_arg(z)?;
    if z.re >= 0.0 {
        let v = k_right(nu, z)?;
        return Ok((v, v.norm()));
    }
    // z = ζ e^{±iπ} with Re ζ > 0
    let zeta = -z;
    let s = if z.im >= 0.0 { 1.0 } else { -1.0 };
    let a = (c(0.0, -s * PI) * nu).exp() * k_right(nu, zeta)?;
    let b = c(0.0, s * PI) * bessel_i(nu, zeta, &CutRay::principal())?;
    Ok((a - b, a.norm().max(b.norm())))
}

fn check_arg(z: Complex64) -> Result<()> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Domain(format!("non-finite argument {z}")));
    }
    if z.norm() == 0.0 {
        return Err(Error::Domain("Bessel argument is zero".into()));
    }
    Ok(())
}

fn finite(v: Complex64, name: &str, eta: Complex64, z: Complex64) -> Result<Complex64> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow(format!("{name}_{eta}({z}) is not representable")))
    }
}

/// Sum of `(z/2)^{2m} / (m! Γ(η+m+1))`.
fn i_power_series(eta: Complex64, z: Complex64) -> Result<Complex64> {
    let w = z * z / 4.0;
    let mut t = recip_gamma(eta + 1.0);
    let mut sum = t;
    let m_min = 3usize.max((-eta.re).ceil().max(0.0) as usize + 3);
    let mut small = 0;
    for m in 1..SERIES_MAX_TERMS {
        let denom = (eta + m as f64) * m as f64;
        t = if denom.norm() == 0.0 {
            // η + m = 0 only at negative integer η, where the leading
            // terms vanish; restart the recurrence from the closed form.
            w.powu(m as u32) * recip_gamma(eta + m as f64 + 1.0) * recip_factorial(m)
        } else {
            t * w / denom
        };
        sum += t;
        if t.norm() < SERIES_SMALL * sum.norm() {
            small += 1;
        } else {
            small = 0;
        }
        let decreasing = w.norm() < denom.norm();
        if small >= 3 && m >= m_min && decreasing {
            return Ok(sum);
        }
        if w.norm() == 0.0 {
            return Ok(sum);
        }
    }
    Err(Error::Overflow(format!(
        "I_{eta}({z}) series needs more than {SERIES_MAX_TERMS} terms"
    )))
}

fn recip_factorial(m: usize) -> f64 {
    (1..=m).fold(1.0, |acc, k| acc / k as f64)
}

/// `I_η(z; ω) = (z/2)^η Σ (z/2)^{2m}/(m! Γ(η+m+1))` with the power on the
/// branch of `cut`.
pub fn bessel_i(eta: Complex64, z: Complex64, cut: &CutRay) -> Result<Complex64> {
    if z.norm() == 0.0 {
        if eta.norm() == 0.0 {
            return Ok(c(1.0, 0.0));
        }
        if eta.re > 0.0 || as_integer(eta).is_some() {
            return Ok(c(0.0, 0.0));
        }
        return Err(Error::Domain(format!("I_{eta} is singular at zero")));
    }
    check_arg(z)?;
    // I_{−k} = I_k for integers, and the power is then single-valued
    let eta = match as_integer(eta) {
        Some(k) if k < 0 => c(-(k as f64), 0.0),
        _ => eta,
    };
    if z.norm() > 4.0 && z.norm() - z.re.abs() > SERIES_CANCELLATION_LIMIT {
        let v = i_principal_wronskian(eta, z)?;
        let v = if cut.contains(z) {
            v
        } else {
            (c(0.0, -2.0 * PI * cut.sigma()) * eta).exp() * v
        };
        return finite(v, "I", eta, z);
    }
    let pre = (eta * cut_log(z / 2.0, cut)?.value).exp();
    let v = pre * i_power_series(eta, z)?;
    finite(v, "I", eta, z)
}

/// `I_{ν+1}(z) / I_ν(z)` by the continued fraction of the three-term
/// recurrence (modified Lentz).
fn i_ratio(nu: Complex64, z: Complex64) -> Result<Complex64> {
    const TINY: f64 = 1e-300;
    let b = |j: usize| 2.0 * (nu + j as f64) / z;
    let guard = |x: Complex64| if x.norm() == 0.0 { c(TINY, 0.0) } else { x };
    let mut f = guard(b(1));
    let mut cc = f;
    let mut d = c(0.0, 0.0);
    for j in 2..CF_MAX_ITER {
        d = guard(b(j) + d).inv();
        cc = guard(b(j) + cc.inv());
        let delta = cc * d;
        f *= delta;
        if (delta - 1.0).norm() <= f64::EPSILON {
            return Ok(f.inv());
        }
    }
    Err(Error::Overflow(format!("ratio I_({nu}+1)/I_{nu} at {z} did not converge")))
}

/// Principal `I_ν(z)` from the ratio `I_{ν+1}/I_ν` and the Wronskian
/// `I_ν K_{ν+1} + I_{ν+1} K_ν = 1/z`. Accurate where the power series
/// cancels, i.e. for large `|z|` away from the real axis.
fn i_principal_wronskian(nu: Complex64, z: Complex64) -> Result<Complex64> {
    if z.re < 0.0 {
        let s = if z.im >= 0.0 { 1.0 } else { -1.0 };
        return Ok((c(0.0, s * PI) * nu).exp() * i_principal_wronskian(nu, -z)?);
    }
    let r = i_ratio(nu, z)?;
    let k0 = k_right(nu, z)?;
    let k1 = k_right(nu + 1.0, z)?;
    Ok(1.0 / (z * (k1 + r * k0)))
}

/// `K_η(z; ω)` on the branch of `cut`.
///
/// Two exact routes exist off the right half-plane: the sector relation
/// through the principal `K_η`, and for non-integer `η` the defining
/// difference `π/2 (I_{−η}(z; ω) − I_η(z; ω)) / sin(πη)`. Either can cancel
/// badly (the first for large `|Im η|`, the second for large `|z|`), so the
/// one with the smaller terms is used.
pub fn bessel_k(eta: Complex64, z: Complex64, cut: &CutRay) -> Result<Complex64> {
    let (k, mut scale) = k_principal_terms(eta, z)?;
    let inside = cut.contains(z);
    let mut v = k;
    if !inside {
        let sigma = cut.sigma();
        let a = (c(0.0, -2.0 * PI * sigma) * eta).exp() * k;
        let b = c(0.0, 2.0 * PI * sigma) * cos_pi(eta) * bessel_i(-eta, z, &CutRay::principal())?;
        v = a + b;
        scale = scale.max(a.norm()).max(b.norm());
    }
    if scale > DIRECT_ROUTE_SLACK * v.norm() && as_integer(eta).is_none() {
        let f = PI / 2.0 / sin_pi(eta);
        let ineg = bessel_i(-eta, z, cut)?;
        let ipos = bessel_i(eta, z, cut)?;
        let alt_scale = f.norm() * ineg.norm().max(ipos.norm());
        if alt_scale < scale {
            v = f * (ineg - ipos);
        }
    }
    finite(v, "K", eta, z)
}

/// Which modified Bessel function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    I,
    K,
}

impl std::fmt::Display for Kind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Kind::I => "I",
            Kind::K => "K",
        })
    }
}

pub fn bessel(kind: Kind, eta: Complex64, z: Complex64, cut: &CutRay) -> Result<Complex64> {
    match kind {
        Kind::I => bessel_i(eta, z, cut),
        Kind::K => bessel_k(eta, z, cut),
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, j| acc * (n - j) as f64 / (j + 1) as f64)
}

/// Orders `η + j` for `j = −span..=span`, indexed by `j + span`.
pub struct Ladder {
    span: usize,
    values: Vec<Complex64>,
}

impl Ladder {
    pub fn new(kind: Kind, eta: Complex64, z: Complex64, cut: &CutRay, span: usize) -> Result<Self> {
        let values = (0..=2 * span)
            .map(|j| bessel(kind, eta + (j as f64 - span as f64), z, cut))
            .collect::<Result<Vec<_>>>()?;
        Ok(Ladder { span, values })
    }

    pub fn get(&self, offset: i64) -> Complex64 {
        self.values[(offset + self.span as i64) as usize]
    }

    pub fn span(&self) -> usize {
        self.span
    }
}

/// `∂_z^m` of the ladder's central function, `m ≤ span`.
///
/// `∂^m I_η = 2^{−m} Σ_ℓ C(m,ℓ) I_{η−m+2ℓ}`, and the same for `K` with an
/// extra `(−1)^m`.
pub fn ladder_derivative(kind: Kind, ladder: &Ladder, m: usize) -> Complex64 {
    assert!(m <= ladder.span(), "derivative order exceeds ladder span");
    let mut acc = c(0.0, 0.0);
    for l in 0..=m {
        acc += binomial(m, l) * ladder.get(2 * l as i64 - m as i64);
    }
    let sign = if kind == Kind::K && m % 2 == 1 { -1.0 } else { 1.0 };
    acc * sign * 0.5f64.powi(m as i32)
}

/// `∂_z^m I_η(z; ω)`.
pub fn bessel_i_deriv(m: usize, eta: Complex64, z: Complex64, cut: &CutRay) -> Result<Complex64> {
    let l = Ladder::new(Kind::I, eta, z, cut, m)?;
    Ok(ladder_derivative(Kind::I, &l, m))
}

/// `∂_z^m K_η(z; ω)`.
pub fn bessel_k_deriv(m: usize, eta: Complex64, z: Complex64, cut: &CutRay) -> Result<Complex64> {
    let l = Ladder::new(Kind::K, eta, z, cut, m)?;
    Ok(ladder_derivative(Kind::K, &l, m))
}
