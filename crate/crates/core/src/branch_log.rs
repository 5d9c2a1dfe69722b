// Copyright 2026 The twisted-fourier Authors
// SPDX-License-Identifier: Apache-2.0

//! Logarithms and powers with a movable branch cut.
//!
//! A cut is a ray `ω·ℝ>0` with `ω ∉ [0, ∞)`. The admissible sector of
//! arguments is `(−π, arg ω)` when `arg ω > 0` and `(arg ω, π]` when
//! `arg ω < 0`. Inside the sector the logarithm agrees with the principal
//! one; outside it is shifted by `−2πi·sgn(arg ω)`, which makes it
//! continuous across the negative real axis and discontinuous on the ray.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Points whose argument lies this close to `arg ω` are reported as on-cut.
pub const ON_CUT_TOL: f64 = 1e-14;

/// Principal argument in `(−π, π]`. Signed zeros do not leak into the result.
pub fn principal_arg(z: Complex64) -> f64 {
    let im = if z.im == 0.0 { 0.0 } else { z.im };
    let a = im.atan2(z.re);
    if a <= -PI {
        PI
    } else {
        a
    }
}

/// Angular distance between two directions, in `[0, π]`.
pub fn angular_distance(a: f64, b: f64) -> f64 {
    let d = (a - b).rem_euclid(2.0 * PI);
    d.min(2.0 * PI - d)
}

/// A branch cut along the ray through `ω`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CutRay {
    omega: Complex64,
    arg: f64,
    principal: bool,
}

impl CutRay {
    /// Cut along `ω·ℝ>0`. Rejects `ω = 0`, non-finite `ω` and `ω > 0`.
    pub fn new(omega: Complex64) -> Result<Self> {
        if !omega.re.is_finite() || !omega.im.is_finite() {
            return Err(Error::Domain(format!("cut ray {omega} is not finite")));
        }
        if omega.norm() == 0.0 {
            return Err(Error::Domain("cut ray direction is zero".into()));
        }
        let arg = principal_arg(omega);
        if arg == 0.0 {
            return Err(Error::Domain(format!(
                "cut ray {omega} lies on the positive real axis"
            )));
        }
        Ok(CutRay { omega: omega / omega.norm(), arg, principal: false })
    }

    /// Cut in direction of angle `theta` (radians).
    pub fn from_angle(theta: f64) -> Result<Self> {
        Self::new(Complex64::from_polar(1.0, theta))
    }

    /// The principal branch. Same as `ω = −1` except that the negative real
    /// axis itself belongs to the sector.
    pub fn principal() -> Self {
        CutRay { omega: Complex64::new(-1.0, 0.0), arg: PI, principal: true }
    }

    pub fn omega(&self) -> Complex64 {
        self.omega
    }

    pub fn arg(&self) -> f64 {
        self.arg
    }

    pub fn is_principal(&self) -> bool {
        self.principal
    }

    /// `sgn(arg ω)` as `±1.0`.
    pub fn sigma(&self) -> f64 {
        if self.arg > 0.0 {
            1.0
        } else {
            -1.0
        }
    }

    /// Whether an argument in `(−π, π]` lies in the admissible sector.
    pub fn contains_arg(&self, theta: f64) -> bool {
        if self.principal {
            return true;
        }
        if self.arg > 0.0 {
            theta < self.arg
        } else {
            theta > self.arg
        }
    }

    /// Whether `z ≠ 0` has its argument in the admissible sector.
    pub fn contains(&self, z: Complex64) -> bool {
        self.contains_arg(principal_arg(z))
    }

    /// Whether `z` sits on the cut ray, up to [`ON_CUT_TOL`].
    pub fn on_cut(&self, z: Complex64) -> bool {
        angular_distance(principal_arg(z), self.arg) <= ON_CUT_TOL
    }
}

/// Result of [`cut_log`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CutLog {
    pub value: Complex64,
    /// The principal logarithm was shifted by `−2πi·σ`.
    pub shifted: bool,
    /// The input lies on the cut ray; the value is the one-sided limit
    /// prescribed by the sector convention.
    pub on_cut: bool,
}

/// `ln|z| + i arg z` with `arg z ∈ (−π, π]`.
pub fn principal_log(z: Complex64) -> Result<Complex64> {
    Ok(cut_log(z, &CutRay::principal())?.value)
}

/// Logarithm of `z ≠ 0` on the branch defined by `cut`.
pub fn cut_log(z: Complex64, cut: &CutRay) -> Result<CutLog> {
    if z.norm() == 0.0 {
        return Err(Error::Domain("logarithm of zero".into()));
    }
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain(format!("logarithm of non-finite {z}")));
    }
    let theta = principal_arg(z);
    let principal = Complex64::new(z.norm().ln(), theta);
    let shifted = !cut.contains_arg(theta);
    let value = if shifted {
        principal - Complex64::new(0.0, 2.0 * PI * cut.sigma())
    } else {
        principal
    };
    Ok(CutLog { value, shifted, on_cut: !cut.principal && cut.on_cut(z) })
}

/// `base^exponent = exp(exponent · log(base; ω))`.
pub fn cut_pow(base: Complex64, exponent: Complex64, cut: &CutRay) -> Result<Complex64> {
    Ok(cut_pow_flagged(base, exponent, cut)?.0)
}

/// Like [`cut_pow`], also reporting whether `base` was on the cut.
pub fn cut_pow_flagged(
    base: Complex64,
    exponent: Complex64,
    cut: &CutRay,
) -> Result<(Complex64, bool)> {
    let l = cut_log(base, cut)?;
    Ok(((exponent * l.value).exp(), l.on_cut))
}
