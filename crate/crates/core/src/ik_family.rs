// Copyright 2026 The twisted-fourier Authors
// SPDX-License-Identifier: Apache-2.0

//! The scalar solution families `𝐈(m, α, y, s)` and `𝐊(m, α, y, s)`.
//!
//! For `α ≠ 0` they are rescaled `m`-th derivatives of re-branched Bessel
//! functions,
//!
//! ```text
//! 𝐈(m, α, y, s) = i^{−m} y^{m+1/2} ∂_z^m I_{s−1/2}(z; ω)|_{z = αy}
//! 𝐊(m, α, y, s) = i^{−m} y^{m+1/2} ∂_z^m K_{s−1/2}(z; ω)|_{z = αy}
//! ```
//!
//! and for `α = 0` they are powers of `y`, with a logarithm at the resonant
//! parameters. Every evaluation also returns the first two `y`-derivatives,
//! computed analytically, so ODE residuals need no finite differences.

use num_complex::Complex64;

use crate::branch_log::CutRay;
use crate::coeff_series::{log_case_i, log_case_k, p_coeff, q_coeff, r_coeff, snap_to_resonant};
use crate::error::{Error, Result};
use crate::special::{ladder_derivative, Kind, Ladder};

/// `|α|` below this is treated as `α = 0`.
pub const ALPHA_ZERO_TOL: f64 = 1e-14;

/// One evaluation point of the families.
#[derive(Clone, Copy, Debug)]
pub struct IkQuery {
    pub m: usize,
    pub alpha: Complex64,
    pub y: f64,
    pub s: Complex64,
    /// Block size; selects the resonant set `E(d)` used at `α = 0`.
    pub d: usize,
    pub cut: CutRay,
}

/// Value with its first two `y`-derivatives.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Jet {
    pub v: Complex64,
    pub d1: Complex64,
    pub d2: Complex64,
}

impl Jet {
    pub fn scale(self, a: Complex64) -> Jet {
        Jet { v: self.v * a, d1: self.d1 * a, d2: self.d2 * a }
    }
}

impl std::ops::Add for Jet {
    type Output = Jet;
    fn add(self, o: Jet) -> Jet {
        Jet { v: self.v + o.v, d1: self.d1 + o.d1, d2: self.d2 + o.d2 }
    }
}

/// Side information about an evaluation.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct IkFlags {
    /// `s` was moved onto a member of `E(d)`.
    pub snapped: bool,
    /// The logarithmic solution was used.
    pub log_branch: bool,
    /// `p` was evaluated at one of its poles and extended by 1.
    pub extended: bool,
}

impl IkFlags {
    fn merge(&mut self, o: IkFlags) {
        self.snapped |= o.snapped;
        self.log_branch |= o.log_branch;
        self.extended |= o.extended;
    }
}

pub fn is_alpha_zero(alpha: Complex64) -> bool {
    alpha.norm() < ALPHA_ZERO_TOL
}

fn check(q: &IkQuery) -> Result<()> {
    if !(q.y > 0.0 && q.y.is_finite()) {
        return Err(Error::Domain(format!("y must be positive, got {}", q.y)));
    }
    if q.d == 0 {
        return Err(Error::Domain("block size must be positive".into()));
    }
    Ok(())
}

/// `𝐈(m, α, y, s)`.
pub fn big_i(q: &IkQuery) -> Result<Complex64> {
    Ok(psi(Kind::I, q)?.0.v)
}

/// `𝐊(m, α, y, s)`.
pub fn big_k(q: &IkQuery) -> Result<Complex64> {
    Ok(psi(Kind::K, q)?.0.v)
}

/// One member of either family with derivatives.
pub fn psi(kind: Kind, q: &IkQuery) -> Result<(Jet, IkFlags)> {
    let (v, f) = psi_vector(kind, q.alpha, q.y, q.s, q.d, q.m + 1, &q.cut)?;
    Ok((v[q.m], f))
}

/// `Ψ(m)` for `m = 0..count`, sharing one Bessel ladder.
pub fn psi_vector(
    kind: Kind,
    alpha: Complex64,
    y: f64,
    s: Complex64,
    d: usize,
    count: usize,
    cut: &CutRay,
) -> Result<(Vec<Jet>, IkFlags)> {
    let probe = IkQuery { m: 0, alpha, y, s, d, cut: *cut };
    check(&probe)?;
    if is_alpha_zero(alpha) {
        let mut flags = IkFlags::default();
        let mut out = Vec::with_capacity(count);
        for m in 0..count {
            let (j, f) = psi_alpha_zero(kind, m, y, s, d);
            flags.merge(f);
            out.push(j?);
        }
        return Ok((out, flags));
    }
    if cut.on_cut(alpha) {
        return Err(Error::Domain(format!("α = {alpha} lies on the cut ray")));
    }
    let z = alpha * y;
    let eta = s - 0.5;
    let ladder = Ladder::new(kind, eta, z, cut, count + 1)?;
    let flags = IkFlags::default();
    let mut out = Vec::with_capacity(count);
    let ipow = Complex64::new(0.0, -1.0);
    for m in 0..count {
        let g0 = ladder_derivative(kind, &ladder, m);
        let g1 = ladder_derivative(kind, &ladder, m + 1);
        let g2 = ladder_derivative(kind, &ladder, m + 2);
        let mf = m as f64;
        let pre = ipow.powu(m as u32);
        let yp = y.powf(mf + 0.5);
        let v = pre * yp * g0;
        let d1 = pre * ((mf + 0.5) * yp / y * g0 + alpha * yp * g1);
        let d2 = pre
            * ((mf + 0.5) * (mf - 0.5) * yp / (y * y) * g0
                + 2.0 * (mf + 0.5) * alpha * yp / y * g1
                + alpha * alpha * yp * g2);
        out.push(Jet { v, d1, d2 });
    }
    Ok((out, flags))
}

/// `(Ψ(d−1), …, Ψ(0))`, highest order on top.
pub fn big_ik_vector(
    kind: Kind,
    alpha: Complex64,
    y: f64,
    s: Complex64,
    d: usize,
    cut: &CutRay,
) -> Result<(Vec<Jet>, IkFlags)> {
    let (mut v, f) = psi_vector(kind, alpha, y, s, d, d, cut)?;
    v.reverse();
    Ok((v, f))
}

fn power_jet(coef: Complex64, a: Complex64, y: f64) -> Jet {
    let ya = (a * y.ln()).exp();
    Jet { v: coef * ya, d1: coef * a * ya / y, d2: coef * a * (a - 1.0) * ya / (y * y) }
}

fn log_jet(qc: f64, rc: f64, a: f64, y: f64) -> Jet {
    let l = y.ln();
    let ya = y.powf(a);
    let v = ya * (qc * l + rc);
    let d1 = ya / y * (qc * (a * l + 1.0) + rc * a);
    let d2 = ya / (y * y) * (qc * (a * (a - 1.0) * l + 2.0 * a - 1.0) + rc * a * (a - 1.0));
    Jet { v: Complex64::new(v, 0.0), d1: Complex64::new(d1, 0.0), d2: Complex64::new(d2, 0.0) }
}

fn psi_alpha_zero(kind: Kind, m: usize, y: f64, s: Complex64, d: usize) -> (Result<Jet>, IkFlags) {
    let snap = snap_to_resonant(s, d);
    let mut flags = IkFlags { snapped: snap.moved, ..Default::default() };
    let even = 2.0 * (m / 2) as f64;
    let s = snap.value;
    let log_case = match kind {
        Kind::I => log_case_i(m, s, d),
        Kind::K => log_case_k(m, s, d),
    };
    if let Some(e) = log_case {
        flags.log_branch = true;
        let (k, t) = match kind {
            Kind::I => ((m as f64 - 1.0 + 2.0 * e).round() as usize, e),
            Kind::K => ((m as f64 + 1.0 - 2.0 * e).round() as usize, 1.0 - e),
        };
        let a = t + even;
        let jet = q_coeff(k, t).and_then(|qc| Ok(log_jet(qc, r_coeff(k, t)?, a, y)));
        return (jet, flags);
    }
    let t = match kind {
        Kind::I => s,
        Kind::K => 1.0 - s,
    };
    let p = p_coeff(m, t);
    flags.extended = p.extended;
    (Ok(power_jet(p.value, t + even, y)), flags)
}
