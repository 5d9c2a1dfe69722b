// Copyright 2026 The twisted-fourier Authors
// SPDX-License-Identifier: Apache-2.0

//! Verification suites run by `twf verify`.

use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use twisted_fourier::coeff_series::p_coeff;
use twisted_fourier::ik_family::Jet;
use twisted_fourier::jordan::{c_matrix, h_matrix, jpow, s_matrix, stirling_matrix, stirling_matrix_inv, CMatrix};
use twisted_fourier::verify::{
    laplace_residual, ode_residual, quadratic_fault, round_trip, twist_identity_residual, WSource, STENCIL_STEP,
};

use crate::commands::{asymptotics_rows, expansion, metadata, Metadata};
use crate::config::Resolved;
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Ode,
    Roundtrip,
    Asymptotics,
    Laplace,
    Identities,
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "ode" => Suite::Ode,
            "roundtrip" => Suite::Roundtrip,
            "asymptotics" => Suite::Asymptotics,
            "laplace" => Suite::Laplace,
            "identities" => Suite::Identities,
            _ => return Err(format!("unknown suite {s:?}; expected ode, roundtrip, asymptotics, laplace or identities")),
        })
    }
}

pub const ODE_TOL: f64 = 1e-8;
pub const SEED_TOL: f64 = 1e-6;
pub const EXTRACT_TOL: f64 = 1e-10;
pub const PERIODICITY_TOL: f64 = 1e-12;
pub const NILPOTENT_TOL: f64 = 1e-14;
pub const ASYMPTOTICS_TOL: f64 = 0.02;
pub const LAPLACE_TOL: f64 = 1e-6;
pub const IDENTITY_TOL: f64 = 1e-12;
pub const TWIST_TOL: f64 = 1e-10;

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report<'a> {
    pub metadata: Metadata<'a>,
    pub suite: Suite,
    pub tolerance_scale: f64,
    pub pass: bool,
    pub first_failure: Option<String>,
    pub checks: Vec<Check>,
}

struct Checks {
    scale: f64,
    list: Vec<Check>,
}

impl Checks {
    fn push(&mut self, name: String, value: f64, tol: f64) {
        let tolerance = tol * self.scale;
        self.list.push(Check { name, value, tolerance, pass: value <= tolerance });
    }
}

pub fn run<'a>(res: &'a Resolved, suite: Suite, tolerance_scale: f64) -> Result<Report<'a>, CliError> {
    if !(tolerance_scale > 0.0 && tolerance_scale.is_finite()) {
        return Err(CliError::Config(format!("--tolerance-scale must be positive, got {tolerance_scale}")));
    }
    let mut checks = Checks { scale: tolerance_scale, list: Vec::new() };
    match suite {
        Suite::Ode => ode(res, &mut checks)?,
        Suite::Roundtrip => roundtrip(res, &mut checks)?,
        Suite::Asymptotics => asymptotics(res, &mut checks)?,
        Suite::Laplace => laplace(res, &mut checks)?,
        Suite::Identities => identities(res, &mut checks)?,
    }
    let first_failure = checks.list.iter().find(|c| !c.pass).map(|c| c.name.clone());
    Ok(Report {
        metadata: metadata(res, "verify")?,
        suite,
        tolerance_scale,
        pass: first_failure.is_none(),
        first_failure,
        checks: checks.list,
    })
}

fn fault_amplitude(res: &Resolved) -> Option<f64> {
    res.config.inject_fault.as_ref().map(|f| f.amplitude)
}

fn ode(res: &Resolved, checks: &mut Checks) -> Result<(), CliError> {
    let Some(exp) = expansion(res)? else { return Ok(()) };
    let fault = fault_amplitude(res);
    for (j, bc) in exp.blocks.iter().enumerate() {
        for t in &bc.terms {
            let scale = match fault {
                Some(a) => {
                    let mut m = 0.0f64;
                    for &y in &res.y_grid {
                        for z in t.w_jets(y)?.0 {
                            m = m.max(z.v.norm());
                        }
                    }
                    a * m
                }
                None => 0.0,
            };
            let w = WSource::Jets(Box::new(|y| {
                let jets: Vec<Jet> = t.w_jets(y)?.0;
                Ok(if scale != 0.0 { quadratic_fault(jets, y, scale) } else { jets })
            }));
            let r = ode_residual(t.coeff.alpha_n, res.s, bc.block.d, &w, &res.y_grid)?;
            checks.push(format!("ode[block={j},n={}]", t.coeff.n), r, ODE_TOL);
        }
    }
    Ok(())
}

fn roundtrip(res: &Resolved, checks: &mut Checks) -> Result<(), CliError> {
    let Some(exp) = expansion(res)? else { return Ok(()) };
    let rep = round_trip(&exp)?;
    checks.push("roundtrip.periodicity".into(), rep.periodicity, PERIODICITY_TOL);
    checks.push("roundtrip.nilpotent".into(), rep.nilpotent_max, NILPOTENT_TOL);
    for c in &rep.cases {
        checks.push(format!("roundtrip.extraction[block={},n={}]", c.block, c.n), c.extract_error, EXTRACT_TOL);
        checks.push(format!("roundtrip.seeds[block={},n={}]", c.block, c.n), c.seed_error, SEED_TOL);
    }
    Ok(())
}

fn asymptotics(res: &Resolved, checks: &mut Checks) -> Result<(), CliError> {
    for r in asymptotics_rows(res)? {
        if let Some(&(ay, _, dev)) = r.points.last() {
            checks.push(
                format!("asymptotics[block={},n={},kind={},m={},|αy|={ay}]", r.block, r.n, r.kind, r.m),
                dev,
                ASYMPTOTICS_TOL,
            );
        }
    }
    Ok(())
}

fn laplace(res: &Resolved, checks: &mut Checks) -> Result<(), CliError> {
    let Some(exp) = expansion(res)? else { return Ok(()) };
    let h = STENCIL_STEP;
    let fault = match fault_amplitude(res) {
        Some(a) => {
            let mut m = 0.0f64;
            for &y in &res.y_grid {
                let sl = exp.slice(y)?;
                for &x in &res.x_grid {
                    m = m.max(sl.at(x)?.iter().map(|z| z.norm()).fold(0.0, f64::max));
                }
            }
            a * m
        }
        None => 0.0,
    };
    let f = |x: f64, y: f64| {
        let v = exp.eval(x, y)?;
        Ok(v.into_iter().map(|z| z + fault * y * y).collect())
    };
    for &y in res.y_grid.iter().filter(|&&y| y > 2.0 * h) {
        let pts: Vec<(f64, f64)> = res.x_grid.iter().map(|&x| (x, y)).collect();
        let r = laplace_residual(f, res.s, &pts, h)?;
        checks.push(format!("laplace[y={y}]"), r, LAPLACE_TOL);
    }
    Ok(())
}

fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn identities(res: &Resolved, checks: &mut Checks) -> Result<(), CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(res.seed);
    let cut = res.twist.cut;
    for (j, b) in res.twist.blocks.iter().enumerate() {
        let d = b.d;
        let s2 = s_matrix(d) * s_matrix(d);
        checks.push(format!("identities.sign_square[block={j}]"), max_abs(&(s2 - CMatrix::identity(d, d))), IDENTITY_TOL);
        let t = stirling_matrix(d)?;
        let ti = stirling_matrix_inv(d)?;
        checks.push(format!("identities.stirling_inverse[block={j}]"), max_abs(&(&ti * &t - CMatrix::identity(d, d))), IDENTITY_TOL);
        if b.is_nilpotent() {
            continue;
        }
        let mut base = 0.0f64;
        let mut hom = 0.0f64;
        for _ in 0..8 {
            let x1: f64 = rng.gen_range(-3.0..3.0);
            let x2: f64 = rng.gen_range(-3.0..3.0);
            let jx = jpow(b, x1, &cut)?;
            let lx = twisted_fourier::branch_log::cut_pow(b.lambda, Complex64::new(x1, 0.0), &cut)?;
            let lhs = &ti * &jx * &t;
            let rhs = c_matrix(x1, d) * lx;
            base = base.max(max_abs(&(lhs - &rhs)) / max_abs(&rhs));
            let j2 = jpow(b, x2, &cut)?;
            let sum = jpow(b, x1 + x2, &cut)?;
            let bound = jx.map(|z| Complex64::new(z.norm(), 0.0)) * j2.map(|z| Complex64::new(z.norm(), 0.0));
            let diff = sum - &jx * &j2;
            for (k, z) in diff.iter().enumerate() {
                hom = hom.max(z.norm() / bound[k].re);
            }
        }
        checks.push(format!("identities.base_change[block={j}]"), base, IDENTITY_TOL);
        checks.push(format!("identities.homomorphism[block={j}]"), hom, IDENTITY_TOL);
        for n in res.ns() {
            let Some((c, dm)) = res.coeffs[j].get(&n) else { continue };
            let (_, _, at) = res.twist.epsilon(j, n)?;
            let h = h_matrix(at, d);
            let comm = |m: &CMatrix| max_abs(&(m * &h - &h * m)) / (max_abs(m) * max_abs(&h)).max(f64::MIN_POSITIVE);
            checks.push(format!("identities.commutator[block={j},n={n}]"), comm(c).max(comm(dm)), IDENTITY_TOL);
        }
    }
    let dmax = res.twist.blocks.iter().map(|b| b.d).max().unwrap_or(1);
    let mut prec = 0.0f64;
    for m in 2..=(2 * dmax + 2) {
        let (p, pm2) = (p_coeff(m, res.s), p_coeff(m - 2, res.s));
        if p.extended || pm2.extended {
            continue;
        }
        let h = (m / 2) as f64;
        let lhs = 2.0 * h * (2.0 * res.s - 1.0 + 2.0 * h) * p.value;
        let rhs = (m as f64) * (1.0 - m as f64) * pm2.value;
        let scale = lhs.norm().max(rhs.norm());
        if scale > 0.0 {
            prec = prec.max((lhs - rhs).norm() / scale);
        }
    }
    checks.push("identities.p_recursion".into(), prec, IDENTITY_TOL);
    if let Some(exp) = expansion(res)? {
        let pts: Vec<(f64, f64)> =
            res.y_grid.iter().flat_map(|&y| res.x_grid.iter().map(move |&x| (x, y))).collect();
        checks.push("identities.twist".into(), twist_identity_residual(&exp, &pts)?, TWIST_TOL);
    }
    Ok(())
}
