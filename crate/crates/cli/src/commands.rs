// Copyright 2026 The twisted-fourier Authors
// SPDX-License-Identifier: Apache-2.0

use std::io::Write;

use num_complex::Complex64;
use serde::Serialize;
use twisted_fourier::coeff_series::snap_to_resonant;
use twisted_fourier::expansion::{family_for, Expansion};
use twisted_fourier::special::Kind;
use twisted_fourier::verify::asymptotics_check;

use crate::config::{CutInfo, JobConfig, Resolved};
use crate::{fmt_f64, CliError};

#[derive(Clone, Debug, Serialize)]
pub struct EpsilonRecord {
    pub block: usize,
    pub n: i64,
    pub alpha_n: [f64; 2],
    pub epsilon: u8,
    pub alpha_tilde: [f64; 2],
    pub family: String,
}

/// `s` was moved onto a member of `E(d)` for an `α̃ₙ = 0` term.
#[derive(Clone, Debug, Serialize)]
pub struct SnapRecord {
    pub block: usize,
    pub n: i64,
    pub s: [f64; 2],
    pub snapped_to: f64,
    pub moved: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Metadata<'a> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'a str,
    pub config: &'a JobConfig,
    pub cut: &'a CutInfo,
    pub seed: u64,
    pub epsilons: Vec<EpsilonRecord>,
    pub snaps: Vec<SnapRecord>,
}

fn pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

pub fn metadata<'a>(res: &'a Resolved, command: &'a str) -> Result<Metadata<'a>, CliError> {
    let mut epsilons = Vec::new();
    let mut snaps = Vec::new();
    for (j, b) in res.twist.blocks.iter().enumerate() {
        if b.is_nilpotent() {
            continue;
        }
        for n in res.ns() {
            let (a, e, at) = res.twist.epsilon(j, n)?;
            let family = family_for(at);
            epsilons.push(EpsilonRecord {
                block: j,
                n,
                alpha_n: pair(a),
                epsilon: e,
                alpha_tilde: pair(at),
                family: family.to_string(),
            });
            if family == twisted_fourier::jordan::Family::Coeff0 {
                let sn = snap_to_resonant(res.s, b.d);
                if let Some(m) = sn.member {
                    snaps.push(SnapRecord { block: j, n, s: pair(res.s), snapped_to: m, moved: sn.moved });
                }
            }
        }
    }
    Ok(Metadata {
        tool: "twf",
        version: env!("CARGO_PKG_VERSION"),
        command,
        config: &res.config,
        cut: &res.cut_info,
        seed: res.seed,
        epsilons,
        snaps,
    })
}

/// Writes the `#` metadata line.
pub fn write_header(out: &mut dyn Write, meta: &Metadata<'_>) -> Result<(), CliError> {
    let json = serde_json::to_string(meta).map_err(|e| CliError::Io(std::io::Error::other(e)))?;
    writeln!(out, "# {json}")?;
    Ok(())
}

/// The expansion of a resolved job; `None` for an empty `n` range.
pub fn expansion(res: &Resolved) -> Result<Option<Expansion>, CliError> {
    if res.is_empty_range() {
        return Ok(None);
    }
    Ok(Some(Expansion::new(res.twist.clone(), res.s, &res.coeffs, res.n_range)?))
}

/// Rows `(n, block, y, component_index, re, im)` of `f̂ₙ(y)`.
pub fn eval(res: &Resolved, out: &mut dyn Write) -> Result<(), CliError> {
    write_header(out, &metadata(res, "eval")?)?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["n", "block", "y", "component_index", "re", "im"])?;
    let exp = expansion(res)?;
    if let Some(exp) = exp {
        for n in res.ns() {
            for (j, bc) in exp.blocks.iter().enumerate() {
                let term = bc.terms.iter().find(|t| t.coeff.n == n);
                for &y in &res.y_grid {
                    let v = match term {
                        Some(t) => t.fhat(y)?,
                        None => vec![Complex64::new(0.0, 0.0); bc.block.d],
                    };
                    for (i, z) in v.iter().enumerate() {
                        w.write_record([n.to_string(), j.to_string(), fmt_f64(y), i.to_string(), fmt_f64(z.re), fmt_f64(z.im)])?;
                    }
                }
            }
        }
    }
    w.flush()?;
    Ok(())
}

/// Rows `(x, y, component, re, im)` of the truncated expansion.
pub fn expand(res: &Resolved, out: &mut dyn Write) -> Result<(), CliError> {
    write_header(out, &metadata(res, "expand")?)?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["x", "y", "component", "re", "im"])?;
    if let Some(exp) = expansion(res)? {
        for &y in &res.y_grid {
            let sl = exp.slice(y)?;
            for &x in &res.x_grid {
                for (i, z) in sl.at(x)?.iter().enumerate() {
                    w.write_record([fmt_f64(x), fmt_f64(y), i.to_string(), fmt_f64(z.re), fmt_f64(z.im)])?;
                }
            }
        }
    }
    w.flush()?;
    Ok(())
}

/// One traced `(block, n, kind, m)`.
#[derive(Clone, Debug)]
pub struct AsymptoticsRow {
    pub block: usize,
    pub n: i64,
    pub kind: Kind,
    pub m: usize,
    pub boundary_warning: bool,
    /// `(|α̃ₙ y|, y, |Ψ / leading − 1|)`.
    pub points: Vec<(f64, f64, f64)>,
}

/// Ratio traces for every term with `α̃ₙ ≠ 0` and `m ≤ min(m_max, d − 1)`.
pub fn asymptotics_rows(res: &Resolved) -> Result<Vec<AsymptoticsRow>, CliError> {
    let spec = &res.config.asymptotics;
    let mut rows = Vec::new();
    for (j, b) in res.twist.blocks.iter().enumerate() {
        if b.is_nilpotent() {
            continue;
        }
        for n in res.ns() {
            let (_, _, at) = res.twist.epsilon(j, n)?;
            if family_for(at) == twisted_fourier::jordan::Family::Coeff0 {
                continue;
            }
            let ys: Vec<f64> = spec.moduli.iter().map(|r| r / at.norm()).collect();
            for kind in [Kind::I, Kind::K] {
                for m in 0..=spec.m_max.min(b.d - 1) {
                    let t = asymptotics_check(&res.twist.cut, kind, m, at, res.s, &ys)?;
                    let points = t.points.iter().map(|&(y, r)| (y * at.norm(), y, r)).collect();
                    rows.push(AsymptoticsRow { block: j, n, kind, m, boundary_warning: t.boundary_warning, points });
                }
            }
        }
    }
    Ok(rows)
}

/// Rows `(block, n, kind, m, abs_alpha_y, y, deviation, boundary_warning)`.
pub fn asympt(res: &Resolved, out: &mut dyn Write) -> Result<(), CliError> {
    write_header(out, &metadata(res, "asympt")?)?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["block", "n", "kind", "m", "abs_alpha_y", "y", "deviation", "boundary_warning"])?;
    for r in asymptotics_rows(res)? {
        for &(ay, y, dev) in &r.points {
            w.write_record([
                r.block.to_string(),
                r.n.to_string(),
                r.kind.to_string(),
                r.m.to_string(),
                fmt_f64(ay),
                fmt_f64(y),
                fmt_f64(dev),
                r.boundary_warning.to_string(),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}
