// Copyright 2026 The twisted-fourier Authors
// SPDX-License-Identifier: Apache-2.0

//! Job configuration: parsing, validation and resolution against the core types.

use std::collections::BTreeMap;
use std::path::Path;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use twisted_fourier::branch_log::CutRay;
use twisted_fourier::expansion::{auto_omega, family_for, BlockCoeffs, Twist};
use twisted_fourier::jordan::{CoeffSpace, JordanBlock};

use crate::CliError;

/// A complex number written as `[re, im]` or as a bare real.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ComplexIn {
    Pair([f64; 2]),
    Real(f64),
}

impl ComplexIn {
    pub fn value(self) -> Complex64 {
        match self {
            ComplexIn::Pair([re, im]) => Complex64::new(re, im),
            ComplexIn::Real(re) => Complex64::new(re, 0.0),
        }
    }
}

impl From<Complex64> for ComplexIn {
    fn from(z: Complex64) -> Self {
        ComplexIn::Pair([z.re, z.im])
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockSpec {
    pub lambda: ComplexIn,
    pub d: usize,
}

/// `"auto"`, `"principal"`, or a ray direction.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum OmegaSpec {
    Named(String),
    Ray(ComplexIn),
}

impl Default for OmegaSpec {
    fn default() -> Self {
        OmegaSpec::Named("principal".into())
    }
}

/// Seeds of `Cₙ` and `Dₙ` in the family selected by `α̃ₙ`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeedPair {
    pub c: Vec<ComplexIn>,
    pub d: Vec<ComplexIn>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RandomCoeffs {
    /// Scale of the `C` seeds; small values keep the growing part in check.
    #[serde(default = "one")]
    pub c_scale: f64,
    #[serde(default = "one")]
    pub d_scale: f64,
}

fn one() -> f64 {
    1.0
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoeffSpec {
    /// Per block, seeds keyed by `n`.
    Explicit(Vec<BTreeMap<String, SeedPair>>),
    Random { random: RandomCoeffs },
}

impl Default for CoeffSpec {
    fn default() -> Self {
        CoeffSpec::Random { random: RandomCoeffs { c_scale: 1.0, d_scale: 1.0 } }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Spacing {
    Linear,
    Log,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GridSpec {
    Values(Vec<f64>),
    Range { min: f64, max: f64, count: usize, #[serde(default = "linear")] spacing: Spacing },
}

fn linear() -> Spacing {
    Spacing::Linear
}

impl GridSpec {
    pub fn points(&self) -> Vec<f64> {
        match self {
            GridSpec::Values(v) => v.clone(),
            GridSpec::Range { min, max, count, spacing } => {
                if *count == 1 {
                    return vec![*min];
                }
                (0..*count)
                    .map(|i| {
                        let t = i as f64 / (*count - 1) as f64;
                        match spacing {
                            Spacing::Linear => min + (max - min) * t,
                            Spacing::Log => (min.ln() + (max.ln() - min.ln()) * t).exp(),
                        }
                    })
                    .collect()
            }
        }
    }
}

fn default_y_grid() -> GridSpec {
    GridSpec::Range { min: 0.5, max: 5.0, count: 10, spacing: Spacing::Log }
}

fn default_x_grid() -> GridSpec {
    GridSpec::Range { min: 0.0, max: 1.0, count: 8, spacing: Spacing::Linear }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AsymptoticsSpec {
    /// Values of `|α̃ₙ y|` along which the ratio is traced.
    #[serde(default = "default_moduli")]
    pub moduli: Vec<f64>,
    #[serde(default = "default_m_max")]
    pub m_max: usize,
}

fn default_moduli() -> Vec<f64> {
    vec![15.0, 30.0, 60.0]
}

fn default_m_max() -> usize {
    3
}

impl Default for AsymptoticsSpec {
    fn default() -> Self {
        AsymptoticsSpec { moduli: default_moduli(), m_max: default_m_max() }
    }
}

/// Perturbation added by the ode and laplace suites to check that they fail.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FaultSpec {
    /// `a` in `a·y²`, relative to the largest sampled magnitude.
    pub amplitude: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    pub twist: Vec<BlockSpec>,
    #[serde(default)]
    pub omega: OmegaSpec,
    pub s: ComplexIn,
    pub n_range: [i64; 2],
    #[serde(default)]
    pub coeffs: CoeffSpec,
    #[serde(default = "default_y_grid")]
    pub y_grid: GridSpec,
    #[serde(default = "default_x_grid")]
    pub x_grid: GridSpec,
    #[serde(default)]
    pub asymptotics: AsymptoticsSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inject_fault: Option<FaultSpec>,
}

impl JobConfig {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let de = &mut serde_json::Deserializer::from_str(text);
        serde_path_to_error::deserialize(de).map_err(|e| {
            let path = e.path().to_string();
            CliError::Config(format!("{path}: {}", e.into_inner()))
        })
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }
}

/// Extra inputs given on the command line.
#[derive(Clone, Debug, Default)]
pub struct Overrides {
    pub n_min: Option<i64>,
    pub n_max: Option<i64>,
    pub seed: u64,
}

/// Where the cut came from.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CutInfo {
    pub source: String,
    pub omega: [f64; 2],
    pub principal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub clearance: Option<f64>,
}

/// A configuration checked and turned into core objects.
#[derive(Clone, Debug)]
pub struct Resolved {
    /// The configuration after command-line overrides.
    pub config: JobConfig,
    pub twist: Twist,
    pub s: Complex64,
    pub n_range: (i64, i64),
    pub coeffs: Vec<BlockCoeffs>,
    pub cut_info: CutInfo,
    pub y_grid: Vec<f64>,
    pub x_grid: Vec<f64>,
    pub seed: u64,
}

impl Resolved {
    pub fn is_empty_range(&self) -> bool {
        self.n_range.0 > self.n_range.1
    }

    pub fn ns(&self) -> std::ops::RangeInclusive<i64> {
        self.n_range.0..=self.n_range.1
    }
}

fn bad(path: impl std::fmt::Display, msg: impl std::fmt::Display) -> CliError {
    CliError::Config(format!("{path}: {msg}"))
}

fn check_finite(path: &str, z: Complex64) -> Result<(), CliError> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(bad(path, "must be finite"))
    }
}

fn check_grid(path: &str, g: &GridSpec, positive: bool) -> Result<Vec<f64>, CliError> {
    if let GridSpec::Range { min, max, count, spacing } = g {
        if *count == 0 {
            return Err(bad(format!("{path}.count"), "must be positive"));
        }
        if !(min <= max) {
            return Err(bad(path, "min must not exceed max"));
        }
        if *spacing == Spacing::Log && !(*min > 0.0) {
            return Err(bad(format!("{path}.min"), "log spacing needs a positive minimum"));
        }
    }
    let pts = g.points();
    if let Some((i, v)) = pts.iter().enumerate().find(|(_, v)| !v.is_finite() || (positive && **v <= 0.0)) {
        return Err(bad(format!("{path}[{i}]"), format!("{v} is not a valid height")));
    }
    Ok(pts)
}

pub fn resolve(mut config: JobConfig, ov: &Overrides) -> Result<Resolved, CliError> {
    if let Some(n) = ov.n_min {
        config.n_range[0] = n;
    }
    if let Some(n) = ov.n_max {
        config.n_range[1] = n;
    }
    let n_range = (config.n_range[0], config.n_range[1]);
    if config.twist.is_empty() {
        return Err(bad("twist", "needs at least one block"));
    }
    let mut blocks = Vec::with_capacity(config.twist.len());
    for (j, b) in config.twist.iter().enumerate() {
        let lambda = b.lambda.value();
        check_finite(&format!("twist[{j}].lambda"), lambda)?;
        let block = JordanBlock::new(lambda, b.d).map_err(|e| bad(format!("twist[{j}].d"), e))?;
        blocks.push(block);
    }
    let s = config.s.value();
    check_finite("s", s)?;
    let y_grid = check_grid("y_grid", &config.y_grid, true)?;
    let x_grid = check_grid("x_grid", &config.x_grid, false)?;
    if config.asymptotics.moduli.iter().any(|m| !(*m > 0.0 && m.is_finite())) {
        return Err(bad("asymptotics.moduli", "must be positive"));
    }

    let (cut, cut_info) = match &config.omega {
        OmegaSpec::Named(n) if n == "auto" => {
            let range = if n_range.0 > n_range.1 { (0, 0) } else { n_range };
            let ch = auto_omega(&blocks, range).map_err(|e| bad("omega", e))?;
            let w = ch.cut.omega();
            (ch.cut, CutInfo { source: "auto".into(), omega: [w.re, w.im], principal: false, clearance: Some(ch.clearance) })
        }
        OmegaSpec::Named(n) if n == "principal" => {
            let c = CutRay::principal();
            (c, CutInfo { source: "principal".into(), omega: [-1.0, 0.0], principal: true, clearance: None })
        }
        OmegaSpec::Named(n) => {
            return Err(bad("omega", format!("unknown value {n:?}; use \"auto\", \"principal\" or [re, im]")))
        }
        OmegaSpec::Ray(z) => {
            let c = CutRay::new(z.value()).map_err(|e| bad("omega", e))?;
            let w = c.omega();
            (c, CutInfo { source: "given".into(), omega: [w.re, w.im], principal: false, clearance: None })
        }
    };
    let twist = Twist::new(blocks, cut).map_err(|e| bad("twist", e))?;
    for (j, b) in twist.blocks.iter().enumerate() {
        if b.is_nilpotent() {
            continue;
        }
        for n in n_range.0..=n_range.1 {
            twist.epsilon(j, n).map_err(|_| {
                bad(
                    format!("twist[{j}]"),
                    format!("n = {n}: both ±αₙ lie on the cut through {}; try \"omega\": \"auto\"", cut.omega()),
                )
            })?;
        }
    }
    let coeffs = build_coeffs(&config.coeffs, &twist, n_range, ov.seed)?;
    Ok(Resolved { config, twist, s, n_range, coeffs, cut_info, y_grid, x_grid, seed: ov.seed })
}

fn build_coeffs(spec: &CoeffSpec, twist: &Twist, n_range: (i64, i64), seed: u64) -> Result<Vec<BlockCoeffs>, CliError> {
    let nblocks = twist.blocks.len();
    let mut out = vec![BlockCoeffs::new(); nblocks];
    match spec {
        CoeffSpec::Explicit(per_block) => {
            if per_block.len() != nblocks {
                return Err(bad("coeffs", format!("{} entries for {nblocks} blocks", per_block.len())));
            }
            for (j, entries) in per_block.iter().enumerate() {
                let b = twist.blocks[j];
                for (key, pair) in entries {
                    let path = format!("coeffs[{j}].{key}");
                    let n: i64 = key.trim().parse().map_err(|_| bad(&path, "key must be an integer n"))?;
                    if b.is_nilpotent() || n < n_range.0 || n > n_range.1 {
                        continue;
                    }
                    let (_, _, at) = twist.epsilon(j, n).map_err(|e| bad(&path, e))?;
                    let space = CoeffSpace::new(family_for(at), b.d).map_err(|e| bad(&path, e))?;
                    let mut mats = Vec::with_capacity(2);
                    for (name, seed) in [("c", &pair.c), ("d", &pair.d)] {
                        let vals: Vec<Complex64> = seed.iter().map(|z| z.value()).collect();
                        if vals.len() != space.dim() {
                            return Err(bad(
                                format!("{path}.{name}"),
                                format!("{} needs {} seed entries, got {}", space.family, space.dim(), vals.len()),
                            ));
                        }
                        for (i, &v) in vals.iter().enumerate() {
                            check_finite(&format!("{path}.{name}[{i}]"), v)?;
                        }
                        mats.push(space.embed(&vals).map_err(|e| bad(&path, e))?);
                    }
                    let d = mats.pop().unwrap();
                    let c = mats.pop().unwrap();
                    out[j].insert(n, (c, d));
                }
            }
        }
        CoeffSpec::Random { random } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for (j, b) in twist.blocks.iter().enumerate() {
                if b.is_nilpotent() {
                    continue;
                }
                for n in n_range.0..=n_range.1 {
                    let (_, _, at) = twist.epsilon(j, n).map_err(|e| bad(format!("twist[{j}]"), e))?;
                    let space = CoeffSpace::new(family_for(at), b.d).map_err(|e| bad(format!("twist[{j}]"), e))?;
                    let mut draw = |scale: f64| -> Vec<Complex64> {
                        (0..space.dim())
                            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)) * scale)
                            .collect()
                    };
                    let cs = draw(random.c_scale);
                    let ds = draw(random.d_scale);
                    let c = space.embed(&cs).map_err(|e| bad("coeffs", e))?;
                    let d = space.embed(&ds).map_err(|e| bad("coeffs", e))?;
                    out[j].insert(n, (c, d));
                }
            }
        }
    }
    Ok(out)
}
