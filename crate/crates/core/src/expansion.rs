// Copyright 2026 The twisted-fourier Authors
// SPDX-License-Identifier: Apache-2.0

//! Fourier coefficient functions of twist-periodic eigenfunctions, and their
//! assembly into `f(z) = Σₙ Jˣ f̂ₙ(y) e^{2πinx}`.
//!
//! For a block `J(λ)` and frequency `n` the shift is `αₙ = 2πn − i log(λ; ω)`.
//! A sign `εₙ` moves `α̃ₙ = (−1)^{εₙ} αₙ` off the cut ray, and
//!
//! ```text
//! f̂ₙ(y) = T Cₙ S^{εₙ} 𝐈vec(α̃ₙ, y) + T Dₙ S^{εₙ} 𝐊vec(α̃ₙ, y)
//! ```
//!
//! with `Cₙ, Dₙ` in `Coeff0` when `α̃ₙ = 0` and in `Coeff1` otherwise.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;

use crate::branch_log::{angular_distance, cut_log, principal_arg, CutRay, ON_CUT_TOL};
use crate::error::{Error, Result};
use crate::ik_family::{big_ik_vector, is_alpha_zero, IkFlags, Jet};
use crate::jordan::{jpow, s_power, stirling_matrix, CMatrix, CoeffSpace, Family, JordanBlock};
use crate::special::Kind;

/// Seeds are accepted as family members up to this relative residual.
pub const MEMBERSHIP_TOL: f64 = 1e-10;

/// Number of candidate rays tried by [`auto_omega`].
pub const OMEGA_CANDIDATES: usize = 360;

/// `αₙ = 2πn − i log(λ; ω)`.
pub fn alpha_n(lambda: Complex64, n: i64, cut: &CutRay) -> Result<Complex64> {
    let l = cut_log(lambda, cut)?;
    Ok(Complex64::new(2.0 * PI * n as f64, 0.0) - Complex64::i() * l.value)
}

fn admissible(alpha: Complex64, cut: &CutRay) -> bool {
    is_alpha_zero(alpha) || !cut.on_cut(alpha)
}

/// `(εₙ, α̃ₙ)`. When both signs avoid the cut, the one with `Re α̃ₙ > 0`
/// is taken, so that the 𝐊 columns decay in `y`; `ε = 0` on a tie.
pub fn select_epsilon(cut: &CutRay, alpha: Complex64) -> Result<(u8, Complex64)> {
    if is_alpha_zero(alpha) {
        return Ok((0, Complex64::new(0.0, 0.0)));
    }
    let order: [u8; 2] = if alpha.re < 0.0 { [1, 0] } else { [0, 1] };
    for eps in order {
        let at = if eps == 1 { -alpha } else { alpha };
        if admissible(at, cut) {
            return Ok((eps, at));
        }
    }
    Err(Error::Config(format!("neither ±{alpha} avoids the cut through {}", cut.omega())))
}

/// A block-diagonal twist `A = ⊕ J(λⱼ)` together with one branch cut.
#[derive(Clone, Debug, PartialEq)]
pub struct Twist {
    pub blocks: Vec<JordanBlock>,
    pub cut: CutRay,
}

impl Twist {
    pub fn new(blocks: Vec<JordanBlock>, cut: CutRay) -> Result<Self> {
        if blocks.is_empty() {
            return Err(Error::Config("twist has no blocks".into()));
        }
        Ok(Twist { blocks, cut })
    }

    /// Total dimension `Σ dⱼ`.
    pub fn dim(&self) -> usize {
        self.blocks.iter().map(|b| b.d).sum()
    }

    /// Start index of each block in the concatenated vector.
    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.blocks
            .iter()
            .map(|b| {
                let o = acc;
                acc += b.d;
                o
            })
            .collect()
    }

    /// The twist matrix `A`.
    pub fn matrix(&self) -> CMatrix {
        let mut a = CMatrix::zeros(self.dim(), self.dim());
        for (b, o) in self.blocks.iter().zip(self.offsets()) {
            a.view_mut((o, o), (b.d, b.d)).copy_from(&b.matrix());
        }
        a
    }

    /// `(εₙ, α̃ₙ)` for block `j`, with errors naming the block and `n`.
    pub fn epsilon(&self, j: usize, n: i64) -> Result<(Complex64, u8, Complex64)> {
        let b = &self.blocks[j];
        let a = alpha_n(b.lambda, n, &self.cut)?;
        let (e, at) = select_epsilon(&self.cut, a).map_err(|_| {
            Error::Config(format!(
                "block {j} (λ = {}), n = {n}: both ±αₙ = ±{a} lie on the cut ray",
                b.lambda
            ))
        })?;
        Ok((a, e, at))
    }

    /// Checks that every invertible block admits a sign for every `n` in range.
    pub fn check_admissible(&self, n_range: (i64, i64)) -> Result<()> {
        for (j, b) in self.blocks.iter().enumerate() {
            if b.is_nilpotent() {
                continue;
            }
            for n in n_range.0..=n_range.1 {
                self.epsilon(j, n)?;
            }
        }
        Ok(())
    }
}

/// Which ray [`auto_omega`] picked and how far it stays from the shifts.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OmegaChoice {
    pub cut: CutRay,
    /// Smallest angular distance between the ray and any `±αⱼ,ₙ`.
    pub clearance: f64,
}

/// Searches the rays `e^{2πik/360}`, `k = 1..359`, for the one farthest
/// from every direction `±αⱼ,ₙ`. The shifts are recomputed per ray since
/// `log(λ; ω)` depends on it. Ties keep the smallest `k`. When every ray
/// touches some `±α`, the first ray admissible for all blocks is returned.
pub fn auto_omega(blocks: &[JordanBlock], n_range: (i64, i64)) -> Result<OmegaChoice> {
    let mut best: Option<OmegaChoice> = None;
    let mut fallback: Option<CutRay> = None;
    for k in 1..OMEGA_CANDIDATES {
        let theta = 2.0 * PI * k as f64 / OMEGA_CANDIDATES as f64;
        let cut = CutRay::from_angle(theta)?;
        let mut clearance = PI;
        let mut ok = true;
        for b in blocks.iter().filter(|b| !b.is_nilpotent()) {
            for n in n_range.0..=n_range.1 {
                let a = alpha_n(b.lambda, n, &cut)?;
                if is_alpha_zero(a) {
                    continue;
                }
                let pa = principal_arg(a);
                let pm = principal_arg(-a);
                clearance = clearance.min(angular_distance(pa, cut.arg())).min(angular_distance(pm, cut.arg()));
                ok &= select_epsilon(&cut, a).is_ok();
            }
        }
        if ok && fallback.is_none() {
            fallback = Some(cut);
        }
        if best.is_none_or(|b| clearance > b.clearance) {
            best = Some(OmegaChoice { cut, clearance });
        }
    }
    match best {
        Some(b) if b.clearance > ON_CUT_TOL => Ok(b),
        _ => fallback
            .map(|cut| OmegaChoice { cut, clearance: 0.0 })
            .ok_or_else(|| Error::Config("no candidate ray is admissible for every block".into())),
    }
}

/// Family required for a given `α̃ₙ`.
pub fn family_for(alpha_tilde: Complex64) -> Family {
    if is_alpha_zero(alpha_tilde) {
        Family::Coeff0
    } else {
        Family::Coeff1
    }
}

/// Data of one Fourier coefficient of one block.
#[derive(Clone, Debug, PartialEq)]
pub struct FourierCoefficient {
    pub n: i64,
    pub alpha_n: Complex64,
    pub eps: u8,
    pub alpha_tilde: Complex64,
    pub family: Family,
    pub c: CMatrix,
    pub d: CMatrix,
}

impl FourierCoefficient {
    /// Validates that `c` and `d` lie in the family matching `α̃ₙ`.
    pub fn new(block: &JordanBlock, cut: &CutRay, n: i64, c: CMatrix, d: CMatrix) -> Result<Self> {
        if block.is_nilpotent() {
            return Err(Error::Domain("nilpotent blocks have no Fourier coefficients".into()));
        }
        let alpha = alpha_n(block.lambda, n, cut)?;
        let (eps, alpha_tilde) = select_epsilon(cut, alpha)
            .map_err(|_| Error::Config(format!("λ = {}, n = {n}: both ±αₙ lie on the cut", block.lambda)))?;
        let family = family_for(alpha_tilde);
        let space = CoeffSpace::new(family, block.d)?;
        for (name, m) in [("C", &c), ("D", &d)] {
            if m.nrows() != block.d || m.ncols() != block.d {
                return Err(Error::Domain(format!("{name}_{n} must be {0}×{0}", block.d)));
            }
            if m.norm() > 0.0 && space.membership_residual(m) > MEMBERSHIP_TOL {
                return Err(Error::Domain(format!("{name}_{n} is not in {family}")));
            }
        }
        Ok(FourierCoefficient { n, alpha_n: alpha, eps, alpha_tilde, family, c, d })
    }

    /// Builds `Cₙ, Dₙ` from seeds of the matching family.
    pub fn from_seeds(
        block: &JordanBlock,
        cut: &CutRay,
        n: i64,
        c_seed: &[Complex64],
        d_seed: &[Complex64],
    ) -> Result<Self> {
        let alpha = alpha_n(block.lambda, n, cut)?;
        let (_, at) = select_epsilon(cut, alpha)?;
        let space = CoeffSpace::new(family_for(at), block.d)?;
        Self::new(block, cut, n, space.embed(c_seed)?, space.embed(d_seed)?)
    }
}

/// `y ↦ f̂ₙ(y)` for one block and one `n`.
#[derive(Clone, Debug)]
pub struct CoeffFunction {
    pub block: JordanBlock,
    pub cut: CutRay,
    pub s: Complex64,
    pub coeff: FourierCoefficient,
    t: CMatrix,
    cs: CMatrix,
    ds: CMatrix,
}

impl CoeffFunction {
    pub fn new(block: JordanBlock, cut: CutRay, s: Complex64, coeff: FourierCoefficient) -> Result<Self> {
        let t = stirling_matrix(block.d)?;
        let sp = s_power(block.d, coeff.eps);
        let cs = &coeff.c * &sp;
        let ds = &coeff.d * &sp;
        Ok(CoeffFunction { block, cut, s, coeff, t, cs, ds })
    }

    /// The `𝐈` and `𝐊` vectors at `α̃ₙ`, top first.
    pub fn basis_vectors(&self, y: f64) -> Result<(Vec<Jet>, Vec<Jet>, IkFlags)> {
        let at = self.coeff.alpha_tilde;
        let d = self.block.d;
        let (iv, mut f) = big_ik_vector(Kind::I, at, y, self.s, d, &self.cut)?;
        let (kv, fk) = big_ik_vector(Kind::K, at, y, self.s, d, &self.cut)?;
        f.snapped |= fk.snapped;
        f.log_branch |= fk.log_branch;
        f.extended |= fk.extended;
        Ok((iv, kv, f))
    }

    /// `w = T⁻¹ f̂ₙ = Cₙ S^ε 𝐈vec + Dₙ S^ε 𝐊vec`, with `y`-derivatives.
    pub fn w_jets(&self, y: f64) -> Result<(Vec<Jet>, IkFlags)> {
        let (iv, kv, f) = self.basis_vectors(y)?;
        Ok((combine(&self.cs, &iv, &self.ds, &kv), f))
    }

    /// `f̂ₙ(y)` with `y`-derivatives.
    pub fn fhat_jets(&self, y: f64) -> Result<Vec<Jet>> {
        let (w, _) = self.w_jets(y)?;
        Ok(apply(&self.t, &w))
    }

    pub fn fhat(&self, y: f64) -> Result<Vec<Complex64>> {
        Ok(self.fhat_jets(y)?.into_iter().map(|j| j.v).collect())
    }
}

fn apply(m: &CMatrix, v: &[Jet]) -> Vec<Jet> {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).fold(Jet::default(), |acc, j| acc + v[j].scale(m[(i, j)])))
        .collect()
}

fn combine(a: &CMatrix, u: &[Jet], b: &CMatrix, v: &[Jet]) -> Vec<Jet> {
    apply(a, u).into_iter().zip(apply(b, v)).map(|(p, q)| p + q).collect()
}

/// Coefficient matrices for one block, keyed by `n`.
pub type BlockCoeffs = BTreeMap<i64, (CMatrix, CMatrix)>;

/// `z ↦ Σₙ Jˣ f̂ₙ(y) e^{2πinx}` for one block; zero for nilpotent blocks.
#[derive(Clone, Debug)]
pub struct BlockComponent {
    pub block: JordanBlock,
    pub cut: CutRay,
    /// Terms in ascending `n`.
    pub terms: Vec<CoeffFunction>,
}

impl BlockComponent {
    /// Terms with `n` outside `n_range` are dropped.
    pub fn new(
        block: JordanBlock,
        cut: CutRay,
        s: Complex64,
        coeffs: &BlockCoeffs,
        n_range: (i64, i64),
    ) -> Result<Self> {
        let mut terms = Vec::new();
        if !block.is_nilpotent() {
            for (&n, (c, d)) in coeffs.range(n_range.0..=n_range.1) {
                let fc = FourierCoefficient::new(&block, &cut, n, c.clone(), d.clone())?;
                terms.push(CoeffFunction::new(block, cut, s, fc)?);
            }
        }
        Ok(BlockComponent { block, cut, terms })
    }

    /// `f̂ₙ(y)` for every term.
    pub fn fhats(&self, y: f64) -> Result<Vec<Vec<Complex64>>> {
        self.terms.iter().map(|t| t.fhat(y)).collect()
    }

    /// Evaluates at `x` given the term values from [`fhats`](Self::fhats).
    pub fn eval_with(&self, x: f64, fhats: &[Vec<Complex64>]) -> Result<Vec<Complex64>> {
        let d = self.block.d;
        if self.block.is_nilpotent() || self.terms.is_empty() {
            return Ok(vec![Complex64::new(0.0, 0.0); d]);
        }
        let mut acc = vec![Complex64::new(0.0, 0.0); d];
        for (t, fh) in self.terms.iter().zip(fhats) {
            let e = Complex64::from_polar(1.0, 2.0 * PI * t.coeff.n as f64 * x);
            for (a, v) in acc.iter_mut().zip(fh) {
                *a += e * v;
            }
        }
        let jx = jpow(&self.block, x, &self.cut)?;
        Ok((0..d).map(|i| (0..d).map(|j| jx[(i, j)] * acc[j]).sum()).collect())
    }

    pub fn eval(&self, x: f64, y: f64) -> Result<Vec<Complex64>> {
        self.eval_with(x, &self.fhats(y)?)
    }
}

/// The concatenated expansion over all blocks of a twist.
#[derive(Clone, Debug)]
pub struct Expansion {
    pub twist: Twist,
    pub s: Complex64,
    pub n_range: (i64, i64),
    pub blocks: Vec<BlockComponent>,
}

/// Term values of an [`Expansion`] at one height.
#[derive(Clone, Debug)]
pub struct YSlice<'a> {
    exp: &'a Expansion,
    pub y: f64,
    fhats: Vec<Vec<Vec<Complex64>>>,
}

impl YSlice<'_> {
    pub fn at(&self, x: f64) -> Result<Vec<Complex64>> {
        let mut out = Vec::with_capacity(self.exp.twist.dim());
        for (b, fh) in self.exp.blocks.iter().zip(&self.fhats) {
            out.extend(b.eval_with(x, fh)?);
        }
        Ok(out)
    }
}

impl Expansion {
    /// `coeffs[j]` holds the matrices of block `j`.
    pub fn new(twist: Twist, s: Complex64, coeffs: &[BlockCoeffs], n_range: (i64, i64)) -> Result<Self> {
        if coeffs.len() != twist.blocks.len() {
            return Err(Error::Config(format!(
                "{} coefficient sets for {} blocks",
                coeffs.len(),
                twist.blocks.len()
            )));
        }
        if n_range.0 > n_range.1 {
            return Err(Error::Config(format!("empty n range {n_range:?}")));
        }
        twist.check_admissible(n_range)?;
        let blocks = twist
            .blocks
            .iter()
            .zip(coeffs)
            .map(|(b, c)| BlockComponent::new(*b, twist.cut, s, c, n_range))
            .collect::<Result<Vec<_>>>()?;
        Ok(Expansion { twist, s, n_range, blocks })
    }

    pub fn slice(&self, y: f64) -> Result<YSlice<'_>> {
        let fhats = self.blocks.iter().map(|b| b.fhats(y)).collect::<Result<Vec<_>>>()?;
        Ok(YSlice { exp: self, y, fhats })
    }

    pub fn eval(&self, x: f64, y: f64) -> Result<Vec<Complex64>> {
        self.slice(y)?.at(x)
    }
}
