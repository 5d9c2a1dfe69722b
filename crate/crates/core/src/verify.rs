// Copyright 2026 The twisted-fourier Authors
// SPDX-License-Identifier: Apache-2.0

//! Checks on sampled and assembled fields: periodization, trapezoidal
//! Fourier extraction, coefficient recovery by least squares, residuals of
//! the coefficient ODE system and of the Laplace equation, and ratio traces
//! against the leading large-`y` forms.
//!
//! Residuals are relative: each one is divided by the largest magnitude
//! among the terms that enter it, so a value near machine precision means
//! exact cancellation regardless of the field's size.

use std::f64::consts::PI;
use std::sync::Arc;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::branch_log::{angular_distance, principal_arg, CutRay};
use crate::error::{Error, Result};
use crate::expansion::{alpha_n, family_for, select_epsilon, CoeffFunction, Expansion, Twist};
use crate::ik_family::{big_ik_vector, psi_vector, Jet};
use crate::jordan::{h_matrix, jpow, s_power, stirling_matrix, CMatrix, CoeffSpace, Family, JordanBlock};
use crate::special::{sin_pi, Kind};

/// `F(1 + iy)` may differ from `F(iy)` by this much, relative.
pub const PERIODICITY_TOL: f64 = 1e-8;

/// Recovery refuses systems whose identifiable part is worse conditioned.
pub const CONDITION_LIMIT: f64 = 1e12;

/// Default step of the Laplacian stencils.
pub const STENCIL_STEP: f64 = 1e-3;

/// Sector boundaries closer than this to `arg α` trigger a warning.
pub const SECTOR_BOUNDARY_TOL: f64 = 1e-10;

/// Admissible heights for [`recover_coeffs`].
pub const RECOVERY_Y_RANGE: (f64, f64) = (0.5, 5.0);

type Evaluator = Arc<dyn Fn(f64, f64) -> Result<Vec<Complex64>> + Send + Sync>;

/// A vector field on the upper half plane, given either as a function or
/// as samples on the uniform grid `x_k = k/M`, `k = 0..=M`, at fixed heights.
/// The sample at `x = 1` is only used to check periodicity.
#[derive(Clone)]
pub enum SampledField {
    Closure { dim: usize, nodes: usize, f: Evaluator },
    Grid(GridField),
}

impl std::fmt::Debug for SampledField {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SampledField::Closure { dim, nodes, .. } => {
                write!(f, "SampledField::Closure {{ dim: {dim}, nodes: {nodes} }}")
            }
            SampledField::Grid(g) => write!(f, "SampledField::Grid {{ dim: {}, nodes: {}, ys: {} }}", g.dim, g.nodes, g.ys.len()),
        }
    }
}

/// Grid samples; `values[j][k]` is the vector at `(k/M, ys[j])`.
#[derive(Clone, Debug, PartialEq)]
pub struct GridField {
    pub dim: usize,
    pub nodes: usize,
    pub ys: Vec<f64>,
    pub values: Vec<Vec<Vec<Complex64>>>,
}

/// `max(64, 8(N+1))` nodes for frequencies up to `|n| = N`.
pub fn quadrature_nodes(n_max: u64) -> usize {
    64.max(8 * (n_max as usize + 1))
}

fn check_ys(ys: &[f64]) -> Result<()> {
    if let Some(y) = ys.iter().find(|y| !(**y > 0.0 && y.is_finite())) {
        return Err(Error::Domain(format!("heights must be positive, got {y}")));
    }
    Ok(())
}

impl GridField {
    /// Tabulates `row(y, xs)` on `M` nodes plus the wrap node.
    pub fn tabulate<F>(dim: usize, nodes: usize, ys: &[f64], mut row: F) -> Result<Self>
    where
        F: FnMut(f64, &[f64]) -> Result<Vec<Vec<Complex64>>>,
    {
        if nodes < 8 {
            return Err(Error::Resolution(format!("{nodes} quadrature nodes, need at least 8")));
        }
        check_ys(ys)?;
        let xs: Vec<f64> = (0..=nodes).map(|k| k as f64 / nodes as f64).collect();
        let values = ys
            .iter()
            .map(|&y| {
                let r = row(y, &xs)?;
                if r.len() != xs.len() || r.iter().any(|v| v.len() != dim) {
                    return Err(Error::Domain("grid row has the wrong shape".into()));
                }
                Ok(r)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GridField { dim, nodes, ys: ys.to_vec(), values })
    }

    fn row(&self, y: f64) -> Result<&Vec<Vec<Complex64>>> {
        self.ys
            .iter()
            .position(|&v| v == y)
            .map(|j| &self.values[j])
            .ok_or_else(|| Error::Domain(format!("height {y} is not on the grid")))
    }
}

impl SampledField {
    pub fn closure<F>(dim: usize, nodes: usize, f: F) -> Self
    where
        F: Fn(f64, f64) -> Result<Vec<Complex64>> + Send + Sync + 'static,
    {
        SampledField::Closure { dim, nodes, f: Arc::new(f) }
    }

    /// Samples an expansion on a grid, computing each `f̂ₙ(y)` once per height.
    pub fn from_expansion(exp: &Expansion, nodes: usize, ys: &[f64]) -> Result<Self> {
        let g = GridField::tabulate(exp.twist.dim(), nodes, ys, |y, xs| {
            let sl = exp.slice(y)?;
            xs.iter().map(|&x| sl.at(x)).collect()
        })?;
        Ok(SampledField::Grid(g))
    }

    pub fn dim(&self) -> usize {
        match self {
            SampledField::Closure { dim, .. } => *dim,
            SampledField::Grid(g) => g.dim,
        }
    }

    pub fn nodes(&self) -> usize {
        match self {
            SampledField::Closure { nodes, .. } => *nodes,
            SampledField::Grid(g) => g.nodes,
        }
    }

    /// Values at `x_k = k/M`, `k = 0..=M`.
    fn row(&self, y: f64) -> Result<Vec<Vec<Complex64>>> {
        match self {
            SampledField::Closure { nodes, f, .. } => {
                check_ys(&[y])?;
                (0..=*nodes).map(|k| f(k as f64 / *nodes as f64, y)).collect()
            }
            SampledField::Grid(g) => g.row(y).cloned(),
        }
    }

    /// `max_y |F(1+iy) − F(iy)| / max|F|` over the given heights.
    pub fn periodicity_residual(&self, ys: &[f64]) -> Result<f64> {
        let mut worst = 0.0f64;
        for &y in ys {
            let r = self.row(y)?;
            worst = worst.max(periodicity_of_row(&r));
        }
        Ok(worst)
    }
}

fn vec_norm(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

fn periodicity_of_row(r: &[Vec<Complex64>]) -> f64 {
    let first = &r[0];
    let last = &r[r.len() - 1];
    let diff: Vec<Complex64> = first.iter().zip(last).map(|(a, b)| a - b).collect();
    let scale = r.iter().map(|v| vec_norm(v)).fold(0.0, f64::max);
    if scale == 0.0 {
        0.0
    } else {
        vec_norm(&diff) / scale
    }
}

/// Block-diagonal `J(λⱼ)^x`.
fn twist_pow(twist: &Twist, x: f64) -> Result<Vec<CMatrix>> {
    twist.blocks.iter().map(|b| jpow(b, x, &twist.cut)).collect()
}

fn apply_blocks(mats: &[CMatrix], v: &[Complex64]) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(v.len());
    let mut o = 0;
    for m in mats {
        let d = m.nrows();
        for i in 0..d {
            out.push((0..d).map(|j| m[(i, j)] * v[o + j]).sum());
        }
        o += d;
    }
    out
}

/// `F(z) = J^{−x} f(z)`. Every block must be invertible.
pub fn periodize(twist: &Twist, field: &SampledField) -> Result<SampledField> {
    if let Some((j, _)) = twist.blocks.iter().enumerate().find(|(_, b)| b.is_nilpotent()) {
        return Err(Error::Domain(format!("block {j} is nilpotent; periodize the invertible part only")));
    }
    if field.dim() != twist.dim() {
        return Err(Error::Domain(format!("field has {} components, twist {}", field.dim(), twist.dim())));
    }
    match field {
        SampledField::Closure { dim, nodes, f } => {
            let f = f.clone();
            let twist = twist.clone();
            Ok(SampledField::closure(*dim, *nodes, move |x, y| {
                let v = f(x, y)?;
                Ok(apply_blocks(&twist_pow(&twist, -x)?, &v))
            }))
        }
        SampledField::Grid(g) => {
            let pows = (0..=g.nodes)
                .map(|k| twist_pow(twist, -(k as f64) / g.nodes as f64))
                .collect::<Result<Vec<_>>>()?;
            let values = g
                .values
                .iter()
                .map(|row| row.iter().zip(&pows).map(|(v, p)| apply_blocks(p, v)).collect())
                .collect();
            Ok(SampledField::Grid(GridField { values, ..g.clone() }))
        }
    }
}

/// `∫₀¹ F(x+iy) e^{−2πinx} dx` by the trapezoidal rule on the field's nodes.
pub fn fourier_extract(field: &SampledField, n: i64, y: f64) -> Result<Vec<Complex64>> {
    let m = field.nodes();
    if (m as u64) < 4 * n.unsigned_abs() {
        return Err(Error::Resolution(format!("{m} nodes cannot resolve n = {n}; need at least {}", 4 * n.unsigned_abs())));
    }
    let row = field.row(y)?;
    let p = periodicity_of_row(&row);
    if p > PERIODICITY_TOL {
        return Err(Error::Precondition(format!("field is not 1-periodic at y = {y} (residual {p:.3e})")));
    }
    let mut acc = vec![Complex64::new(0.0, 0.0); field.dim()];
    for (k, v) in row[..m].iter().enumerate() {
        let e = Complex64::from_polar(1.0, -2.0 * PI * ((n * k as i64).rem_euclid(m as i64)) as f64 / m as f64);
        for (a, b) in acc.iter_mut().zip(v) {
            *a += e * b;
        }
    }
    Ok(acc.into_iter().map(|a| a / m as f64).collect())
}

/// Result of [`recover_coeffs`].
#[derive(Clone, Debug)]
pub struct Recovery {
    pub family: Family,
    pub c_seed: Vec<Complex64>,
    pub d_seed: Vec<Complex64>,
    pub c: CMatrix,
    pub d: CMatrix,
    /// `‖A x − b‖ / ‖b‖` with every height equilibrated.
    pub residual: f64,
    /// Condition number of the identifiable part after column scaling.
    pub cond: f64,
    /// Orthonormal basis (columns, seed coordinates `C` then `D`) of the
    /// seeds that produce the zero function.
    pub kernel: CMatrix,
}

impl Recovery {
    /// Removes the unobservable part of a reference seed pair, so it can be
    /// compared with the minimum-norm solution returned here.
    pub fn gauge(&self, c_seed: &[Complex64], d_seed: &[Complex64]) -> (Vec<Complex64>, Vec<Complex64>) {
        let x = DVector::from_iterator(c_seed.len() + d_seed.len(), c_seed.iter().chain(d_seed).copied());
        let x = if self.kernel.ncols() == 0 { x.clone() } else { &x - &self.kernel * (self.kernel.adjoint() * &x) };
        let k = c_seed.len();
        (x.iter().take(k).copied().collect(), x.iter().skip(k).copied().collect())
    }
}

/// Heights `n` log-spaced in `[lo, hi]`.
pub fn log_grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    if count == 1 {
        return vec![lo];
    }
    let (a, b) = (lo.ln(), hi.ln());
    (0..count).map(|i| (a + (b - a) * i as f64 / (count - 1) as f64).exp()).collect()
}

/// Real `2m × 2n` form `[[Re, −Im], [Im, Re]]` of a complex matrix.
fn realify(a: &CMatrix) -> DMatrix<f64> {
    let (m, n) = a.shape();
    DMatrix::from_fn(2 * m, 2 * n, |i, j| {
        let z = a[(i % m, j % n)];
        match (i / m, j / n) {
            (0, 0) | (1, 1) => z.re,
            (0, 1) => -z.im,
            _ => z.im,
        }
    })
}

/// Singular values of a complex matrix, largest first.
///
/// Computed from the real form, where each one appears twice; nalgebra's
/// complex SVD loses digits in the small singular values.
pub fn singular_values(a: &CMatrix) -> Vec<f64> {
    let mut sv: Vec<f64> = realify(a).singular_values().iter().copied().collect();
    sv.sort_by(|x, y| y.partial_cmp(x).unwrap());
    sv.into_iter().step_by(2).collect()
}

/// Orthonormal basis of the span of `vs`, dropping dependent directions.
fn orthonormalize(vs: &[DVector<Complex64>], len: usize) -> CMatrix {
    let mut out: Vec<DVector<Complex64>> = Vec::new();
    for v in vs {
        let n0 = v.norm();
        let mut r = v.clone();
        for _ in 0..2 {
            for q in &out {
                r -= q * q.dotc(&r);
            }
        }
        let n = r.norm();
        if n > 1e-8 * n0 {
            out.push(r.unscale(n));
        }
    }
    if out.is_empty() {
        CMatrix::zeros(len, 0)
    } else {
        CMatrix::from_columns(&out)
    }
}

/// Least-squares fit of `f̂ₙ` samples by `T C S^ε 𝐈vec + T D S^ε 𝐊vec`
/// over the seeds of the matching family. Columns are max-normalized
/// before the solve. When the seed map has a kernel the minimum-norm
/// solution is returned, measured in unscaled seed coordinates.
pub fn recover_coeffs(
    block: &JordanBlock,
    cut: &CutRay,
    s: Complex64,
    n: i64,
    ys: &[f64],
    samples: &[Vec<Complex64>],
) -> Result<Recovery> {
    let d = block.d;
    if block.is_nilpotent() {
        return Err(Error::Domain("nilpotent blocks have no coefficients to recover".into()));
    }
    if ys.len() < 2 * d {
        return Err(Error::Precondition(format!("{} heights for d = {d}, need at least {}", ys.len(), 2 * d)));
    }
    if let Some(y) = ys.iter().find(|&&y| !(RECOVERY_Y_RANGE.0..=RECOVERY_Y_RANGE.1).contains(&y)) {
        return Err(Error::Precondition(format!("height {y} outside [0.5, 5]")));
    }
    if samples.len() != ys.len() || samples.iter().any(|v| v.len() != d) {
        return Err(Error::Domain("samples do not match the height grid".into()));
    }
    let alpha = alpha_n(block.lambda, n, cut)?;
    let (eps, at) = select_epsilon(cut, alpha)?;
    let family = family_for(at);
    let space = CoeffSpace::new(family, d)?;
    let k = space.dim();
    let t = stirling_matrix(d)?;
    let sp = s_power(d, eps);
    let rows = ys.len() * d;
    let cols = 2 * k;
    let mut a = CMatrix::zeros(rows, cols);
    let mut b = DVector::<Complex64>::zeros(rows);
    for (yi, &y) in ys.iter().enumerate() {
        let (iv, _) = big_ik_vector(Kind::I, at, y, s, d, cut)?;
        let (kv, _) = big_ik_vector(Kind::K, at, y, s, d, cut)?;
        let iv = DVector::from_iterator(d, iv.iter().map(|j| j.v));
        let kv = DVector::from_iterator(d, kv.iter().map(|j| j.v));
        for (bi, basis) in space.basis.iter().enumerate() {
            let m = &t * basis * &sp;
            let ci = &m * &iv;
            let ck = &m * &kv;
            for r in 0..d {
                a[(yi * d + r, bi)] = ci[r];
                a[(yi * d + r, k + bi)] = ck[r];
            }
        }
        for r in 0..d {
            b[yi * d + r] = samples[yi][r];
        }
    }
    // Equilibrate each height: the basis spans many orders of magnitude
    // across the grid, and unweighted rows would ignore the small heights
    // where the decaying columns carry their information.
    for yi in 0..ys.len() {
        let m = a.rows(yi * d, d).iter().map(|z| z.norm()).fold(0.0, f64::max);
        if m > 0.0 {
            a.rows_mut(yi * d, d).unscale_mut(m);
            b.rows_mut(yi * d, d).unscale_mut(m);
        }
    }
    let scale: Vec<f64> = (0..cols)
        .map(|j| {
            let m = a.column(j).iter().map(|z| z.norm()).fold(0.0, f64::max);
            if m > 0.0 {
                m
            } else {
                1.0
            }
        })
        .collect();
    let mut a_s = a.clone();
    for (j, &sc) in scale.iter().enumerate() {
        a_s.column_mut(j).unscale_mut(sc);
    }
    let br = DVector::from_iterator(2 * rows, b.iter().map(|z| z.re).chain(b.iter().map(|z| z.im)));
    let svd = realify(&a_s).svd(true, true);
    let u = svd.u.as_ref().expect("u requested");
    let v = svd.v_t.as_ref().expect("v requested").transpose();
    let sv = &svd.singular_values;
    let mut order: Vec<usize> = (0..sv.len()).collect();
    order.sort_by(|&i, &j| sv[j].partial_cmp(&sv[i]).unwrap());
    // The solution space of the ODE system is 2d-dimensional; every complex
    // singular value appears twice in the real representation.
    let rank = (2 * d).min(cols);
    let smax = sv[order[0]];
    if smax == 0.0 {
        return Err(Error::IllConditioned { cond: f64::INFINITY, limit: CONDITION_LIMIT });
    }
    let cond = smax / sv[order[2 * rank - 1]];
    if !(cond <= CONDITION_LIMIT) {
        return Err(Error::IllConditioned { cond, limit: CONDITION_LIMIT });
    }
    let mut xr = DVector::<f64>::zeros(2 * cols);
    for &i in &order[..2 * rank] {
        xr += v.column(i) * (u.column(i).dot(&br) / sv[i]);
    }
    let unscaled = |col: nalgebra::DVectorView<f64>| {
        DVector::from_iterator(cols, (0..cols).map(|j| Complex64::new(col[j], col[cols + j]) / scale[j]))
    };
    let mut x = unscaled(xr.as_view());
    // Kernel directions of the unscaled map, orthonormalized.
    let kernel_vecs: Vec<DVector<Complex64>> = order[2 * rank..].iter().map(|&i| unscaled(v.column(i))).collect();
    let kernel = orthonormalize(&kernel_vecs, cols);
    if kernel.ncols() > 0 {
        x = &x - &kernel * (kernel.adjoint() * &x);
    }
    let bn = b.norm();
    let residual = if bn == 0.0 { 0.0 } else { (&a * &x - &b).norm() / bn };
    let c_seed: Vec<Complex64> = x.iter().take(k).copied().collect();
    let d_seed: Vec<Complex64> = x.iter().skip(k).copied().collect();
    Ok(Recovery {
        family,
        c: space.embed(&c_seed)?,
        d: space.embed(&d_seed)?,
        c_seed,
        d_seed,
        residual,
        cond,
        kernel,
    })
}

/// How `w` is supplied to [`ode_residual`].
pub enum WSource<'a> {
    /// Values with analytic first and second derivatives.
    Jets(Box<dyn Fn(f64) -> Result<Vec<Jet>> + 'a>),
    /// Values only; `w''` by a five-point stencil with step `10⁻⁴ y`.
    Values(Box<dyn Fn(f64) -> Result<Vec<Complex64>> + 'a>),
}

impl WSource<'_> {
    fn value_and_second(&self, y: f64) -> Result<(Vec<Complex64>, Vec<Complex64>)> {
        match self {
            WSource::Jets(f) => {
                let j = f(y)?;
                Ok((j.iter().map(|j| j.v).collect(), j.iter().map(|j| j.d2).collect()))
            }
            WSource::Values(f) => {
                let h = 1e-4 * y;
                let v = f(y)?;
                let p = [f(y - 2.0 * h)?, f(y - h)?, f(y + h)?, f(y + 2.0 * h)?];
                let d2 = (0..v.len())
                    .map(|i| (-p[0][i] + 16.0 * p[1][i] - 30.0 * v[i] + 16.0 * p[2][i] - p[3][i]) / (12.0 * h * h))
                    .collect();
                Ok((v, d2))
            }
        }
    }
}

/// Residual of `(y²∂² + s(1−s)) w = y² (α² + H(iα)) w` over `ys`,
/// per height divided by the largest term magnitude.
pub fn ode_residual(alpha: Complex64, s: Complex64, d: usize, w: &WSource<'_>, ys: &[f64]) -> Result<f64> {
    check_ys(ys)?;
    let h = h_matrix(Complex64::i() * alpha, d);
    let ss = s * (1.0 - s);
    let mut worst = 0.0f64;
    for &y in ys {
        let (v, v2) = w.value_and_second(y)?;
        if v.len() != d {
            return Err(Error::Domain(format!("w has {} components, expected {d}", v.len())));
        }
        let y2 = y * y;
        let mut res = 0.0f64;
        let mut mag = 0.0f64;
        for i in 0..d {
            let mut r = y2 * v2[i] + ss * v[i] - y2 * alpha * alpha * v[i];
            mag = mag.max((y2 * v2[i]).norm()).max((ss * v[i]).norm()).max((y2 * alpha * alpha * v[i]).norm());
            for j in i + 1..d {
                let t = y2 * h[(i, j)] * v[j];
                r -= t;
                mag = mag.max(t.norm());
            }
            res = res.max(r.norm());
        }
        if mag > 0.0 {
            worst = worst.max(res / mag);
        }
    }
    Ok(worst)
}

/// [`ode_residual`] of an assembled coefficient, `w = T⁻¹ f̂ₙ`, with `α = αₙ`.
pub fn coefficient_ode_residual(cf: &CoeffFunction, ys: &[f64]) -> Result<f64> {
    let w = WSource::Jets(Box::new(|y| Ok(cf.w_jets(y)?.0)));
    ode_residual(cf.coeff.alpha_n, cf.s, cf.block.d, &w, ys)
}

/// Scalar cascade residual of `Ψ(m)`:
/// `(y²∂² + s(1−s) − α²y²)Ψ(m) + y²(2imαΨ(m−1) + m(m−1)Ψ(m−2))`,
/// divided by the largest term.
pub fn cascade_residual(
    kind: Kind,
    m: usize,
    alpha: Complex64,
    y: f64,
    s: Complex64,
    d: usize,
    cut: &CutRay,
) -> Result<f64> {
    let (psi, _) = psi_vector(kind, alpha, y, s, d, m + 1, cut)?;
    let p = psi[m];
    let y2 = y * y;
    let mf = m as f64;
    let mut terms = vec![y2 * p.d2, s * (1.0 - s) * p.v, -alpha * alpha * y2 * p.v];
    if m >= 1 {
        terms.push(y2 * 2.0 * mf * Complex64::i() * alpha * psi[m - 1].v);
    }
    if m >= 2 {
        terms.push(y2 * mf * (mf - 1.0) * psi[m - 2].v);
    }
    let mag = terms.iter().map(|t| t.norm()).fold(0.0, f64::max);
    let sum: Complex64 = terms.iter().sum();
    Ok(if mag == 0.0 { 0.0 } else { sum.norm() / mag })
}

/// Adds `a·y²` to every component, with derivatives.
pub fn quadratic_fault(jets: Vec<Jet>, y: f64, a: f64) -> Vec<Jet> {
    let add = Jet { v: (a * y * y).into(), d1: (2.0 * a * y).into(), d2: (2.0 * a).into() };
    jets.into_iter().map(|j| j + add).collect()
}

/// `|−y²(∂ₓ² + ∂ᵧ²) f − s(1−s) f|` from five-point fourth-order stencils
/// with step `h`, per point divided by the largest of `|s(1−s)f|`,
/// `y²|fₓₓ|`, `y²|fᵧᵧ|`; the maximum over `points`.
pub fn laplace_residual<F>(f: F, s: Complex64, points: &[(f64, f64)], h: f64) -> Result<f64>
where
    F: Fn(f64, f64) -> Result<Vec<Complex64>>,
{
    let ss = s * (1.0 - s);
    let mut worst = 0.0f64;
    let w = [-1.0, 16.0, -30.0, 16.0, -1.0];
    for &(x, y) in points {
        if y - 2.0 * h <= 0.0 {
            return Err(Error::Domain(format!("stencil at y = {y} leaves the half plane")));
        }
        let c = f(x, y)?;
        let mut fxx = vec![Complex64::new(0.0, 0.0); c.len()];
        let mut fyy = fxx.clone();
        for (k, &wk) in w.iter().enumerate() {
            let o = (k as f64 - 2.0) * h;
            let vx = if k == 2 { c.clone() } else { f(x + o, y)? };
            let vy = if k == 2 { c.clone() } else { f(x, y + o)? };
            for i in 0..c.len() {
                fxx[i] += wk * vx[i];
                fyy[i] += wk * vy[i];
            }
        }
        let den = 12.0 * h * h;
        let mut res = 0.0f64;
        let mut mag = 0.0f64;
        for i in 0..c.len() {
            let (a, b) = (fxx[i] / den, fyy[i] / den);
            let r = -y * y * (a + b) - ss * c[i];
            res = res.max(r.norm());
            mag = mag.max((ss * c[i]).norm()).max(y * y * a.norm()).max(y * y * b.norm());
        }
        if mag > 0.0 {
            worst = worst.max(res / mag);
        }
    }
    Ok(worst)
}

/// Location of `α` used by the leading large-`y` forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sector {
    /// `arg α ∈ Ω_ω`.
    pub principal: bool,
    /// `arg α ∈ (−π/2, π]`; otherwise `(−π, −π/2]`.
    pub upper: bool,
}

impl Sector {
    pub fn classify(alpha: Complex64, cut: &CutRay) -> Self {
        let t = principal_arg(alpha);
        Sector { principal: cut.contains_arg(t), upper: t > -PI / 2.0 }
    }

    /// Distance of `arg α` to the nearest sector boundary.
    pub fn boundary_distance(alpha: Complex64, cut: &CutRay) -> f64 {
        let t = principal_arg(alpha);
        let mut d = angular_distance(t, -PI / 2.0).min(angular_distance(t, PI));
        if !cut.is_principal() {
            d = d.min(angular_distance(t, cut.arg()));
        }
        d
    }
}

/// Leading form of `𝐈(m, α, y, s)` or `𝐊(m, α, y, s)` as `y → ∞`, with
/// both exponentials kept.
pub fn leading_form(kind: Kind, m: usize, alpha: Complex64, y: f64, s: Complex64, cut: &CutRay) -> Complex64 {
    let sec = Sector::classify(alpha, cut);
    let i = Complex64::i();
    let im = i.powu(m as u32);
    let ym = y.powi(m as i32);
    let sign_m = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
    let grow = (alpha * y).exp();
    let decay = (-alpha * y).exp();
    let sigma = cut.sigma();
    let sqrt_a = alpha.sqrt();
    let phase = |up: bool| if up { (i * PI * s).exp() } else { (-i * PI * s).exp() };
    match kind {
        Kind::I => {
            let base = ym / (im * (2.0 * PI * alpha).sqrt()) * (grow + sign_m * phase(sec.upper) * decay);
            if sec.principal {
                base
            } else {
                base * (-2.0 * PI * i * (s - 0.5) * sigma).exp()
            }
        }
        Kind::K => {
            let main = (PI / (2.0 * alpha)).sqrt() * im * ym * decay;
            if sec.principal {
                return main;
            }
            let extra = (2.0 * PI).sqrt() / (i.powi(m as i32 - 1) * sqrt_a)
                * sigma
                * sin_pi(s)
                * ym
                * (grow - sign_m * phase(!sec.upper) * decay);
            -(-2.0 * PI * i * sigma * s).exp() * main + extra
        }
    }
}

/// `|Ψ / leading − 1|` along a schedule of heights.
#[derive(Clone, Debug, PartialEq)]
pub struct AsymptoticsTrace {
    pub sector: Sector,
    /// `arg α` is within [`SECTOR_BOUNDARY_TOL`] of a sector boundary.
    pub boundary_warning: bool,
    pub points: Vec<(f64, f64)>,
}

impl AsymptoticsTrace {
    pub fn final_value(&self) -> Option<f64> {
        self.points.last().map(|p| p.1)
    }
}

pub fn asymptotics_check(
    cut: &CutRay,
    kind: Kind,
    m: usize,
    alpha: Complex64,
    s: Complex64,
    ys: &[f64],
) -> Result<AsymptoticsTrace> {
    check_ys(ys)?;
    if alpha.norm() == 0.0 || cut.on_cut(alpha) {
        return Err(Error::Domain(format!("α = {alpha} must be nonzero and off the cut")));
    }
    let mut points = Vec::with_capacity(ys.len());
    for &y in ys {
        let (psi, _) = psi_vector(kind, alpha, y, s, m + 1, m + 1, cut)?;
        let lead = leading_form(kind, m, alpha, y, s, cut);
        points.push((y, (psi[m].v / lead - 1.0).norm()));
    }
    Ok(AsymptoticsTrace {
        sector: Sector::classify(alpha, cut),
        boundary_warning: Sector::boundary_distance(alpha, cut) < SECTOR_BOUNDARY_TOL,
        points,
    })
}

/// One `(block, n)` entry of a round trip.
#[derive(Clone, Debug, PartialEq)]
pub struct RoundTripCase {
    pub block: usize,
    pub n: i64,
    pub family: Family,
    pub ys: Vec<f64>,
    /// Largest extraction error, relative to `max_y |f̂ₙ(y)|`.
    pub extract_error: f64,
    /// Relative error of the recovered `C` and `D` seeds, after removing
    /// the unobservable part of the reference.
    pub seed_error: f64,
    pub residual: f64,
    pub cond: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RoundTripReport {
    pub cases: Vec<RoundTripCase>,
    /// Largest `|F(1+iy) − F(iy)|` relative to `max|F|`.
    pub periodicity: f64,
    /// Largest extracted coefficient of any nilpotent component.
    pub nilpotent_max: f64,
}

impl RoundTripReport {
    pub fn max_seed_error(&self) -> f64 {
        self.cases.iter().map(|c| c.seed_error).fold(0.0, f64::max)
    }

    pub fn max_extract_error(&self) -> f64 {
        self.cases.iter().map(|c| c.extract_error).fold(0.0, f64::max)
    }
}

/// Exponent budget `max |Re α̃| (y_max − 0.5)` of a recovery grid.
pub const RECOVERY_EXPONENT: f64 = 7.0;

/// Recovery heights shared by all modes of one block: `3d` log-spaced points
/// in `[0.5, y_max]`. `y_max ≤ 5` is shortened so that the fastest
/// exponential among `alpha_tildes` changes by at most `e^RECOVERY_EXPONENT`;
/// otherwise rounding in the largest mode swamps the smaller ones.
pub fn recovery_grid(alpha_tildes: &[Complex64], d: usize) -> Vec<f64> {
    let (lo, hi) = RECOVERY_Y_RANGE;
    let re = alpha_tildes.iter().map(|a| a.re.abs()).fold(0.0, f64::max);
    let top = if re > 0.0 { (lo + RECOVERY_EXPONENT / re).min(hi) } else { hi };
    log_grid(lo, top, 3 * d)
}

fn seed_distance(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm_sqr()).sum::<f64>().sqrt()
}

/// Synthesize, periodize, extract and recover every `(block, n)` of `exp`.
pub fn round_trip(exp: &Expansion) -> Result<RoundTripReport> {
    let twist = &exp.twist;
    let offsets = twist.offsets();
    let n_max = exp.n_range.0.unsigned_abs().max(exp.n_range.1.unsigned_abs());
    let nodes = quadrature_nodes(n_max);
    let invertible: Vec<usize> = (0..twist.blocks.len()).filter(|&j| !twist.blocks[j].is_nilpotent()).collect();
    let nilpotent: Vec<usize> = (0..twist.blocks.len()).filter(|&j| twist.blocks[j].is_nilpotent()).collect();

    let mut grids = Vec::new();
    let mut all_ys: Vec<f64> = Vec::new();
    for &j in &invertible {
        let ats = (exp.n_range.0..=exp.n_range.1)
            .map(|n| Ok(twist.epsilon(j, n)?.2))
            .collect::<Result<Vec<_>>>()?;
        let ys = recovery_grid(&ats, twist.blocks[j].d);
        all_ys.extend(&ys);
        for n in exp.n_range.0..=exp.n_range.1 {
            grids.push((j, n, ys.clone()));
        }
    }
    all_ys.sort_by(|a, b| a.partial_cmp(b).unwrap());
    all_ys.dedup();

    // components of the invertible and of the nilpotent part
    let comps = |set: &[usize]| -> Vec<usize> {
        set.iter().flat_map(|&j| offsets[j]..offsets[j] + twist.blocks[j].d).collect()
    };
    let inv_comps = comps(&invertible);
    let nil_comps = comps(&nilpotent);
    let full = GridField::tabulate(twist.dim(), nodes, &all_ys, |y, xs| {
        let sl = exp.slice(y)?;
        xs.iter().map(|&x| sl.at(x)).collect()
    })?;
    let restrict = |ix: &[usize]| GridField {
        dim: ix.len(),
        nodes,
        ys: full.ys.clone(),
        values: full.values.iter().map(|row| row.iter().map(|v| ix.iter().map(|&i| v[i]).collect()).collect()).collect(),
    };

    let mut nilpotent_max = 0.0f64;
    if !nil_comps.is_empty() {
        let nf = SampledField::Grid(restrict(&nil_comps));
        for &y in &all_ys {
            for n in exp.n_range.0..=exp.n_range.1 {
                let v = fourier_extract(&nf, n, y)?;
                nilpotent_max = nilpotent_max.max(v.iter().map(|z| z.norm()).fold(0.0, f64::max));
            }
        }
    }

    let mut cases = Vec::new();
    let mut periodicity = 0.0;
    if !invertible.is_empty() {
        let sub = Twist::new(invertible.iter().map(|&j| twist.blocks[j]).collect(), twist.cut)?;
        let pf = periodize(&sub, &SampledField::Grid(restrict(&inv_comps)))?;
        periodicity = pf.periodicity_residual(&all_ys)?;
        let sub_offsets = sub.offsets();
        for (j, n, ys) in grids {
            let b = twist.blocks[j];
            let local = invertible.iter().position(|&k| k == j).unwrap();
            let o = sub_offsets[local];
            let term = exp.blocks[j].terms.iter().find(|t| t.coeff.n == n);
            let mut est = Vec::with_capacity(ys.len());
            let mut err = 0.0f64;
            let mut scale = 0.0f64;
            for &y in &ys {
                let v = fourier_extract(&pf, n, y)?[o..o + b.d].to_vec();
                let exact = match term {
                    Some(t) => t.fhat(y)?,
                    None => vec![Complex64::new(0.0, 0.0); b.d],
                };
                err = err.max(seed_distance(&v, &exact));
                scale = scale.max(vec_norm(&exact));
                est.push(v);
            }
            let rec = recover_coeffs(&b, &twist.cut, exp.s, n, &ys, &est)?;
            let space = CoeffSpace::new(rec.family, b.d)?;
            let (c_ref, d_ref) = match term {
                Some(t) => (space.seed_of(&t.coeff.c), space.seed_of(&t.coeff.d)),
                None => (vec![Complex64::new(0.0, 0.0); space.dim()], vec![Complex64::new(0.0, 0.0); space.dim()]),
            };
            let (cg, dg) = rec.gauge(&c_ref, &d_ref);
            let dc = seed_distance(&rec.c_seed, &cg);
            let dd = seed_distance(&rec.d_seed, &dg);
            let (nc, nd) = (vec_norm(&cg), vec_norm(&dg));
            let floor = nc.max(nd).max(f64::MIN_POSITIVE);
            let seed_error = if nc.max(nd) == 0.0 {
                dc.max(dd)
            } else {
                (dc / nc.max(1e-3 * floor)).max(dd / nd.max(1e-3 * floor))
            };
            cases.push(RoundTripCase {
                block: j,
                n,
                family: rec.family,
                extract_error: if scale > 0.0 { err / scale } else { err },
                seed_error,
                residual: rec.residual,
                cond: rec.cond,
                ys,
            });
        }
    }
    Ok(RoundTripReport { cases, periodicity, nilpotent_max })
}

/// Largest `|f(z+1) − A f(z)|` relative to `max(|f(z+1)|, |A f(z)|)`.
pub fn twist_identity_residual(exp: &Expansion, points: &[(f64, f64)]) -> Result<f64> {
    let a = exp.twist.matrix();
    let mut worst = 0.0f64;
    for &(x, y) in points {
        let sl = exp.slice(y)?;
        let f0 = DVector::from_vec(sl.at(x)?);
        let f1 = DVector::from_vec(sl.at(x + 1.0)?);
        let af = &a * &f0;
        let scale = f1.norm().max(af.norm());
        if scale > 0.0 {
            worst = worst.max((&f1 - &af).norm() / scale);
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn extract_single_mode() {
        let f = SampledField::closure(2, 64, |x, _| {
            let e = Complex64::from_polar(1.0, 2.0 * PI * x);
            Ok(vec![e * 3.0, e * c(0.0, -1.0)])
        });
        let v = fourier_extract(&f, 1, 1.0).unwrap();
        assert!((v[0] - c(3.0, 0.0)).norm() < 1e-14 && (v[1] - c(0.0, -1.0)).norm() < 1e-14);
        let v = fourier_extract(&f, 2, 1.0).unwrap();
        assert!(v.iter().all(|z| z.norm() < 1e-14));
    }

    #[test]
    fn extract_rejects_aperiodic_and_underresolved() {
        let f = SampledField::closure(1, 64, |x, _| Ok(vec![c(x, 0.0)]));
        assert!(matches!(fourier_extract(&f, 0, 1.0), Err(Error::Precondition(_))));
        let g = SampledField::closure(1, 8, |_, _| Ok(vec![c(1.0, 0.0)]));
        assert!(matches!(fourier_extract(&g, 3, 1.0), Err(Error::Resolution(_))));
    }

    #[test]
    fn periodize_rejects_nilpotent() {
        let t = Twist::new(vec![JordanBlock::new(c(0.0, 0.0), 1).unwrap()], CutRay::principal()).unwrap();
        let f = SampledField::closure(1, 64, |_, _| Ok(vec![c(0.0, 0.0)]));
        assert!(matches!(periodize(&t, &f), Err(Error::Domain(_))));
    }

    #[test]
    fn power_is_an_exact_eigenfunction() {
        let s = c(0.3, 0.0);
        let r = laplace_residual(|_, y| Ok(vec![(s * y.ln()).exp()]), s, &[(0.1, 1.0), (0.4, 2.5)], STENCIL_STEP).unwrap();
        assert!(r < 1e-8, "{r}");
        let bad = laplace_residual(|_, y| Ok(vec![(s * y.ln()).exp() + 0.01 * y]), s, &[(0.1, 1.0)], STENCIL_STEP).unwrap();
        assert!(bad > 1e-3, "{bad}");
    }

    #[test]
    fn euler_solution_has_no_residual() {
        let s = c(0.3, 0.1);
        let w = WSource::Jets(Box::new(move |y: f64| {
            let v = (s * y.ln()).exp();
            Ok(vec![Jet { v, d1: s * v / y, d2: s * (s - 1.0) * v / (y * y) }])
        }));
        assert!(ode_residual(c(0.0, 0.0), s, 1, &w, &[0.5, 1.0, 3.0]).unwrap() < 1e-15);
    }

    #[test]
    fn zero_samples_recover_zero() {
        let b = JordanBlock::new(c(1.0, 0.0), 2).unwrap();
        let ys = log_grid(0.5, 2.0, 6);
        let zeros = vec![vec![c(0.0, 0.0); 2]; 6];
        let r = recover_coeffs(&b, &CutRay::principal(), c(0.3, 0.0), 1, &ys, &zeros).unwrap();
        assert_eq!(r.residual, 0.0);
        assert!(r.c.norm() == 0.0 && r.d.norm() == 0.0);
    }
}
