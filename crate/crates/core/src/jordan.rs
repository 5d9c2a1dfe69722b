// Copyright 2026 The twisted-fourier Authors
// SPDX-License-Identifier: Apache-2.0

//! Jordan blocks, their real powers, and the matrices that decouple the
//! vector-valued eigenvalue equation.
//!
//! Rows and columns are 1-based in the formulas below and 0-based in code.
//!
//! * `J(λ)` has `λ` on the diagonal and on the superdiagonal, so
//!   `J(λ) = λ J(1)` and `J^x = λ^x [binom(x, j−i)]`.
//! * `T_{ij} = s(d−i, d−j)/(d−i)!` with signed Stirling numbers of the first
//!   kind, so `T (x^{d−1}, …, 1)ᵀ = (binom(x, d−1), …, binom(x, 0))ᵀ`.
//! * `C(x)_{ij} = binom(d−i, j−i) x^{j−i}`, and `T⁻¹ J^x T = λ^x C(x)`.
//! * `H(α)_{i,i+1} = −2α(d−i)`, `H(α)_{i,i+2} = −(d−i)(d−i−1)`.
//! * `S = diag((−1)^{d−1}, …, −1, 1)`.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::branch_log::{cut_pow, CutRay};
use crate::error::{Error, Result};

pub type CMatrix = DMatrix<Complex64>;

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// A Jordan-ilk block `J(λ)` of size `d`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct JordanBlock {
    pub lambda: Complex64,
    pub d: usize,
}

impl JordanBlock {
    pub fn new(lambda: Complex64, d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::Domain("Jordan block of size zero".into()));
        }
        if !(lambda.re.is_finite() && lambda.im.is_finite()) {
            return Err(Error::Domain(format!("eigenvalue {lambda} is not finite")));
        }
        Ok(JordanBlock { lambda, d })
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lambda.norm() == 0.0
    }

    pub fn matrix(&self) -> CMatrix {
        CMatrix::from_fn(self.d, self.d, |i, j| {
            if i == j || j == i + 1 {
                self.lambda
            } else {
                c(0.0)
            }
        })
    }
}

/// Generalized binomial coefficient `binom(x, k)`.
pub fn binom_real(x: f64, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (x - i as f64) / (i + 1) as f64)
}

/// `J(λ)^x` with `λ^x` on the branch of `cut`; `λ ≠ 0`.
pub fn jpow(block: &JordanBlock, x: f64, cut: &CutRay) -> Result<CMatrix> {
    let d = block.d;
    if block.is_nilpotent() {
        return Err(Error::Domain("J(0)^x is undefined; nilpotent blocks have zero components".into()));
    }
    let lx = cut_pow(block.lambda, c(x), cut)?;
    let binoms: Vec<f64> = (0..d).map(|k| binom_real(x, k)).collect();
    Ok(CMatrix::from_fn(d, d, |i, j| if j < i { c(0.0) } else { lx * binoms[j - i] }))
}

/// `C(x)`, with `T⁻¹ J(λ)^x T = λ^x C(x)`.
pub fn c_matrix(x: f64, d: usize) -> CMatrix {
    CMatrix::from_fn(d, d, |i, j| {
        if j < i {
            c(0.0)
        } else {
            // binom(d−i, j−i) with 1-based i
            let top = (d - i - 1) as f64;
            c(binom_real(top, j - i) * x.powi((j - i) as i32))
        }
    })
}

/// Signed Stirling numbers of the first kind `s(n, k)` for `n, k ≤ nmax`.
pub fn stirling1(nmax: usize) -> Vec<Vec<f64>> {
    let mut s = vec![vec![0.0; nmax + 1]; nmax + 1];
    s[0][0] = 1.0;
    for n in 0..nmax {
        for k in 1..=n + 1 {
            s[n + 1][k] = s[n][k - 1] - n as f64 * s[n][k];
        }
    }
    s
}

/// Stirling numbers of the second kind `S(n, k)` for `n, k ≤ nmax`.
pub fn stirling2(nmax: usize) -> Vec<Vec<f64>> {
    let mut s = vec![vec![0.0; nmax + 1]; nmax + 1];
    s[0][0] = 1.0;
    for n in 0..nmax {
        for k in 1..=n + 1 {
            s[n + 1][k] = k as f64 * s[n][k] + s[n][k - 1];
        }
    }
    s
}

fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |a, k| a * k as f64)
}

/// Largest block size for which `T` is representable in `f64`.
pub const MAX_BLOCK: usize = 64;

/// The Stirling matrix `T`.
pub fn stirling_matrix(d: usize) -> Result<CMatrix> {
    if d == 0 || d > MAX_BLOCK {
        return Err(Error::Domain(format!("block size {d} outside 1..={MAX_BLOCK}")));
    }
    let s = stirling1(d);
    Ok(CMatrix::from_fn(d, d, |i, j| {
        if j < i {
            c(0.0)
        } else {
            c(s[d - 1 - i][d - 1 - j] / factorial(d - 1 - i))
        }
    }))
}

/// `T⁻¹`, exactly: `(T⁻¹)_{ij} = S(d−i, d−j) (d−j)!`.
pub fn stirling_matrix_inv(d: usize) -> Result<CMatrix> {
    if d == 0 || d > MAX_BLOCK {
        return Err(Error::Domain(format!("block size {d} outside 1..={MAX_BLOCK}")));
    }
    let s = stirling2(d);
    Ok(CMatrix::from_fn(d, d, |i, j| {
        if j < i {
            c(0.0)
        } else {
            c(s[d - 1 - i][d - 1 - j] * factorial(d - 1 - j))
        }
    }))
}

/// The coupling matrix `H(α)`.
pub fn h_matrix(alpha: Complex64, d: usize) -> CMatrix {
    CMatrix::from_fn(d, d, |i, j| {
        let di = (d - i - 1) as f64; // d − i with 1-based i
        if j == i + 1 {
            -2.0 * alpha * di
        } else if j == i + 2 {
            c(-di * (di - 1.0))
        } else {
            c(0.0)
        }
    })
}

/// The sign matrix `S`.
pub fn s_matrix(d: usize) -> CMatrix {
    CMatrix::from_fn(d, d, |i, j| {
        if i == j {
            c(if (d - 1 - i).is_multiple_of(2) { 1.0 } else { -1.0 })
        } else {
            c(0.0)
        }
    })
}

/// `S^ε` for `ε ∈ {0, 1}`.
pub fn s_power(d: usize, epsilon: u8) -> CMatrix {
    if epsilon == 0 {
        CMatrix::identity(d, d)
    } else {
        s_matrix(d)
    }
}

/// The admissible coefficient subspaces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// Commutant of `H(α)`, `α ≠ 0`; upper triangular, fixed by the first row.
    Coeff1,
    /// Commutant of `H(0)`; fixed by entries of the first two rows.
    Coeff0,
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Family::Coeff1 => "Coeff1",
            Family::Coeff0 => "Coeff0",
        })
    }
}

/// A linear parametrization of a coefficient subspace: each seed coordinate
/// is one matrix entry, and `basis[k]` is the matrix with seed `e_k`.
#[derive(Clone, Debug)]
pub struct CoeffSpace {
    pub family: Family,
    pub d: usize,
    /// Matrix positions `(row, col)` read off as seed coordinates.
    pub seed_positions: Vec<(usize, usize)>,
    pub basis: Vec<CMatrix>,
}

impl CoeffSpace {
    pub fn new(family: Family, d: usize) -> Result<Self> {
        if d == 0 || d > MAX_BLOCK {
            return Err(Error::Domain(format!("block size {d} outside 1..={MAX_BLOCK}")));
        }
        Ok(match family {
            Family::Coeff1 => coeff1_space(d),
            Family::Coeff0 => coeff0_space(d),
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The matrix with the given seed.
    pub fn embed(&self, seed: &[Complex64]) -> Result<CMatrix> {
        if seed.len() != self.dim() {
            return Err(Error::Domain(format!(
                "{} seed for d = {} needs {} entries, got {}",
                self.family,
                self.d,
                self.dim(),
                seed.len()
            )));
        }
        let mut m = CMatrix::zeros(self.d, self.d);
        for (b, &t) in self.basis.iter().zip(seed) {
            m += b * t;
        }
        Ok(m)
    }

    /// Seed of a matrix; inverse of [`embed`](Self::embed) on the subspace.
    pub fn seed_of(&self, m: &CMatrix) -> Vec<Complex64> {
        self.seed_positions.iter().map(|&(i, j)| m[(i, j)]).collect()
    }

    /// Orthogonal projection in the Frobenius inner product, and the
    /// Frobenius distance from `m` to the subspace.
    pub fn project(&self, m: &CMatrix) -> (CMatrix, f64) {
        let d2 = self.d * self.d;
        let a = CMatrix::from_fn(d2, self.dim(), |r, k| self.basis[k][(r / self.d, r % self.d)]);
        let q = a.qr().q();
        let v = CMatrix::from_fn(d2, 1, |r, _| m[(r / self.d, r % self.d)]);
        let pv = &q * (q.adjoint() * &v);
        let pm = CMatrix::from_fn(self.d, self.d, |i, j| pv[(i * self.d + j, 0)]);
        let dist = (m - &pm).norm();
        (pm, dist)
    }

    /// Distance of `m` from the subspace, relative to `‖m‖`.
    pub fn membership_residual(&self, m: &CMatrix) -> f64 {
        let back = self.embed(&self.seed_of(m)).expect("seed length matches");
        (m - back).norm() / m.norm().max(f64::MIN_POSITIVE)
    }
}

fn coeff1_space(d: usize) -> CoeffSpace {
    let mut basis = Vec::with_capacity(d);
    for p in 0..d {
        let mut m = CMatrix::zeros(d, d);
        for i in 1..=d - p {
            let num: f64 = (1..i).map(|k| (d - p - k) as f64).product();
            let den: f64 = (1..i).map(|k| (d - k) as f64).product();
            m[(i - 1, i - 1 + p)] = c(num / den);
        }
        basis.push(m);
    }
    CoeffSpace { family: Family::Coeff1, d, seed_positions: (0..d).map(|p| (0, p)).collect(), basis }
}

/// Null space of `X ↦ X H(0) − H(0) X` by Gauss-Jordan elimination.
///
/// The unknowns are ordered so that entries of rows 3..d become pivots,
/// leaving entries of the first two rows as the free parameters whenever
/// the structure allows it.
fn coeff0_space(d: usize) -> CoeffSpace {
    let h = h_matrix(c(0.0), d);
    let n = d * d;
    // column order: rows d−1, …, 2 first (0-based), then rows 1 and 0
    let mut order: Vec<(usize, usize)> = Vec::with_capacity(n);
    for i in (2..d).rev() {
        for j in 0..d {
            order.push((i, j));
        }
    }
    for i in (0..d.min(2)).rev() {
        for j in 0..d {
            order.push((i, j));
        }
    }
    let col_of = |i: usize, j: usize| order.iter().position(|&p| p == (i, j)).unwrap();
    let mut a = vec![vec![0.0f64; n]; n];
    for i in 0..d {
        for j in 0..d {
            let row = i * d + j;
            // (XH)_{ij} = Σ_k X_{ik} H_{kj},  (HX)_{ij} = Σ_k H_{ik} X_{kj}
            for k in 0..d {
                let hk = h[(k, j)].re;
                if hk != 0.0 {
                    a[row][col_of(i, k)] += hk;
                }
                let hi = h[(i, k)].re;
                if hi != 0.0 {
                    a[row][col_of(k, j)] -= hi;
                }
            }
        }
    }
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..n).filter(|col| !pivots.contains(col)).collect();
    let mut entries: Vec<((usize, usize), CMatrix)> = Vec::with_capacity(free.len());
    for &f in &free {
        let mut x = vec![0.0; n];
        x[f] = 1.0;
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = -a[r][f];
        }
        let mut m = CMatrix::zeros(d, d);
        for (col, &(i, j)) in order.iter().enumerate() {
            m[(i, j)] = c(x[col]);
        }
        entries.push((order[f], m));
    }
    entries.sort_by_key(|(pos, _)| *pos);
    CoeffSpace {
        family: Family::Coeff0,
        d,
        seed_positions: entries.iter().map(|(p, _)| *p).collect(),
        basis: entries.into_iter().map(|(_, m)| m).collect(),
    }
}

/// Reduced row echelon form in place; returns pivot columns.
fn rref(a: &mut [Vec<f64>]) -> Vec<usize> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..cols {
        if r == rows {
            break;
        }
        let (best, val) = (r..rows)
            .map(|i| (i, a[i][col].abs()))
            .fold((r, 0.0), |acc, x| if x.1 > acc.1 { x } else { acc });
        if val < 1e-12 {
            continue;
        }
        a.swap(r, best);
        let p = a[r][col];
        for v in a[r].iter_mut() {
            *v /= p;
        }
        for i in 0..rows {
            if i != r && a[i][col] != 0.0 {
                let f = a[i][col];
                for k in 0..cols {
                    a[i][k] -= f * a[r][k];
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

/// Closed-form description of the `α = 0` coefficient space: the relations
/// `c_{i+2k, j+2k} = c_{ij} Π_{p=0}^{2k−1} (d−j−p) / Π_{p=0}^{2k−1} (d−i−p)`
/// and `c_{ij} = 0` for `i ≥ 3`, `j ≤ 2⌊(i−1)/2⌋`, with the first two rows
/// free. Returns the matrix built from first-two-row entries `rows12`
/// (length `2d`, or `d` when `d = 1`).
pub fn coeff0_closed_form(d: usize, rows12: &[Complex64]) -> CMatrix {
    let mut m = CMatrix::zeros(d, d);
    let top = d.min(2);
    for i in 0..top {
        for j in 0..d {
            m[(i, j)] = rows12[i * d + j];
        }
    }
    for i in 2..d {
        // 1-based row i+1 = i0 + 2k with i0 ∈ {1, 2}
        let i1 = i + 1;
        let i0 = if i1 % 2 == 1 { 1 } else { 2 };
        let k = (i1 - i0) / 2;
        for j in 0..d {
            let j1 = j + 1;
            if j1 <= 2 * ((i1 - 1) / 2) {
                continue;
            }
            let j0 = j1 - 2 * k;
            let num: f64 = (0..2 * k).map(|p| (d as f64) - (j0 + p) as f64).product();
            let den: f64 = (0..2 * k).map(|p| (d as f64) - (i0 + p) as f64).product();
            m[(i, j)] = m[(i0 - 1, j0 - 1)] * (num / den);
        }
    }
    m
}

/// Comparison between the closed-form relations and the computed
/// commutant of `H(0)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Coeff0Crosscheck {
    pub d: usize,
    pub commutant_dim: usize,
    pub closed_form_dim: usize,
    /// Largest `‖[M, H(0)]‖` over closed-form basis matrices.
    pub closed_form_commutator: f64,
}

impl Coeff0Crosscheck {
    pub fn agrees(&self) -> bool {
        self.commutant_dim == self.closed_form_dim && self.closed_form_commutator < 1e-12
    }
}

pub fn coeff0_crosscheck(d: usize) -> Result<Coeff0Crosscheck> {
    let space = CoeffSpace::new(Family::Coeff0, d)?;
    let h = h_matrix(c(0.0), d);
    let n12 = d.min(2) * d;
    let mut worst: f64 = 0.0;
    let mut cols = Vec::with_capacity(n12);
    for k in 0..n12 {
        let mut e = vec![c(0.0); n12];
        e[k] = c(1.0);
        let m = coeff0_closed_form(d, &e);
        worst = worst.max((&m * &h - &h * &m).norm());
        cols.push(m);
    }
    let flat = DMatrix::from_fn(d * d, n12, |r, k| cols[k][(r / d, r % d)]);
    let rank = flat.rank(1e-12);
    Ok(Coeff0Crosscheck {
        d,
        commutant_dim: space.dim(),
        closed_form_dim: rank,
        closed_form_commutator: worst,
    })
}
