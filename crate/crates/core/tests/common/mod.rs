// Copyright 2026 The twisted-fourier Authors
// SPDX-License-Identifier: Apache-2.0

//! Independent reference implementations used only by tests.
#![allow(dead_code)]

use num_complex::Complex64;
use rand::Rng;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn rel(a: Complex64, b: Complex64) -> f64 {
    let s = a.norm().max(b.norm());
    if s == 0.0 {
        0.0
    } else {
        (a - b).norm() / s
    }
}

pub fn rand_c<R: Rng>(rng: &mut R, r: f64) -> Complex64 {
    c(rng.gen_range(-r..r), rng.gen_range(-r..r))
}

const BERNOULLI: [f64; 10] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
];

/// `1/Γ(w)` by upward shifting and the Stirling series.
pub fn rgamma(w: Complex64) -> Complex64 {
    let mut prod = c(1.0, 0.0);
    let mut z = w;
    while z.re < 25.0 || z.norm() < 25.0 {
        prod *= z;
        z += 1.0;
    }
    let mut lg = (z - 0.5) * z.ln() - z + 0.5 * (2.0 * std::f64::consts::PI).ln();
    let mut zp = z;
    let z2 = z * z;
    for (k, b) in BERNOULLI.iter().enumerate() {
        let k = (k + 1) as f64;
        lg += b / (2.0 * k * (2.0 * k - 1.0) * zp);
        zp *= z2;
    }
    prod * (-lg).exp()
}

/// `I_η(x)` for `x > 0` by its power series.
pub fn bessel_i_series(eta: Complex64, x: f64) -> Complex64 {
    let h = x / 2.0;
    let mut t = (eta * h.ln()).exp() * rgamma(eta + 1.0);
    let mut sum = t;
    let mut m = 0.0;
    loop {
        m += 1.0;
        t *= h * h / (m * (m + eta));
        sum += t;
        if m > x + eta.norm() + 5.0 && t.norm() < 1e-18 * sum.norm() {
            break;
        }
        if m > 5000.0 {
            break;
        }
    }
    sum
}

/// `K_η(x) = ∫₀^∞ e^{−x cosh t} cosh(ηt) dt` for `x > 0`, trapezoidal rule.
pub fn bessel_k_integral(eta: Complex64, x: f64) -> Complex64 {
    let h = 0.005;
    let f = |t: f64| (-x * t.cosh()).exp() * (eta * t).cosh();
    let mut sum = f(0.0) * 0.5;
    let mut t = h;
    loop {
        let v = f(t);
        sum += v;
        if x * t.cosh() - eta.re.abs() * t > x + 60.0 {
            break;
        }
        t += h;
    }
    sum * h
}

pub type Q = num_rational::Ratio<i128>;

pub fn qi(n: i128) -> Q {
    Q::from_integer(n)
}

/// Signed Stirling numbers of the first kind, exact.
pub fn stirling1_exact(nmax: usize) -> Vec<Vec<i128>> {
    let mut s = vec![vec![0i128; nmax + 1]; nmax + 1];
    s[0][0] = 1;
    for n in 0..nmax {
        for k in 1..=n + 1 {
            s[n + 1][k] = s[n][k - 1] - n as i128 * s[n][k];
        }
    }
    s
}

pub fn factorial_exact(n: usize) -> i128 {
    (1..=n as i128).product()
}

/// `binom(x, k)` for rational `x`.
pub fn binom_q(x: Q, k: usize) -> Q {
    (0..k).fold(qi(1), |acc, i| acc * (x - qi(i as i128)) / qi(i as i128 + 1))
}
