// Copyright 2026 The twisted-fourier Authors
// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

/// Errors raised by the numerical kernels.
///
/// Domain and precondition failures are reported before any work is done.
/// Numerical failures (series overflow, ill-conditioned solves) carry enough
/// context to reproduce the offending evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("series failed to converge: {0}")]
    Overflow(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("ill-conditioned system: condition number {cond:.3e} exceeds {limit:.1e}")]
    IllConditioned { cond: f64, limit: f64 },

    #[error("insufficient resolution: {0}")]
    Resolution(String),

    #[error("invalid configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for failures caused by the input rather than by the numerics.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::Domain(_) | Error::Precondition(_) | Error::Config(_))
    }
}
