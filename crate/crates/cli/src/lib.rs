// Copyright 2026 The twisted-fourier Authors
// SPDX-License-Identifier: Apache-2.0

//! Commands behind the `twf` binary.
//!
//! Every command reads a [`JobConfig`](config::JobConfig) and writes a table
//! or a report. Tables are CSV preceded by one `#`-prefixed line of JSON
//! metadata; floats are written as `{:.16e}` so output is byte-stable.

pub mod commands;
pub mod config;
pub mod suites;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("configuration error: {0}")]
    Config(String),

    #[error("numerical error: {0}")]
    Numerical(twisted_fourier::Error),

    #[error("check failed: {0}")]
    Check(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// Process exit status for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Check(_) => 1,
            CliError::Config(_) | CliError::Io(_) => 2,
            CliError::Numerical(_) => 3,
        }
    }
}

impl From<twisted_fourier::Error> for CliError {
    fn from(e: twisted_fourier::Error) -> Self {
        if e.is_input_error() {
            CliError::Config(e.to_string())
        } else {
            CliError::Numerical(e)
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(std::io::Error::other(e))
    }
}

/// Fixed float format of all tables.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}
