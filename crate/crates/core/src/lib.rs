// Copyright 2026 The twisted-fourier Authors
// SPDX-License-Identifier: Apache-2.0

pub mod branch_log;
pub mod error;
pub mod special;

pub use error::{Error, Result};
pub mod coeff_series;
pub mod ik_family;
pub mod jordan;
pub mod expansion;
pub mod verify;
