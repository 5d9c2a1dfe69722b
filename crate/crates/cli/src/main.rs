// Copyright 2026 The twisted-fourier Authors
// SPDX-License-Identifier: Apache-2.0

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use twisted_fourier_cli::config::{resolve, JobConfig, Overrides};
use twisted_fourier_cli::suites::{self, Suite};
use twisted_fourier_cli::{commands, CliError};

#[derive(Parser, Debug)]
#[command(name = "twf", version, about = "Fourier expansions of twisted eigenfunctions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct Common {
    /// Job configuration (JSON).
    #[arg(long)]
    config: PathBuf,
    /// Output file; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, allow_hyphen_values = true)]
    n_min: Option<i64>,
    #[arg(long, allow_hyphen_values = true)]
    n_max: Option<i64>,
    /// Seed for random coefficients and randomized checks.
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Tabulate f̂ₙ(y) for every block and n.
    Eval(Common),
    /// Evaluate the truncated expansion on the x/y grid.
    Expand(Common),
    /// Run one verification suite and write a JSON report.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        suite: Suite,
        #[arg(long, default_value_t = 1.0)]
        tolerance_scale: f64,
    },
    /// Trace |Ψ / leading form − 1| for every term.
    Asympt(Common),
}

fn sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match out {
        Some(p) => Box::new(BufWriter::new(File::create(p).with_context(|| format!("creating {}", p.display()))?)),
        None => Box::new(BufWriter::new(std::io::stdout().lock())),
    })
}

fn load(c: &Common) -> Result<twisted_fourier_cli::config::Resolved> {
    let cfg = JobConfig::load(&c.config)?;
    let ov = Overrides { n_min: c.n_min, n_max: c.n_max, seed: c.seed };
    Ok(resolve(cfg, &ov)?)
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Eval(c) => {
            let res = load(&c)?;
            let mut out = sink(&c.out)?;
            commands::eval(&res, &mut out)?;
            out.flush()?;
        }
        Command::Expand(c) => {
            let res = load(&c)?;
            let mut out = sink(&c.out)?;
            commands::expand(&res, &mut out)?;
            out.flush()?;
        }
        Command::Asympt(c) => {
            let res = load(&c)?;
            let mut out = sink(&c.out)?;
            commands::asympt(&res, &mut out)?;
            out.flush()?;
        }
        Command::Verify { common, suite, tolerance_scale } => {
            let res = load(&common)?;
            let report = suites::run(&res, suite, tolerance_scale)?;
            let mut out = sink(&common.out)?;
            serde_json::to_writer_pretty(&mut out, &report)?;
            writeln!(out)?;
            out.flush()?;
            if let Some(name) = &report.first_failure {
                let c = report.checks.iter().find(|c| &c.name == name).unwrap();
                return Err(CliError::Check(format!("{name}: {:.3e} exceeds {:.1e}", c.value, c.tolerance)).into());
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("twf: {e:#}");
            let code = e.downcast_ref::<CliError>().map_or(2, CliError::exit_code);
            ExitCode::from(code as u8)
        }
    }
}
