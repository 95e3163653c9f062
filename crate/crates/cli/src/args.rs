//! Command-line surface.

use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Parser, Subcommand as ClapSubcommand};
use num_complex::Complex64;

use crate::config::{RunConfig, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "xiroots",
    version,
    about = "Zeros of the Riemann xi function and Stieltjes transforms of zero-counting functions"
)]
pub struct Cli {
    /// Worker threads for the zero scan.
    #[arg(long, global = true, default_value_t = 1)]
    pub jobs: usize,

    /// Read zeros from this file instead of scanning (overrides XIROOTS_ZERO_FILE).
    #[arg(long, global = true, value_name = "PATH")]
    pub zero_file: Option<PathBuf>,

    /// Write the CSV (or zero file) here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    pub out: Option<PathBuf>,

    /// Override a check tolerance, e.g. `--tol residual=0.03`.
    #[arg(long = "tol", global = true, value_name = "NAME=VALUE", value_parser = parse_override)]
    pub tol: Vec<(String, f64)>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, ClapSubcommand)]
pub enum Command {
    /// Evaluate xi and ln xi at z = s - 1/2.
    XiEval {
        /// RE or RE,IM
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        z: Complex64,
    },
    /// Compare the transform table closed forms with quadrature.
    VerifyTable {
        /// Comma-separated row numbers (default: all nine).
        #[arg(long, value_delimiter = ',', value_parser = clap::value_parser!(u8).range(1..=9))]
        rows: Vec<u8>,
        /// Cutoff a for the step rows.
        #[arg(long, default_value_t = 1.0)]
        a: f64,
        /// Real evaluation point (default: 100 for rows 2 and 4, 10 otherwise).
        #[arg(long)]
        z: Option<f64>,
    },
    /// Rebuild ln cosh z from its zero distribution.
    CoshDemo {
        #[arg(long)]
        z: f64,
        #[arg(long, default_value_t = 40)]
        terms: usize,
    },
    /// Scan for zeros and write a zero file.
    FindZeros {
        #[arg(long)]
        t_max: f64,
        #[arg(long, default_value_t = xiroots::tolerances::ZERO_SCAN_STEP)]
        step: f64,
    },
    /// Actual number of zeros below T against the counting formula.
    Count {
        #[arg(long)]
        t_max: f64,
    },
    /// Half-integer crossing predictions against actual zeros (CSV).
    Predict {
        #[arg(long)]
        n: usize,
    },
    /// Residual constant of the product against the smooth model (CSV).
    Residual {
        #[arg(long, value_delimiter = ',', default_values_t = [100.0, 150.0, 200.0])]
        z: Vec<f64>,
        #[arg(long, default_value_t = 500.0)]
        t_max: f64,
    },
    /// Omega(k) = actual minus smooth count and its running mean (CSV).
    Omega {
        #[arg(long)]
        t_max: f64,
        #[arg(long, default_value_t = 0.1)]
        step: f64,
    },
    /// Smooth, actual and predicted staircases on a grid (CSV).
    Report {
        #[arg(long)]
        t_max: f64,
        #[arg(long, default_value_t = 0.1)]
        step: f64,
    },
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let parse = |p: &str| {
        p.trim()
            .parse::<f64>()
            .map_err(|_| format!("not a number: {p:?}"))
    };
    let v = match s.split_once(',') {
        Some((re, im)) => Complex64::new(parse(re)?, parse(im)?),
        None => Complex64::new(parse(s)?, 0.0),
    };
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err("value must be finite".into())
    }
}

fn parse_override(s: &str) -> Result<(String, f64), String> {
    let (name, value) = s.split_once('=').ok_or("expected NAME=VALUE")?;
    let value: f64 = value
        .trim()
        .parse()
        .map_err(|_| format!("not a number: {value:?}"))?;
    Ok((name.trim().to_string(), value))
}

impl Cli {
    pub fn into_config(self) -> RunConfig {
        let mut t_max = 100.0;
        let mut z_samples = Vec::new();
        let mut fourier_terms = 40;
        let mut grid_step = 0.1;
        let subcommand = match self.command {
            Command::XiEval { z } => Subcommand::XiEval { z },
            Command::VerifyTable { rows, a, z } => Subcommand::VerifyTable { rows, a, z },
            Command::CoshDemo { z, terms } => {
                fourier_terms = terms;
                Subcommand::CoshDemo { z }
            }
            Command::FindZeros { t_max: t, step } => {
                t_max = t;
                Subcommand::FindZeros { step }
            }
            Command::Count { t_max: t } => {
                t_max = t;
                Subcommand::Count
            }
            Command::Predict { n } => Subcommand::Predict { n },
            Command::Residual { z, t_max: t } => {
                t_max = t;
                z_samples = z;
                Subcommand::Residual
            }
            Command::Omega { t_max: t, step } => {
                t_max = t;
                grid_step = step;
                Subcommand::Omega
            }
            Command::Report { t_max: t, step } => {
                t_max = t;
                grid_step = step;
                Subcommand::Report
            }
        };
        RunConfig {
            subcommand,
            t_max,
            z_samples,
            tolerance_overrides: self.tol.into_iter().collect::<BTreeMap<_, _>>(),
            zero_file: self.zero_file,
            output_path: self.out,
            fourier_terms,
            grid_step,
            jobs: self.jobs,
        }
    }
}
