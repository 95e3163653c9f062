//! Subcommand execution.

use std::fmt::Write as _;
use std::io::Write as _;

use num_complex::Complex64;
use xiroots::specfun::{log_xi_any, log_xi_asymptotic, log_xi_z, xi_z};
use xiroots::tolerances::{PREDICTOR_CUMULATIVE_MAX, ZERO_SCAN_STEP};
use xiroots::transforms::{cosh_demo, verify_table_row, TableRow};
use xiroots::zerodist::{
    compare_predictions, count_zeros_xi, find_zeros, omega_stats, phi_smooth, predict_zeros,
    residual_report,
};
use xiroots::{Error, SmoothCountModel64, ZeroList64};

use crate::config::{RunConfig, Subcommand};
use crate::format::{complex, sig};

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error(transparent)]
    Compute(#[from] Error),
    #[error("cannot write {path}: {source}")]
    Output {
        path: String,
        source: std::io::Error,
    },
}

/// A check whose value exceeded its limit.
#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub check: String,
    pub value: f64,
    pub limit: f64,
}

#[derive(Debug, Default)]
pub struct Outcome {
    pub failures: Vec<Failure>,
}

impl Outcome {
    fn require(&mut self, check: &str, value: f64, limit: f64) {
        if !(value <= limit) {
            self.failures.push(Failure {
                check: check.to_string(),
                value,
                limit,
            });
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs the configured subcommand, writing its output to `--out` or stdout.
pub fn run(config: &RunConfig) -> Result<Outcome, RunError> {
    let mut outcome = Outcome::default();
    let mut text = String::new();
    let mut out_consumed = false;
    match &config.subcommand {
        Subcommand::XiEval { z } => xi_eval(*z, &mut text, &mut outcome)?,
        Subcommand::VerifyTable { rows, a, z } => {
            verify_table(rows, *a, *z, &mut text, &mut outcome)?
        }
        Subcommand::CoshDemo { z } => {
            let r = cosh_demo(Complex64::new(*z, 0.0), config.fourier_terms)?;
            let tol = config.tolerances().cosh.max(r.bound);
            writeln!(
                text,
                "reconstructed={} exact={} diff={} bound={}",
                complex(r.reconstructed),
                complex(r.exact),
                sig(r.difference()),
                sig(r.bound)
            )
            .unwrap();
            outcome.require("cosh", r.difference(), tol);
        }
        Subcommand::FindZeros { step } => {
            let zeros: ZeroList64 = find_zeros(config.t_max, *step, config.jobs)?;
            match &config.output_path {
                Some(path) => {
                    zeros.write_file(path)?;
                    out_consumed = true;
                    writeln!(
                        text,
                        "zeros={} t_max={} path={}",
                        zeros.len(),
                        sig(config.t_max),
                        path.display()
                    )
                    .unwrap();
                }
                None => text = zeros.to_text(),
            }
        }
        Subcommand::Count => {
            let zeros = load_zeros(config, config.t_max)?;
            let actual = zeros.count_up_to(config.t_max);
            let formula: f64 = phi_smooth(config.t_max);
            let diff = actual as f64 - formula;
            writeln!(text, "actual={actual} formula={formula:.4} diff={diff:.3}").unwrap();
            if zeros.source() == xiroots::zerodist::ZeroSource::Computed {
                let contour = count_zeros_xi(config.t_max)?;
                writeln!(text, "contour={contour}").unwrap();
            }
            outcome.require("count", diff.abs(), config.tolerances().count);
        }
        Subcommand::Predict { n } => predict(config, *n, &mut text, &mut outcome)?,
        Subcommand::Residual => residual(config, &mut text, &mut outcome)?,
        Subcommand::Omega => {
            let zeros = load_zeros(config, config.t_max)?;
            let stats = omega_stats(&zeros, &SmoothCountModel64::new(), config.grid_step)?;
            text.push_str("k,omega,running_mean\n");
            for (&(k, w), &(_, m)) in stats.grid.iter().zip(&stats.running_mean) {
                writeln!(text, "{},{},{}", sig(k), sig(w), sig(m)).unwrap();
            }
            if config.t_max >= 100.0 {
                let mean = stats.final_mean().unwrap_or(f64::NAN);
                outcome.require("omega-mean", mean.abs(), config.tolerances().omega_mean);
            }
        }
        Subcommand::Report => report(config, &mut text)?,
    }
    if out_consumed {
        emit(None, &text)?;
    } else {
        emit(config.output_path.as_deref(), &text)?;
    }
    Ok(outcome)
}

fn emit(path: Option<&std::path::Path>, text: &str) -> Result<(), RunError> {
    match path {
        Some(path) => std::fs::write(path, text).map_err(|source| RunError::Output {
            path: path.display().to_string(),
            source,
        }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|source| RunError::Output {
                    path: "stdout".into(),
                    source,
                })
        }
    }
}

/// Zeros up to `t`: from the zero file when one is configured, else scanned.
fn load_zeros(config: &RunConfig, t: f64) -> Result<ZeroList64, RunError> {
    match config.zero_file() {
        Some(path) => {
            let zeros = ZeroList64::read_file(&path)?;
            if zeros.t_max() < t {
                return Err(Error::InsufficientZeros {
                    t_max: zeros.t_max(),
                    required: t,
                }
                .into());
            }
            Ok(zeros.truncated(t))
        }
        None => Ok(find_zeros(t, ZERO_SCAN_STEP, config.jobs)?),
    }
}

fn xi_eval(z: Complex64, text: &mut String, outcome: &mut Outcome) -> Result<(), RunError> {
    let ln_xi = if z.re > 0.5 {
        log_xi_z(z)?
    } else {
        log_xi_any(z)?
    };
    let xi = match xi_z(z) {
        Ok(v) => v,
        Err(Error::NonFinite { .. }) => ln_xi.exp(),
        Err(e) => return Err(e.into()),
    };
    write!(text, "xi={} ln_xi={}", fixed(xi, 6), fixed(ln_xi, 5)).unwrap();
    if z.re > 10.0 {
        let terms = log_xi_asymptotic(z)?;
        let dev = terms.deviation(ln_xi);
        write!(
            text,
            " asym_dev={} asym_bound={}",
            sig(dev),
            sig(terms.remainder_bound)
        )
        .unwrap();
        outcome.require("xi-asymptotic", dev, terms.remainder_bound);
    }
    text.push('\n');
    Ok(())
}

fn fixed(v: Complex64, decimals: usize) -> String {
    if v.im == 0.0 {
        format!("{:.decimals$}", v.re)
    } else {
        format!("{:.decimals$}{:+.decimals$}i", v.re, v.im)
    }
}

fn verify_table(
    rows: &[u8],
    a: f64,
    z: Option<f64>,
    text: &mut String,
    outcome: &mut Outcome,
) -> Result<(), RunError> {
    let rows: Vec<TableRow> = if rows.is_empty() {
        TableRow::ALL.to_vec()
    } else {
        rows.iter()
            .map(|&r| TableRow::from_index(r))
            .collect::<Result<_, _>>()?
    };
    for row in rows {
        let z = z.unwrap_or(if row.is_asymptotic() { 100.0 } else { 10.0 });
        let check = verify_table_row(row, a, Complex64::new(z, 0.0))?;
        writeln!(
            text,
            "row={} a={} z={} closed={} numeric={} diff={} tol={} agree={}",
            row.index(),
            sig(a),
            sig(z),
            complex(check.closed),
            complex(check.numeric.value),
            sig(check.difference()),
            sig(check.tolerance),
            check.agree
        )
        .unwrap();
        outcome.require(
            &format!("table-row-{}", row.index()),
            check.difference(),
            check.tolerance,
        );
    }
    Ok(())
}

fn predict(
    config: &RunConfig,
    n: usize,
    text: &mut String,
    outcome: &mut Outcome,
) -> Result<(), RunError> {
    let model = SmoothCountModel64::new();
    let predicted = predict_zeros(n, &model)?;
    let last = predicted[n - 1];
    let reach = (last + 10.0).min(1000.0);
    let zeros = load_zeros(config, reach)?;
    let cmp = compare_predictions(&predicted, &zeros)?;
    text.push_str("n,predicted_k,actual_k,deviation\n");
    for &(i, p, k) in &cmp.rows {
        writeln!(text, "{i},{},{},{}", sig(p), sig(k), sig(p - k)).unwrap();
    }
    let tol = config.tolerances();
    outcome.require("predictor-mean", cmp.mean_abs, tol.predictor_mean);
    outcome.require("predictor-max", cmp.max_abs, tol.predictor_max);
    outcome.require(
        "predictor-cumulative",
        cmp.max_cumulative_gap as f64,
        PREDICTOR_CUMULATIVE_MAX as f64,
    );
    Ok(())
}

fn residual(config: &RunConfig, text: &mut String, outcome: &mut Outcome) -> Result<(), RunError> {
    let model = SmoothCountModel64::new();
    let zeros = load_zeros(config, config.t_max)?;
    let report = residual_report(&config.z_samples, &zeros, &model)?;
    let tol = config.tolerances().residual;
    text.push_str("z,residual,tail_estimate\n");
    for s in &report.samples {
        writeln!(
            text,
            "{},{},{}",
            sig(s.z),
            sig(s.residual),
            sig(s.tail_estimate)
        )
        .unwrap();
        outcome.require(
            &format!("residual-z{}", sig(s.z)),
            (s.residual - report.constant_derived).abs(),
            tol.max(2.0 / s.z),
        );
    }
    writeln!(
        text,
        "# derived_constant={} published_magnitude={} spread={}",
        sig(report.constant_derived),
        sig(report.constant_published),
        sig(report.spread())
    )
    .unwrap();
    if report.samples.len() > 1 {
        outcome.require("residual-spread", report.spread(), tol);
    }
    Ok(())
}

fn report(config: &RunConfig, text: &mut String) -> Result<(), RunError> {
    let model = SmoothCountModel64::new();
    let zeros = load_zeros(config, config.t_max)?;
    let levels = (phi_smooth(config.t_max).max(0.0) + 1.5).ceil() as usize;
    let predicted = predict_zeros(levels.max(1), &model)?;
    text.push_str("k,phi_smooth,phi_actual,phi_predicted\n");
    let steps = (config.t_max / config.grid_step).floor() as usize;
    for i in 0..=steps {
        let k = if i == steps {
            config.t_max
        } else {
            i as f64 * config.grid_step
        };
        let stair = predicted.partition_point(|&p| p <= k);
        writeln!(
            text,
            "{},{},{},{}",
            sig(k),
            sig(model.phi(k)),
            zeros.count_up_to(k),
            stair
        )
        .unwrap();
        if i == steps {
            break;
        }
    }
    Ok(())
}
