//! Validated run configuration.

use std::collections::BTreeMap;
use std::path::PathBuf;

use num_complex::Complex64;
use xiroots::tolerances;

/// Environment variable naming a zero file that replaces the zero scan.
pub const ZERO_FILE_ENV: &str = "XIROOTS_ZERO_FILE";

#[derive(Debug, Clone, PartialEq)]
pub enum Subcommand {
    XiEval {
        z: Complex64,
    },
    VerifyTable {
        rows: Vec<u8>,
        a: f64,
        z: Option<f64>,
    },
    CoshDemo {
        z: f64,
    },
    FindZeros {
        step: f64,
    },
    Count,
    Predict {
        n: usize,
    },
    Residual,
    Omega,
    Report,
}

/// Thresholds applied by the subcommand checks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    pub cosh: f64,
    pub count: f64,
    pub residual: f64,
    pub predictor_mean: f64,
    pub predictor_max: f64,
    pub omega_mean: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            cosh: tolerances::COSH_RECONSTRUCTION_TOL,
            count: tolerances::COUNT_FORMULA_MAX_DIFF,
            residual: tolerances::RESIDUAL_TOL,
            predictor_mean: tolerances::PREDICTOR_MEAN_TOL,
            predictor_max: tolerances::PREDICTOR_MAX_TOL,
            omega_mean: tolerances::OMEGA_MEAN_TOL,
        }
    }
}

impl Tolerances {
    pub const NAMES: [&'static str; 6] = [
        "cosh",
        "count",
        "residual",
        "predictor-mean",
        "predictor-max",
        "omega-mean",
    ];

    fn slot(&mut self, name: &str) -> Option<&mut f64> {
        Some(match name {
            "cosh" => &mut self.cosh,
            "count" => &mut self.count,
            "residual" => &mut self.residual,
            "predictor-mean" => &mut self.predictor_mean,
            "predictor-max" => &mut self.predictor_max,
            "omega-mean" => &mut self.omega_mean,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub subcommand: Subcommand,
    pub t_max: f64,
    pub z_samples: Vec<f64>,
    pub tolerance_overrides: BTreeMap<String, f64>,
    pub zero_file: Option<PathBuf>,
    pub output_path: Option<PathBuf>,
    pub fourier_terms: usize,
    pub grid_step: f64,
    pub jobs: usize,
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), String> {
        if !(self.t_max > 0.0 && self.t_max <= 1000.0) {
            return Err(format!("--t-max must lie in (0, 1000], got {}", self.t_max));
        }
        if self.fourier_terms == 0 {
            return Err("--terms must be at least 1".into());
        }
        if !(self.grid_step > 0.0) {
            return Err("--step must be positive".into());
        }
        if self.jobs == 0 {
            return Err("--jobs must be at least 1".into());
        }
        for (name, value) in &self.tolerance_overrides {
            if !Tolerances::NAMES.contains(&name.as_str()) {
                return Err(format!(
                    "unknown tolerance {name:?}; known: {}",
                    Tolerances::NAMES.join(", ")
                ));
            }
            if !(value.is_finite() && *value > 0.0) {
                return Err(format!("tolerance {name} must be positive"));
            }
        }
        Ok(())
    }

    pub fn tolerances(&self) -> Tolerances {
        let mut t = Tolerances::default();
        for (name, value) in &self.tolerance_overrides {
            if let Some(slot) = t.slot(name) {
                *slot = *value;
            }
        }
        t
    }

    /// `--zero-file`, else the environment variable, else none.
    pub fn zero_file(&self) -> Option<PathBuf> {
        self.zero_file.clone().or_else(|| {
            std::env::var_os(ZERO_FILE_ENV)
                .filter(|v| !v.is_empty())
                .map(PathBuf::from)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn base() -> RunConfig {
        RunConfig {
            subcommand: Subcommand::Count,
            t_max: 50.0,
            z_samples: Vec::new(),
            tolerance_overrides: BTreeMap::new(),
            zero_file: None,
            output_path: None,
            fourier_terms: 40,
            grid_step: 0.1,
            jobs: 1,
        }
    }

    #[test]
    fn overrides_replace_defaults() {
        let mut c = base();
        c.tolerance_overrides.insert("omega-mean".into(), 0.5);
        assert!(c.validate().is_ok());
        let t = c.tolerances();
        assert_eq!(t.omega_mean, 0.5);
        assert_eq!(t.count, Tolerances::default().count);
    }

    #[test]
    fn rejects_bad_values() {
        let mut c = base();
        c.t_max = 1500.0;
        assert!(c.validate().is_err());
        let mut c = base();
        c.tolerance_overrides.insert("residual".into(), -1.0);
        assert!(c.validate().is_err());
        let mut c = base();
        c.jobs = 0;
        assert!(c.validate().is_err());
    }

    #[test]
    fn explicit_zero_file_wins() {
        let mut c = base();
        c.zero_file = Some(PathBuf::from("given.txt"));
        assert_eq!(c.zero_file(), Some(PathBuf::from("given.txt")));
    }
}
