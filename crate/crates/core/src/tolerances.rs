//! Pinned reference values and acceptance tolerances.
//!
//! Every threshold used by the verification helpers, the CLI checks and the
//! acceptance tests is defined here once.

/// Published value of `ln ξ` at the center `z = 0`.
pub const LN_XI_CENTER: f64 = -0.69892;
pub const LN_XI_CENTER_TOL: f64 = 5e-4;

/// Published root of the smooth counting curve.
pub const CURVE_ROOT: f64 = 9.6769;
pub const CURVE_ROOT_TOL: f64 = 1e-3;

/// Published constant in `T₅(z) = T₄(z) + 0.8582…`.
pub const T5_CONSTANT: f64 = 0.8582;
pub const T5_CONSTANT_TOL: f64 = 1e-3;

/// Closed form vs quadrature for exact transform rows.
pub const TABLE_ABS_TOL: f64 = 1e-6;
/// Multiplier on the quadrature error estimate in the table check.
pub const TABLE_ERROR_FACTOR: f64 = 3.0;
/// Tolerance for the rows that carry an `O(z⁻²)` remainder.
pub const TABLE_ASYMPTOTIC_TOL: f64 = 1e-3;
/// Smallest `|z|` at which the `O(z⁻²)` rows are compared.
pub const TABLE_ASYMPTOTIC_MIN_Z: f64 = 50.0;

pub const COSH_RECONSTRUCTION_TOL: f64 = 1e-6;
pub const SINE_INTEGRAL_TOL: f64 = 1e-8;

pub const FIRST_ZERO: f64 = 14.1347;
pub const FIRST_ZERO_TOL: f64 = 1e-3;

/// `|actual count − N(T)|` must stay strictly below this.
pub const COUNT_FORMULA_MAX_DIFF: f64 = 2.0;

/// Magnitude of the residual constant as printed.
pub const RESIDUAL_CONSTANT_PUBLISHED: f64 = 0.0464;
/// Signed value obtained from `(1/4) ln(π/2) − ln ξ(0) − 0.8582`.
pub const RESIDUAL_CONSTANT_SIGNED: f64 = -0.0464;
pub const RESIDUAL_TOL: f64 = 0.02;

pub const PREDICTOR_MEAN_TOL: f64 = 1.0;
pub const PREDICTOR_MAX_TOL: f64 = 2.0;
pub const PREDICTOR_CUMULATIVE_MAX: i64 = 2;

pub const OMEGA_MEAN_TOL: f64 = 0.25;

pub const MULTIPLICITY_REL_TOL: f64 = 0.01;
pub const STRIP_IDENTITY_TOL: f64 = 1e-10;

/// Default scan step for the zero search.
pub const ZERO_SCAN_STEP: f64 = 0.25;
/// Bisection stops once the bracket is this narrow.
pub const ZERO_BRACKET_WIDTH: f64 = 1e-9;
