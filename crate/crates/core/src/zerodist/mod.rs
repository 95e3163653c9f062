//! Zeros of ξ on the critical line against the smooth counting curve.

mod model;
mod omega;
mod predict;
mod residual;
mod zeros;

pub use model::{
    n_of_t, phi_smooth, phi_smooth_derivative, solve_a, t5_constant, SmoothCountModel, SmoothTail,
};
pub use omega::{omega_stats, OmegaStats, OMEGA_MAX_STEP};
pub use predict::{
    compare_predictions, crossing_count, predict_zeros, CrossingCount, PredictorComparison,
};
pub use residual::{
    derived_residual_constant, residual, residual_report, ResidualReport, ResidualSample,
    RESIDUAL_MIN_Z,
};
pub use zeros::{count_zeros_xi, find_zeros, ZeroList, ZeroSource, SCAN_START};
