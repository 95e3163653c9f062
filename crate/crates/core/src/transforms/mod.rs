//! Zero-counting functions and their transforms.
//!
//! A counting function `φ(k)` (number of zeros `±ik` with ordinate up to `k`)
//! determines the even product `F(z) = F(0) Π (1 + z²/k_l²)` through
//! `ln F(z) − ln F(0) = 2z² ∫ φ(k) dk / (k(k² + z²))`. Step functions are
//! transformed exactly, continuous densities by quadrature.

mod contour;
mod cosh;
mod density;
mod numeric;
mod step;
mod strip;
mod table;

pub use contour::{
    count_zeros_contour, count_zeros_contour_log, MAX_CONTOUR_SAMPLES, MIN_CONTOUR_SAMPLES,
    PROXIMITY_RATIO,
};
pub use cosh::{
    cosh_demo, multiplicity_demo, sine_integral_identity, CoshReconstruction, MultiplicityRatio,
    SineIntegral,
};
pub use density::{Density, DensityForm, DensityKind, TailBehaviour};
pub use numeric::{transform_numeric, TransformEvaluation, TRANSFORM_MAX_EVALS};
pub use step::{axial_product, transform_step, Jump, StepFunction};
pub use strip::{
    correction_term_bound, strip_decomposition_check, strip_quad_factor, CorrectionBound, StripQuad,
};
pub use table::{
    table_remainder_bound, table_row_closed_form, verify_table_row, TableCheck, TableRow,
};
