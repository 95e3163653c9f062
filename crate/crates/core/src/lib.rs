//! Numerical toolkit for Weierstrass-type products of even entire functions.
//!
//! * [`specfun`] evaluates ζ, ln Γ (Stirling with its remainder), and the
//!   completed function ξ together with its large-argument asymptotics.
//! * [`transforms`] maps a zero-counting function `φ(k)` to
//!   `ln F(z) = 2z² ∫ φ(k) dk / (k(k² + z²))`, exactly for step functions and by
//!   adaptive quadrature for densities, and counts zeros by the argument
//!   principle.
//! * [`zerodist`] locates zeros of ξ on the critical line and compares them
//!   with the smooth counting curve `(k/2π) ln(k/2π) − k/2π + 7/8`.
//!
//! Every routine is generic over [`Scalar`] (`f32` or `f64`); the aliases below
//! fix the `f64` instantiation used throughout the tests and the CLI.

// `!(x > 0)` deliberately rejects NaN along with non-positive values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod quadrature;
pub mod scalar;
pub mod specfun;
pub mod tolerances;
pub mod transforms;
pub mod zerodist;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Double-precision complex scalar; `s` and `z = s − 1/2` live here.
pub type Complex64 = num_complex::Complex<f64>;
pub type StepFunction64 = transforms::StepFunction<f64>;
pub type DensityForm64 = transforms::DensityForm<f64>;
pub type StripQuad64 = transforms::StripQuad<f64>;
pub type TransformEvaluation64 = transforms::TransformEvaluation<f64>;
pub type ZeroList64 = zerodist::ZeroList<f64>;
pub type SmoothCountModel64 = zerodist::SmoothCountModel<f64>;
pub type ResidualReport64 = zerodist::ResidualReport<f64>;
pub type OmegaStats64 = zerodist::OmegaStats<f64>;
pub type XiAsymptoticTerms64 = specfun::XiAsymptoticTerms<f64>;
