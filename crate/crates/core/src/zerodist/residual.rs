use num_complex::Complex;

use super::model::{SmoothCountModel, SmoothTail};
use super::zeros::ZeroList;
use crate::error::{domain, Error, Result};
use crate::scalar::Scalar;
use crate::specfun::xi_z;
use crate::tolerances::RESIDUAL_CONSTANT_PUBLISHED;
use crate::transforms::{transform_numeric, transform_step};

/// Smallest `z` at which the residual is evaluated.
pub const RESIDUAL_MIN_Z: f64 = 50.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualSample<T> {
    pub z: T,
    pub residual: T,
    pub tail_estimate: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResidualReport<T> {
    pub samples: Vec<ResidualSample<T>>,
    /// Magnitude as printed, `0.0464`.
    pub constant_published: T,
    /// `(1/4) ln(π/2) − ln ξ(0) − t5_constant(a)`.
    pub constant_derived: T,
}

impl<T: Scalar> ResidualReport<T> {
    /// Largest minus smallest residual over the samples.
    pub fn spread(&self) -> T {
        let (lo, hi) = self
            .samples
            .iter()
            .fold((T::infinity(), T::neg_infinity()), |(lo, hi), s| {
                (lo.min(s.residual), hi.max(s.residual))
            });
        if self.samples.is_empty() {
            T::zero()
        } else {
            hi - lo
        }
    }
}

/// The constant left over when `ln ξ(z) − ln ξ(0)` is compared with `T₅(z)`:
/// `(1/4) ln(π/2) − ln ξ(0) − t5_constant(a)`.
pub fn derived_residual_constant<T: Scalar>(model: &SmoothCountModel<T>) -> Result<T> {
    let xi0 = xi_z(Complex::new(T::zero(), T::zero()))?.re;
    Ok(T::lit(0.25) * T::FRAC_PI_2().ln() - xi0.ln() - model.t5_constant())
}

/// `ln Π(1 + z²/k_l²) − T₅(z)` for real `z`.
///
/// The product is the transform of the actual counting function `φ₁`. Below
/// `T = t_max` it is exact: `2z² ∫_0^T φ₁ h dk = Σ_{k_l < T} ln(1 + z²/k_l²) −
/// φ₁(T) ln(1 + z²/T²)` with `h = 1/(k(k² + z²))`. Beyond `T` the smooth curve
/// stands in for `φ₁`; the dropped `2z² ∫_T^∞ Ω h dk` oscillates about zero
/// and is estimated as `1/T`, reported in `tail_estimate` together with the
/// quadrature error.
pub fn residual<T: Scalar>(
    z: T,
    zeros: &ZeroList<T>,
    model: &SmoothCountModel<T>,
) -> Result<ResidualSample<T>> {
    if !(z >= T::lit(RESIDUAL_MIN_Z)) || !z.is_finite() {
        return Err(domain("residual", "requires real z >= 50"));
    }
    let t = zeros.t_max();
    let required = T::lit(2.0) * z;
    if t < required {
        return Err(Error::InsufficientZeros {
            t_max: t.as_f64(),
            required: required.as_f64(),
        });
    }
    let zc = Complex::new(z, T::zero());
    let listed = transform_step(&zeros.to_step_function(), zc)?.re;
    let tail = transform_numeric(&SmoothTail { start: t }, zc)?;
    let boundary = T::from_count(zeros.len()) * (T::one() + (z / t) * (z / t)).ln();
    let value = listed + tail.value.re - boundary - model.t5(zc).re;
    Ok(ResidualSample {
        z,
        residual: value,
        tail_estimate: t.recip() + tail.abs_error_estimate,
    })
}

pub fn residual_report<T: Scalar>(
    zs: &[T],
    zeros: &ZeroList<T>,
    model: &SmoothCountModel<T>,
) -> Result<ResidualReport<T>> {
    let samples = zs
        .iter()
        .map(|&z| residual(z, zeros, model))
        .collect::<Result<Vec<_>>>()?;
    Ok(ResidualReport {
        samples,
        constant_published: T::lit(RESIDUAL_CONSTANT_PUBLISHED),
        constant_derived: derived_residual_constant(model)?,
    })
}
