use num_complex::Complex;

use crate::error::{domain, invalid, Error, Result};
use crate::scalar::Scalar;

/// A quadruple of off-axis zeros at distance `q` from the origin, described
/// through the factor `1 + 2z² cos β / q² + z⁴/q⁴` it contributes.
///
/// `θ = 8q²(1 − cos β)` measures how far the quad sits from the imaginary
/// axis; the constructors enforce `0 ≤ θ < 1`, where `θ = 0` is a double
/// zero pair on the axis. The roots of the factor are
/// `±i q e^{∓iβ/2}`; see [`StripQuad::zero`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StripQuad<T> {
    q: T,
    beta: T,
    theta: T,
}

impl<T: Scalar> StripQuad<T> {
    pub fn new(q: T, beta: T) -> Result<Self> {
        Self::check_q(q)?;
        if !(beta.is_finite() && beta >= T::zero()) {
            return Err(invalid("StripQuad", "beta must be non-negative"));
        }
        let theta = T::lit(8.0) * q * q * (T::one() - beta.cos());
        if !(theta < T::one()) {
            return Err(invalid(
                "StripQuad",
                format!(
                    "theta = {} must lie in [0, 1); beta must stay below {}",
                    theta.as_f64(),
                    Self::max_beta_for_theta(q).as_f64()
                ),
            ));
        }
        Ok(Self { q, beta, theta })
    }

    /// Quad with a prescribed `θ ∈ [0, 1)`.
    pub fn from_theta(q: T, theta: T) -> Result<Self> {
        Self::check_q(q)?;
        if !(theta >= T::zero() && theta < T::one()) {
            return Err(invalid("StripQuad", "theta must lie in [0, 1)"));
        }
        let beta = (T::one() - theta / (T::lit(8.0) * q * q)).acos();
        Ok(Self { q, beta, theta })
    }

    fn check_q(q: T) -> Result<()> {
        if q.is_finite() && q > T::lit(0.5) {
            Ok(())
        } else {
            Err(invalid("StripQuad", "q must exceed 1/2"))
        }
    }

    /// Largest `β` with `θ < 1`: `arccos(1 − 1/(8q²))`.
    pub fn max_beta_for_theta(q: T) -> T {
        (T::one() - (T::lit(8.0) * q * q).recip()).acos()
    }

    /// Angle at which the circle `|z| = q` meets the line `re z = 1/2`:
    /// `cos β_M = √(1 − 1/(4q²))`.
    pub fn strip_edge_beta(q: T) -> T {
        (T::one() - (T::lit(4.0) * q * q).recip()).sqrt().acos()
    }

    pub fn q(&self) -> T {
        self.q
    }

    pub fn beta(&self) -> T {
        self.beta
    }

    pub fn theta(&self) -> T {
        self.theta
    }

    /// The root of [`strip_quad_factor`] in the first quadrant, `i q e^{−iβ/2}`.
    ///
    /// Its angle to the imaginary axis is `β/2`: a pair `i q e^{∓iα}` yields
    /// `cos 2α` in the factor.
    pub fn zero(&self) -> Complex<T> {
        let half = self.beta / T::lit(2.0);
        Complex::new(T::zero(), self.q) * Complex::new(half.cos(), -half.sin())
    }
}

/// `1 + 2z² cos β / q² + z⁴/q⁴`.
pub fn strip_quad_factor<T: Scalar>(quad: &StripQuad<T>, z: Complex<T>) -> Complex<T> {
    let w = z * z / (quad.q * quad.q);
    Complex::new(T::one(), T::zero()) + w * (T::lit(2.0) * quad.beta.cos()) + w * w
}

/// `u = z²θ / (4q⁴(1 + z²/q²)²)`, the argument of the correction logarithm.
fn correction_argument<T: Scalar>(
    quad: &StripQuad<T>,
    z: Complex<T>,
    op: &'static str,
) -> Result<Complex<T>> {
    let q2 = quad.q * quad.q;
    let axial = Complex::new(T::one(), T::zero()) + z * z / q2;
    if axial.norm() <= T::lit(8.0) * T::epsilon() {
        return Err(Error::Singularity {
            op,
            position: quad.q.as_f64(),
        });
    }
    Ok(z * z * quad.theta / (axial * axial * (T::lit(4.0) * q2 * q2)))
}

fn require_right_sector<T: Scalar>(z: Complex<T>, op: &'static str) -> Result<()> {
    if (z * z).re > T::zero() {
        Ok(())
    } else {
        Err(domain(op, "requires re(z²) > 0"))
    }
}

/// Residual of `ln(quad factor) = 2 ln(1 + z²/q²) + ln(1 − u)`, principal
/// branches. Zero up to rounding wherever no factor crosses the branch cut,
/// in particular for `re z > q`.
pub fn strip_decomposition_check<T: Scalar>(quad: &StripQuad<T>, z: Complex<T>) -> Result<T> {
    const OP: &str = "strip_decomposition_check";
    require_right_sector(z, OP)?;
    let u = correction_argument(quad, z, OP)?;
    let one = Complex::new(T::one(), T::zero());
    let axial = one + z * z / (quad.q * quad.q);
    let lhs = strip_quad_factor(quad, z).ln();
    let rhs = axial.ln() * T::lit(2.0) + (one - u).ln();
    Ok((lhs - rhs).norm())
}

/// Sum of the correction logarithms over a set of quads against the
/// sufficient bound `Σ 2θ_m/(8q_m²)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrectionBound<T> {
    pub sum_abs: T,
    pub bound: T,
    pub holds: bool,
    /// First quad whose `|u| > 1/2`, where the bound is not applicable.
    pub violation: Option<usize>,
}

pub fn correction_term_bound<T: Scalar>(
    quads: &[StripQuad<T>],
    z: Complex<T>,
) -> Result<CorrectionBound<T>> {
    const OP: &str = "correction_term_bound";
    require_right_sector(z, OP)?;
    let one = Complex::new(T::one(), T::zero());
    let mut sum_abs = T::zero();
    let mut bound = T::zero();
    let mut violation = None;
    for (m, quad) in quads.iter().enumerate() {
        let u = correction_argument(quad, z, OP)?;
        if violation.is_none() && u.norm() > T::lit(0.5) {
            violation = Some(m);
        }
        sum_abs += (one - u).ln().norm();
        bound += T::lit(2.0) * quad.theta / (T::lit(8.0) * quad.q * quad.q);
    }
    Ok(CorrectionBound {
        sum_abs,
        bound,
        holds: violation.is_none() && sum_abs <= bound,
        violation,
    })
}
