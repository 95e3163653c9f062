use num_complex::Complex;

use crate::error::{domain, invalid, Error, Result};
use crate::quadrature::{integrate_real, Integrator};
use crate::scalar::Scalar;

/// `ln cosh z` rebuilt from its zero distribution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoshReconstruction<T> {
    pub reconstructed: Complex<T>,
    pub exact: Complex<T>,
    /// `e^{−2x(N+1)}/(N+1) + 1e−10`, `x = re z`.
    pub bound: T,
}

impl<T: Scalar> CoshReconstruction<T> {
    pub fn difference(&self) -> T {
        (self.reconstructed - self.exact).norm()
    }

    pub fn within_bound(&self) -> bool {
        self.difference() <= self.bound
    }
}

/// Splits the zeros of `cosh` into the smooth density `k/π` and the sawtooth
/// `φ₂`, and sums the Fourier series of the sawtooth part:
/// `z − ln 2 + Σ_{n=1}^{N} (−1)^{n+1} e^{−2nz}/n`.
///
/// `exact` is the principal `ln cosh z`, shifted by the multiple of `2πi`
/// that puts it on the branch continuous from the positive real axis.
pub fn cosh_demo<T: Scalar>(z: Complex<T>, n_fourier: usize) -> Result<CoshReconstruction<T>> {
    if !(z.re > T::zero()) || !z.im.is_finite() {
        return Err(domain("cosh_demo", "requires re(z) > 0"));
    }
    if n_fourier == 0 {
        return Err(invalid(
            "cosh_demo",
            "at least one Fourier term is required",
        ));
    }
    let u = (-z * T::lit(2.0)).exp();
    let mut power = Complex::new(T::one(), T::zero());
    let mut series = Complex::new(T::zero(), T::zero());
    for n in 1..=n_fourier {
        power *= u;
        let term = power / T::from_count(n);
        series = if n % 2 == 1 {
            series + term
        } else {
            series - term
        };
    }
    let reconstructed = z - T::LN_2() + series;

    let cosh = (z.exp() + (-z).exp()) / T::lit(2.0);
    let mut exact = if cosh.re.is_finite() && cosh.im.is_finite() {
        cosh.ln()
    } else {
        z - T::LN_2() + (Complex::new(T::one(), T::zero()) + u).ln()
    };
    let turns = ((reconstructed.im - exact.im) / T::TAU()).round();
    exact.im += turns * T::TAU();

    let n1 = T::from_count(n_fourier + 1);
    let bound = (-T::lit(2.0) * z.re * n1).exp() / n1 + T::lit(1e-10);
    Ok(CoshReconstruction {
        reconstructed,
        exact,
        bound,
    })
}

/// `∫_0^∞ sin y dy / (y(y² + a²))` next to its closed form `π(1 − e^{−a})/(2a²)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SineIntegral<T> {
    pub numeric: T,
    pub closed: T,
}

const SINE_MAX_HALF_PERIODS: usize = 20_000;

/// Integrates between consecutive zeros of `sin y` and sums the resulting
/// alternating series, accelerated by repeated averaging of partial sums.
pub fn sine_integral_identity<T: Scalar>(a: T) -> Result<SineIntegral<T>> {
    if !(a.is_finite() && a > T::zero()) {
        return Err(domain("sine_integral_identity", "requires a > 0"));
    }
    let a2 = a * a;
    let integrand = |y: T| {
        if y == T::zero() {
            a2.recip()
        } else {
            y.sin() / (y * (y * y + a2))
        }
    };
    let quad = Integrator::new(T::lit(1e-15), T::lit(1e-13));
    let pi = T::PI();
    let closed = pi * (T::one() - (-a).exp()) / (T::lit(2.0) * a2);

    const WINDOW: usize = 16;
    let mut partial = Vec::new();
    let mut sum = T::zero();
    let mut previous: Option<T> = None;
    for j in 0..SINE_MAX_HALF_PERIODS {
        let lo = T::from_count(j) * pi;
        let (v, _) = integrate_real(&quad, integrand, lo, lo + pi)?;
        sum += v;
        partial.push(sum);
        // Let the terms settle into monotone decay before accelerating.
        let settled = T::from_count(j) * pi > T::lit(4.0) * a;
        if settled && partial.len() >= WINDOW {
            let mut row: Vec<T> = partial[partial.len() - WINDOW..].to_vec();
            while row.len() > 1 {
                row = row
                    .windows(2)
                    .map(|w| (w[0] + w[1]) / T::lit(2.0))
                    .collect();
            }
            let estimate = row[0];
            if let Some(p) = previous {
                if (estimate - p).abs() <= T::lit(1e-14) * (T::one() + estimate.abs()) {
                    return Ok(SineIntegral {
                        numeric: estimate,
                        closed,
                    });
                }
            }
            previous = Some(estimate);
        }
    }
    Err(Error::NonConvergence {
        op: "sine_integral_identity",
        reason: format!(
            "alternating series not settled after {SINE_MAX_HALF_PERIODS} half-periods"
        ),
    })
}

/// `cosh(z/N)^N / cosh z` for zeros of multiplicity `N`, and its limit `2^{1−N}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MultiplicityRatio<T> {
    pub ratio: T,
    pub limit: T,
    /// `limit · (4 N e^{−2z/N} + 4ε(1 + z))`; the second term covers rounding
    /// in the log-space evaluation. Meaningful for `z/N ≥ 2`.
    pub bound: T,
}

fn ln_cosh<T: Scalar>(x: T) -> T {
    let x = x.abs();
    x + (-T::lit(2.0) * x).exp().ln_1p() - T::LN_2()
}

/// Evaluated in log space so large `z` cannot overflow.
pub fn multiplicity_demo<T: Scalar>(n: u32, z: T) -> Result<MultiplicityRatio<T>> {
    if n == 0 {
        return Err(invalid(
            "multiplicity_demo",
            "multiplicity must be at least 1",
        ));
    }
    if !(z.is_finite() && z > T::zero()) {
        return Err(domain("multiplicity_demo", "requires z > 0"));
    }
    let nn = T::from_u32(n).expect("multiplicity fits scalar");
    let ratio = (nn * ln_cosh(z / nn) - ln_cosh(z)).exp();
    let limit = T::lit(2.0).powi(1 - n as i32);
    let four = T::lit(4.0);
    let bound =
        limit * (nn * (-T::lit(2.0) * z / nn).exp() * four + four * T::epsilon() * (T::one() + z));
    Ok(MultiplicityRatio {
        ratio,
        limit,
        bound,
    })
}
