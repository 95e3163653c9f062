use num_complex::Complex;

use crate::error::{domain, invalid, Result};
use crate::scalar::Scalar;
use crate::transforms::{Density, TailBehaviour};

/// Smooth counting curve `(k/2π) ln(k/2π) − k/2π + 7/8`. Defined for `k > 0`.
pub fn phi_smooth<T: Scalar>(k: T) -> T {
    let u = k / T::TAU();
    u * u.ln() - u + T::lit(0.875)
}

/// The same curve read as the expected number of zeros up to height `T`.
pub fn n_of_t<T: Scalar>(t: T) -> T {
    phi_smooth(t)
}

/// `dφ/dk = ln(k/2π)/2π`.
pub fn phi_smooth_derivative<T: Scalar>(k: T) -> T {
    (k / T::TAU()).ln() / T::TAU()
}

/// Root of [`phi_smooth`] on `[2π, 20]`, by bisection to full precision.
pub fn solve_a<T: Scalar>() -> T {
    let mut lo = T::TAU();
    let mut hi = T::lit(20.0);
    loop {
        let mid = (lo + hi) / T::lit(2.0);
        if mid <= lo || mid >= hi {
            return mid;
        }
        if phi_smooth(mid) < T::zero() {
            lo = mid;
        } else {
            hi = mid;
        }
    }
}

/// `(a/π)(2 − ln a + ln 2π) − (7/4) ln a`.
pub fn t5_constant<T: Scalar>(a: T) -> T {
    a / T::PI() * (T::lit(2.0) - a.ln() + T::TAU().ln()) - T::lit(1.75) * a.ln()
}

/// The smooth counting curve switched on at its root `a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmoothCountModel<T> {
    a: T,
}

impl<T: Scalar> Default for SmoothCountModel<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Scalar> SmoothCountModel<T> {
    pub fn new() -> Self {
        Self { a: solve_a() }
    }

    pub fn a(&self) -> T {
        self.a
    }

    /// `φ(k)` for `k ≥ a`, zero below.
    pub fn phi(&self, k: T) -> T {
        if k < self.a {
            T::zero()
        } else {
            phi_smooth(k)
        }
    }

    /// `T₄(z) = (z/2) ln(z/2π) − z/2 + (7/4) ln z`.
    pub fn t4(&self, z: Complex<T>) -> Complex<T> {
        let half = T::lit(0.5);
        z * half * (z / T::TAU()).ln() - z * half + z.ln() * T::lit(1.75)
    }

    pub fn t5_constant(&self) -> T {
        t5_constant(self.a)
    }

    /// `T₅(z) = T₄(z) + t5_constant(a)`, the transform of `φ` up to `O(z⁻²)`.
    pub fn t5(&self, z: Complex<T>) -> Complex<T> {
        self.t4(z) + self.t5_constant()
    }

    /// `k` with `φ(k) = level`, `k ≥ a`, by bisection to `width`.
    pub fn inverse(&self, level: T, width: T) -> Result<T> {
        if !level.is_finite() || level < T::zero() {
            return Err(domain(
                "SmoothCountModel::inverse",
                "level must be non-negative",
            ));
        }
        if !(width > T::zero()) {
            return Err(invalid(
                "SmoothCountModel::inverse",
                "width must be positive",
            ));
        }
        let mut lo = self.a;
        let mut hi = self.a * T::lit(2.0);
        while phi_smooth(hi) < level {
            lo = hi;
            hi *= T::lit(2.0);
        }
        while hi - lo > width {
            let mid = (lo + hi) / T::lit(2.0);
            if mid <= lo || mid >= hi {
                break;
            }
            if phi_smooth(mid) < level {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        Ok((lo + hi) / T::lit(2.0))
    }
}

/// The smooth curve restricted to `k ≥ start`, as a density for the transform.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmoothTail<T> {
    pub start: T,
}

impl<T: Scalar> Density<T> for SmoothTail<T> {
    fn value(&self, k: T) -> T {
        if k < self.start {
            T::zero()
        } else {
            phi_smooth(k)
        }
    }

    fn support_start(&self) -> T {
        self.start
    }

    fn tail(&self) -> TailBehaviour<T> {
        TailBehaviour::Smooth
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{PI, TAU};

    #[test]
    fn curve_values() {
        assert!((phi_smooth(TAU) + 0.125).abs() < 1e-15);
        assert!(phi_smooth(9.6769_f64).abs() < 1e-4);
        // (50/2π) ln(50/2π) − 50/2π + 7/8, evaluated independently
        let u = 50.0 / (2.0 * PI);
        assert!((phi_smooth(50.0) - (u * u.ln() - u + 0.875)).abs() < 1e-13);
        assert!((phi_smooth(50.0_f64) - 9.422_781_790).abs() < 1e-8);
    }

    #[test]
    fn root() {
        let a: f64 = solve_a();
        assert!((a - 9.6769).abs() < 1e-3);
        assert!(phi_smooth(a).abs() < 1e-10);
        assert!(a > TAU);
        assert_eq!(n_of_t(a), phi_smooth(a));
    }

    #[test]
    fn t5_values() {
        assert!((t5_constant(1.0_f64) - (2.0 + TAU.ln()) / PI).abs() < 1e-15);
        let e2 = 2.0_f64.exp();
        assert!((t5_constant(e2) - (e2 / PI * TAU.ln() - 3.5)).abs() < 1e-13);
        assert!((t5_constant(solve_a::<f64>()) - 0.8582).abs() < 1e-3);
    }

    #[test]
    fn inverse_and_derivative() {
        let m = SmoothCountModel::<f64>::new();
        let k = m.inverse(0.5, 1e-12).unwrap();
        assert!((phi_smooth(k) - 0.5).abs() < 1e-10);
        let h = 1e-5;
        let numeric: f64 = (phi_smooth(30.0 + h) - phi_smooth(30.0 - h)) / (2.0 * h);
        assert!((numeric - phi_smooth_derivative(30.0_f64)).abs() < 1e-8);
        assert_eq!(m.phi(5.0), 0.0);
    }
}
