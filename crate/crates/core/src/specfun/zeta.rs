//! Riemann zeta by Euler–Maclaurin summation.

use num_complex::Complex;

use super::euler_maclaurin::bernoulli_corrections;
use super::gamma::{log_gamma, reciprocal_gamma};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Largest `|im(s)|` accepted by [`zeta`] and everything built on it.
pub const MAX_ZETA_IMAG: f64 = 1000.0;

fn check_range<T: Scalar>(s: Complex<T>, op: &'static str) -> Result<()> {
    if !(s.re.is_finite() && s.im.is_finite()) {
        return Err(Error::Domain {
            op,
            reason: "non-finite argument".into(),
        });
    }
    if s.im.abs() > T::lit(MAX_ZETA_IMAG) {
        return Err(Error::Range {
            op,
            reason: format!("|im(s)| = {} exceeds {}", s.im.abs(), MAX_ZETA_IMAG),
        });
    }
    Ok(())
}

fn summation_length<T: Scalar>(s: Complex<T>) -> usize {
    let n = (s.norm() * T::lit(0.5) + T::lit(10.0)).ceil().as_f64();
    (n as usize).max(20)
}

/// `(s − 1)·ζ(s)` straight from the Euler–Maclaurin formula, valid for every
/// `s` in range (the pole at `s = 1` is removed analytically).
pub(crate) fn zeta_times_s_minus_one<T: Scalar>(s: Complex<T>) -> Result<Complex<T>> {
    check_range(s, "zeta")?;
    let n = summation_length(s);
    let one = Complex::new(T::one(), T::zero());
    let sm1 = s - one;

    let mut head = Complex::new(T::zero(), T::zero());
    for k in (1..n).rev() {
        head += (-s * T::from_count(k).ln()).exp();
    }
    let big_n = T::from_count(n);
    let ln_n = big_n.ln();
    let n_pow = (-s * ln_n).exp();
    let integral = n_pow * big_n;
    let corrections = bernoulli_corrections(Complex::new(big_n, T::zero()), s, n_pow, head.norm());
    let value = sm1 * head + integral + sm1 * corrections;
    finite(value, "zeta")
}

/// `ζ(s)` by Euler–Maclaurin for any `s ≠ 1`, without the functional
/// equation. Loses relative accuracy deep in the left half-plane.
pub fn zeta_euler_maclaurin<T: Scalar>(s: Complex<T>) -> Result<Complex<T>> {
    if s == Complex::new(T::one(), T::zero()) {
        return Err(Error::Pole);
    }
    let one = Complex::new(T::one(), T::zero());
    Ok(zeta_times_s_minus_one(s)? / (s - one))
}

/// `ζ(s)` for `s ≠ 1`, `|im(s)| ≤ 1000`.
///
/// For `re(s) < 1/2` the value is obtained from the completed function,
/// `ζ(s) = ξ(1 − s) / (Γ(s/2 + 1) π^{−s/2} (s − 1))`.
pub fn zeta<T: Scalar>(s: Complex<T>) -> Result<Complex<T>> {
    check_range(s, "zeta")?;
    let one = Complex::new(T::one(), T::zero());
    if s == one {
        return Err(Error::Pole);
    }
    let half = T::lit(0.5);
    if s.re >= half {
        return zeta_euler_maclaurin(s);
    }
    let r = one - s;
    // ξ(1 − s) with re(1 − s) > 1/2
    let xi_r =
        (log_gamma(r * half + one)? - r * half * T::PI().ln()).exp() * zeta_times_s_minus_one(r)?;
    let factor = reciprocal_gamma(s * half + one)? * (s * half * T::PI().ln()).exp() / (s - one);
    finite(xi_r * factor, "zeta")
}

pub(crate) fn finite<T: Scalar>(v: Complex<T>, op: &'static str) -> Result<Complex<T>> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite { op })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    type C = Complex<f64>;

    fn rel(a: C, b: C) -> f64 {
        (a - b).norm() / b.norm()
    }

    /// Plain Euler–Maclaurin with a long head and two Bernoulli terms.
    fn zeta_oracle(s: C) -> C {
        let n = 10_000usize;
        let mut sum = C::new(0.0, 0.0);
        for k in (1..n).rev() {
            sum += (-s * (k as f64).ln()).exp();
        }
        let nf = n as f64;
        let p = (-s * nf.ln()).exp();
        sum + p * nf / (s - 1.0) + p * 0.5 + s * p / (12.0 * nf)
            - s * (s + 1.0) * (s + 2.0) * p / (720.0 * nf * nf * nf)
    }

    #[test]
    fn known_values() {
        assert!(rel(zeta(C::new(2.0, 0.0)).unwrap(), C::new(PI * PI / 6.0, 0.0)) < 1e-14);
        assert!((zeta(C::new(0.0, 0.0)).unwrap() - C::new(-0.5, 0.0)).norm() < 1e-14);
        let half = zeta(C::new(0.5, 0.0)).unwrap();
        let oracle = zeta_oracle(C::new(0.5, 0.0));
        assert!((half - oracle).norm() < 1e-12);
        assert!((half.re + 1.4603545).abs() < 1e-7);
    }

    #[test]
    fn high_on_the_critical_line() {
        // mpmath.zeta(0.5 + 1000j)
        let v = zeta(C::new(0.5, 1000.0)).unwrap();
        assert!(rel(v, C::new(0.356_334_367_194_396, 0.9319978312329937)) < 1e-10);
    }

    #[test]
    fn left_half_plane_via_functional_equation() {
        // mpmath.zeta(-3.5 + 2j)
        let v = zeta(C::new(-3.5, 2.0)).unwrap();
        assert!(rel(v, C::new(-0.003560979964919072, 0.04262253731477641)) < 1e-10);
        // trivial zero
        assert!(zeta(C::new(-2.0, 0.0)).unwrap().norm() < 1e-14);
        // both routes agree where the raw sum is still accurate
        let s = C::new(0.2, 7.0);
        assert!(rel(zeta(s).unwrap(), zeta_euler_maclaurin(s).unwrap()) < 1e-10);
    }

    #[test]
    fn pole_and_range_errors() {
        assert_eq!(zeta(C::new(1.0, 0.0)), Err(Error::Pole));
        assert!(matches!(
            zeta(C::new(0.5, 1000.5)),
            Err(Error::Range { .. })
        ));
        assert!(zeta_times_s_minus_one(C::new(1.0, 0.0)).unwrap().re - 1.0 < 1e-14);
    }
}
