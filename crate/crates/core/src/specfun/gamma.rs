//! Hurwitz zeta at even integers, the Stirling remainder `w(A)` and the
//! complex log-gamma function built from them.

use num_complex::Complex;

use super::euler_maclaurin::bernoulli_corrections;
use crate::error::{domain, Error, Result};
use crate::scalar::Scalar;

/// `ζ(2m, A + 1/2) = Σ_{k≥0} (A + 1/2 + k)^{-2m}`.
///
/// The first terms are summed directly; the remainder from `k = N` on is the
/// Euler–Maclaurin integral plus Bernoulli corrections.
pub fn hurwitz_zeta_even<T: Scalar>(m: u32, a: Complex<T>) -> Result<Complex<T>> {
    if m == 0 {
        return Err(domain("hurwitz_zeta_even", "order m must be at least 1"));
    }
    let x = a + T::lit(0.5);
    if !(x.re.is_finite() && x.im.is_finite()) {
        return Err(domain("hurwitz_zeta_even", "non-finite argument"));
    }
    if x.im == T::zero() && x.re <= T::zero() && x.re == x.re.round() {
        return Err(domain(
            "hurwitz_zeta_even",
            format!("A + 1/2 + k vanishes for k = {}", -x.re.as_f64()),
        ));
    }

    let sigma = T::from_count(2 * m as usize);
    let reach = T::lit(12.0).max(T::lit(0.75) * sigma);
    let one = Complex::new(T::one(), T::zero());
    let mut head = Complex::new(T::zero(), T::zero());
    let mut y = x;
    let mut steps = 0usize;
    while y.norm() < reach || y.re < T::one() {
        head += one / y.powi(2 * m as i32);
        y += T::one();
        steps += 1;
        if steps > 100_000 {
            return Err(Error::NonConvergence {
                op: "hurwitz_zeta_even",
                reason: "argument too far along the negative axis".into(),
            });
        }
    }

    let y_pow = one / y.powi(2 * m as i32);
    let integral = y_pow * y / (sigma - T::one());
    let sigma_c = Complex::new(sigma, T::zero());
    let tail = integral + bernoulli_corrections(y, sigma_c, y_pow, (head + integral).norm());
    Ok(head + tail)
}

/// Stirling remainder `w(A)`, so that
/// `ln Γ(A) = (A − 1/2) ln A − A + ln(2π)/2 + w(A)`.
///
/// Evaluated through `w(A) = Σ_{m≥1} ζ(2m, A + 1/2) / ((2m + 1) 2^{2m})`,
/// which is positive for real `A` and behaves like `1/(12A)`.
pub fn stirling_w<T: Scalar>(a: Complex<T>) -> Result<Complex<T>> {
    if a.re <= T::zero() {
        return Err(domain("stirling_w", "requires re(A) > 0"));
    }
    let cutoff = T::lit(1e-16);
    let mut sum = Complex::new(T::zero(), T::zero());
    let mut four_pow = T::one();
    for m in 1..=200u32 {
        four_pow *= T::lit(4.0);
        let term = hurwitz_zeta_even(m, a)? / (T::from_count(2 * m as usize + 1) * four_pow);
        sum += term;
        if term.norm() < cutoff {
            return Ok(sum);
        }
    }
    Err(Error::NonConvergence {
        op: "stirling_w",
        reason: "Hurwitz series above 1e-16 after 200 terms".into(),
    })
}

/// Principal branch of `ln Γ(A)` for `re(A) > 0`.
///
/// Arguments with `re(A) < 2` are first shifted up with
/// `ln Γ(A) = ln Γ(A + n) − Σ_{k<n} ln(A + k)`.
pub fn log_gamma<T: Scalar>(a: Complex<T>) -> Result<Complex<T>> {
    if !(a.re.is_finite() && a.im.is_finite()) {
        return Err(domain("log_gamma", "non-finite argument"));
    }
    if a.re <= T::zero() {
        return Err(domain("log_gamma", "requires re(A) > 0"));
    }
    let two = T::lit(2.0);
    let mut shift = Complex::new(T::zero(), T::zero());
    let mut arg = a;
    while arg.re < two {
        shift += arg.ln();
        arg += T::one();
    }
    let half = T::lit(0.5);
    let main = (arg - half) * arg.ln() - arg + (two * T::PI()).ln() * half;
    Ok(main + stirling_w(arg)? - shift)
}

/// `1/Γ(A)` for any complex `A` (an entire function).
pub fn reciprocal_gamma<T: Scalar>(a: Complex<T>) -> Result<Complex<T>> {
    if a.re >= T::lit(0.5) {
        return Ok((-log_gamma(a)?).exp());
    }
    let pi = T::PI();
    let one = Complex::new(T::one(), T::zero());
    let reflected = log_gamma(one - a)?.exp();
    let value = (a * pi).sin() * reflected / pi;
    if value.re.is_finite() && value.im.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite {
            op: "reciprocal_gamma",
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    type C = Complex<f64>;

    fn c(re: f64, im: f64) -> C {
        C::new(re, im)
    }

    fn rel(a: C, b: C) -> f64 {
        (a - b).norm() / b.norm().max(1e-300)
    }

    #[test]
    fn hurwitz_reduces_to_even_zeta() {
        assert!(
            rel(
                hurwitz_zeta_even(1, c(0.5, 0.0)).unwrap(),
                c(PI * PI / 6.0, 0.0)
            ) < 1e-14
        );
        assert!(
            rel(
                hurwitz_zeta_even(2, c(0.5, 0.0)).unwrap(),
                c(PI.powi(4) / 90.0, 0.0)
            ) < 1e-14
        );
    }

    #[test]
    fn hurwitz_matches_brute_force_sum() {
        // Direct summation of 10^6 terms plus the integral tail 1/(x + 10^6).
        let x = 1.75_f64;
        let n = 1_000_000usize;
        let mut s = 0.0;
        for k in (0..n).rev() {
            s += 1.0 / ((x + k as f64) * (x + k as f64));
        }
        let y = x + n as f64;
        s += 1.0 / y + 0.5 / (y * y);
        let got = hurwitz_zeta_even(1, c(1.25, 0.0)).unwrap();
        assert!((got.re - s).abs() < 1e-14 * s, "{} vs {}", got.re, s);
        assert_eq!(got.im, 0.0);
    }

    #[test]
    fn hurwitz_rejects_pole() {
        assert!(matches!(
            hurwitz_zeta_even(1, c(-2.5, 0.0)),
            Err(Error::Domain { .. })
        ));
        assert!(hurwitz_zeta_even(0, c(1.0, 0.0)).is_err());
    }

    #[test]
    fn w_at_ten_matches_factorial_oracle() {
        // ln 9! minus the Stirling main terms.
        let ln_fact9: f64 = (1..=9).map(|k| (k as f64).ln()).sum();
        let a = 10.0_f64;
        let oracle = ln_fact9 - ((a - 0.5) * a.ln() - a + 0.5 * (2.0 * PI).ln());
        let w = stirling_w(c(10.0, 0.0)).unwrap();
        assert!((w.re - oracle).abs() < 1e-14);
        assert!((w.re - 1.0 / 120.0).abs() < 3e-5);
    }

    #[test]
    fn w_decreases_along_the_real_axis() {
        let mut last = f64::INFINITY;
        for a in [1.0, 2.0, 5.0, 10.0, 50.0, 200.0, 1000.0] {
            let w = stirling_w(c(a, 0.0)).unwrap().norm();
            assert!(w < last);
            last = w;
        }
        assert!(last < 1e-4);
    }

    #[test]
    fn w_requires_right_half_plane() {
        assert!(stirling_w(c(0.0, 1.0)).is_err());
        assert!(matches!(
            stirling_w(c(1e-4, 0.0)),
            Err(Error::NonConvergence { .. })
        ));
    }

    #[test]
    fn log_gamma_reference_values() {
        assert!(log_gamma(c(1.0, 0.0)).unwrap().norm() < 1e-15);
        let half = log_gamma(c(0.5, 0.0)).unwrap();
        assert!((half.re - 0.5 * PI.ln()).abs() < 1e-14);
        let ten = log_gamma(c(10.0, 0.0)).unwrap();
        assert!((ten.re - 362880.0_f64.ln()).abs() < 1e-13);
        assert!(log_gamma(c(-1.0, 0.0)).is_err());
        assert!(log_gamma(c(0.0, 0.0)).is_err());
    }

    #[test]
    fn log_gamma_complex_reference() {
        // mpmath.loggamma(3+4j) and loggamma(0.25+100j)
        let v = log_gamma(c(3.0, 4.0)).unwrap();
        assert!(rel(v, c(-1.756626784603784, 4.742664438034658)) < 1e-13);
        let v = log_gamma(c(0.25, 100.0)).unwrap();
        assert!(
            rel(v, c(-157.3119859115198, 360.12442368392899)) < 1e-12,
            "{v}"
        );
    }

    #[test]
    fn reciprocal_gamma_reflection() {
        // 1/Γ(-0.5) = -1/(2√π)
        let v = reciprocal_gamma(c(-0.5, 0.0)).unwrap();
        assert!((v.re + 0.5 / PI.sqrt()).abs() < 1e-14);
        // zeros at non-positive integers
        assert!(reciprocal_gamma(c(-3.0, 0.0)).unwrap().norm() < 1e-13);
    }
}
