//! The completed zeta function ξ in `s`- and `z = s − 1/2`-coordinates,
//! its logarithm on `re(z) > 1/2`, and the large-`z` asymptotic form.

use num_complex::Complex;

use super::gamma::{log_gamma, reciprocal_gamma, stirling_w};
use super::zeta::{finite, zeta, zeta_times_s_minus_one};
use crate::error::{domain, Error, Result};
use crate::scalar::Scalar;

/// `ξ(s) = Γ(s/2 + 1) π^{−s/2} (s − 1) ζ(s)`.
///
/// This is `½ Γ(s/2) π^{−s/2} s (s − 1) ζ(s)` with `s Γ(s/2)` replaced by
/// `2 Γ(s/2 + 1)`, so `s = 0` and `s = 1` are ordinary points. Arguments with
/// `re(s) < 1/2` are reflected with `ξ(s) = ξ(1 − s)`.
pub fn xi_s<T: Scalar>(s: Complex<T>) -> Result<Complex<T>> {
    let half = T::lit(0.5);
    let one = Complex::new(T::one(), T::zero());
    let s = if s.re < half { one - s } else { s };
    let log_prefactor = log_gamma(s * half + one)? - s * half * T::PI().ln();
    finite(log_prefactor.exp() * zeta_times_s_minus_one(s)?, "xi_s")
}

/// ξ(s) evaluated directly at `s` with no reflection: Euler–Maclaurin for
/// `(s − 1)ζ(s)` and the reflection formula for `1/Γ`. Independent of
/// [`xi_s`] off the right half-plane, which makes it a check on the
/// functional equation for moderate `|s|`.
pub fn xi_s_unreflected<T: Scalar>(s: Complex<T>) -> Result<Complex<T>> {
    let half = T::lit(0.5);
    let one = Complex::new(T::one(), T::zero());
    let rg = reciprocal_gamma(s * half + one)?;
    let pi_pow = (-s * half * T::PI().ln()).exp();
    finite(pi_pow * zeta_times_s_minus_one(s)? / rg, "xi_s_unreflected")
}

/// `ξ` as an even function of `z = s − 1/2`.
pub fn xi_z<T: Scalar>(z: Complex<T>) -> Result<Complex<T>> {
    xi_s(z + T::lit(0.5))
}

/// `ln ξ(z) = −ln 2 + ln Γ(z/2 + 1/4) − (z/2 + 1/4) ln π + ln(z² − 1/4) + ln ζ(z + 1/2)`
/// with every term on its principal branch; defined for `re(z) > 1/2`.
pub fn log_xi_z<T: Scalar>(z: Complex<T>) -> Result<Complex<T>> {
    let half = T::lit(0.5);
    let quarter = T::lit(0.25);
    if !(z.re > half) {
        return Err(domain("log_xi_z", "requires re(z) > 1/2"));
    }
    let a = z * half + quarter;
    let ln_zeta = zeta(z + half)?.ln();
    let value = log_gamma(a)? - T::LN_2() - a * T::PI().ln() + (z * z - quarter).ln() + ln_zeta;
    finite(value, "log_xi_z")
}

/// Some logarithm of `ξ(z)` (branch unspecified, valid anywhere off the zeros),
/// computed without forming `ξ` itself so that neither overflow on the real
/// axis nor underflow high on the imaginary axis occurs.
pub fn log_xi_any<T: Scalar>(z: Complex<T>) -> Result<Complex<T>> {
    let z = if z.re < T::zero() { -z } else { z };
    let half = T::lit(0.5);
    let one = Complex::new(T::one(), T::zero());
    let s = z + half;
    let log_prefactor = log_gamma(s * half + one)? - s * half * T::PI().ln();
    let rest = zeta_times_s_minus_one(s)?;
    if rest.norm() == T::zero() {
        return Err(Error::Singularity {
            op: "log_xi_any",
            position: z.im.as_f64(),
        });
    }
    finite(log_prefactor + rest.ln(), "log_xi_any")
}

/// `Ξ(t) = ξ(1/2 + it)` divided by the positive factor `|Γ(s/2 + 1) π^{−s/2}|`.
///
/// Real-valued with the same sign as `Ξ(t)`, and of moderate size all the way
/// up to `t = 1000` where `Ξ` itself underflows.
pub fn xi_line_scaled<T: Scalar>(t: T) -> Result<T> {
    let half = T::lit(0.5);
    let one = Complex::new(T::one(), T::zero());
    let s = Complex::new(half, t);
    let log_prefactor = log_gamma(s * half + one)? - s * half * T::PI().ln();
    let phase = Complex::new(T::zero(), log_prefactor.im).exp();
    let v = phase * zeta_times_s_minus_one(s)?;
    if v.re.is_finite() {
        Ok(v.re)
    } else {
        Err(Error::NonFinite {
            op: "xi_line_scaled",
        })
    }
}

/// Growing terms of the large-`z` form of `ln ξ(z)` together with its constant
/// and the size of the remainder `2ϑ₁/z`, `|ϑ₁| < 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XiAsymptoticTerms<T> {
    /// `(z/2) ln(z/2π)`
    pub t1: Complex<T>,
    /// `−z/2`
    pub t2: Complex<T>,
    /// `(7/4) ln z`
    pub t3: Complex<T>,
    /// `(1/4) ln(π/2)`
    pub constant: T,
    /// `2/|z|`
    pub remainder_bound: T,
}

impl<T: Scalar> XiAsymptoticTerms<T> {
    pub fn approximation(&self) -> Complex<T> {
        self.t1 + self.t2 + self.t3 + self.constant
    }

    /// `|ln ξ(z) − (t1 + t2 + t3 + constant)|` for a supplied `ln ξ(z)`.
    pub fn deviation(&self, log_xi: Complex<T>) -> T {
        (log_xi - self.approximation()).norm()
    }
}

/// Term bundle of the asymptotic form, for `re(z) > 10`.
pub fn log_xi_asymptotic<T: Scalar>(z: Complex<T>) -> Result<XiAsymptoticTerms<T>> {
    if !(z.re > T::lit(10.0)) {
        return Err(domain("log_xi_asymptotic", "requires re(z) > 10"));
    }
    let half = T::lit(0.5);
    let two_pi = T::lit(2.0) * T::PI();
    Ok(XiAsymptoticTerms {
        t1: z * half * (z / two_pi).ln(),
        t2: -z * half,
        t3: z.ln() * T::lit(1.75),
        constant: (T::PI() / T::lit(2.0)).ln() * T::lit(0.25),
        remainder_bound: T::lit(2.0) / z.norm(),
    })
}

/// `(deviation, bound)` of the asymptotic form at `z`.
pub fn asymptotic_deviation<T: Scalar>(z: Complex<T>) -> Result<(T, T)> {
    let terms = log_xi_asymptotic(z)?;
    let exact = log_xi_z(z)?;
    Ok((terms.deviation(exact), terms.remainder_bound))
}

/// Whether `|ln ζ(z + 1/2)| < 20/(19 re(z))` holds at `z` (`re(z) > 10`).
pub fn ln_zeta_bound_check<T: Scalar>(z: Complex<T>) -> Result<bool> {
    if !(z.re > T::lit(10.0)) {
        return Err(domain("ln_zeta_bound_check", "requires re(z) > 10"));
    }
    let lhs = zeta(z + T::lit(0.5))?.ln().norm();
    Ok(lhs < T::lit(20.0) / (T::lit(19.0) * z.re))
}

/// Whether `|w(z/2 + 1/4)| < 1/(8 re(z))` holds at `z` (`re(z) > 8.5`).
///
/// Near the real axis `|w(z/2 + 1/4)|` is close to `1/(6 re(z))`, so this
/// check reports `false` there; it holds once `|im(z)|` is comparable to
/// `re(z)`.
pub fn stirling_w_bound_check<T: Scalar>(z: Complex<T>) -> Result<bool> {
    if !(z.re > T::lit(8.5)) {
        return Err(domain("stirling_w_bound_check", "requires re(z) > 8.5"));
    }
    let w = stirling_w(z * T::lit(0.5) + T::lit(0.25))?;
    Ok(w.norm() < T::one() / (T::lit(8.0) * z.re))
}
