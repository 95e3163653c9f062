use num_complex::Complex;

use super::density::{Density, TailBehaviour};
use crate::error::{domain, Error, Result};
use crate::quadrature::Integrator;
use crate::scalar::Scalar;

/// Maximum number of integrand evaluations spent on one transform.
pub const TRANSFORM_MAX_EVALS: usize = 1_000_000;

/// A quadrature value with the scheme's own error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransformEvaluation<T> {
    pub value: Complex<T>,
    pub abs_error_estimate: T,
    pub evaluations: usize,
}

struct Budget<T> {
    integrator: Integrator<T>,
    remaining: usize,
    used: usize,
}

impl<T: Scalar> Budget<T> {
    fn run<F>(&mut self, f: F, a: T, b: T, abs_tol: T) -> Result<(Complex<T>, T)>
    where
        F: FnMut(T) -> Complex<T>,
    {
        let integrator = Integrator {
            abs_tol,
            ..self.integrator
        }
        .with_max_evals(self.remaining);
        let r = integrator.integrate(f, a, b).map_err(|e| match e {
            Error::NonConvergence { reason, .. } => Error::NonConvergence {
                op: "transform_numeric",
                reason,
            },
            other => other,
        })?;
        self.used += r.evaluations;
        self.remaining = self.remaining.saturating_sub(r.evaluations);
        Ok((r.value, r.abs_error))
    }
}

/// `𝔗[φ](z) = 2z² ∫_0^∞ φ(k) dk / (k(k² + z²))` by adaptive quadrature.
///
/// The finite part runs over `[support_start, K]`, split at the density's
/// breakpoints. For smooth tails `K = max(100, 20|z|)` and `[K, ∞)` is mapped
/// onto `[0, 1)` by `k = K·exp(w/(1 − w))`. Periodic tails are cut at a whole
/// number of periods far enough out that the integration-by-parts bound on the
/// remainder is negligible; that bound is added to the error estimate.
pub fn transform_numeric<T, D>(phi: &D, z: Complex<T>) -> Result<TransformEvaluation<T>>
where
    T: Scalar,
    D: Density<T> + ?Sized,
{
    let z2 = z * z;
    if !(z2.re > T::zero()) || !z2.im.is_finite() {
        return Err(domain(
            "transform_numeric",
            "requires re(z²) > 0, i.e. |arg z| < π/4",
        ));
    }
    let two = T::lit(2.0);
    let zn = z.norm();
    let prefactor = (z2 * two).norm();
    // Target on the integral itself so that the transform meets 1e-8(1 + |value|)
    // with a wide margin.
    let abs_tol = T::lit(1e-11) / prefactor.max(T::epsilon());
    let mut budget = Budget {
        integrator: Integrator::new(abs_tol, T::lit(1e-11)),
        remaining: TRANSFORM_MAX_EVALS,
        used: 0,
    };

    let kernel = |k: T| -> Complex<T> {
        if k <= T::zero() {
            return Complex::new(T::zero(), T::zero());
        }
        let r = z2 / (k * k);
        let v = phi.value(k) / (k * k * k);
        (Complex::new(T::one(), T::zero()) + r).inv() * v
    };

    let start = phi.support_start().max(T::zero());
    let (cut, tail_bound) = match phi.tail() {
        TailBehaviour::Smooth => (T::lit(100.0).max(T::lit(20.0) * zn).max(start), T::zero()),
        TailBehaviour::Periodic {
            period,
            antiderivative_bound,
        } => {
            // |∫_K^∞ φ h| ≤ B ∫_K^∞ |h'| ≤ 1.93 B / K³ for h = 1/(k(k²+z²)), K ≥ 2|z|.
            let wanted = T::lit(1e-13);
            let reach = (prefactor * antiderivative_bound * T::lit(1.93) / wanted).cbrt();
            let k_min = reach.max(T::lit(100.0)).max(two * zn).max(start);
            let periods = (k_min / period).ceil();
            let cut = periods * period;
            let bound = prefactor * antiderivative_bound * T::lit(1.93) / (cut * cut * cut);
            (cut, bound)
        }
    };

    let mut nodes = vec![start];
    nodes.extend(
        phi.breakpoints(cut)
            .into_iter()
            .filter(|&b| b > start && b < cut),
    );
    nodes.push(cut);
    let pieces = T::from_count(nodes.len());

    let mut integral = Complex::new(T::zero(), T::zero());
    let mut error = T::zero();
    for w in nodes.windows(2) {
        if w[1] <= w[0] {
            continue;
        }
        let (v, e) = budget.run(kernel, w[0], w[1], abs_tol / pieces)?;
        integral += v;
        error += e;
    }

    if let TailBehaviour::Smooth = phi.tail() {
        let tail = |w: T| -> Complex<T> {
            let one = T::one();
            let gap = one - w;
            if gap <= T::zero() {
                return Complex::new(T::zero(), T::zero());
            }
            let k = cut * (w / gap).exp();
            if !k.is_finite() {
                return Complex::new(T::zero(), T::zero());
            }
            // dk = k dw / (1 − w)²; divide by k in stages to avoid overflow
            let ratio = phi.value(k) / k / k;
            if !ratio.is_finite() {
                return Complex::new(T::zero(), T::zero());
            }
            let r = z2 / k / k;
            (Complex::new(one, T::zero()) + r).inv() * (ratio / (gap * gap))
        };
        let (v, e) = budget.run(tail, T::zero(), T::one(), abs_tol)?;
        integral += v;
        error += e;
    }

    let value = integral * z2 * two;
    if !(value.re.is_finite() && value.im.is_finite()) {
        return Err(Error::NonFinite {
            op: "transform_numeric",
        });
    }
    Ok(TransformEvaluation {
        value,
        abs_error_estimate: error * prefactor + tail_bound,
        evaluations: budget.used,
    })
}
