//! Euler–Maclaurin tail corrections shared by the zeta and Hurwitz zeta sums.

use num_complex::Complex;

use crate::scalar::Scalar;

/// `(numerator, denominator)` of the Bernoulli numbers `B_2, B_4, …, B_30`.
const BERNOULLI_EVEN: [(f64, f64); 15] = [
    (1.0, 6.0),
    (-1.0, 30.0),
    (1.0, 42.0),
    (-1.0, 30.0),
    (5.0, 66.0),
    (-691.0, 2730.0),
    (7.0, 6.0),
    (-3617.0, 510.0),
    (43867.0, 798.0),
    (-174611.0, 330.0),
    (854513.0, 138.0),
    (-236364091.0, 2730.0),
    (8553103.0, 6.0),
    (-23749461029.0, 870.0),
    (8615841276005.0, 14322.0),
];

/// `B_{2j} / (2j)!` for `j = 1, 2, …`.
fn bernoulli_over_factorial(j: usize) -> f64 {
    let (num, den) = BERNOULLI_EVEN[j - 1];
    let fact: f64 = (1..=2 * j).map(|i| i as f64).product();
    num / den / fact
}

/// Correction terms of `Σ_{k≥0} (y+k)^{-σ}` beyond its integral part:
/// `y^{-σ}/2 + Σ_j B_{2j}/(2j)! · σ(σ+1)…(σ+2j−2) · y^{-σ-2j+1}`.
///
/// The asymptotic series is cut once a term drops below working precision
/// relative to `scale`, or as soon as the terms start growing.
pub(crate) fn bernoulli_corrections<T: Scalar>(
    y: Complex<T>,
    sigma: Complex<T>,
    y_pow_neg_sigma: Complex<T>,
    scale: T,
) -> Complex<T> {
    let one = Complex::new(T::one(), T::zero());
    let half = T::lit(0.5);
    let mut total = y_pow_neg_sigma * half;
    let inv_y = one / y;
    let inv_y2 = inv_y * inv_y;

    // rising = σ(σ+1)…(σ+2j−2) · y^{1−2j}
    let mut rising = sigma * inv_y;
    let mut previous = T::infinity();
    let threshold = T::epsilon() * T::lit(0.25) * scale.max(total.norm());
    for j in 1..=BERNOULLI_EVEN.len() {
        let term = rising * y_pow_neg_sigma * T::lit(bernoulli_over_factorial(j));
        let size = term.norm();
        if size > previous {
            break;
        }
        total += term;
        if size <= threshold {
            break;
        }
        previous = size;
        let two_j = T::from_count(2 * j);
        rising = rising * (sigma + two_j - T::one()) * (sigma + two_j) * inv_y2;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficient_values() {
        assert!((bernoulli_over_factorial(1) - 1.0 / 12.0).abs() < 1e-17);
        assert!((bernoulli_over_factorial(2) + 1.0 / 720.0).abs() < 1e-18);
        assert!((bernoulli_over_factorial(3) - 1.0 / 30240.0).abs() < 1e-19);
    }
}
