use super::model::{phi_smooth, SmoothCountModel};
use super::zeros::ZeroList;
use crate::error::{domain, invalid, Error, Result};
use crate::scalar::Scalar;
use crate::tolerances::ZERO_BRACKET_WIDTH;

/// Jump positions of the staircase `φ₂`: the `n`-th solves `φ(k_n) = n − 1/2`.
pub fn predict_zeros<T: Scalar>(n_max: usize, model: &SmoothCountModel<T>) -> Result<Vec<T>> {
    if n_max == 0 {
        return Err(invalid("predict_zeros", "n_max must be at least 1"));
    }
    (1..=n_max)
        .map(|n| model.inverse(T::from_count(n) - T::lit(0.5), T::lit(ZERO_BRACKET_WIDTH)))
        .collect()
}

/// Growth of the smooth curve over `[k_a, k_b]` and its midpoint approximation
/// `(k_b − k_a)/2π · ln((k_a + k_b)/4π)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CrossingCount<T> {
    pub exact: T,
    pub approx: T,
    /// `(k_b − k_a)³ / (8π k_a²)`, plus the rounding of `φ(k_b) − φ(k_a)`.
    pub bound: T,
    pub within: bool,
}

pub fn crossing_count<T: Scalar>(
    k_a: T,
    k_b: T,
    model: &SmoothCountModel<T>,
) -> Result<CrossingCount<T>> {
    if !(k_a > model.a()) {
        return Err(domain("crossing_count", "requires k_a > a"));
    }
    if !(k_b >= k_a) || !k_b.is_finite() {
        return Err(domain("crossing_count", "requires k_b >= k_a"));
    }
    let width = k_b - k_a;
    let exact = phi_smooth(k_b) - phi_smooth(k_a);
    let approx = width / T::TAU() * ((k_a + k_b) / (T::lit(2.0) * T::TAU())).ln();
    let rounding = T::lit(8.0) * T::epsilon() * (T::one() + phi_smooth(k_b).abs());
    let bound = width * width * width / (T::lit(8.0) * T::PI() * k_a * k_a) + rounding;
    Ok(CrossingCount {
        exact,
        approx,
        bound,
        within: (exact - approx).abs() <= bound,
    })
}

/// Predicted against actual zeros, index by index.
#[derive(Debug, Clone, PartialEq)]
pub struct PredictorComparison<T> {
    /// `(n, predicted, actual)`.
    pub rows: Vec<(usize, T, T)>,
    pub mean_abs: T,
    pub max_abs: T,
    /// Largest `|φ₁(k) − φ₂(k)|` over `k` up to the last compared zero.
    pub max_cumulative_gap: i64,
}

pub fn compare_predictions<T: Scalar>(
    predicted: &[T],
    zeros: &ZeroList<T>,
) -> Result<PredictorComparison<T>> {
    let n = predicted.len();
    if n == 0 {
        return Err(invalid("compare_predictions", "no predictions"));
    }
    if zeros.len() < n {
        return Err(Error::InsufficientZeros {
            t_max: zeros.t_max().as_f64(),
            required: predicted[n - 1].as_f64(),
        });
    }
    let actual = &zeros.ordinates()[..n];
    let rows: Vec<_> = (0..n).map(|i| (i + 1, predicted[i], actual[i])).collect();
    let deviations: Vec<T> = rows.iter().map(|&(_, p, a)| (p - a).abs()).collect();
    let mean_abs = deviations.iter().fold(T::zero(), |s, &d| s + d) / T::from_count(n);
    let max_abs = deviations.iter().fold(T::zero(), |m, &d| m.max(d));

    let horizon = predicted[n - 1].min(actual[n - 1]);
    let mut events: Vec<T> = predicted
        .iter()
        .chain(actual)
        .copied()
        .filter(|&k| k <= horizon)
        .collect();
    events.sort_by(|x, y| x.partial_cmp(y).expect("finite ordinates"));
    let max_cumulative_gap = events
        .iter()
        .map(|&k| {
            let phi1 = zeros.count_up_to(k) as i64;
            let phi2 = predicted.partition_point(|&p| p <= k) as i64;
            (phi1 - phi2).abs()
        })
        .max()
        .unwrap_or(0);
    Ok(PredictorComparison {
        rows,
        mean_abs,
        max_abs,
        max_cumulative_gap,
    })
}
