use super::model::{phi_smooth, SmoothCountModel};
use super::zeros::ZeroList;
use crate::error::{invalid, Result};
use crate::scalar::Scalar;

/// Largest grid step accepted by [`omega_stats`].
pub const OMEGA_MAX_STEP: f64 = 0.1;

/// `Ω(k) = φ₁(k) − φ(k)` on a grid and its running mean `(1/T) ∫_a^T Ω dk`.
#[derive(Debug, Clone, PartialEq)]
pub struct OmegaStats<T> {
    pub grid: Vec<(T, T)>,
    pub running_mean: Vec<(T, T)>,
}

impl<T: Scalar> OmegaStats<T> {
    /// Number of strict sign changes of `Ω` along the grid.
    pub fn sign_changes(&self) -> usize {
        let mut last = None;
        let mut changes = 0;
        for &(_, w) in &self.grid {
            if w == T::zero() {
                continue;
            }
            let positive = w > T::zero();
            if last.is_some_and(|p| p != positive) {
                changes += 1;
            }
            last = Some(positive);
        }
        changes
    }

    pub fn final_mean(&self) -> Option<T> {
        self.running_mean.last().map(|&(_, m)| m)
    }

    /// Running mean at the last grid point `≤ t`.
    pub fn mean_at(&self, t: T) -> Option<T> {
        let i = self.running_mean.partition_point(|&(k, _)| k <= t);
        i.checked_sub(1).map(|i| self.running_mean[i].1)
    }
}

/// Samples `Ω` on `[a, t_max]` with spacing `grid_step` (the last point is
/// `t_max` itself) and integrates it by the trapezoid rule.
pub fn omega_stats<T: Scalar>(
    zeros: &ZeroList<T>,
    model: &SmoothCountModel<T>,
    grid_step: T,
) -> Result<OmegaStats<T>> {
    if !(grid_step > T::zero() && grid_step <= T::lit(OMEGA_MAX_STEP)) {
        return Err(invalid("omega_stats", "grid step must lie in (0, 0.1]"));
    }
    if zeros.is_empty() {
        return Err(invalid("omega_stats", "zero list is empty"));
    }
    let a = model.a();
    let end = zeros.t_max();
    if end <= a {
        return Err(invalid("omega_stats", "t_max must exceed the curve root"));
    }
    let omega = |k: T| T::from_count(zeros.count_up_to(k)) - phi_smooth(k);

    let mut grid = Vec::new();
    let mut i = 0usize;
    loop {
        let k = a + T::from_count(i) * grid_step;
        if k >= end {
            break;
        }
        grid.push((k, omega(k)));
        i += 1;
    }
    grid.push((end, omega(end)));

    let mut running_mean = Vec::with_capacity(grid.len());
    let mut integral = T::zero();
    running_mean.push((grid[0].0, T::zero()));
    for w in grid.windows(2) {
        let ((k0, o0), (k1, o1)) = (w[0], w[1]);
        integral += (k1 - k0) * (o0 + o1) / T::lit(2.0);
        running_mean.push((k1, integral / k1));
    }
    Ok(OmegaStats { grid, running_mean })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zerodist::zeros::ZeroSource;

    #[test]
    fn omega_is_count_minus_curve() {
        let m = SmoothCountModel::<f64>::new();
        let zeros = ZeroList::new(
            vec![14.134725141735, 21.022039638772],
            22.0,
            ZeroSource::File,
        )
        .unwrap();
        let s = omega_stats(&zeros, &m, 0.05).unwrap();
        for &(k, w) in &s.grid {
            let expected = zeros.count_up_to(k) as f64 - phi_smooth(k);
            assert_eq!(w, expected);
        }
        assert_eq!(s.grid.last().unwrap().0, 22.0);
        assert_eq!(s.grid.len(), s.running_mean.len());
    }

    #[test]
    fn constant_shift_moves_mean() {
        let m = SmoothCountModel::<f64>::new();
        let a = m.a();
        let base = ZeroList::new(
            vec![14.134725141735, 21.022039638772],
            30.0,
            ZeroSource::File,
        )
        .unwrap();
        let shifted = ZeroList::new(
            vec![a / 2.0, 14.134725141735, 21.022039638772],
            30.0,
            ZeroSource::File,
        )
        .unwrap();
        let m0 = omega_stats(&base, &m, 0.01).unwrap().final_mean().unwrap();
        let m1 = omega_stats(&shifted, &m, 0.01)
            .unwrap()
            .final_mean()
            .unwrap();
        assert!((m1 - m0 - (30.0 - a) / 30.0).abs() < 1e-3);
    }

    #[test]
    fn rejects_coarse_grid() {
        let m = SmoothCountModel::<f64>::new();
        let zeros = ZeroList::new(vec![14.134725141735], 20.0, ZeroSource::File).unwrap();
        assert!(omega_stats(&zeros, &m, 0.5).is_err());
        let empty = ZeroList::new(vec![], 20.0, ZeroSource::File).unwrap();
        assert!(omega_stats(&empty, &m, 0.05).is_err());
    }
}
