use num_complex::Complex;

use crate::error::{invalid, Error, Result};
use crate::scalar::Scalar;

/// `|f|` below this fraction of the nearby maximum counts as a zero on the contour.
pub const PROXIMITY_RATIO: f64 = 1e-9;
pub const MAX_CONTOUR_SAMPLES: usize = 1_000_000;
pub const MIN_CONTOUR_SAMPLES: usize = 64;

/// Neighbouring base arcs on each side that form the reference for the proximity test.
const PROXIMITY_NEIGHBOURS: usize = 2;

fn wrap<T: Scalar>(d: T) -> T {
    let tau = T::TAU();
    d - tau * (d / tau).round()
}

#[derive(Clone, Copy)]
struct Sample<T> {
    angle: T,
    log: Complex<T>,
}

struct ArcStats<T> {
    min_log: T,
    min_angle: T,
    max_log: T,
}

/// Half the winding number of `f` around `|z| = radius`, counter-clockwise.
///
/// For an even function with zeros on the imaginary axis this is the number
/// of zeros `i k` with `0 < k < radius`. The argument is unwrapped between
/// samples; any step whose phase change exceeds π/2 is bisected. A zero
/// closer to the circle than the initial arc spacing `2π radius/min_samples`
/// can alias a full turn into one step, so `min_samples` must resolve that
/// distance.
pub fn count_zeros_contour<T, F>(mut f: F, radius: T, min_samples: usize) -> Result<usize>
where
    T: Scalar,
    F: FnMut(Complex<T>) -> Result<Complex<T>>,
{
    count_zeros_contour_log(
        |z| {
            let v = f(z)?;
            if !(v.re.is_finite() && v.im.is_finite()) {
                return Err(Error::NonFinite {
                    op: "count_zeros_contour",
                });
            }
            if v.norm() == T::zero() {
                return Err(Error::Proximity {
                    re: z.re.as_f64(),
                    im: z.im.as_f64(),
                });
            }
            Ok(v.ln())
        },
        radius,
        min_samples,
    )
}

/// As [`count_zeros_contour`], for a handle returning `ln f` on any branch.
///
/// Suited to functions whose modulus spans more than the floating-point
/// range along the circle. The proximity test compares `|f|` with its
/// maximum over the neighbouring arcs rather than the whole circle.
pub fn count_zeros_contour_log<T, F>(mut log_f: F, radius: T, min_samples: usize) -> Result<usize>
where
    T: Scalar,
    F: FnMut(Complex<T>) -> Result<Complex<T>>,
{
    if !(radius.is_finite() && radius > T::zero()) {
        return Err(invalid("count_zeros_contour", "radius must be positive"));
    }
    if min_samples < MIN_CONTOUR_SAMPLES {
        return Err(invalid(
            "count_zeros_contour",
            format!("at least {MIN_CONTOUR_SAMPLES} samples are required"),
        ));
    }
    let mut evaluate = |angle: T| -> Result<Sample<T>> {
        let z = Complex::from_polar(radius, angle);
        let log = log_f(z)?;
        if !(log.re.is_finite() && log.im.is_finite()) {
            return Err(Error::NonFinite {
                op: "count_zeros_contour",
            });
        }
        Ok(Sample { angle, log })
    };

    let n = min_samples;
    let step = T::TAU() / T::from_count(n);
    let first = evaluate(T::zero())?;
    let min_width = step * T::lit(1e-12);
    let quarter = T::FRAC_PI_2();

    let mut samples = n;
    let mut phase = T::zero();
    let mut arcs = Vec::with_capacity(n);
    let mut start = first;
    for j in 0..n {
        let end = if j + 1 == n {
            Sample {
                angle: T::TAU(),
                log: first.log,
            }
        } else {
            evaluate(T::from_count(j + 1) * step)?
        };
        let mut stats = ArcStats {
            min_log: start.log.re,
            min_angle: start.angle,
            max_log: start.log.re,
        };
        let mut current = start;
        let mut pending = vec![end];
        while let Some(&next) = pending.last() {
            let d = wrap(next.log.im - current.log.im);
            if d.abs() > quarter {
                if next.angle - current.angle < min_width {
                    let z = Complex::from_polar(radius, current.angle);
                    return Err(Error::Proximity {
                        re: z.re.as_f64(),
                        im: z.im.as_f64(),
                    });
                }
                samples += 1;
                if samples > MAX_CONTOUR_SAMPLES {
                    return Err(Error::NonConvergence {
                        op: "count_zeros_contour",
                        reason: format!("phase refinement exceeded {MAX_CONTOUR_SAMPLES} samples"),
                    });
                }
                let mid = evaluate((current.angle + next.angle) / T::lit(2.0))?;
                pending.push(mid);
            } else {
                phase += d;
                if next.log.re < stats.min_log {
                    stats.min_log = next.log.re;
                    stats.min_angle = next.angle;
                }
                stats.max_log = stats.max_log.max(next.log.re);
                current = next;
                pending.pop();
            }
        }
        arcs.push(stats);
        start = end;
    }

    let threshold = T::lit(PROXIMITY_RATIO).ln();
    for (j, arc) in arcs.iter().enumerate() {
        let reference = (0..=2 * PROXIMITY_NEIGHBOURS)
            .map(|o| arcs[(j + n + o - PROXIMITY_NEIGHBOURS) % n].max_log)
            .fold(T::neg_infinity(), T::max);
        if arc.min_log < reference + threshold {
            let z = Complex::from_polar(radius, arc.min_angle);
            return Err(Error::Proximity {
                re: z.re.as_f64(),
                im: z.im.as_f64(),
            });
        }
    }

    let winding = (phase / T::TAU())
        .round()
        .to_i64()
        .ok_or(Error::NonFinite {
            op: "count_zeros_contour",
        })?;
    if winding < 0 {
        return Err(Error::NonConvergence {
            op: "count_zeros_contour",
            reason: format!(
                "negative winding number {winding}; the handle is not analytic inside the circle"
            ),
        });
    }
    if winding % 2 != 0 {
        return Err(Error::OddWinding { winding });
    }
    Ok((winding / 2) as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transforms::step::{axial_product, StepFunction};
    use std::f64::consts::FRAC_PI_2;

    type C = Complex<f64>;

    #[test]
    fn cosh_zero_counts() {
        assert_eq!(
            count_zeros_contour(|z: C| Ok(z.cosh()), 2.0, 64).unwrap(),
            1
        );
        assert_eq!(
            count_zeros_contour(|z: C| Ok(z.cosh()), 8.0, 64).unwrap(),
            3
        );
        assert_eq!(
            count_zeros_contour(|z: C| Ok(z.cosh()), 1.0, 64).unwrap(),
            0
        );
    }

    #[test]
    fn synthetic_axial_product() {
        let phi = StepFunction::from_positions([1.0, 2.0, 3.0]).unwrap();
        let n = count_zeros_contour(|z| axial_product(1.0, &phi, z), 2.5, 64).unwrap();
        assert_eq!(n, 2);
    }

    #[test]
    fn multiplicities_count_with_weight() {
        let phi = StepFunction::new(vec![
            crate::transforms::Jump {
                position: 1.0,
                weight: 3,
            },
            crate::transforms::Jump {
                position: 4.0,
                weight: 2,
            },
        ])
        .unwrap();
        let n = count_zeros_contour(|z| axial_product(2.0, &phi, z), 2.0, 64).unwrap();
        assert_eq!(n, 3);
    }

    #[test]
    fn log_handle_with_huge_modulus() {
        // ln cosh(z) on two different branches, scaled to a zero of multiplicity 7
        let count = count_zeros_contour_log(
            |z: C| {
                let lc = z - C::new(std::f64::consts::LN_2, 0.0)
                    + (C::new(1.0, 0.0) + (-2.0 * z).exp()).ln();
                let lc = if z.re < 0.0 { (z.cosh()).ln() } else { lc };
                Ok(lc * 7.0)
            },
            3.0,
            256,
        );
        assert_eq!(count.unwrap(), 7);
    }

    #[test]
    fn zero_on_contour_is_reported() {
        let err = count_zeros_contour(|z: C| Ok(z.cosh()), FRAC_PI_2, 64).unwrap_err();
        assert!(matches!(err, Error::Proximity { .. }), "{err:?}");
    }

    #[test]
    fn odd_function_is_rejected() {
        let err = count_zeros_contour(|z: C| Ok(z.tanh()), 1.0, 64).unwrap_err();
        assert!(matches!(err, Error::OddWinding { winding: 1 }), "{err:?}");
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(count_zeros_contour(|z: C| Ok(z), 1.0, 10).is_err());
        assert!(count_zeros_contour(|z: C| Ok(z), -1.0, 64).is_err());
    }
}
