use crate::error::{invalid, Result};
use crate::scalar::Scalar;

/// How a density behaves beyond the finite integration window.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TailBehaviour<T> {
    /// Monotone or slowly varying growth below `k²`; handled by a substitution
    /// that maps the tail onto a finite interval.
    Smooth,
    /// Zero-mean periodic oscillation; the tail is cut at a whole number of
    /// periods and bounded through `|∫_K^k φ| ≤ antiderivative_bound`.
    Periodic { period: T, antiderivative_bound: T },
}

/// A real counting density `φ(k)`, `k ≥ 0`, with `|φ(k)| < C k^α`, `α < 2`.
pub trait Density<T: Scalar> {
    fn value(&self, k: T) -> T;

    /// `φ` vanishes on `[0, support_start)`.
    fn support_start(&self) -> T {
        T::zero()
    }

    /// Points in `(support_start, upto)` where `φ` or `φ'` is discontinuous.
    fn breakpoints(&self, _upto: T) -> Vec<T> {
        Vec::new()
    }

    fn tail(&self) -> TailBehaviour<T> {
        TailBehaviour::Smooth
    }
}

/// The parametrized densities of the transform table, the zero-mean sawtooth
/// and a linear ramp used to approximate a unit step.
///
/// `*Step` kinds are multiplied by `u(k − a)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DensityKind<T> {
    UnitStep {
        a: T,
    },
    KStep {
        a: T,
    },
    LnKStep {
        a: T,
    },
    KLnKStep {
        a: T,
    },
    LnKOverKStep {
        a: T,
    },
    KSqrtK,
    KSqrtKLnK,
    InvKStep {
        a: T,
    },
    InvK2Step {
        a: T,
    },
    /// `−(k/P − round(k/P))`: odd, period `P`, jumps of −1 at `(j + 1/2)P`.
    Sawtooth {
        period: T,
    },
    /// 0 below `a`, rises linearly to 1 over `[a, a + width]`, then 1.
    Ramp {
        a: T,
        width: T,
    },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityForm<T> {
    kind: DensityKind<T>,
    scale: T,
}

fn positive<T: Scalar>(x: T, what: &str) -> Result<()> {
    if x.is_finite() && x > T::zero() {
        Ok(())
    } else {
        Err(invalid(
            "DensityForm",
            format!("{what} must be positive and finite"),
        ))
    }
}

impl<T: Scalar> DensityForm<T> {
    pub fn new(kind: DensityKind<T>, scale: T) -> Result<Self> {
        if !scale.is_finite() {
            return Err(invalid("DensityForm", "scale must be finite"));
        }
        match kind {
            DensityKind::UnitStep { a }
            | DensityKind::KStep { a }
            | DensityKind::LnKStep { a }
            | DensityKind::KLnKStep { a }
            | DensityKind::LnKOverKStep { a }
            | DensityKind::InvKStep { a }
            | DensityKind::InvK2Step { a } => positive(a, "cutoff a")?,
            DensityKind::KSqrtK | DensityKind::KSqrtKLnK => {}
            DensityKind::Sawtooth { period } => positive(period, "period")?,
            DensityKind::Ramp { a, width } => {
                positive(a, "cutoff a")?;
                positive(width, "ramp width")?;
            }
        }
        Ok(Self { kind, scale })
    }

    /// Unit-scale density.
    pub fn unit(kind: DensityKind<T>) -> Result<Self> {
        Self::new(kind, T::one())
    }

    pub fn kind(&self) -> DensityKind<T> {
        self.kind
    }

    pub fn scale(&self) -> T {
        self.scale
    }

    pub fn with_scale(self, scale: T) -> Result<Self> {
        Self::new(self.kind, scale)
    }

    fn shape(&self, k: T) -> T {
        let zero = T::zero();
        let below = |a: T| k < a;
        match self.kind {
            DensityKind::UnitStep { a } => {
                if below(a) {
                    zero
                } else {
                    T::one()
                }
            }
            DensityKind::KStep { a } => {
                if below(a) {
                    zero
                } else {
                    k
                }
            }
            DensityKind::LnKStep { a } => {
                if below(a) {
                    zero
                } else {
                    k.ln()
                }
            }
            DensityKind::KLnKStep { a } => {
                if below(a) {
                    zero
                } else {
                    k * k.ln()
                }
            }
            DensityKind::LnKOverKStep { a } => {
                if below(a) {
                    zero
                } else {
                    k.ln() / k
                }
            }
            DensityKind::KSqrtK => {
                if k <= zero {
                    zero
                } else {
                    k * k.sqrt()
                }
            }
            DensityKind::KSqrtKLnK => {
                if k <= zero {
                    zero
                } else {
                    k * k.sqrt() * k.ln()
                }
            }
            DensityKind::InvKStep { a } => {
                if below(a) {
                    zero
                } else {
                    k.recip()
                }
            }
            DensityKind::InvK2Step { a } => {
                if below(a) {
                    zero
                } else {
                    (k * k).recip()
                }
            }
            DensityKind::Sawtooth { period } => {
                let u = k / period;
                -(u - u.round())
            }
            DensityKind::Ramp { a, width } => {
                if below(a) {
                    zero
                } else if k < a + width {
                    (k - a) / width
                } else {
                    T::one()
                }
            }
        }
    }
}

impl<T: Scalar> Density<T> for DensityForm<T> {
    fn value(&self, k: T) -> T {
        if k < T::zero() {
            return T::zero();
        }
        self.scale * self.shape(k)
    }

    fn support_start(&self) -> T {
        match self.kind {
            DensityKind::UnitStep { a }
            | DensityKind::KStep { a }
            | DensityKind::LnKStep { a }
            | DensityKind::KLnKStep { a }
            | DensityKind::LnKOverKStep { a }
            | DensityKind::InvKStep { a }
            | DensityKind::InvK2Step { a }
            | DensityKind::Ramp { a, .. } => a,
            DensityKind::KSqrtK | DensityKind::KSqrtKLnK | DensityKind::Sawtooth { .. } => {
                T::zero()
            }
        }
    }

    fn breakpoints(&self, upto: T) -> Vec<T> {
        match self.kind {
            DensityKind::Ramp { a, width } if a + width < upto => vec![a + width],
            DensityKind::Sawtooth { period } => {
                let half = T::lit(0.5);
                (0..)
                    .map(|j| (T::from_count(j) + half) * period)
                    .take_while(|&k| k < upto)
                    .collect()
            }
            _ => Vec::new(),
        }
    }

    fn tail(&self) -> TailBehaviour<T> {
        match self.kind {
            // Starting from a multiple of P the antiderivative reaches its
            // extreme −P/8 half a period later.
            DensityKind::Sawtooth { period } => TailBehaviour::Periodic {
                period,
                antiderivative_bound: period / T::lit(8.0) * self.scale.abs(),
            },
            _ => TailBehaviour::Smooth,
        }
    }
}
