use std::ops::Add;

use num_complex::Complex;

use crate::error::{invalid, Error, Result};
use crate::scalar::Scalar;

/// A jump of a counting function: `weight` zeros (with multiplicity) at ordinate `position`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jump<T> {
    pub position: T,
    pub weight: i64,
}

/// Right-continuous step function `φ(k) = Σ_{k_l ≤ k} w_l` with jumps at
/// strictly increasing positive ordinates.
///
/// Counting functions of zeros carry positive weights (the multiplicities);
/// signed weights only appear as intermediate terms of decompositions.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct StepFunction<T> {
    jumps: Vec<Jump<T>>,
}

impl<T: Scalar> StepFunction<T> {
    pub fn new(jumps: Vec<Jump<T>>) -> Result<Self> {
        for (i, j) in jumps.iter().enumerate() {
            if !(j.position.is_finite() && j.position > T::zero()) {
                return Err(invalid(
                    "StepFunction",
                    format!("jump {i} is not a positive ordinate"),
                ));
            }
            if j.weight == 0 {
                return Err(invalid("StepFunction", format!("jump {i} has zero weight")));
            }
        }
        if jumps.windows(2).any(|w| w[1].position <= w[0].position) {
            return Err(invalid(
                "StepFunction",
                "positions must be strictly increasing",
            ));
        }
        Ok(Self { jumps })
    }

    /// Unit jumps at the given ordinates.
    pub fn from_positions<I: IntoIterator<Item = T>>(positions: I) -> Result<Self> {
        Self::new(
            positions
                .into_iter()
                .map(|position| Jump {
                    position,
                    weight: 1,
                })
                .collect(),
        )
    }

    /// `u(k − a)` scaled by `weight`.
    pub fn unit_step(a: T, weight: i64) -> Result<Self> {
        Self::new(vec![Jump {
            position: a,
            weight,
        }])
    }

    pub fn jumps(&self) -> &[Jump<T>] {
        &self.jumps
    }

    pub fn len(&self) -> usize {
        self.jumps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.jumps.is_empty()
    }

    pub fn positions(&self) -> impl Iterator<Item = T> + '_ {
        self.jumps.iter().map(|j| j.position)
    }

    /// `φ(k)`: sum of the weights at positions `≤ k`.
    pub fn value(&self, k: T) -> i64 {
        let n = self.jumps.partition_point(|j| j.position <= k);
        self.jumps[..n].iter().map(|j| j.weight).sum()
    }

    pub fn total_weight(&self) -> i64 {
        self.jumps.iter().map(|j| j.weight).sum()
    }

    /// True when every weight is a positive multiplicity.
    pub fn is_counting(&self) -> bool {
        self.jumps.iter().all(|j| j.weight > 0)
    }

    /// Pointwise sum; coinciding positions merge and cancelled jumps disappear.
    pub fn combine(&self, other: &Self) -> Self {
        let mut out = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.jumps.len() || j < other.jumps.len() {
            let next = match (self.jumps.get(i), other.jumps.get(j)) {
                (Some(a), Some(b)) if a.position == b.position => {
                    i += 1;
                    j += 1;
                    Jump {
                        position: a.position,
                        weight: a.weight + b.weight,
                    }
                }
                (Some(a), Some(b)) if a.position < b.position => {
                    i += 1;
                    *a
                }
                (Some(_), Some(b)) => {
                    j += 1;
                    *b
                }
                (Some(a), None) => {
                    i += 1;
                    *a
                }
                (None, Some(b)) => {
                    j += 1;
                    *b
                }
                (None, None) => unreachable!(),
            };
            if next.weight != 0 {
                out.push(next);
            }
        }
        Self { jumps: out }
    }
}

impl<T: Scalar> Add for &StepFunction<T> {
    type Output = StepFunction<T>;

    fn add(self, rhs: Self) -> StepFunction<T> {
        self.combine(rhs)
    }
}

/// `Σ_l w_l ln(1 + z²/k_l²)`: the transform of a step function, i.e. the
/// logarithm of the axial product with `F(0) = 1`.
pub fn transform_step<T: Scalar>(phi: &StepFunction<T>, z: Complex<T>) -> Result<Complex<T>> {
    let z2 = z * z;
    let one = Complex::new(T::one(), T::zero());
    let mut sum = Complex::new(T::zero(), T::zero());
    // smallest terms first
    for jump in phi.jumps.iter().rev() {
        let ratio = z2 / (jump.position * jump.position);
        let factor = one + ratio;
        if factor.norm() <= T::lit(4.0) * T::epsilon() * (T::one() + ratio.norm()) {
            return Err(Error::Singularity {
                op: "transform_step",
                position: jump.position.as_f64(),
            });
        }
        sum += factor.ln() * T::from_i64(jump.weight).expect("weight fits scalar");
    }
    Ok(sum)
}

/// `F(z) = F(0) Π_l (1 + z²/k_l²)^{w_l}`.
pub fn axial_product<T: Scalar>(
    f0: T,
    zeros: &StepFunction<T>,
    z: Complex<T>,
) -> Result<Complex<T>> {
    let value = transform_step(zeros, z)?.exp() * f0;
    if value.re.is_finite() && value.im.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite {
            op: "axial_product",
        })
    }
}
