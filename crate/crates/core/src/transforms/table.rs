use num_complex::Complex;

use super::density::{DensityForm, DensityKind};
use super::numeric::{transform_numeric, TransformEvaluation};
use crate::error::{domain, Error, Result};
use crate::scalar::Scalar;
use crate::tolerances::{TABLE_ABS_TOL, TABLE_ASYMPTOTIC_TOL, TABLE_ERROR_FACTOR};

/// Rows of the transform table, numbered 1 to 9.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableRow {
    /// `u(k−a)` ↦ `ln(1 + z²/a²)`
    UnitStep = 1,
    /// `k u(k−a)` ↦ `πz − 2a + O(z⁻²)`
    KStep,
    /// `ln k · u(k−1)` ↦ `(ln z)² + π²/12 − ½ Σ (−1)^{m+1}/(m² z^{2m})`
    LnK,
    /// `k ln k · u(k−a)` ↦ `πz ln z − 2a(ln a − 1) + O(z⁻²)`
    KLnK,
    /// `ln k / k · u(k−1)` ↦ `2[1 − Σ (−1)^{m+1}/((2m−1)² z^{2m})] − π ln z / z`
    LnKOverK,
    /// `k√k` ↦ `π√2 z√z`
    KSqrtK,
    /// `k√k ln k` ↦ `(π z√z/√2)(2 ln z + π)`
    KSqrtKLnK,
    /// `u(k−a)/k` ↦ `2/a − π/z + (2/z) arctan(a/z)`
    InvK,
    /// `u(k−a)/k²` ↦ `1/a² − (1/z²) ln(1 + z²/a²)`
    InvK2,
}

impl TableRow {
    pub const ALL: [TableRow; 9] = [
        TableRow::UnitStep,
        TableRow::KStep,
        TableRow::LnK,
        TableRow::KLnK,
        TableRow::LnKOverK,
        TableRow::KSqrtK,
        TableRow::KSqrtKLnK,
        TableRow::InvK,
        TableRow::InvK2,
    ];

    pub fn from_index(row: u8) -> Result<Self> {
        match row {
            1..=9 => Ok(Self::ALL[usize::from(row - 1)]),
            _ => Err(domain("table_row", format!("row {row} is not in 1..=9"))),
        }
    }

    pub fn index(self) -> u8 {
        self as u8
    }

    /// Rows whose closed form drops an `O(z⁻²)` remainder.
    pub fn is_asymptotic(self) -> bool {
        matches!(self, TableRow::KStep | TableRow::KLnK)
    }

    /// Rows whose series closed form only holds for the cutoff `a = 1`.
    pub fn requires_unit_cutoff(self) -> bool {
        matches!(self, TableRow::LnK | TableRow::LnKOverK)
    }

    pub fn uses_cutoff(self) -> bool {
        !matches!(self, TableRow::KSqrtK | TableRow::KSqrtKLnK)
    }

    /// The density `φ(k)` of this row.
    pub fn density<T: Scalar>(self, a: T) -> Result<DensityForm<T>> {
        let kind = match self {
            TableRow::UnitStep => DensityKind::UnitStep { a },
            TableRow::KStep => DensityKind::KStep { a },
            TableRow::LnK => DensityKind::LnKStep { a },
            TableRow::KLnK => DensityKind::KLnKStep { a },
            TableRow::LnKOverK => DensityKind::LnKOverKStep { a },
            TableRow::KSqrtK => DensityKind::KSqrtK,
            TableRow::KSqrtKLnK => DensityKind::KSqrtKLnK,
            TableRow::InvK => DensityKind::InvKStep { a },
            TableRow::InvK2 => DensityKind::InvK2Step { a },
        };
        DensityForm::unit(kind)
    }
}

const SERIES_MIN_Z: f64 = 1.05;
const SERIES_MIN_TERMS: usize = 20;
const SERIES_MAX_TERMS: usize = 100_000;

fn check_domain<T: Scalar>(row: TableRow, a: T, z: Complex<T>) -> Result<()> {
    const OP: &str = "table_row_closed_form";
    if !(z.re > T::zero()) || !z.im.is_finite() || !z.re.is_finite() {
        return Err(domain(OP, "requires re(z) > 0"));
    }
    if row.uses_cutoff() && !(a.is_finite() && a > T::zero()) {
        return Err(domain(OP, "cutoff a must be positive"));
    }
    match row {
        TableRow::KLnK if z.norm() < T::one() => Err(domain(OP, "row 4 requires |z| >= 1")),
        TableRow::LnK | TableRow::LnKOverK => {
            if (a - T::one()).abs() > T::lit(1e-12) {
                Err(domain(
                    OP,
                    format!("row {} closed form holds only for a = 1", row.index()),
                ))
            } else if z.norm() < T::lit(SERIES_MIN_Z) {
                Err(domain(OP, "series rows require |z| >= 1.05"))
            } else {
                Ok(())
            }
        }
        _ => Ok(()),
    }
}

/// `Σ_{m≥1} (−1)^{m+1} w^m / d(m)²` with `w = z⁻²`.
fn alternating_series<T: Scalar>(z: Complex<T>, d: impl Fn(usize) -> T) -> Result<Complex<T>> {
    let w = (z * z).inv();
    let mut power = Complex::new(T::one(), T::zero());
    let mut sum = Complex::new(T::zero(), T::zero());
    for m in 1..=SERIES_MAX_TERMS {
        power *= w;
        let dm = d(m);
        let term = power / (dm * dm);
        if m % 2 == 1 {
            sum += term;
        } else {
            sum -= term;
        }
        if m >= SERIES_MIN_TERMS && term.norm() < T::lit(1e-16) * sum.norm() {
            return Ok(sum);
        }
    }
    Err(Error::NonConvergence {
        op: "table_row_closed_form",
        reason: format!("series not converged after {SERIES_MAX_TERMS} terms"),
    })
}

/// Closed form of a table row at `z`, principal branches throughout.
///
/// Rows 2 and 4 return the leading terms only; [`table_remainder_bound`]
/// bounds what is dropped. Rows 3 and 5 are exact series valid for the cutoff
/// `a = 1` only and reject any other `a`. Rows 6 and 7 ignore `a`.
pub fn table_row_closed_form<T: Scalar>(row: TableRow, a: T, z: Complex<T>) -> Result<Complex<T>> {
    check_domain(row, a, z)?;
    let one = Complex::new(T::one(), T::zero());
    let pi = T::PI();
    let two = T::lit(2.0);
    let ln_z = z.ln();
    let value = match row {
        TableRow::UnitStep => (one + z * z / (a * a)).ln(),
        TableRow::KStep => z * pi - two * a,
        TableRow::LnK => {
            let s = alternating_series(z, T::from_count)?;
            ln_z * ln_z + pi * pi / T::lit(12.0) - s / two
        }
        TableRow::KLnK => z * ln_z * pi - two * a * (a.ln() - T::one()),
        TableRow::LnKOverK => {
            let s = alternating_series(z, |m| T::from_count(2 * m - 1))?;
            (one - s) * two - ln_z * pi / z
        }
        TableRow::KSqrtK => z * z.sqrt() * (pi * T::SQRT_2()),
        TableRow::KSqrtKLnK => z * z.sqrt() * (pi / T::SQRT_2()) * (ln_z * two + pi),
        TableRow::InvK => {
            one * (two / a) - (one * pi) / z + (Complex::new(a, T::zero()) / z).atan() * two / z
        }
        TableRow::InvK2 => one / (a * a) - (one + z * z / (a * a)).ln() / (z * z),
    };
    if value.re.is_finite() && value.im.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite {
            op: "table_row_closed_form",
        })
    }
}

/// Bound on the dropped `O(z⁻²)` part of rows 2 and 4 (zero for exact rows).
///
/// Row 2: the exact transform is `πz − 2z arctan(a/z)`; the arctan series
/// gives `|2z arctan(a/z) − 2a| ≤ (2a/3) r/(1 − r)`, `r = a²/|z|²`.
/// Row 4: the dropped part is `(2a³/(3z²))(ln a − 1/3) + …`, bounded by
/// `2a(|ln a|/3 + 1/9) r/(1 − r)`. Infinite when `|z| ≤ a`.
pub fn table_remainder_bound<T: Scalar>(row: TableRow, a: T, z: Complex<T>) -> T {
    if !row.is_asymptotic() {
        return T::zero();
    }
    let r = a * a / z.norm_sqr();
    if r >= T::one() {
        return T::infinity();
    }
    let geometric = r / (T::one() - r);
    let two = T::lit(2.0);
    match row {
        TableRow::KStep => two * a / T::lit(3.0) * geometric,
        _ => two * a * (a.ln().abs() / T::lit(3.0) + T::lit(1.0 / 9.0)) * geometric,
    }
}

/// Outcome of comparing a closed form with quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableCheck<T> {
    pub row: TableRow,
    pub a: T,
    pub z: Complex<T>,
    pub closed: Complex<T>,
    pub numeric: TransformEvaluation<T>,
    pub tolerance: T,
    pub agree: bool,
}

impl<T: Scalar> TableCheck<T> {
    pub fn difference(&self) -> T {
        (self.closed - self.numeric.value).norm()
    }
}

/// Evaluates a row in closed form and by [`transform_numeric`].
///
/// Agreement means `|closed − numeric| ≤ max(1e−6, 3·error estimate,
/// remainder bound)`. For rows 2 and 4 the remainder bound must itself be
/// at most `1e−3`, otherwise `z` is rejected as too small.
pub fn verify_table_row<T: Scalar>(row: TableRow, a: T, z: Complex<T>) -> Result<TableCheck<T>> {
    let closed = table_row_closed_form(row, a, z)?;
    let remainder = table_remainder_bound(row, a, z);
    if row.is_asymptotic() && !(remainder <= T::lit(TABLE_ASYMPTOTIC_TOL)) {
        return Err(domain(
            "verify_table_row",
            format!(
                "row {} remainder bound {:e} exceeds {:e}; increase |z|",
                row.index(),
                remainder.as_f64(),
                TABLE_ASYMPTOTIC_TOL
            ),
        ));
    }
    let density = row.density(if row.uses_cutoff() { a } else { T::one() })?;
    let numeric = transform_numeric(&density, z)?;
    let tolerance = T::lit(TABLE_ABS_TOL)
        .max(T::lit(TABLE_ERROR_FACTOR) * numeric.abs_error_estimate)
        .max(remainder);
    let agree = (closed - numeric.value).norm() <= tolerance;
    Ok(TableCheck {
        row,
        a,
        z,
        closed,
        numeric,
        tolerance,
        agree,
    })
}
