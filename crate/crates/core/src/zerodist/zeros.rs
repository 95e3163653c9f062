use std::fmt::Write as _;
use std::path::Path;

use crate::error::{invalid, Error, Result};
use crate::scalar::Scalar;
use crate::specfun::{log_xi_any, xi_line_scaled, MAX_ZETA_IMAG};
use crate::tolerances::ZERO_BRACKET_WIDTH;
use crate::transforms::{count_zeros_contour_log, StepFunction};

/// Where a zero list came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroSource {
    Computed,
    File,
}

/// Ordinates `t` of the zeros `1/2 + it` of ζ with `0 < t < t_max`, ascending.
///
/// `t_max` is the height up to which the list is complete.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroList<T> {
    ordinates: Vec<T>,
    t_max: T,
    source: ZeroSource,
}

/// Start of the scan; ξ has no zero on the line below `t ≈ 14.13`.
pub const SCAN_START: f64 = 10.0;

impl<T: Scalar> ZeroList<T> {
    pub fn new(ordinates: Vec<T>, t_max: T, source: ZeroSource) -> Result<Self> {
        if !(t_max.is_finite() && t_max > T::zero()) {
            return Err(invalid("ZeroList", "t_max must be positive"));
        }
        if ordinates.iter().any(|t| !(t.is_finite() && *t > T::zero())) {
            return Err(invalid("ZeroList", "ordinates must be positive and finite"));
        }
        if ordinates.windows(2).any(|w| w[1] <= w[0]) {
            return Err(invalid("ZeroList", "ordinates must be strictly ascending"));
        }
        if ordinates.last().is_some_and(|&t| t >= t_max) {
            return Err(invalid("ZeroList", "every ordinate must lie below t_max"));
        }
        Ok(Self {
            ordinates,
            t_max,
            source,
        })
    }

    pub fn ordinates(&self) -> &[T] {
        &self.ordinates
    }

    pub fn t_max(&self) -> T {
        self.t_max
    }

    pub fn source(&self) -> ZeroSource {
        self.source
    }

    pub fn len(&self) -> usize {
        self.ordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }

    /// Number of ordinates `≤ k`: the actual counting function `φ₁(k)`.
    pub fn count_up_to(&self, k: T) -> usize {
        self.ordinates.partition_point(|&t| t <= k)
    }

    /// The zeros below `t`, complete up to `min(t, t_max)`.
    pub fn truncated(&self, t: T) -> Self {
        let t_max = t.min(self.t_max);
        Self {
            ordinates: self
                .ordinates
                .iter()
                .copied()
                .filter(|&k| k < t_max)
                .collect(),
            t_max,
            source: self.source,
        }
    }

    /// Unit jumps at every ordinate.
    pub fn to_step_function(&self) -> StepFunction<T> {
        StepFunction::from_positions(self.ordinates.iter().copied()).expect("zero list invariants")
    }

    /// Text form: a `# t_max=` header and one ordinate per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# nontrivial zeros 1/2 + it of zeta, ordinates t");
        let _ = writeln!(out, "# t_max={}", self.t_max.as_f64());
        for t in &self.ordinates {
            let _ = writeln!(out, "{:.12}", t.as_f64());
        }
        out
    }

    /// Parses the text form. Lines starting with `#` are comments, except a
    /// `# t_max=<value>` header; without one the list is taken to be complete
    /// just past its last entry.
    pub fn parse(text: &str) -> Result<Self> {
        let mut ordinates = Vec::new();
        let mut t_max: Option<T> = None;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lineno = i + 1;
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                if let Some(v) = comment.trim().strip_prefix("t_max=") {
                    let v: f64 = v.trim().parse().map_err(|_| Error::Parse {
                        line: lineno,
                        reason: format!("bad t_max value {v:?}"),
                    })?;
                    t_max = Some(T::lit(v));
                }
                continue;
            }
            let v: f64 = line.parse().map_err(|_| Error::Parse {
                line: lineno,
                reason: format!("not a number: {line:?}"),
            })?;
            let v = T::lit(v);
            if !(v.is_finite() && v > T::zero()) {
                return Err(Error::Parse {
                    line: lineno,
                    reason: "ordinate must be positive".into(),
                });
            }
            if ordinates.last().is_some_and(|&last| v <= last) {
                return Err(Error::Parse {
                    line: lineno,
                    reason: "ordinates must be strictly ascending".into(),
                });
            }
            ordinates.push(v);
        }
        let t_max = match t_max {
            Some(t) => t,
            None => match ordinates.last() {
                Some(&last) => last * (T::one() + T::lit(4.0) * T::epsilon()),
                None => {
                    return Err(Error::Parse {
                        line: 0,
                        reason: "no ordinates and no t_max header".into(),
                    })
                }
            },
        };
        Self::new(ordinates, t_max, ZeroSource::File)
    }

    pub fn read_file(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn write_file(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_text())?;
        Ok(())
    }
}

/// Number of zeros `it` of `ξ(z)` with `0 < t < radius`, by the argument principle.
pub fn count_zeros_xi<T: Scalar>(radius: T) -> Result<usize> {
    let samples = (T::lit(8.0) * radius)
        .ceil()
        .to_usize()
        .unwrap_or(usize::MAX)
        .max(256);
    count_zeros_contour_log(log_xi_any, radius, samples)
}

fn scan_values<T: Scalar>(grid: &[T], jobs: usize) -> Result<Vec<T>> {
    let jobs = jobs.clamp(1, grid.len().max(1));
    if jobs == 1 {
        return grid.iter().map(|&t| xi_line_scaled(t)).collect();
    }
    let chunk = grid.len().div_ceil(jobs);
    let parts: Vec<Result<Vec<T>>> = std::thread::scope(|scope| {
        let handles: Vec<_> = grid
            .chunks(chunk)
            .map(|part| {
                scope.spawn(move || {
                    part.iter()
                        .map(|&t| xi_line_scaled(t))
                        .collect::<Result<Vec<T>>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("scan worker panicked"))
            .collect()
    });
    let mut values = Vec::with_capacity(grid.len());
    for part in parts {
        values.extend(part?);
    }
    Ok(values)
}

fn bisect<T: Scalar>(mut lo: T, mut hi: T, mut f_lo: T) -> Result<T> {
    let width = T::lit(ZERO_BRACKET_WIDTH);
    while hi - lo > width {
        let mid = (lo + hi) / T::lit(2.0);
        if mid <= lo || mid >= hi {
            break;
        }
        let f_mid = xi_line_scaled(mid)?;
        if f_mid == T::zero() {
            return Ok(mid);
        }
        if (f_mid > T::zero()) == (f_lo > T::zero()) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo + hi) / T::lit(2.0))
}

const CLUSTER_SUBSAMPLES: usize = 16;

/// Zeros of `Ξ(t)` on `[10, t_max]`.
///
/// The scan evaluates the sign of `Ξ` on a grid with spacing `step`, splitting
/// the grid over `jobs` threads, and bisects every sign change. A local
/// minimum of `|Ξ|` without a sign change is resampled; a hidden pair of sign
/// changes there is reported as [`Error::Cluster`]. Finally the count is
/// compared with the argument-principle count inside `|z| = t_max`, which
/// would also expose zeros off the critical line.
pub fn find_zeros<T: Scalar>(t_max: T, step: T, jobs: usize) -> Result<ZeroList<T>> {
    const OP: &str = "find_zeros";
    if !(t_max > T::lit(14.0) && t_max <= T::lit(MAX_ZETA_IMAG)) {
        return Err(invalid(OP, "t_max must lie in (14, 1000]"));
    }
    if !(step > T::zero() && step <= T::lit(0.5)) {
        return Err(invalid(OP, "step must lie in (0, 0.5]"));
    }
    let start = T::lit(SCAN_START);
    let mut grid = Vec::new();
    let mut i = 0usize;
    loop {
        let t = start + T::from_count(i) * step;
        if t >= t_max {
            break;
        }
        grid.push(t);
        i += 1;
    }
    grid.push(t_max);
    let values = scan_values(&grid, jobs)?;

    let mut ordinates = Vec::new();
    for i in 0..grid.len() - 1 {
        let (a, b) = (values[i], values[i + 1]);
        if a == T::zero() {
            if grid[i] < t_max {
                ordinates.push(grid[i]);
            }
            continue;
        }
        if (a > T::zero()) != (b > T::zero()) && b != T::zero() {
            ordinates.push(bisect(grid[i], grid[i + 1], a)?);
            continue;
        }
        if i > 0 {
            let prev = values[i - 1];
            let same_sign =
                (prev > T::zero()) == (a > T::zero()) && (b > T::zero()) == (a > T::zero());
            if same_sign && a.abs() < prev.abs() && a.abs() < b.abs() {
                check_hidden_pair(grid[i - 1], grid[i + 1], a)?;
            }
        }
    }

    let contour = count_zeros_xi(t_max)?;
    if contour != ordinates.len() {
        return Err(Error::CountMismatch {
            scanned: ordinates.len(),
            contour,
            radius: t_max.as_f64(),
        });
    }
    ZeroList::new(ordinates, t_max, ZeroSource::Computed)
}

fn check_hidden_pair<T: Scalar>(lo: T, hi: T, reference: T) -> Result<()> {
    let positive = reference > T::zero();
    for j in 1..CLUSTER_SUBSAMPLES {
        let t = lo + (hi - lo) * T::from_count(j) / T::from_count(CLUSTER_SUBSAMPLES);
        if (xi_line_scaled(t)? > T::zero()) != positive {
            return Err(Error::Cluster { t: t.as_f64() });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_zero() {
        let zeros = find_zeros(20.0_f64, 0.25, 1).unwrap();
        assert_eq!(zeros.len(), 1);
        assert!((zeros.ordinates()[0] - 14.134_725_141_734_695).abs() < 1e-8);
        assert_eq!(zeros.source(), ZeroSource::Computed);
    }

    #[test]
    fn count_and_parallel_determinism() {
        let serial = find_zeros(50.0_f64, 0.25, 1).unwrap();
        let parallel = find_zeros(50.0, 0.25, 4).unwrap();
        assert_eq!(serial.len(), 10);
        assert!((serial.ordinates()[9] - 49.773_832_477_672_3).abs() < 1e-8);
        assert_eq!(serial, parallel);
    }

    #[test]
    fn contour_count_of_xi() {
        assert_eq!(count_zeros_xi(14.0).unwrap(), 0);
        assert_eq!(count_zeros_xi(30.0).unwrap(), 3);
    }

    #[test]
    fn preconditions() {
        assert!(find_zeros(14.0, 0.25, 1).is_err());
        assert!(find_zeros(1000.5, 0.25, 1).is_err());
        assert!(find_zeros(30.0, 0.6, 1).is_err());
        assert!(find_zeros(30.0, 0.0, 1).is_err());
    }

    #[test]
    fn text_round_trip() {
        let list = ZeroList::new(
            vec![14.134725141735, 21.022039638772],
            25.0,
            ZeroSource::Computed,
        )
        .unwrap();
        let back = ZeroList::<f64>::parse(&list.to_text()).unwrap();
        assert_eq!(back.ordinates(), list.ordinates());
        assert_eq!(back.t_max(), 25.0);
        assert_eq!(back.source(), ZeroSource::File);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            ZeroList::<f64>::parse("# c\n14.1\n13.0\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            ZeroList::<f64>::parse("abc"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(ZeroList::<f64>::parse("# t_max=20\n21.0\n").is_err());
        let list = ZeroList::<f64>::parse("14.13\n21.02\n").unwrap();
        assert!(list.t_max() > 21.02);
    }

    #[test]
    fn counting_and_truncation() {
        let list = ZeroList::new(vec![1.0, 2.0, 3.0], 4.0, ZeroSource::File).unwrap();
        assert_eq!(list.count_up_to(2.0), 2);
        assert_eq!(list.count_up_to(0.5), 0);
        let short = list.truncated(2.5);
        assert_eq!(short.len(), 2);
        assert_eq!(short.t_max(), 2.5);
    }
}
