use thiserror::Error;

/// Failure modes shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error in {op}: {reason}")]
    Domain { op: &'static str, reason: String },

    #[error("pole of zeta at s = 1")]
    Pole,

    #[error("argument outside supported range in {op}: {reason}")]
    Range { op: &'static str, reason: String },

    #[error("singularity in {op}: argument coincides with a zero at ordinate {position}")]
    Singularity { op: &'static str, position: f64 },

    #[error("{op} did not converge: {reason}")]
    NonConvergence { op: &'static str, reason: String },

    #[error("non-finite value produced by {op}")]
    NonFinite { op: &'static str },

    #[error("zero of the function lies on or next to the contour near z = {re} + {im}i")]
    Proximity { re: f64, im: f64 },

    #[error(
        "winding number {winding} is odd; the function is not even or the contour is degenerate"
    )]
    OddWinding { winding: i64 },

    #[error("two sign changes within one scan step near t = {t}; reduce the step")]
    Cluster { t: f64 },

    #[error(
        "zero scan found {scanned} zeros but the contour count is {contour} at radius {radius}"
    )]
    CountMismatch {
        scanned: usize,
        contour: usize,
        radius: f64,
    },

    #[error("zero list reaches t = {t_max}, but t >= {required} is needed")]
    InsufficientZeros { t_max: f64, required: f64 },

    #[error("invalid input to {op}: {reason}")]
    Invalid { op: &'static str, reason: String },

    #[error("zero file, line {line}: {reason}")]
    Parse { line: usize, reason: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(op: &'static str, reason: impl Into<String>) -> Error {
    Error::Domain {
        op,
        reason: reason.into(),
    }
}

pub(crate) fn invalid(op: &'static str, reason: impl Into<String>) -> Error {
    Error::Invalid {
        op,
        reason: reason.into(),
    }
}
