use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by the library. Every variant carries the measured quantity
/// that caused the rejection so callers can report it verbatim.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch in {op}: {detail}")]
    DimensionMismatch { op: &'static str, detail: String },

    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("entry {index} is not finite")]
    NonFinite { index: usize },

    #[error("kronecker product would have {rows} rows, above the limit of {limit}")]
    TooLarge { rows: usize, limit: usize },

    #[error("matrix is not Hermitian: residual {residual:e} exceeds {bound:e}")]
    NotHermitian { residual: f64, bound: f64 },

    #[error(
        "eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_diagonal:e})"
    )]
    NoConvergence { sweeps: usize, off_diagonal: f64 },

    #[error("{which} is not positive semi-definite: minimum eigenvalue {min_eig:e}")]
    NotPsd { which: &'static str, min_eig: f64 },

    #[error("matrices {first} and {second} do not commute: commutator norm {residual:e}")]
    NotCommuting {
        first: usize,
        second: usize,
        residual: f64,
    },

    #[error("simultaneous diagonalization failed after {attempts} attempts (worst residual {residual:e})")]
    SimultaneousDiagFailed { attempts: usize, residual: f64 },

    #[error("trace is {trace:e}; {detail}")]
    BadTrace { trace: f64, detail: &'static str },

    #[error("sequence {which} is not sorted in descending order at position {position}")]
    Unsorted {
        which: &'static str,
        position: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
