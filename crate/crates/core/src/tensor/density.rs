use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::linalg::{check_tol, hermitian_eig, HermitianMatrix, MatrixC};

/// Local dimensions `(m, n)` of a bipartite space `C^m ⊗ C^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BipartiteDims {
    pub dim_a: usize,
    pub dim_b: usize,
}

impl BipartiteDims {
    pub fn new(dim_a: usize, dim_b: usize) -> Result<Self> {
        if dim_a == 0 || dim_b == 0 {
            return Err(Error::InvalidArgument(format!(
                "bipartite dimensions must be positive, got ({dim_a}, {dim_b})"
            )));
        }
        Ok(Self { dim_a, dim_b })
    }

    pub fn total(&self) -> usize {
        self.dim_a * self.dim_b
    }

    pub(crate) fn check(&self, a: &MatrixC, op: &'static str) -> Result<()> {
        if a.rows() != self.total() || a.cols() != self.total() {
            return Err(Error::DimensionMismatch {
                op,
                detail: format!(
                    "{}x{} matrix does not match dims ({}, {})",
                    a.rows(),
                    a.cols(),
                    self.dim_a,
                    self.dim_b
                ),
            });
        }
        Ok(())
    }
}

/// Unit-trace PSD operator on a bipartite space.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    matrix: HermitianMatrix,
    dims: BipartiteDims,
}

impl DensityMatrix {
    pub fn matrix(&self) -> &HermitianMatrix {
        &self.matrix
    }

    pub fn dims(&self) -> BipartiteDims {
        self.dims
    }
}

/// Validates `a` as a density matrix: square with side `m·n`, Hermitian, PSD
/// and unit trace. With `normalize`, `a` is first divided by its trace.
pub fn make_density(
    a: MatrixC,
    dims: BipartiteDims,
    tol: f64,
    normalize: bool,
) -> Result<DensityMatrix> {
    check_tol(tol)?;
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    dims.check(&a, "make_density")?;
    let mut h = HermitianMatrix::new(a, tol)?;
    if normalize {
        let trace = h.trace();
        if trace.is_nan() || trace <= 0.0 {
            return Err(Error::BadTrace {
                trace,
                detail: "normalization needs a positive trace",
            });
        }
        h = h.scaled(1.0 / trace);
    }
    let min_eig = hermitian_eig(&h, tol)?.min_eigenvalue();
    if min_eig < -tol * h.scale() {
        return Err(Error::NotPsd {
            which: "density",
            min_eig,
        });
    }
    let trace = h.trace();
    if (trace - 1.0).abs() > tol * h.scale() {
        return Err(Error::BadTrace {
            trace,
            detail: "density matrices need unit trace",
        });
    }
    Ok(DensityMatrix { matrix: h, dims })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Subsystem {
    First,
    #[default]
    Second,
}

impl FromStr for Subsystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "first" | "a" | "A" => Ok(Subsystem::First),
            "second" | "b" | "B" => Ok(Subsystem::Second),
            other => Err(Error::InvalidArgument(format!(
                "unknown subsystem {other:?}"
            ))),
        }
    }
}

impl fmt::Display for Subsystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Subsystem::First => "first",
            Subsystem::Second => "second",
        })
    }
}

/// Transposes one tensor factor. With row index `(i, k)` and column index
/// `(j, l)`, `Second` swaps `k ↔ l` (each `n×n` block is transposed) and
/// `First` swaps `i ↔ j` (blocks move across the block diagonal).
pub fn partial_transpose(
    a: &MatrixC,
    dims: BipartiteDims,
    subsystem: Subsystem,
) -> Result<MatrixC> {
    dims.check(a, "partial_transpose")?;
    let (m, n) = (dims.dim_a, dims.dim_b);
    let mut out = MatrixC::zeros(m * n, m * n);
    for i in 0..m {
        for j in 0..m {
            for k in 0..n {
                for l in 0..n {
                    out[(i * n + k, j * n + l)] = match subsystem {
                        Subsystem::Second => a[(i * n + l, j * n + k)],
                        Subsystem::First => a[(j * n + k, i * n + l)],
                    };
                }
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PptReport {
    pub is_ppt: bool,
    pub min_eig: f64,
}

/// Peres–Horodecki test: PPT iff the partial transpose has no eigenvalue
/// below `−tol·scale`.
pub fn ppt_check(rho: &DensityMatrix, tol: f64) -> Result<PptReport> {
    check_tol(tol)?;
    let pt = partial_transpose(rho.matrix(), rho.dims(), Subsystem::Second)?;
    let pt = HermitianMatrix::new(pt, tol)?;
    let min_eig = hermitian_eig(&pt, tol)?.min_eigenvalue();
    Ok(PptReport {
        is_ppt: min_eig >= -tol * pt.scale(),
        min_eig,
    })
}
