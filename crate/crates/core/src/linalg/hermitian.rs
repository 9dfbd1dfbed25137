use std::ops::Deref;

use crate::error::{Error, Result};
use crate::linalg::MatrixC;

/// Tolerance used when callers do not supply one.
pub const DEFAULT_TOL: f64 = 1e-10;

/// `max(1, ‖A‖_F)`: the scale every relative tolerance in the crate is measured against.
pub fn scale_of(a: &MatrixC) -> f64 {
    a.frobenius_norm().max(1.0)
}

/// A square matrix that passed the Hermiticity test.
///
/// The measured residual `‖A − A†‖_F` is kept alongside the entries; small
/// asymmetries within tolerance are not repaired.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    inner: MatrixC,
    residual: f64,
}

impl HermitianMatrix {
    /// Accepts `a` when `‖A − A†‖_F ≤ tol·max(1, ‖A‖_F)`.
    pub fn new(a: MatrixC, tol: f64) -> Result<Self> {
        check_tol(tol)?;
        if !a.is_square() {
            return Err(Error::NotSquare {
                rows: a.rows(),
                cols: a.cols(),
            });
        }
        let residual = a.hermiticity_residual();
        let bound = tol * scale_of(&a);
        if residual > bound {
            return Err(Error::NotHermitian { residual, bound });
        }
        Ok(Self { inner: a, residual })
    }

    /// Replaces `a` by `(A + A†)/2`. Only used when the caller opts in.
    pub fn symmetrize(a: MatrixC) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::NotSquare {
                rows: a.rows(),
                cols: a.cols(),
            });
        }
        let sym = (&a + &a.conj_transpose()).scale(0.5);
        let residual = sym.hermiticity_residual();
        Ok(Self {
            inner: sym,
            residual,
        })
    }

    /// Wraps a matrix that is Hermitian by construction (e.g. `Q·diag(d)·Q†`).
    /// Roundoff asymmetry is folded away so downstream checks see an exact
    /// Hermitian matrix.
    pub(crate) fn from_constructed(a: MatrixC) -> Self {
        debug_assert!(a.is_square());
        let sym = (&a + &a.conj_transpose()).scale(0.5);
        Self {
            inner: sym,
            residual: 0.0,
        }
    }

    pub fn from_diag(d: &[f64]) -> Self {
        Self {
            inner: MatrixC::from_diag(d),
            residual: 0.0,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            inner: MatrixC::identity(n),
            residual: 0.0,
        }
    }

    pub fn zeros(n: usize) -> Self {
        Self {
            inner: MatrixC::zeros(n, n),
            residual: 0.0,
        }
    }

    pub fn dim(&self) -> usize {
        self.inner.rows()
    }

    pub fn hermiticity_residual(&self) -> f64 {
        self.residual
    }

    pub fn matrix(&self) -> &MatrixC {
        &self.inner
    }

    pub fn into_matrix(self) -> MatrixC {
        self.inner
    }

    pub fn scale(&self) -> f64 {
        scale_of(&self.inner)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        Ok(Self::from_constructed(self.inner.try_add(&rhs.inner)?))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self> {
        Ok(Self::from_constructed(self.inner.try_sub(&rhs.inner)?))
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self {
            inner: self.inner.scale(s),
            residual: self.residual * s.abs(),
        }
    }

    pub fn kron(&self, rhs: &Self) -> Result<Self> {
        Ok(Self::from_constructed(self.inner.kron(&rhs.inner)?))
    }

    /// Real part of the trace.
    pub fn trace(&self) -> f64 {
        self.inner.trace().re
    }
}

impl Deref for HermitianMatrix {
    type Target = MatrixC;

    fn deref(&self) -> &MatrixC {
        &self.inner
    }
}

impl AsRef<MatrixC> for HermitianMatrix {
    fn as_ref(&self) -> &MatrixC {
        &self.inner
    }
}

pub(crate) fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "tolerance must be positive and finite, got {tol}"
        )))
    }
}

/// `‖AB − BA‖_F`.
pub fn commutator_residual(a: &HermitianMatrix, b: &HermitianMatrix) -> Result<f64> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            op: "commutator_residual",
            detail: format!("{} vs {}", a.dim(), b.dim()),
        });
    }
    let ab = a.matmul(b)?;
    let ba = b.matmul(a)?;
    ab.distance(&ba)
}

/// Threshold below which a commutator counts as zero: `tol·max(1, ‖A‖_F·‖B‖_F)`.
pub fn commutator_bound(a: &HermitianMatrix, b: &HermitianMatrix, tol: f64) -> f64 {
    tol * (a.frobenius_norm() * b.frobenius_norm()).max(1.0)
}
