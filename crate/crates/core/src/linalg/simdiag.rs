use rand::Rng;

use crate::error::{Error, Result};
use crate::linalg::eig::hermitian_eig;
use crate::linalg::hermitian::{check_tol, commutator_bound, commutator_residual};
use crate::linalg::{HermitianMatrix, MatrixC};
use crate::random;

/// Number of weight draws tried before giving up.
pub const SIMDIAG_ATTEMPTS: usize = 3;

/// Common eigenbasis of a commuting family.
#[derive(Debug, Clone, PartialEq)]
pub struct SimultaneousDiag {
    /// Unitary whose columns diagonalize every member.
    pub q: MatrixC,
    /// `diagonals[i][k]` is the eigenvalue of member `i` on column `k` of `q`.
    pub diagonals: Vec<Vec<f64>>,
    /// Largest `‖Q†FᵢQ − diag(dᵢ)‖_F / max(1, ‖Fᵢ‖_F)` over the family.
    pub residual: f64,
    pub attempts: usize,
}

/// Returns the pair with the largest commutator, relative to its bound, or
/// `None` when every pair commutes within `tol`.
pub fn worst_commutator(
    family: &[HermitianMatrix],
    tol: f64,
) -> Result<Option<(usize, usize, f64)>> {
    let mut worst: Option<(usize, usize, f64, f64)> = None;
    for i in 0..family.len() {
        for j in i + 1..family.len() {
            let r = commutator_residual(&family[i], &family[j])?;
            let bound = commutator_bound(&family[i], &family[j], tol);
            if r > bound && worst.is_none_or(|w| r / bound > w.3) {
                worst = Some((i, j, r, r / bound));
            }
        }
    }
    Ok(worst.map(|(i, j, r, _)| (i, j, r)))
}

/// Diagonalizes a commuting Hermitian family with one unitary.
///
/// A random positive combination `Σ wᵢFᵢ` (weights in `[0.5, 1.5]`, drawn from
/// `seed`) is diagonalized and its eigenbasis is checked against every member.
pub fn simultaneous_diag(
    family: &[HermitianMatrix],
    tol: f64,
    seed: u64,
) -> Result<SimultaneousDiag> {
    check_tol(tol)?;
    let first = family
        .first()
        .ok_or_else(|| Error::InvalidArgument("family must be non-empty".into()))?;
    let n = first.dim();
    if let Some(bad) = family.iter().position(|f| f.dim() != n) {
        return Err(Error::DimensionMismatch {
            op: "simultaneous_diag",
            detail: format!(
                "member {bad} has dimension {}, expected {n}",
                family[bad].dim()
            ),
        });
    }
    if let Some((first, second, residual)) = worst_commutator(family, tol)? {
        return Err(Error::NotCommuting {
            first,
            second,
            residual,
        });
    }

    let mut rng = random::rng(seed);
    let mut worst = f64::INFINITY;
    for attempt in 1..=SIMDIAG_ATTEMPTS {
        let mut combo = HermitianMatrix::zeros(n);
        for f in family {
            let w: f64 = rng.gen_range(0.5..1.5);
            combo = combo.add(&f.scaled(w))?;
        }
        let spectrum = hermitian_eig(&combo, tol)?;
        let q = spectrum.vectors().clone();
        let qh = q.conj_transpose();

        let mut diagonals = Vec::with_capacity(family.len());
        let mut residual: f64 = 0.0;
        for f in family {
            let rotated = &(&qh * f.matrix()) * &q;
            let d: Vec<f64> = (0..n).map(|k| rotated[(k, k)].re).collect();
            let off = rotated.distance(&MatrixC::from_diag(&d))?;
            residual = residual.max(off / f.scale());
            diagonals.push(d);
        }
        if residual <= tol {
            return Ok(SimultaneousDiag {
                q,
                diagonals,
                residual,
                attempts: attempt,
            });
        }
        worst = worst.min(residual);
    }
    Err(Error::SimultaneousDiagFailed {
        attempts: SIMDIAG_ATTEMPTS,
        residual: worst,
    })
}
