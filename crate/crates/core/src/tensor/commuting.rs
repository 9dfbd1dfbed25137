//! Positive parts of sums over commuting families.
//!
//! For commuting `A`, `B` with common eigenbasis, `(A + B)₊ = A₊ + B₊` holds
//! exactly when no common eigenvector carries eigenvalues of strictly
//! opposite sign in `A` and `B`. The same per-slot condition governs
//! `Σᵢ (Aᵢ ⊗ Bᵢ)₊ = (Σᵢ Aᵢ ⊗ Bᵢ)₊`. Both routines below report whether it
//! holds next to the measured residuals.

use crate::error::{Error, Result};
use crate::linalg::{
    check_tol, commutator_bound, commutator_residual, simultaneous_diag, HermitianMatrix, MatrixC,
};
use crate::psd::split_pos_neg;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdditivityResiduals {
    /// `‖(A+B)₊ − A₊ − B₊‖_F`
    pub plus: f64,
    /// `‖(A+B)₋ − A₋ − B₋‖_F`
    pub minus: f64,
    /// `‖AB − BA‖_F`
    pub commutator: f64,
}

/// Additivity residuals without any commutativity precondition.
pub fn additivity_residuals(
    a: &HermitianMatrix,
    b: &HermitianMatrix,
    tol: f64,
) -> Result<AdditivityResiduals> {
    check_tol(tol)?;
    let commutator = commutator_residual(a, b)?;
    let pa = split_pos_neg(a, tol)?;
    let pb = split_pos_neg(b, tol)?;
    let ps = split_pos_neg(&a.add(b)?, tol)?;
    let plus = (&(&*ps.plus - &*pa.plus) - &*pb.plus).frobenius_norm();
    let minus = (&(&*ps.minus - &*pa.minus) - &*pb.minus).frobenius_norm();
    Ok(AdditivityResiduals {
        plus,
        minus,
        commutator,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdditivityCheck {
    pub residuals: AdditivityResiduals,
    /// No common eigenvector has eigenvalues of strictly opposite sign in
    /// `A` and `B`; when true both residuals vanish up to roundoff.
    pub sign_compatible: bool,
    /// Number of common eigenvectors with opposite-sign eigenvalues.
    pub sign_conflicts: usize,
}

/// Additivity of positive/negative parts for a commuting pair. Rejects
/// pairs whose commutator exceeds `tol·max(1, ‖A‖·‖B‖)`.
pub fn commuting_additivity_check(
    a: &HermitianMatrix,
    b: &HermitianMatrix,
    tol: f64,
    seed: u64,
) -> Result<AdditivityCheck> {
    check_tol(tol)?;
    let residual = commutator_residual(a, b)?;
    if residual > commutator_bound(a, b, tol) {
        return Err(Error::NotCommuting {
            first: 0,
            second: 1,
            residual,
        });
    }
    let sd = simultaneous_diag(&[a.clone(), b.clone()], tol, seed)?;
    let (ta, tb) = (tol * a.scale(), tol * b.scale());
    let sign_conflicts = sd.diagonals[0]
        .iter()
        .zip(&sd.diagonals[1])
        .filter(|&(&x, &y)| (x > ta && y < -tb) || (x < -ta && y > tb))
        .count();
    Ok(AdditivityCheck {
        residuals: additivity_residuals(a, b, tol)?,
        sign_compatible: sign_conflicts == 0,
        sign_conflicts,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct FamilyApproximation {
    /// `Σᵢ [(Aᵢ)₊ ⊗ (Bᵢ)₊ + (Aᵢ)₋ ⊗ (Bᵢ)₋]`
    pub approximant: HermitianMatrix,
    /// `‖Σᵢ [(Aᵢ)₊ ⊗ (Bᵢ)₋ + (Aᵢ)₋ ⊗ (Bᵢ)₊]‖_F`
    pub distance: f64,
    /// `‖approximant − (Σᵢ Aᵢ ⊗ Bᵢ)₊‖_F`, computed in the joint eigenbasis.
    pub direct_gap: f64,
    /// Joint eigenvectors on which the products `aᵢ·bᵢ` take both signs.
    pub sign_conflicts: usize,
    /// Every `Aᵢ` and `Bᵢ` is PSD, in which case the approximant is the sum itself.
    pub all_psd: bool,
}

fn clean(d: &[f64], threshold: f64) -> Vec<f64> {
    d.iter()
        .map(|&x| if x.abs() <= threshold { 0.0 } else { x })
        .collect()
}

/// Termwise positive-part approximation of `Σᵢ Aᵢ ⊗ Bᵢ` for commuting
/// families `{Aᵢ}` and `{Bᵢ}`.
///
/// Each family is diagonalized simultaneously; in the product eigenbasis
/// every term is diagonal, so the approximant, distance and the gap to the
/// exact positive part of the sum are computed slot by slot.
pub fn commuting_family_approx(
    a_list: &[HermitianMatrix],
    b_list: &[HermitianMatrix],
    tol: f64,
    seed: u64,
) -> Result<FamilyApproximation> {
    check_tol(tol)?;
    if a_list.len() != b_list.len() {
        return Err(Error::DimensionMismatch {
            op: "commuting_family_approx",
            detail: format!(
                "{} left factors vs {} right factors",
                a_list.len(),
                b_list.len()
            ),
        });
    }
    let sa = simultaneous_diag(a_list, tol, seed)?;
    let sb = simultaneous_diag(b_list, tol, seed.wrapping_add(1))?;
    let alphas: Vec<Vec<f64>> = sa
        .diagonals
        .iter()
        .zip(a_list)
        .map(|(d, a)| clean(d, tol * a.scale()))
        .collect();
    let betas: Vec<Vec<f64>> = sb
        .diagonals
        .iter()
        .zip(b_list)
        .map(|(d, b)| clean(d, tol * b.scale()))
        .collect();

    let (na, nb) = (a_list[0].dim(), b_list[0].dim());
    let mut plus_diag = vec![0.0; na * nb];
    let mut minus_sq = 0.0;
    let mut gap_sq = 0.0;
    let mut sign_conflicts = 0;
    for k in 0..na {
        for l in 0..nb {
            let (mut pos, mut neg) = (0.0, 0.0);
            for (alpha, beta) in alphas.iter().zip(&betas) {
                let v = alpha[k] * beta[l];
                if v > 0.0 {
                    pos += v;
                } else {
                    neg -= v;
                }
            }
            if pos > 0.0 && neg > 0.0 {
                sign_conflicts += 1;
            }
            plus_diag[k * nb + l] = pos;
            minus_sq += neg * neg;
            let direct = (pos - neg).max(0.0);
            gap_sq += (pos - direct).powi(2);
        }
    }

    let q = sa.q.kron(&sb.q)?;
    let approximant = HermitianMatrix::from_constructed(MatrixC::congruence_diag(&q, &plus_diag));
    let all_psd = alphas
        .iter()
        .chain(&betas)
        .all(|d| d.iter().all(|&x| x >= 0.0));
    Ok(FamilyApproximation {
        approximant,
        distance: minus_sq.sqrt(),
        direct_gap: gap_sq.sqrt(),
        sign_conflicts,
        all_psd,
    })
}
