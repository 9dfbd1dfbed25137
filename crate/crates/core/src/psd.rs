//! Positive/negative spectral parts of a Hermitian matrix and the nearest
//! positive semi-definite matrix in Frobenius norm.
//!
//! With `A = Q·diag(α)·Q†`, the parts are `A± = Q·diag(α±)·Q†` where
//! `α± = (|α| ± α)/2`. Both are PSD, `A = A₊ − A₋`, and `A₊·A₋ = 0`. The
//! nearest PSD matrix to `A` is `A₊`, at distance `‖A₋‖_F`.

use crate::error::{Error, Result};
use crate::linalg::{check_tol, hermitian_eig, HermitianMatrix, Signature, Spectrum};

#[derive(Debug, Clone, PartialEq)]
pub struct PosNegParts {
    pub plus: HermitianMatrix,
    pub minus: HermitianMatrix,
    pub signature: Signature,
}

impl PosNegParts {
    pub fn from_spectrum(spectrum: &Spectrum) -> Self {
        let thr = spectrum.zero_threshold();
        let plus = spectrum.apply(|l| if l > thr { l } else { 0.0 });
        let minus = spectrum.apply(|l| if l < -thr { -l } else { 0.0 });
        Self {
            plus,
            minus,
            signature: spectrum.signature(),
        }
    }

    /// `‖A₊ − A₋ − A‖_F`.
    pub fn reconstruction_error(&self, a: &HermitianMatrix) -> f64 {
        let back = &*self.plus - &*self.minus;
        back.distance(a).expect("parts share the input's shape")
    }

    /// `‖A₊·A₋‖_F`; zero when the supports are orthogonal.
    pub fn support_overlap(&self) -> f64 {
        (&*self.plus * &*self.minus).frobenius_norm()
    }
}

/// Splits `a` into `A₊ − A₋`. Eigenvalues classified as zero feed neither part.
pub fn split_pos_neg(a: &HermitianMatrix, tol: f64) -> Result<PosNegParts> {
    let spectrum = hermitian_eig(a, tol)?;
    Ok(PosNegParts::from_spectrum(&spectrum))
}

/// The nearest PSD matrix together with its Frobenius distance to the input.
#[derive(Debug, Clone, PartialEq)]
pub struct Approximation {
    pub approximant: HermitianMatrix,
    pub distance: f64,
}

pub fn nearest_psd(a: &HermitianMatrix, tol: f64) -> Result<Approximation> {
    let parts = split_pos_neg(a, tol)?;
    Ok(Approximation {
        distance: parts.minus.frobenius_norm(),
        approximant: parts.plus,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsdCheck {
    pub is_psd: bool,
    pub min_eigenvalue: f64,
}

/// PSD iff the smallest eigenvalue is at least `−tol·max(1, ‖A‖_F)`.
pub fn is_psd(a: &HermitianMatrix, tol: f64) -> Result<PsdCheck> {
    let spectrum = hermitian_eig(a, tol)?;
    let min_eigenvalue = spectrum.min_eigenvalue();
    Ok(PsdCheck {
        is_psd: min_eigenvalue >= -tol * a.scale(),
        min_eigenvalue,
    })
}

fn require_psd(a: &HermitianMatrix, which: &'static str, tol: f64) -> Result<Spectrum> {
    let spectrum = hermitian_eig(a, tol)?;
    let min_eig = spectrum.min_eigenvalue();
    if min_eig < -tol * a.scale() {
        return Err(Error::NotPsd { which, min_eig });
    }
    Ok(spectrum)
}

fn require_same_dim(a: &HermitianMatrix, b: &HermitianMatrix, op: &'static str) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            op,
            detail: format!("{} vs {}", a.dim(), b.dim()),
        });
    }
    Ok(())
}

/// `‖A − B‖_F − ‖A₋‖_F` for a PSD candidate `b`. Never negative beyond
/// roundoff; zero at `b = A₊`.
pub fn optimality_gap(a: &HermitianMatrix, b: &HermitianMatrix, tol: f64) -> Result<f64> {
    check_tol(tol)?;
    require_same_dim(a, b, "optimality_gap")?;
    require_psd(b, "b", tol)?;
    let minus = split_pos_neg(a, tol)?.minus;
    Ok(a.distance(b)? - minus.frobenius_norm())
}

/// Principal square root of a PSD matrix; eigenvalues below zero are clamped.
pub fn psd_sqrt(spectrum: &Spectrum) -> HermitianMatrix {
    spectrum.apply(|l| l.max(0.0).sqrt())
}

/// Smallest eigenvalue of `A·B` for PSD `a`, `b`.
///
/// `A·B` is similar to the Hermitian matrix `A^{1/2}·B·A^{1/2}`, so its
/// spectrum is real and computed with the Hermitian solver.
pub fn psd_product_min_eig(a: &HermitianMatrix, b: &HermitianMatrix, tol: f64) -> Result<f64> {
    check_tol(tol)?;
    require_same_dim(a, b, "psd_product_min_eig")?;
    let sa = require_psd(a, "a", tol)?;
    require_psd(b, "b", tol)?;
    let root = psd_sqrt(&sa);
    let sandwich = HermitianMatrix::from_constructed(&(&*root * b.matrix()) * root.matrix());
    Ok(hermitian_eig(&sandwich, tol)?.min_eigenvalue())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlackReport {
    /// `P − A` is PSD (always true for reports returned by
    /// [`decomposition_slack`], which rejects other inputs).
    pub n_is_psd: bool,
    /// Smallest eigenvalue of `P − A₊`.
    pub slack_min_eig: f64,
    /// Whether `P − A₊` is PSD within tolerance.
    pub slack_is_psd: bool,
}

/// Measures how `P` compares with `A₊` for a decomposition `A = P − N` with
/// `P, N ⪰ 0`. Reported, not asserted: `P ⪰ A₊` can fail when `P` does not
/// commute with `A`.
pub fn decomposition_slack(
    a: &HermitianMatrix,
    p: &HermitianMatrix,
    tol: f64,
) -> Result<SlackReport> {
    check_tol(tol)?;
    require_same_dim(a, p, "decomposition_slack")?;
    require_psd(p, "p", tol)?;
    let n = p.sub(a)?;
    require_psd(&n, "p - a", tol)?;
    let plus = split_pos_neg(a, tol)?.plus;
    let slack = p.sub(&plus)?;
    let slack_min_eig = hermitian_eig(&slack, tol)?.min_eigenvalue();
    Ok(SlackReport {
        n_is_psd: true,
        slack_min_eig,
        slack_is_psd: slack_min_eig >= -tol * slack.scale(),
    })
}
