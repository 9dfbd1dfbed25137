use crate::error::Result;
use crate::linalg::{check_tol, classify, hermitian_eig, HermitianMatrix};
use crate::psd::{Approximation, PosNegParts};

/// Positive and negative parts of `b ⊗ c` assembled from the parts of the
/// factors:
///
/// ```text
/// (b ⊗ c)₊ = b₊ ⊗ c₊ + b₋ ⊗ c₋
/// (b ⊗ c)₋ = b₊ ⊗ c₋ + b₋ ⊗ c₊
/// ```
pub fn tensor_split(b: &HermitianMatrix, c: &HermitianMatrix, tol: f64) -> Result<PosNegParts> {
    check_tol(tol)?;
    let sb = hermitian_eig(b, tol)?;
    let sc = hermitian_eig(c, tol)?;
    let pb = PosNegParts::from_spectrum(&sb);
    let pc = PosNegParts::from_spectrum(&sc);

    let plus = pb.plus.kron(&pc.plus)?.add(&pb.minus.kron(&pc.minus)?)?;
    let minus = pb.plus.kron(&pc.minus)?.add(&pb.minus.kron(&pc.plus)?)?;

    let products: Vec<f64> = sb
        .eigenvalues()
        .iter()
        .flat_map(|&x| sc.eigenvalues().iter().map(move |&y| x * y))
        .collect();
    let threshold = tol * (b.frobenius_norm() * c.frobenius_norm()).max(1.0);
    Ok(PosNegParts {
        plus,
        minus,
        signature: classify(&products, threshold),
    })
}

/// Nearest PSD matrix to `b ⊗ c` and its distance
/// `sqrt(‖b₊‖²‖c₋‖² + ‖b₋‖²‖c₊‖²)`.
pub fn nearest_psd_tensor(
    b: &HermitianMatrix,
    c: &HermitianMatrix,
    tol: f64,
) -> Result<Approximation> {
    check_tol(tol)?;
    let pb = PosNegParts::from_spectrum(&hermitian_eig(b, tol)?);
    let pc = PosNegParts::from_spectrum(&hermitian_eig(c, tol)?);
    let approximant = pb.plus.kron(&pc.plus)?.add(&pb.minus.kron(&pc.minus)?)?;
    let (bp, bm) = (pb.plus.frobenius_norm(), pb.minus.frobenius_norm());
    let (cp, cm) = (pc.plus.frobenius_norm(), pc.minus.frobenius_norm());
    let distance = ((bp * cm).powi(2) + (bm * cp).powi(2)).sqrt();
    Ok(Approximation {
        approximant,
        distance,
    })
}
