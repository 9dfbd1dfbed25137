//! Operator-Schmidt decomposition `A = Σ σᵢ·Bᵢ ⊗ Cᵢ` with orthonormal
//! Hermitian factors, and the tensor-sum bound report built on top of it.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{check_tol, hermitian_eig, HermitianMatrix, MatrixC};
use crate::psd::split_pos_neg;
use crate::tensor::BipartiteDims;

/// Orthonormal basis of the `d×d` Hermitian matrices under `tr(XY)`:
/// `I/√d`, then the symmetric and antisymmetric off-diagonal generators for
/// each pair `j < k`, then the diagonal generalized Gell-Mann matrices.
pub fn hermitian_basis(d: usize) -> Vec<MatrixC> {
    let mut basis = Vec::with_capacity(d * d);
    basis.push(MatrixC::identity(d).scale(1.0 / (d as f64).sqrt()));
    let h = std::f64::consts::FRAC_1_SQRT_2;
    for j in 0..d {
        for k in j + 1..d {
            let mut s = MatrixC::zeros(d, d);
            s[(j, k)] = Complex64::new(h, 0.0);
            s[(k, j)] = Complex64::new(h, 0.0);
            basis.push(s);
            let mut a = MatrixC::zeros(d, d);
            a[(j, k)] = Complex64::new(0.0, -h);
            a[(k, j)] = Complex64::new(0.0, h);
            basis.push(a);
        }
    }
    for l in 1..d {
        let norm = 1.0 / ((l * (l + 1)) as f64).sqrt();
        let mut g = MatrixC::zeros(d, d);
        for j in 0..l {
            g[(j, j)] = Complex64::new(norm, 0.0);
        }
        g[(l, l)] = Complex64::new(-(l as f64) * norm, 0.0);
        basis.push(g);
    }
    basis
}

#[derive(Debug, Clone, PartialEq)]
pub struct SchmidtTerm {
    pub weight: f64,
    pub b: HermitianMatrix,
    pub c: HermitianMatrix,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SchmidtDecomposition {
    pub dims: BipartiteDims,
    /// Sorted by descending weight.
    pub terms: Vec<SchmidtTerm>,
    /// Terms discarded because their weight was at most `tol·σ₁`.
    pub dropped: usize,
}

impl SchmidtDecomposition {
    /// Wraps caller-supplied terms. Factors are not required to be orthonormal.
    pub fn from_terms(dims: BipartiteDims, mut terms: Vec<SchmidtTerm>) -> Result<Self> {
        for (i, t) in terms.iter().enumerate() {
            if t.b.dim() != dims.dim_a || t.c.dim() != dims.dim_b {
                return Err(Error::DimensionMismatch {
                    op: "schmidt term",
                    detail: format!(
                        "term {i} has factors {}x{} and {}x{}, dims are ({}, {})",
                        t.b.dim(),
                        t.b.dim(),
                        t.c.dim(),
                        t.c.dim(),
                        dims.dim_a,
                        dims.dim_b
                    ),
                });
            }
            if !t.weight.is_finite() || t.weight < 0.0 {
                return Err(Error::InvalidArgument(format!(
                    "term {i} has weight {}",
                    t.weight
                )));
            }
        }
        terms.sort_by(|x, y| y.weight.partial_cmp(&x.weight).expect("finite weights"));
        Ok(Self {
            dims,
            terms,
            dropped: 0,
        })
    }

    pub fn weights(&self) -> Vec<f64> {
        self.terms.iter().map(|t| t.weight).collect()
    }

    /// `Σ σᵢ·Bᵢ ⊗ Cᵢ`.
    pub fn reconstruct(&self) -> Result<HermitianMatrix> {
        let mut acc = HermitianMatrix::zeros(self.dims.total());
        for t in &self.terms {
            acc = acc.add(&t.b.scaled(t.weight).kron(&t.c)?)?;
        }
        Ok(acc)
    }

    /// Largest `|tr(XᵢXⱼ) − δᵢⱼ|` over both factor families.
    pub fn orthonormality_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (i, ti) in self.terms.iter().enumerate() {
            for (j, tj) in self.terms.iter().enumerate().skip(i) {
                let delta = if i == j { 1.0 } else { 0.0 };
                let gb = (&*ti.b * &*tj.b).trace();
                let gc = (&*ti.c * &*tj.c).trace();
                worst = worst.max((gb - delta).norm()).max((gc - delta).norm());
            }
        }
        worst
    }
}

/// Real coefficient matrix `M[a][b] = tr(A·(Gₐ ⊗ H_b))` against the
/// Hermitian product basis.
fn coefficient_matrix(
    a: &MatrixC,
    dims: BipartiteDims,
    ga: &[MatrixC],
    hb: &[MatrixC],
) -> Vec<Vec<f64>> {
    let (m, n) = (dims.dim_a, dims.dim_b);
    // partial[i][j][b] = tr(A_ij · H_b) for the n×n block A_ij.
    let mut partial = vec![vec![vec![Complex64::new(0.0, 0.0); hb.len()]; m]; m];
    for i in 0..m {
        for j in 0..m {
            for (bi, h) in hb.iter().enumerate() {
                let mut acc = Complex64::new(0.0, 0.0);
                for k in 0..n {
                    for l in 0..n {
                        acc += a[(i * n + k, j * n + l)] * h[(l, k)];
                    }
                }
                partial[i][j][bi] = acc;
            }
        }
    }
    ga.iter()
        .map(|g| {
            (0..hb.len())
                .map(|bi| {
                    let mut acc = Complex64::new(0.0, 0.0);
                    for i in 0..m {
                        for j in 0..m {
                            acc += g[(j, i)] * partial[i][j][bi];
                        }
                    }
                    acc.re
                })
                .collect()
        })
        .collect()
}

type SingularTriplet = (f64, Vec<f64>, Vec<f64>);

/// Singular triplets of a real matrix from the eigendecomposition of the
/// smaller Gram matrix. Returns `(σ, u, v)` with `σ` descending.
fn svd_via_gram(mat: &[Vec<f64>], tol: f64) -> Result<Vec<SingularTriplet>> {
    let rows = mat.len();
    let cols = mat[0].len();
    let transposed = rows > cols;
    let (r, c) = if transposed {
        (cols, rows)
    } else {
        (rows, cols)
    };
    let at = |i: usize, j: usize| if transposed { mat[j][i] } else { mat[i][j] };

    let mut gram = MatrixC::zeros(r, r);
    for i in 0..r {
        for j in i..r {
            let g: f64 = (0..c).map(|k| at(i, k) * at(j, k)).sum();
            gram[(i, j)] = Complex64::new(g, 0.0);
            gram[(j, i)] = Complex64::new(g, 0.0);
        }
    }
    let spectrum = hermitian_eig(&HermitianMatrix::new(gram, tol)?, tol)?;
    let q = spectrum.vectors();

    let mut out = Vec::with_capacity(r);
    for col in 0..r {
        let mut left: Vec<f64> = (0..r).map(|i| q[(i, col)].re).collect();
        // Fix the sign: the largest-magnitude component is positive.
        let pivot = left
            .iter()
            .enumerate()
            .fold((0, 0.0f64), |best, (i, &x)| {
                if x.abs() > best.1.abs() + 1e-12 {
                    (i, x)
                } else {
                    best
                }
            })
            .1;
        if pivot < 0.0 {
            left.iter_mut().for_each(|x| *x = -*x);
        }
        // Right vector and weight from Mᵀu; its norm is accurate to roundoff
        // relative to σ₁, unlike sqrt of the Gram eigenvalue.
        let right: Vec<f64> = (0..c)
            .map(|k| (0..r).map(|i| at(i, k) * left[i]).sum())
            .collect();
        let sigma = right.iter().map(|x| x * x).sum::<f64>().sqrt();
        let right = if sigma > 0.0 {
            right.iter().map(|x| x / sigma).collect()
        } else {
            right
        };
        out.push(if transposed {
            (sigma, right, left)
        } else {
            (sigma, left, right)
        });
    }
    out.sort_by(|x, y| y.0.partial_cmp(&x.0).expect("finite singular values"));
    Ok(out)
}

fn combine(basis: &[MatrixC], coeffs: &[f64]) -> HermitianMatrix {
    let d = basis[0].rows();
    let mut acc = MatrixC::zeros(d, d);
    for (g, &w) in basis.iter().zip(coeffs) {
        if w != 0.0 {
            acc = &acc + &g.scale(w);
        }
    }
    HermitianMatrix::from_constructed(acc)
}

/// Operator-Schmidt decomposition of a Hermitian operator on `C^m ⊗ C^n`.
///
/// At most `min(m², n²)` terms are returned; terms with weight at most
/// `tol·σ₁` are dropped and counted in `dropped`.
pub fn operator_schmidt(
    a: &HermitianMatrix,
    dims: BipartiteDims,
    tol: f64,
) -> Result<SchmidtDecomposition> {
    check_tol(tol)?;
    dims.check(a, "operator_schmidt")?;
    let ga = hermitian_basis(dims.dim_a);
    let hb = hermitian_basis(dims.dim_b);
    let coeffs = coefficient_matrix(a, dims, &ga, &hb);
    let triplets = svd_via_gram(&coeffs, tol)?;

    let top = triplets.first().map_or(0.0, |t| t.0);
    let mut terms = Vec::new();
    let mut dropped = 0;
    for (sigma, u, v) in triplets {
        if sigma <= tol * top || sigma == 0.0 {
            dropped += 1;
            continue;
        }
        terms.push(SchmidtTerm {
            weight: sigma,
            b: combine(&ga, &u),
            c: combine(&hb, &v),
        });
    }
    Ok(SchmidtDecomposition {
        dims,
        terms,
        dropped,
    })
}

/// Comparison of `‖A − A₊‖_F` with `Σᵢ ‖Bᵢ − (Bᵢ)₊‖·‖Cᵢ − (Cᵢ)₊‖` for
/// `A = Σᵢ Bᵢ ⊗ Cᵢ` (weights folded into `Bᵢ`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport {
    pub lhs: f64,
    pub rhs: f64,
    /// `lhs ≤ rhs + tol·scale`.
    pub satisfied: bool,
    /// The reconstructed operator is PSD with unit trace. The bound is only
    /// guaranteed in that case.
    pub hypothesis_held: bool,
}

pub fn tensor_sum_bound_report(decomp: &SchmidtDecomposition, tol: f64) -> Result<BoundReport> {
    check_tol(tol)?;
    let a = decomp.reconstruct()?;
    let parts = split_pos_neg(&a, tol)?;
    let lhs = parts.minus.frobenius_norm();
    let mut rhs = 0.0;
    for t in &decomp.terms {
        let bm = split_pos_neg(&t.b.scaled(t.weight), tol)?
            .minus
            .frobenius_norm();
        let cm = split_pos_neg(&t.c, tol)?.minus.frobenius_norm();
        rhs += bm * cm;
    }
    let scale = a.scale();
    let min_eig = hermitian_eig(&a, tol)?.min_eigenvalue();
    let hypothesis_held = min_eig >= -tol * scale && (a.trace() - 1.0).abs() <= tol * scale;
    Ok(BoundReport {
        lhs,
        rhs,
        satisfied: lhs <= rhs + tol * scale,
        hypothesis_held,
    })
}
