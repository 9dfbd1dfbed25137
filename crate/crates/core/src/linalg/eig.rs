//! Cyclic Jacobi eigensolver for Hermitian matrices.
//!
//! Each rotation zeroes one off-diagonal pair `(p, q)` with a complex Givens
//! rotation `J`, and the working matrix is replaced by `J†·A·J`. Sweeps repeat
//! until the off-diagonal Frobenius mass stops shrinking (or reaches roundoff
//! level). Convergence is declared when that mass is at most `tol·‖A‖_F`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::hermitian::{check_tol, scale_of};
use crate::linalg::{HermitianMatrix, MatrixC};

pub const MAX_SWEEPS: usize = 100;

/// Counts of positive, negative and zero-classified eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

/// Eigen-decomposition `A = Q·diag(λ)·Q†` with `λ` sorted descending.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    vectors: MatrixC,
    signature: Signature,
    zero_threshold: f64,
    off_diagonal: f64,
    sweeps: usize,
}

impl Spectrum {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Unitary matrix whose column `k` pairs with `eigenvalues()[k]`.
    pub fn vectors(&self) -> &MatrixC {
        &self.vectors
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    /// `|λ|` at or below this value is classified as zero.
    pub fn zero_threshold(&self) -> f64 {
        self.zero_threshold
    }

    /// Off-diagonal Frobenius norm of the rotated matrix at exit.
    pub fn off_diagonal(&self) -> f64 {
        self.off_diagonal
    }

    pub fn sweeps(&self) -> usize {
        self.sweeps
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn min_eigenvalue(&self) -> f64 {
        *self.eigenvalues.last().expect("non-empty spectrum")
    }

    pub fn max_eigenvalue(&self) -> f64 {
        self.eigenvalues[0]
    }

    /// Whether eigenvalue `k` is classified as zero.
    pub fn is_zero(&self, k: usize) -> bool {
        self.eigenvalues[k].abs() <= self.zero_threshold
    }

    /// `Q·diag(f(λ))·Q†`.
    pub fn apply(&self, f: impl Fn(f64) -> f64) -> HermitianMatrix {
        let d: Vec<f64> = self.eigenvalues.iter().map(|&l| f(l)).collect();
        HermitianMatrix::from_constructed(MatrixC::congruence_diag(&self.vectors, &d))
    }
}

/// Diagonalizes a Hermitian matrix.
pub fn hermitian_eig(a: &HermitianMatrix, tol: f64) -> Result<Spectrum> {
    check_tol(tol)?;
    let n = a.dim();
    let norm = a.frobenius_norm();
    let mut w = a.matrix().clone();
    // Diagonal must be real for the rotation formulas.
    for i in 0..n {
        w[(i, i)] = Complex64::new(w[(i, i)].re, 0.0);
    }
    let mut v = MatrixC::identity(n);

    let floor = f64::EPSILON * norm;
    let mut off = off_diagonal_norm(&w);
    let mut sweeps = 0;
    while sweeps < MAX_SWEEPS && off > floor {
        let before = off;
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut w, &mut v, p, q);
            }
        }
        sweeps += 1;
        off = off_diagonal_norm(&w);
        // Stagnation at roundoff level once the tolerance is met.
        if off <= tol * norm && off > 0.5 * before {
            break;
        }
    }
    if off > tol * norm {
        return Err(Error::NoConvergence {
            sweeps,
            off_diagonal: off,
        });
    }

    let diag: Vec<f64> = (0..n).map(|i| w[(i, i)].re).collect();
    let mut order: Vec<usize> = (0..n).collect();
    // Descending; equal values keep ascending diagonal position (stable sort).
    order.sort_by(|&i, &j| diag[j].partial_cmp(&diag[i]).expect("finite eigenvalues"));

    let eigenvalues: Vec<f64> = order.iter().map(|&i| diag[i]).collect();
    let mut vectors = MatrixC::zeros(n, n);
    for (new_col, &old_col) in order.iter().enumerate() {
        for r in 0..n {
            vectors[(r, new_col)] = v[(r, old_col)];
        }
    }

    let zero_threshold = tol * scale_of(a.matrix());
    let signature = classify(&eigenvalues, zero_threshold);
    Ok(Spectrum {
        eigenvalues,
        vectors,
        signature,
        zero_threshold,
        off_diagonal: off,
        sweeps,
    })
}

pub(crate) fn classify(eigenvalues: &[f64], zero_threshold: f64) -> Signature {
    let mut s = Signature {
        positive: 0,
        negative: 0,
        zero: 0,
    };
    for &l in eigenvalues {
        if l > zero_threshold {
            s.positive += 1;
        } else if l < -zero_threshold {
            s.negative += 1;
        } else {
            s.zero += 1;
        }
    }
    s
}

fn off_diagonal_norm(w: &MatrixC) -> f64 {
    let n = w.rows();
    let mut acc = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                acc += w[(i, j)].norm_sqr();
            }
        }
    }
    acc.sqrt()
}

fn rotate(w: &mut MatrixC, v: &mut MatrixC, p: usize, q: usize) {
    let apq = w[(p, q)];
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let phase = apq / mag;
    let app = w[(p, p)].re;
    let aqq = w[(q, q)].re;
    let theta = (aqq - app) / (2.0 * mag);
    let t = if theta.is_finite() {
        let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
        sign / (theta.abs() + (theta * theta + 1.0).sqrt())
    } else {
        0.0
    };
    if t == 0.0 {
        return;
    }
    let c = 1.0 / (1.0 + t * t).sqrt();
    let s = t * c;
    // J = [[c, s·e^{iφ}], [−s·e^{−iφ}, c]] on the (p, q) plane.
    let jpq = phase * s;
    let jqp = -phase.conj() * s;
    let n = w.rows();

    // W ← W·J and V ← V·J
    for k in 0..n {
        let wkp = w[(k, p)];
        let wkq = w[(k, q)];
        w[(k, p)] = wkp * c + wkq * jqp;
        w[(k, q)] = wkp * jpq + wkq * c;
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * c + vkq * jqp;
        v[(k, q)] = vkp * jpq + vkq * c;
    }
    // W ← J†·W
    let (jpq_h, jqp_h) = (jqp.conj(), jpq.conj());
    for k in 0..n {
        let wpk = w[(p, k)];
        let wqk = w[(q, k)];
        w[(p, k)] = wpk * c + wqk * jpq_h;
        w[(q, k)] = wpk * jqp_h + wqk * c;
    }
    w[(p, q)] = Complex64::new(0.0, 0.0);
    w[(q, p)] = Complex64::new(0.0, 0.0);
    w[(p, p)] = Complex64::new(app - t * mag, 0.0);
    w[(q, q)] = Complex64::new(aqq + t * mag, 0.0);
}
