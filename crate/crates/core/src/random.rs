//! Seeded random instances: Hermitian matrices, unitaries, PSD matrices and
//! density matrices. Every generator is a pure function of its `Rng`, so a
//! fixed seed reproduces the same instance on every platform.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::linalg::{HermitianMatrix, MatrixC};

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn complex_entry<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

/// Matrix with independent entries uniform on `[-1, 1] + i[-1, 1]`.
pub fn random_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> MatrixC {
    let data = (0..rows * cols).map(|_| complex_entry(rng)).collect();
    MatrixC::from_vec(rows, cols, data).expect("finite random entries")
}

/// `(G + G†)/2` for a random complex `G`.
pub fn random_hermitian<R: Rng + ?Sized>(rng: &mut R, n: usize) -> HermitianMatrix {
    HermitianMatrix::symmetrize(random_matrix(rng, n, n)).expect("square")
}

/// Real symmetric matrix with entries uniform on `[-1, 1]`.
pub fn random_real_symmetric<R: Rng + ?Sized>(rng: &mut R, n: usize) -> HermitianMatrix {
    let mut m = MatrixC::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let x = Complex64::new(rng.gen_range(-1.0..1.0), 0.0);
            m[(i, j)] = x;
            m[(j, i)] = x;
        }
    }
    HermitianMatrix::from_constructed(m)
}

/// Product of `n(n−1)/2` complex Givens rotations with random angles and phases.
pub fn random_unitary<R: Rng + ?Sized>(rng: &mut R, n: usize) -> MatrixC {
    let mut u = MatrixC::identity(n);
    for p in 0..n {
        for q in p + 1..n {
            let theta: f64 = rng.gen_range(0.0..2.0 * PI);
            let phi: f64 = rng.gen_range(0.0..2.0 * PI);
            apply_givens(&mut u, p, q, theta, phi);
        }
    }
    u
}

/// Right-multiplies `u` by the rotation acting on columns `p, q`.
pub fn apply_givens(u: &mut MatrixC, p: usize, q: usize, theta: f64, phi: f64) {
    let (s, c) = theta.sin_cos();
    let e = Complex64::from_polar(1.0, phi);
    for k in 0..u.rows() {
        let up = u[(k, p)];
        let uq = u[(k, q)];
        u[(k, p)] = up * c - uq * e.conj() * s;
        u[(k, q)] = up * e * s + uq * c;
    }
}

/// `U·diag(d)·U†` for a random unitary `U`.
pub fn random_with_spectrum<R: Rng + ?Sized>(rng: &mut R, d: &[f64]) -> HermitianMatrix {
    let u = random_unitary(rng, d.len());
    HermitianMatrix::from_constructed(MatrixC::congruence_diag(&u, d))
}

/// `L·L†` for a random `n × rank` factor `L`.
pub fn random_psd<R: Rng + ?Sized>(rng: &mut R, n: usize, rank: usize) -> HermitianMatrix {
    let l = random_matrix(rng, n, rank.max(1));
    HermitianMatrix::from_constructed(&l * &l.conj_transpose())
}

/// Random PSD matrix with unit trace and random rank in `1..=n`.
pub fn random_density<R: Rng + ?Sized>(rng: &mut R, n: usize) -> HermitianMatrix {
    let rank = rng.gen_range(1..=n);
    let p = random_psd(rng, n, rank);
    let tr = p.trace();
    p.scaled(1.0 / tr)
}
