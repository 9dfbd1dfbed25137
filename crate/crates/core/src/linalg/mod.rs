//! Dense complex linear algebra: matrices, the Hermitian eigensolver and
//! simultaneous diagonalization of commuting families.

mod eig;
mod hermitian;
mod matrix;
mod simdiag;

pub use eig::{hermitian_eig, Signature, Spectrum, MAX_SWEEPS};
pub use hermitian::{
    commutator_bound, commutator_residual, scale_of, HermitianMatrix, DEFAULT_TOL,
};
pub use matrix::{conj_transpose, frobenius_norm, kron, matmul, MatrixC, DEFAULT_MAX_KRON_ROWS};
pub use simdiag::{simultaneous_diag, worst_commutator, SimultaneousDiag, SIMDIAG_ATTEMPTS};

pub(crate) use eig::classify;
pub(crate) use hermitian::check_tol;
