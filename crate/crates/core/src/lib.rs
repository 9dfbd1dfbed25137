//! Exact nearest positive semi-definite approximation of Hermitian matrices,
//! its tensor-product and commuting-sum variants, Horn/Weyl eigenvalue bounds
//! for sums, and a bipartite density-matrix separability toolkit.

pub mod error;
pub mod linalg;
pub mod psd;
pub mod random;
pub mod spectra;
pub mod tensor;

pub use error::{Error, Result};
pub use linalg::{HermitianMatrix, MatrixC, Spectrum, DEFAULT_TOL};
