//! Tensor-product splits, bipartite density matrices (operator-Schmidt,
//! partial transpose, PPT) and commuting-family approximations.

mod commuting;
mod density;
pub mod fixtures;
mod schmidt;
mod split;

pub use commuting::{
    additivity_residuals, commuting_additivity_check, commuting_family_approx, AdditivityCheck,
    AdditivityResiduals, FamilyApproximation,
};
pub use density::{
    make_density, partial_transpose, ppt_check, BipartiteDims, DensityMatrix, PptReport, Subsystem,
};
pub use schmidt::{
    hermitian_basis, operator_schmidt, tensor_sum_bound_report, BoundReport, SchmidtDecomposition,
    SchmidtTerm,
};
pub use split::{nearest_psd_tensor, tensor_split};
