//! Weyl and Horn inequalities for the spectrum of a sum of Hermitian matrices.

mod checks;
mod horn;

pub use checks::{
    complement, horn_check, practical_bounds, practical_check, sum_spectrum, sum_spectrum_oracle,
    weyl_check, InequalityForm, InequalityReport, Interval, SpectrumTriple, Violation,
};
pub use horn::{
    horn_sets, subsets, u_set, weight, HornTriple, HornTripleSet, IndexSet, MAX_HORN_N,
};
