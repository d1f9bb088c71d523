//! Macdonald polynomials built from their branching coefficients, together
//! with the linear algebra needed to compare symmetric functions.

pub mod branch;
pub mod coeffs;
pub mod lambda_ring;
pub mod qbinom;
pub mod structure;
pub mod symfunc;

pub use branch::{branch_build, branch_build_skew, branch_series, letter_values, BranchRule, Brancher, MacdonaldRule, SchurRule, SeriesBrancher};
pub use coeffs::{phi, psi, psi_prime};
pub use symfunc::{macdonald_p, schur_det, to_p_basis, Basis, SymFunc};
pub use structure::{structure_constant, structure_constants};
pub use lambda_ring::{skew_p_diff, skew_phat_diff, skew_q_diff, skew_q_unnormalized_diff};
pub use qbinom::{qbinom, QbinomMethod};
