//! The classical three-particle model: Poisson involution of the
//! Hamiltonians, the Lax characteristic polynomial, the α identities behind
//! the separated equations, and a floating-point separation of variables
//! with a dilogarithm generating function.

mod phase;
mod symbolic;

pub use phase::{
    det_residual, genfunc_canonicity_check, genfunc_richardson, separate_numeric, separated_equation_residual,
    CanonicityReport, PhasePoint, Separated, MIN_DISCRIMINANT, MOMENTUM_AGREEMENT, RICHARDSON_STEPS,
};
pub use symbolic::{
    alpha_cl, alpha_cl_residuals, alpha_ratio_invariance_residual, charpoly_cleared, hamiltonian_brackets,
    hamiltonian_cl, lax_charpoly_identity_check, lax_charpoly_residuals, lax_invariants, lax_matrix, poisson_bracket,
    v, verify_classical_identities, z_parts, z_split_check, ClassicalReport, PoissonBracket, ZSplitReport,
    RATIO_INVARIANCE_L_EXPONENT,
};
