//! Separation of variables for three particles: the operator `M` on the
//! polynomial bases, separated polynomials, the separated q-difference
//! equation, and the two-parameter operator family.

mod coords;
mod pbasis;
mod seppoly;
mod sepop;
mod quantum;
mod minv;
mod mab;
mod factor;

pub use coords::{
    coords_to_t, coords_to_y, from_sym_coords_in, t_to_coords, to_sym_coords_in, y_to_coords, TCOORDS, TVARS,
    YCOORDS, YVARS,
};
pub use pbasis::{
    apply_m, apply_minv, c_lambda, expand_in_p_basis, expand_in_ptilde_basis, m_factor, p_basis_poly,
    ptilde_basis_poly, PBasisIndex,
};
pub use seppoly::{
    chi, chi_endpoint, lauricella_form_one, lauricella_form_three, lauricella_form_two_consistent,
    lauricella_forms_check, sep_parameters, sep_poly, sep_poly_via_series, sep_series, sep_value_at_ell_minus_n,
    SepPoly,
};
pub use sepop::{
    apply_sep_eq3, apply_simplified, boundary_high_closed, boundary_low_closed, check_uniqueness,
    reconstruct_sep_by_recursion, SepOperator,
};
pub use quantum::{
    alpha12_both, alpha_check, alpha_identity_residuals, check_c_chi_product, check_shift_commutation,
    default_cn_weights, v, v_check, verify_alpha_identities_quantum, QuantumReport,
};
pub use factor::{
    check_triangularity, m_on_macdonald, round_trip, separated_product, triangular_top, verify_factorization, weights_in_box,
    FactorizationReport,
};
pub use minv::{minv_difference_check, xi_factors, xi_t, MinvDifference};
pub use mab::{
    apply_mab, basis_action_agrees, expand_pair_basis, inversion_factor_identity, inversion_round_trip,
    kernel_shift_identity, mab_identity_checks, mab_on_r, pair_poch, r_indices, r_poly, xi_sum_residual, MabReport,
};
