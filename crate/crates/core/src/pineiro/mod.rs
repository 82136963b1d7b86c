//! Jacobi-Pineiro polynomials by three routes (nested Rodrigues formula,
//! two-term operator recursion, explicit coefficients), their recursion
//! constants, the Weyl group actions on parameters, and the explicit bases
//! `v_i` and `u_i`.

mod bases;
mod constants;
mod r2;
mod recursive;
mod relations;
mod rodrigues;
mod weyl;

pub use bases::{
    u0_coefficients, u0_explicit, u0_explicit_params, u_basis, u_order, v_basis, v_element,
    v_order,
};
pub use constants::{a_const, a_vee, a_vee_top, a_zero, b_const, recursion_constants, RecursionConstants};
pub use r2::{b_explicit_r2, coeff_recursion_r2, coeff_step_r2, transformed_basis_r2, CoeffSequences};
pub use recursive::{pineiro_recursive, pineiro_recursive_params};
pub use relations::{common_ratio, rodrigues_factor, rodrigues_operator, three_term_residual};
pub use rodrigues::{pineiro_rodrigues, pineiro_rodrigues_params, rodrigues_form};
pub use weyl::{
    simple_act_l, simple_act_m, weyl_act, weyl_act_l, weyl_act_m, WeylElement,
};
