//! Exact Beta-moment calculus for Jacobi weights on `[0, 1]` and the
//! orthogonality, norm and adjointness identities it certifies.

mod checks;
mod weight;

pub use checks::{
    adjointness_residuals, check_integral_adjointness, check_norm_formulas,
    check_pineiro_orthogonality, m_norm, norm_sides, orthogonal_polynomial, orthogonality_exponents,
    orthogonality_residuals,
};
pub use weight::{
    beta_ratio, inner_product, moment_against_power, moment_ratio, omega_inner_product,
    JacobiWeight,
};
