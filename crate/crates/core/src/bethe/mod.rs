//! Bethe tuples, exact genericity, the Bethe equations of the two-point
//! model, the scalar weight function, and the counterexample family.

mod bae;
mod counter;
mod nu;
mod tuple;

pub use bae::{bae_residual, bae_residuals_exact, solve_bae, BaeOutcome, BethePoint, Coord};
pub use counter::{counterexample_condition, scan_counterexamples, Counterexample};
pub use nu::{nu_weight, MAX_LEVEL_SIZE};
pub use tuple::{
    genericity_report, is_generic, y_tuple, y_tuple_admissible, y_tuple_from_basis, GenericityReport,
    YTuple,
};
