//! Exact computations with Jacobi-Piñeiro polynomials, the polynomial spaces
//! they live in, and the Bethe ansatz equations of the two-point Gaudin model.

pub mod error;
pub mod exactmath;

pub use error::{Error, Result};
pub mod spaces;
pub mod pineiro;
pub mod bethe;
pub mod orthogonality;
pub mod verify;
