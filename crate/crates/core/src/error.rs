use thiserror::Error;

use crate::exactmath::Rational;

/// Errors raised by the library. Non-generic Bethe tuples are *not* errors;
/// they are reported through [`crate::bethe::BaeOutcome`].
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parameters are not consistent: {0}")]
    Inconsistent(String),

    #[error("constructed space does not match its exponent data: {0}")]
    InternalExponentMismatch(String),

    #[error("generalized form does not normalize to a polynomial: {0}")]
    NotPolynomial(String),

    #[error("division is not exact: {0}")]
    NonExactDivision(String),

    #[error("polynomial does not lie in the space: {0}")]
    NotInSpace(String),

    #[error("only ranks r = 1, 2 are supported here (got r = {0})")]
    UnsupportedRank(usize),

    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("parameters are not admissible: {0}")]
    NotAdmissible(String),

    #[error("recursion constant vanishes: {0}")]
    ZeroRecursionConstant(String),

    #[error("pole in recursion constant: {0}")]
    PoleInConstant(String),

    #[error("pole in explicit coefficient: {0}")]
    PoleInCoefficient(String),

    #[error("coordinates coincide: {0}")]
    CoincidingCoordinates(String),

    #[error("coordinate at a singular point: {0}")]
    CoordinateAtSingularPoint(String),

    #[error("moment recurrence hits a pole at step {step}")]
    MomentPole { step: usize },

    #[error("beta arguments differ by a non-integer shift: {0}")]
    NonIntegerShift(Rational),

    #[error("gamma ladder crosses a pole: {0}")]
    GammaPole(String),

    #[error("input too large: {0}")]
    TooLarge(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
