use thiserror::Error;

/// Errors surfaced by form construction, certification and search.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected a vector of length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid form: {0}")]
    InvalidForm(String),

    #[error(
        "FORM_NOT_HOMOGENEOUS: term {term_index} has exponent sum {alpha_sum}, expected degree {degree}"
    )]
    FormNotHomogeneous {
        term_index: usize,
        alpha_sum: u32,
        degree: u32,
    },

    #[error("cannot normalize a zero or non-finite vector onto the sphere")]
    ZeroPoint,

    #[error("EMPTY_TANGENT: the sphere in dimension 1 has no tangent directions")]
    EmptyTangent,

    #[error(
        "PRECONDITION_NOT_FONC: first-order residual {residual:e} exceeds tolerance {tol:e}"
    )]
    PreconditionNotFonc { residual: f64, tol: f64 },

    #[error("UNSUPPORTED_DIMENSION: grid oracle supports n in {{2, 3}}, got n = {n}")]
    UnsupportedDimension { n: usize },

    #[error("EMPTY_INPUT: no critical points supplied")]
    EmptyInput,

    #[error("numerical failure: {0}")]
    NumericalFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
