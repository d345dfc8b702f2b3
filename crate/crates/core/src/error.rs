use thiserror::Error;

/// Errors raised by the exact and closed-form routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// The operation needs at least two cliques.
    #[error("degenerate family: {0}")]
    DegenerateFamily(String),

    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),

    #[error("singular input: {0}")]
    SingularInput(String),

    #[error("singular block: the D block has zero determinant")]
    SingularBlock,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("cubic has a complex root pair (discriminant {0:e})")]
    ComplexRoots(f64),

    #[error("leading coefficient of the cubic is zero")]
    DegenerateLeading,

    #[error("internal error: {0}")]
    InternalError(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
