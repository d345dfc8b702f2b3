//! Exact dense linear algebra over `Z`, `Q` and `Z[λ]`.

mod block;
mod det;
mod matrix;
mod poly;
mod ring;

pub use block::{schur_block_det, schur_block_det_adjugate, sherman_morrison_inverse};
pub use det::{adjugate_exact, charpoly_oracle, det_exact, monic_charpoly};
pub use matrix::{IntMatrix, Matrix, PolyMatrix, RatMatrix};
pub use poly::UniPoly;
pub use ring::{ExactDiv, Ring};

/// Exact rational scalar, always stored in lowest terms with a positive
/// denominator.
pub type RatScalar = num_rational::BigRational;
