//! Exact spectral toolkit for signed complete graphs whose negative edges
//! induce `k` cliques of order `h` glued along a common `(h - p)`-clique.
//!
//! The crate is split into four layers:
//!
//! * [`exact`]: integer, rational and polynomial matrices, determinants,
//!   adjugates, characteristic polynomials and block determinants.
//! * [`family`]: the graph family, its adjacency and Seidel matrices.
//! * [`closed_form`]: closed-form spectra and the factored characteristic
//!   polynomial of the Seidel matrix.
//! * [`verify`]: numeric eigensolver, cubic root finder and the
//!   closed-form versus brute-force comparison.

pub mod closed_form;
pub mod error;
pub mod exact;
pub mod family;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{IntMatrix, Matrix, PolyMatrix, RatMatrix, RatScalar, UniPoly};
pub use family::FamilyParams;
