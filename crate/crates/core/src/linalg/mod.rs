//! Exact rational and integer linear algebra.
//!
//! Dense matrices over `Q` reduced with fraction-free elimination, canonical
//! (RREF) subspaces, quotients and the Smith normal form over `Z`.

mod matrix;
mod rational;
mod smith;
mod subspace;

pub use matrix::RatMatrix;
pub use rational::{format_rational, parse_rational, rat, Rational};
pub use smith::{smith_normal_form, IntMatrix, SmithForm};
pub use subspace::{quotient_dim, Quotient, Subspace};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("subspace is not contained in the ambient subspace (vector {index} lies outside)")]
    ContainmentViolation { index: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is singular")]
    Singular,
}
