//! Finite-dimensional Lie algebras over `Q`, their modules, and Levi pairs.

mod algebra;
mod group_data;
mod levi;
mod module;
pub mod standard;

pub use algebra::LieAlgebra;
pub use group_data::{AlgGroupData, CoeffGroupData};
pub use levi::{invariant_projection, LeviPair};
pub use module::LieModule;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("structure constants are not antisymmetric at (i, j, k) = {violations:?}")]
    AntisymmetryViolation { violations: Vec<(usize, usize, usize)> },
    #[error("Jacobi identity fails on basis triples {triples:?}")]
    JacobiViolation { triples: Vec<(usize, usize, usize)> },
    #[error("module axiom rho([x,y]) = [rho(x),rho(y)] fails on basis pairs {pairs:?}")]
    ModuleAxiomViolation { pairs: Vec<(usize, usize)> },
    #[error("span of the u-indices is not an ideal")]
    NotAnIdeal,
    #[error("the ideal spanned by the u-indices is not nilpotent")]
    NotNilpotent,
    #[error("span of the red-indices is not a subalgebra")]
    NotASubalgebra,
    #[error("the red subalgebra is not reductive: {reason}")]
    NotReductive { reason: String },
    #[error("invariants ({invariants}) and moved vectors ({moved}) do not split the {dim}-dimensional module")]
    DecompositionFailure { invariants: usize, moved: usize, dim: usize },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("red and u indices must partition the basis")]
    NotAPartition,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid group data: {0}")]
    InvalidGroupData(String),
}
