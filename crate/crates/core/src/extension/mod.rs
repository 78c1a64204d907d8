//! Extensions of Lie algebras from 2-cocycles, their Baer sum and pushforward,
//! and the classification of algebraic group extensions as a finite part
//! `Hom(pi_1([G,G]), A)` plus the relative cohomology `H^2(g, g_red, a_u)`.

mod algebra;
mod classify;
mod finite;

pub use algebra::{extension_algebra_from_cocycle, is_lie_homomorphism, ExtensionAlgebra};
pub use classify::{
    baer_sum, ext_alg, hom_finite_part, pushforward_cocycle, split_coefficients, torus_torus_check, ExtResult,
};
pub use finite::FiniteAbelianGroup;

use thiserror::Error;

use crate::cohomology::CohomologyError;
use crate::lie::LieError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtError {
    #[error("invalid finite abelian group: {0}")]
    InvalidFiniteGroup(String),
    #[error("2-cochain is not a cocycle: Jacobi fails on triples {triples:?}")]
    NotACocycle { triples: Vec<(usize, usize, usize)> },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("coefficient map does not intertwine the action of basis element {index}")]
    NotEquivariant { index: usize },
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
}
