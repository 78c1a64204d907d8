//! Polynomial unipotent groups, their algebraic group cochains, and a
//! degree-truncated comparison of group cohomology with Lie algebra
//! cohomology.

mod cochain;
mod group;
mod parse;
mod poly;
mod sparse;
mod truncated;

pub use cochain::{delta_squared_check, group_differential, DeltaSquaredReport, PolyCochain};
pub use group::{GroupAction, PolyGroup};
pub use parse::{parse_poly, parse_poly_with};
pub use poly::{monomials_up_to, Monomial, MultiPoly};
pub use truncated::{differentiate_cocycle, truncated_group_cohomology, vanest_compare, TruncatedCohomology, VanEstReport};

pub(crate) use parse::variable_names;

use thiserror::Error;

use crate::cohomology::CohomologyError;
use crate::lie::LieError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VanEstError {
    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },
    #[error("origin is not a two-sided identity in law coordinate {coordinate}")]
    NoIdentity { coordinate: usize },
    #[error("law coordinate {coordinate} is not of the form x + y + (higher terms)")]
    NotUnipotentForm { coordinate: usize },
    #[error("law is not associative in coordinate {coordinate}")]
    NotAssociative { coordinate: usize },
    #[error("bad inverse: {reason}")]
    BadInverse { reason: String },
    #[error("bad group action: {0}")]
    BadAction(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("group cochain is not a cocycle")]
    NotACocycle,
    #[error("delta^2 is nonzero on the cochain with component {component} and monomial {monomial}")]
    DeltaSquaredViolation { component: usize, monomial: String },
    #[error("truncated group cohomology has dimension {group_dim} but Lie algebra cohomology has dimension {lie_dim}")]
    Mismatch { group_dim: usize, lie_dim: usize },
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
}
