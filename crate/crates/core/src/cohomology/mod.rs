//! Chevalley–Eilenberg cochains, the relative subcomplex for a Levi pair,
//! their cohomology, and the injectivity of relative into absolute `H^2`.

mod cochain;
mod complex;
mod witness;

pub use cochain::{sort_with_sign, Cochain, ExteriorBasis};
pub use complex::{
    ce_differential, cohomology, relative_cohomology, relative_subspace, CeComplex, CohomologyResult,
};
pub use witness::{
    correct_invariant_primitive, relative_coboundary_witness, restriction_injectivity_check, reynolds_projection,
    InjectivityReport,
};

use thiserror::Error;

use crate::lie::LieError;
use crate::linalg::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("degree {p} is out of range for an algebra of dimension {max}")]
    DegreeOutOfRange { p: usize, max: usize },
    #[error("the differential does not preserve the relative subcomplex in degree {p}")]
    SubcomplexViolation { p: usize },
    #[error("a relative 2-cocycle is an absolute coboundary but not a relative one: {cocycle:?}")]
    InjectivityFailure { cocycle: Cochain },
    #[error("cochain is not a coboundary")]
    NotACoboundary,
    #[error("cochain does not lie in the relative subcomplex")]
    NotRelative,
    #[error("no g_red-invariant primitive exists (the g_red action is not semisimple)")]
    NoInvariantPrimitive,
    #[error("the center of g_red meets [g, g]")]
    CenterMeetsDerived,
    #[error("constructed witness failed verification: {0}")]
    WitnessCheckFailed(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}
