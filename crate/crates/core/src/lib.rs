//! Exact-arithmetic classification of extensions of connected algebraic groups
//! by connected abelian groups.
//!
//! The crate computes relative Lie algebra cohomology `H^p(g, g_red, a)`, the
//! finite part `Hom(pi_1([G,G]), A)` of the extension group, explicit
//! extension algebras built from 2-cocycles, and compares truncated algebraic
//! group cohomology of unipotent groups with the Lie algebra side.
//!
//! All arithmetic is over exact rationals. Inputs are described by small JSON
//! files (see [`formats`]) and driven from the `algext` command-line tool.

pub mod cli;
pub mod cohomology;
pub mod extension;
pub mod formats;
pub mod lie;
pub mod linalg;
pub mod par;
pub mod vanest;

pub use cohomology::{Cochain, CohomologyError, CohomologyResult};
pub use extension::{ExtError, ExtResult, ExtensionAlgebra, FiniteAbelianGroup};
pub use lie::{AlgGroupData, CoeffGroupData, LeviPair, LieAlgebra, LieError, LieModule};
pub use linalg::{IntMatrix, RatMatrix, Rational, Subspace};
