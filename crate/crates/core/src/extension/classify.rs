use std::sync::Arc;

use super::{ExtError, FiniteAbelianGroup};
use crate::cohomology::{relative_cohomology, Cochain, ExteriorBasis};
use crate::lie::{AlgGroupData, CoeffGroupData, LeviPair, LieAlgebra, LieModule};
use crate::linalg::RatMatrix;

/// `Ext_alg(G, A)` reported as its two graded pieces: the finite subgroup
/// `Hom(pi_1([G,G]), A)` and the vector-space quotient `H^2(g, g_red, a_u)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtResult {
    pub finite_part: FiniteAbelianGroup,
    pub vector_part_dim: usize,
    pub vector_representatives: Vec<Cochain>,
}

impl ExtResult {
    pub fn is_trivial(&self) -> bool {
        self.finite_part.is_trivial() && self.vector_part_dim == 0
    }
}

/// Cocycle-level Baer sum.
pub fn baer_sum(c1: &Cochain, c2: &Cochain) -> Result<Cochain, ExtError> {
    if c1.degree() != 2 || !c1.same_shape(c2) {
        return Err(ExtError::ShapeMismatch(format!(
            "Baer sum needs two 2-cochains of one shape, got ({}, {}, {}) and ({}, {}, {})",
            c1.degree(),
            c1.g_dim(),
            c1.a_dim(),
            c2.degree(),
            c2.g_dim(),
            c2.a_dim()
        )));
    }
    Ok(c1 + c2)
}

/// `gamma ∘ c` for a `g`-equivariant map `gamma : a_1 -> a_2`.
pub fn pushforward_cocycle(
    gamma: &RatMatrix,
    c: &Cochain,
    src: &LieModule,
    dst: &LieModule,
) -> Result<Cochain, ExtError> {
    if **src.algebra() != **dst.algebra() {
        return Err(ExtError::ShapeMismatch("coefficient modules over different algebras".into()));
    }
    if gamma.rows() != dst.dim() || gamma.cols() != src.dim() {
        return Err(ExtError::ShapeMismatch(format!(
            "map is {}x{}, modules have dims {} -> {}",
            gamma.rows(),
            gamma.cols(),
            src.dim(),
            dst.dim()
        )));
    }
    if c.g_dim() != src.algebra().dim() || c.a_dim() != src.dim() {
        return Err(ExtError::ShapeMismatch("cochain does not match the source module".into()));
    }
    if let Some(index) = (0..src.algebra().dim()).find(|&i| gamma * src.action(i) != dst.action(i) * gamma) {
        return Err(ExtError::NotEquivariant { index });
    }
    let (a1, a2) = (src.dim(), dst.dim());
    let count = ExteriorBasis::new(c.g_dim(), c.degree()).len();
    let coords = (0..count).flat_map(|r| gamma.mul_vec(&c.coords()[r * a1..(r + 1) * a1])).collect();
    Ok(Cochain::from_coords(c.degree(), c.g_dim(), a2, coords)?)
}

/// `Hom(F, A) = Hom(F, A_s) = (F^)^{torus_dim}`; the unipotent factor has no
/// finite subgroups and contributes nothing.
pub fn hom_finite_part(pi1: &FiniteAbelianGroup, coeff: &CoeffGroupData) -> FiniteAbelianGroup {
    pi1.power(coeff.torus_dim())
}

/// `(a_u as g-module, dim A_s)`; the torus factor carries no action.
pub fn split_coefficients(coeff: &CoeffGroupData) -> (LieModule, usize) {
    (coeff.au_module().clone(), coeff.torus_dim())
}

pub fn ext_alg(group: &AlgGroupData, coeff: &CoeffGroupData) -> Result<ExtResult, ExtError> {
    let levi = group.levi();
    let (au, _) = split_coefficients(coeff);
    if **au.algebra() != **levi.algebra() {
        return Err(ExtError::ShapeMismatch("coefficient module is not over the group's Lie algebra".into()));
    }
    let finite_part = hom_finite_part(group.pi1_derived(), coeff);
    let h2 = relative_cohomology(2, levi, &au)?;
    Ok(ExtResult { finite_part, vector_part_dim: h2.dim, vector_representatives: h2.representatives })
}

/// Runs the classifier on a `g_dim`-dimensional torus with coefficients in an
/// `a_dim`-dimensional torus; the answer is always trivial.
pub fn torus_torus_check(g_dim: usize, a_dim: usize) -> ExtResult {
    let g = Arc::new(LieAlgebra::abelian(g_dim).with_name(format!("t{g_dim}")));
    let levi = LeviPair::reductive(g.clone()).expect("abelian algebras are reductive");
    let group = AlgGroupData::new(levi, FiniteAbelianGroup::trivial(), g_dim).expect("torus data");
    let coeff = CoeffGroupData::torus(a_dim, g);
    ext_alg(&group, &coeff).expect("torus data is valid")
}
