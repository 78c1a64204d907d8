use std::sync::Arc;

use super::{LieAlgebra, LieError, LieModule};
use crate::linalg::{RatMatrix, Subspace};

/// A Lie algebra with a designated reductive subalgebra (`red`) and a
/// complementary nilpotent ideal (`u`), both spanned by basis vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviPair {
    g: Arc<LieAlgebra>,
    red: Vec<usize>,
    u: Vec<usize>,
}

impl LeviPair {
    pub fn new(g: Arc<LieAlgebra>, mut red: Vec<usize>, mut u: Vec<usize>) -> Result<Self, LieError> {
        red.sort_unstable();
        u.sort_unstable();
        let pair = LeviPair { g, red, u };
        pair.validate()?;
        Ok(pair)
    }

    /// `g_red = g`, `g_u = 0`.
    pub fn reductive(g: Arc<LieAlgebra>) -> Result<Self, LieError> {
        let red = (0..g.dim()).collect();
        Self::new(g, red, Vec::new())
    }

    /// `g_red = 0`, `g_u = g`.
    pub fn unipotent(g: Arc<LieAlgebra>) -> Result<Self, LieError> {
        let u = (0..g.dim()).collect();
        Self::new(g, Vec::new(), u)
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.g
    }

    pub fn red_indices(&self) -> &[usize] {
        &self.red
    }

    pub fn u_indices(&self) -> &[usize] {
        &self.u
    }

    pub fn red_subspace(&self) -> Subspace {
        self.g.coordinate_subspace(&self.red)
    }

    pub fn u_subspace(&self) -> Subspace {
        self.g.coordinate_subspace(&self.u)
    }

    /// The reductive part as a Lie algebra in its own basis.
    pub fn red_algebra(&self) -> LieAlgebra {
        self.g.restrict(&self.red).expect("validated subalgebra")
    }

    /// Center of `g_red`, as a subspace of `g`.
    pub fn red_center(&self) -> Subspace {
        let r = self.red_algebra();
        embed(&self.g, &self.red, &r.center())
    }

    pub fn validate(&self) -> Result<(), LieError> {
        let n = self.g.dim();
        let mut seen = vec![false; n];
        for &i in self.red.iter().chain(&self.u) {
            if i >= n {
                return Err(LieError::IndexOutOfRange { index: i, dim: n });
            }
            if seen[i] {
                return Err(LieError::NotAPartition);
            }
            seen[i] = true;
        }
        if seen.iter().any(|s| !s) {
            return Err(LieError::NotAPartition);
        }

        let u = self.u_subspace();
        if !self.g.is_ideal(&u) {
            return Err(LieError::NotAnIdeal);
        }
        let mut term = u.clone();
        while term.dim() > 0 {
            let next = self.g.bracket_spaces(&u, &term);
            if next == term {
                return Err(LieError::NotNilpotent);
            }
            term = next;
        }

        if !self.g.is_subalgebra(&self.red_subspace()) {
            return Err(LieError::NotASubalgebra);
        }
        check_reductive(&self.red_algebra())
    }
}

/// Killing form of `r` nondegenerate on `[r,r]`, and `r = z(r) ⊕ [r,r]`.
fn check_reductive(r: &LieAlgebra) -> Result<(), LieError> {
    let derived = r.derived_subalgebra();
    let center = r.center();
    if center.intersection(&derived).dim() != 0 || center.dim() + derived.dim() != r.dim() {
        return Err(LieError::NotReductive { reason: "center and derived subalgebra do not split".into() });
    }
    if derived.dim() > 0 {
        let b = derived.basis_matrix();
        let gram = &(&b * &r.killing_form()) * &b.transpose();
        if gram.rank() != derived.dim() {
            return Err(LieError::NotReductive {
                reason: "Killing form is degenerate on the derived subalgebra".into(),
            });
        }
    }
    Ok(())
}

fn embed(g: &LieAlgebra, indices: &[usize], s: &Subspace) -> Subspace {
    let n = g.dim();
    let vectors = s
        .basis()
        .iter()
        .map(|v| {
            let mut w = vec![num_traits::Zero::zero(); n];
            for (&i, x) in indices.iter().zip(v) {
                w[i] = x.clone();
            }
            w
        })
        .collect();
    Subspace::from_vectors(n, vectors)
}

/// Invariants and the span of images of a family of operators on a space of
/// dimension `dim`; fails unless they are complementary.
fn invariant_decomposition(dim: usize, ops: &[RatMatrix]) -> Result<(Subspace, Subspace), LieError> {
    if ops.is_empty() {
        return Ok((Subspace::full(dim), Subspace::zero(dim)));
    }
    let stacked = ops[1..].iter().fold(ops[0].clone(), |acc, m| acc.vstack(m));
    let invariants = stacked.kernel();
    let joined = ops[1..].iter().fold(ops[0].clone(), |acc, m| acc.hstack(m));
    let moved = joined.image();
    if invariants.dim() + moved.dim() != dim || invariants.intersection(&moved).dim() != 0 {
        return Err(LieError::DecompositionFailure { invariants: invariants.dim(), moved: moved.dim(), dim });
    }
    Ok((invariants, moved))
}

/// Splits a module into `g_red`-invariants and `g_red . M`.
pub fn invariant_projection(m: &LieModule, pair: &LeviPair) -> Result<(Subspace, Subspace), LieError> {
    if **m.algebra() != **pair.algebra() {
        return Err(LieError::ShapeMismatch("module and Levi pair use different algebras".into()));
    }
    let ops: Vec<RatMatrix> = pair.red_indices().iter().map(|&i| m.action(i).clone()).collect();
    invariant_decomposition(m.dim(), &ops)
}
