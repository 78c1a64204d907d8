use std::sync::Arc;

use num_traits::Zero;

use super::{LieAlgebra, LieError};
use crate::linalg::{RatMatrix, Rational, Subspace};

/// A finite-dimensional module over a Lie algebra, given by the action
/// matrices `rho(e_i)` of the basis elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieModule {
    algebra: Arc<LieAlgebra>,
    dim: usize,
    action: Vec<RatMatrix>,
}

impl LieModule {
    pub fn new(algebra: Arc<LieAlgebra>, dim: usize, action: Vec<RatMatrix>) -> Result<Self, LieError> {
        let m = Self::new_unchecked(algebra, dim, action)?;
        m.validate()?;
        Ok(m)
    }

    /// Checks shapes only.
    pub fn new_unchecked(algebra: Arc<LieAlgebra>, dim: usize, action: Vec<RatMatrix>) -> Result<Self, LieError> {
        if action.len() != algebra.dim() {
            return Err(LieError::ShapeMismatch(format!(
                "expected {} action matrices, found {}",
                algebra.dim(),
                action.len()
            )));
        }
        if let Some(bad) = action.iter().position(|a| a.rows() != dim || a.cols() != dim) {
            return Err(LieError::ShapeMismatch(format!("action matrix {bad} is not {dim}x{dim}")));
        }
        Ok(LieModule { algebra, dim, action })
    }

    pub fn trivial(algebra: Arc<LieAlgebra>, dim: usize) -> Self {
        let action = vec![RatMatrix::zeros(dim, dim); algebra.dim()];
        LieModule { algebra, dim, action }
    }

    pub fn adjoint(algebra: Arc<LieAlgebra>) -> Self {
        let n = algebra.dim();
        let action = (0..n).map(|i| algebra.ad(i)).collect();
        LieModule { algebra, dim: n, action }
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self, i: usize) -> &RatMatrix {
        &self.action[i]
    }

    pub fn actions(&self) -> &[RatMatrix] {
        &self.action
    }

    /// `rho(x)` for `x` in coordinates.
    pub fn act(&self, x: &[Rational]) -> RatMatrix {
        let mut out = RatMatrix::zeros(self.dim, self.dim);
        for (c, a) in x.iter().zip(&self.action) {
            if !c.is_zero() {
                out = &out + &a.scale(c);
            }
        }
        out
    }

    /// `rho([e_i, e_j]) = [rho(e_i), rho(e_j)]` on all basis pairs.
    pub fn validate(&self) -> Result<(), LieError> {
        let n = self.algebra.dim();
        let mut pairs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let lhs = self.act(self.algebra.bracket_basis(i, j));
                if lhs != self.action[i].commutator(&self.action[j]) {
                    pairs.push((i, j));
                }
            }
        }
        if pairs.is_empty() {
            Ok(())
        } else {
            Err(LieError::ModuleAxiomViolation { pairs })
        }
    }

    pub fn direct_sum(&self, other: &LieModule) -> Result<LieModule, LieError> {
        if self.algebra != other.algebra {
            return Err(LieError::ShapeMismatch("modules over different algebras".into()));
        }
        let d = self.dim + other.dim;
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| {
                RatMatrix::from_fn(d, d, |r, c| match (r < self.dim, c < self.dim) {
                    (true, true) => a[(r, c)].clone(),
                    (false, false) => b[(r - self.dim, c - self.dim)].clone(),
                    _ => Rational::zero(),
                })
            })
            .collect();
        Ok(LieModule { algebra: self.algebra.clone(), dim: d, action })
    }

    /// Same action matrices, reattached to an equal algebra handle.
    pub fn rebind(&self, algebra: Arc<LieAlgebra>) -> Result<LieModule, LieError> {
        if *algebra != *self.algebra {
            return Err(LieError::ShapeMismatch("modules over different algebras".into()));
        }
        Ok(LieModule { algebra, dim: self.dim, action: self.action.clone() })
    }

    /// `a^g`: vectors killed by every basis element.
    pub fn invariants(&self) -> Subspace {
        self.invariants_of(&(0..self.algebra.dim()).collect::<Vec<_>>())
    }

    /// Vectors killed by `rho(e_i)` for every `i` in `indices`.
    pub fn invariants_of(&self, indices: &[usize]) -> Subspace {
        let mut stacked = RatMatrix::zeros(0, self.dim);
        for &i in indices {
            stacked = stacked.vstack(&self.action[i]);
        }
        stacked.kernel()
    }
}
