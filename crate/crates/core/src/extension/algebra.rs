use num_traits::Zero;

use super::ExtError;
use crate::cohomology::{Cochain, ExteriorBasis};
use crate::lie::{LieAlgebra, LieError, LieModule};
use crate::linalg::{RatMatrix, Rational};

/// `a ⊕_ω g` with bracket `[(a,x),(a',x')] = (x.a' - x'.a + ω(x,x'), [x,x'])`.
/// Basis order: the `a` basis first, then the `g` basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionAlgebra {
    total: LieAlgebra,
    a_dim: usize,
    g_dim: usize,
}

impl ExtensionAlgebra {
    pub fn total(&self) -> &LieAlgebra {
        &self.total
    }

    pub fn into_total(self) -> LieAlgebra {
        self.total
    }

    pub fn a_dim(&self) -> usize {
        self.a_dim
    }

    pub fn g_dim(&self) -> usize {
        self.g_dim
    }

    /// Indices of the total basis coming from `a`.
    pub fn injection(&self) -> Vec<usize> {
        (0..self.a_dim).collect()
    }

    /// Indices of the total basis mapping onto the basis of `g`.
    pub fn projection(&self) -> Vec<usize> {
        (self.a_dim..self.a_dim + self.g_dim).collect()
    }

    /// Matrix of the quotient map onto `g`.
    pub fn projection_matrix(&self) -> RatMatrix {
        let n = self.a_dim + self.g_dim;
        RatMatrix::from_fn(self.g_dim, n, |r, c| if c == self.a_dim + r { Rational::from_integer(1.into()) } else { Rational::zero() })
    }

    /// Matrix of `(a, x) -> (a + f(x), x)`, an isomorphism from the
    /// `ω`-algebra onto the `(ω - d f)`-algebra.
    pub fn base_change(&self, f: &Cochain) -> Result<RatMatrix, ExtError> {
        if f.degree() != 1 || f.g_dim() != self.g_dim || f.a_dim() != self.a_dim {
            return Err(ExtError::ShapeMismatch("base change needs a 1-cochain on the same g and a".into()));
        }
        let a = self.a_dim;
        let n = a + self.g_dim;
        Ok(RatMatrix::from_fn(n, n, |r, c| {
            if r == c {
                Rational::from_integer(1.into())
            } else if r < a && c >= a {
                f.coords()[(c - a) * a + r].clone()
            } else {
                Rational::zero()
            }
        }))
    }
}

fn unchecked_total(omega: &Cochain, module: &LieModule) -> Result<LieAlgebra, ExtError> {
    let g = module.algebra();
    let (n, a) = (g.dim(), module.dim());
    if omega.degree() != 2 || omega.g_dim() != n || omega.a_dim() != a {
        return Err(ExtError::ShapeMismatch(format!(
            "expected a 2-cochain on dim {n} with {a}-dim values, got degree {} on ({}, {})",
            omega.degree(),
            omega.g_dim(),
            omega.a_dim()
        )));
    }
    let total = a + n;
    let mut consts = vec![Rational::zero(); total * total * total];
    let idx = |i: usize, j: usize, k: usize| (i * total + j) * total + k;
    for k in 0..n {
        let rho = module.action(k);
        for j in 0..a {
            for i in 0..a {
                let v = &rho[(i, j)];
                if !v.is_zero() {
                    consts[idx(a + k, j, i)] = v.clone();
                    consts[idx(j, a + k, i)] = -v.clone();
                }
            }
        }
    }
    let basis = ExteriorBasis::new(n, 2);
    for k in 0..n {
        for l in 0..n {
            if k == l {
                continue;
            }
            for (b, v) in omega.evaluate(&basis, &[k, l]).into_iter().enumerate() {
                consts[idx(a + k, a + l, b)] = v;
            }
            for m in 0..n {
                consts[idx(a + k, a + l, a + m)] = g.structure_constant(k, l, m).clone();
            }
        }
    }
    let mut labels: Vec<String> = (0..a).map(|i| format!("a{i}")).collect();
    labels.extend(g.labels().iter().cloned());
    Ok(LieAlgebra::new_unchecked(format!("{}_ext", g.name()), labels, consts)?)
}

/// Builds `a ⊕_ω g` and checks the Jacobi identity, which holds exactly when
/// `ω` is a cocycle.
pub fn extension_algebra_from_cocycle(omega: &Cochain, module: &LieModule) -> Result<ExtensionAlgebra, ExtError> {
    let total = unchecked_total(omega, module)?;
    match total.validate() {
        Ok(()) => {}
        Err(LieError::JacobiViolation { triples }) => return Err(ExtError::NotACocycle { triples }),
        Err(e) => return Err(e.into()),
    }
    Ok(ExtensionAlgebra { total, a_dim: module.dim(), g_dim: module.algebra().dim() })
}

/// `phi([e_i, e_j]) = [phi(e_i), phi(e_j)]` for a linear map given by its
/// matrix (columns are images of the source basis).
pub fn is_lie_homomorphism(phi: &RatMatrix, src: &LieAlgebra, dst: &LieAlgebra) -> bool {
    if phi.rows() != dst.dim() || phi.cols() != src.dim() {
        return false;
    }
    let images: Vec<Vec<Rational>> = (0..src.dim()).map(|i| phi.column(i)).collect();
    (0..src.dim()).all(|i| {
        (i + 1..src.dim()).all(|j| phi.mul_vec(src.bracket_basis(i, j)) == dst.bracket(&images[i], &images[j]))
    })
}
