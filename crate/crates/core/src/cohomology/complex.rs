use std::sync::OnceLock;

use num_traits::{One, Zero};

use super::{sort_with_sign, Cochain, CohomologyError, ExteriorBasis};
use crate::lie::{LeviPair, LieAlgebra, LieModule};
use crate::linalg::{quotient_dim, RatMatrix, Rational, Subspace};
use crate::par;

/// Cohomology in one degree: the quotient `Z^p / B^p` with canonical
/// representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyResult {
    pub p: usize,
    pub dim: usize,
    pub z_dim: usize,
    pub b_dim: usize,
    pub representatives: Vec<Cochain>,
}

/// The Chevalley–Eilenberg complex `C^*(g, a)` of a module, with
/// differentials built on first use.
#[derive(Debug)]
pub struct CeComplex {
    module: LieModule,
    bases: Vec<ExteriorBasis>,
    diffs: Vec<OnceLock<RatMatrix>>,
}

impl CeComplex {
    pub fn new(module: LieModule) -> Self {
        let n = module.algebra().dim();
        let bases = (0..=n + 1).map(|p| ExteriorBasis::new(n, p)).collect();
        let diffs = (0..=n).map(|_| OnceLock::new()).collect();
        CeComplex { module, bases, diffs }
    }

    pub fn module(&self) -> &LieModule {
        &self.module
    }

    pub fn algebra(&self) -> &LieAlgebra {
        self.module.algebra()
    }

    pub fn g_dim(&self) -> usize {
        self.module.algebra().dim()
    }

    pub fn a_dim(&self) -> usize {
        self.module.dim()
    }

    /// Exterior basis in degree `p`; empty above the dimension of `g`.
    pub fn basis(&self, p: usize) -> ExteriorBasis {
        match self.bases.get(p) {
            Some(b) => b.clone(),
            None => ExteriorBasis::new(self.g_dim(), p),
        }
    }

    pub fn cochain_dim(&self, p: usize) -> usize {
        self.bases.get(p).map_or(0, |b| b.len()) * self.a_dim()
    }

    /// `d_p : C^p -> C^{p+1}` for `p <= dim g`.
    pub fn differential(&self, p: usize) -> Result<&RatMatrix, CohomologyError> {
        let n = self.g_dim();
        let cell = self.diffs.get(p).ok_or(CohomologyError::DegreeOutOfRange { p, max: n })?;
        Ok(cell.get_or_init(|| build_differential(&self.module, &self.bases[p], &self.bases[p + 1])))
    }

    pub fn apply_d(&self, omega: &Cochain) -> Result<Cochain, CohomologyError> {
        self.check_shape(omega)?;
        let p = omega.degree();
        let d = self.differential(p)?;
        Cochain::from_coords(p + 1, self.g_dim(), self.a_dim(), d.mul_vec(omega.coords()))
    }

    pub(crate) fn check_shape(&self, omega: &Cochain) -> Result<(), CohomologyError> {
        if omega.g_dim() != self.g_dim() || omega.a_dim() != self.a_dim() {
            return Err(CohomologyError::ShapeMismatch(format!(
                "cochain on ({}, {}) does not match complex on ({}, {})",
                omega.g_dim(),
                omega.a_dim(),
                self.g_dim(),
                self.a_dim()
            )));
        }
        Ok(())
    }

    /// Matrix of `theta_x` on `C^p`, where
    /// `(theta_x w)(x_1..x_p) = x.w(x_1..x_p) - sum_i w(x_1..[x,x_i]..x_p)`.
    pub fn invariance_operator(&self, p: usize, x: usize) -> RatMatrix {
        let basis = self.basis(p);
        let a = self.a_dim();
        let g = self.algebra();
        let rho = self.module.action(x);
        let rows = par::map_range(basis.len(), |r| {
            let tuple = &basis.tuples()[r];
            let mut entries = Vec::new();
            for i in 0..a {
                for j in 0..a {
                    if !rho[(i, j)].is_zero() {
                        entries.push((r * a + i, r * a + j, rho[(i, j)].clone()));
                    }
                }
            }
            for pos in 0..tuple.len() {
                for (m, c) in g.bracket_basis(x, tuple[pos]).iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mut t = tuple.clone();
                    t[pos] = m;
                    if let Some(s) = sort_with_sign(&mut t) {
                        let col = basis.rank(&t).expect("tuple in range");
                        let v = if s < 0 { c.clone() } else { -c.clone() };
                        for i in 0..a {
                            entries.push((r * a + i, col * a + i, v.clone()));
                        }
                    }
                }
            }
            entries
        });
        assemble(basis.len() * a, basis.len() * a, rows)
    }

    /// `C^p(g, g_red, a)`: cochains vanishing whenever an argument lies in
    /// `g_red` and annihilated by `theta_x` for `x` in `g_red`.
    pub fn relative_subspace(&self, p: usize, pair: &LeviPair) -> Result<Subspace, CohomologyError> {
        self.check_pair(pair)?;
        let dim = self.cochain_dim(p);
        if pair.red_indices().is_empty() {
            return Ok(Subspace::full(dim));
        }
        let basis = self.basis(p);
        let a = self.a_dim();
        let red = pair.red_indices();
        let free: Vec<usize> = basis
            .tuples()
            .iter()
            .enumerate()
            .filter(|(_, t)| t.iter().all(|i| !red.contains(i)))
            .flat_map(|(r, _)| (0..a).map(move |i| r * a + i))
            .collect();
        let thetas = par::map(red, |&x| self.invariance_operator(p, x));
        let mut constraint = RatMatrix::zeros(0, free.len());
        for theta in &thetas {
            let restricted = RatMatrix::from_fn(theta.rows(), free.len(), |r, c| theta[(r, free[c])].clone());
            constraint = constraint.vstack(&restricted);
        }
        let kernel = constraint.kernel();
        let vectors = kernel
            .basis()
            .iter()
            .map(|k| {
                let mut v = vec![Rational::zero(); dim];
                for (c, &idx) in free.iter().enumerate() {
                    v[idx] = k[c].clone();
                }
                v
            })
            .collect();
        Ok(Subspace::from_vectors(dim, vectors))
    }

    fn check_pair(&self, pair: &LeviPair) -> Result<(), CohomologyError> {
        if **pair.algebra() != *self.algebra() {
            return Err(CohomologyError::ShapeMismatch("module and Levi pair use different algebras".into()));
        }
        Ok(())
    }

    /// Image under `d_p` of a subspace of `C^p`.
    pub fn image_of(&self, p: usize, s: &Subspace) -> Result<Subspace, CohomologyError> {
        let target = self.cochain_dim(p + 1);
        if p >= self.g_dim() || s.dim() == 0 {
            return Ok(Subspace::zero(target));
        }
        let d = self.differential(p)?;
        let images = par::map(s.basis(), |v| d.mul_vec(v));
        Ok(Subspace::from_vectors(target, images))
    }

    /// Cocycles inside a subspace of `C^p`.
    pub fn cocycles_in(&self, p: usize, s: &Subspace) -> Result<Subspace, CohomologyError> {
        if p >= self.g_dim() || s.dim() == 0 {
            return Ok(s.clone());
        }
        let d = self.differential(p)?;
        let restricted = d * &s.basis_matrix().transpose();
        let kernel = restricted.kernel();
        let vectors = kernel.basis().iter().map(|y| s.combine(y)).collect();
        Ok(Subspace::from_vectors(self.cochain_dim(p), vectors))
    }

    /// `H^p(g, a)`; zero above the dimension of `g`.
    pub fn cohomology(&self, p: usize) -> Result<CohomologyResult, CohomologyError> {
        let full = Subspace::full(self.cochain_dim(p));
        let z = self.cocycles_in(p, &full)?;
        let b = match p {
            0 => Subspace::zero(self.cochain_dim(0)),
            _ => self.image_of(p - 1, &Subspace::full(self.cochain_dim(p - 1)))?,
        };
        self.quotient(p, &z, &b)
    }

    /// `H^p(g, g_red, a)`, after checking that `d` preserves the relative
    /// cochains in degrees `p - 1` and `p`.
    pub fn relative_cohomology(&self, p: usize, pair: &LeviPair) -> Result<CohomologyResult, CohomologyError> {
        let rel = self.relative_subspace(p, pair)?;
        let next = self.relative_subspace(p + 1, pair)?;
        if !next.contains_subspace(&self.image_of(p, &rel)?) {
            return Err(CohomologyError::SubcomplexViolation { p });
        }
        let b = match p {
            0 => Subspace::zero(self.cochain_dim(0)),
            _ => {
                let prev = self.relative_subspace(p - 1, pair)?;
                let b = self.image_of(p - 1, &prev)?;
                if !rel.contains_subspace(&b) {
                    return Err(CohomologyError::SubcomplexViolation { p: p - 1 });
                }
                b
            }
        };
        let z = self.cocycles_in(p, &rel)?;
        self.quotient(p, &z, &b)
    }

    fn quotient(&self, p: usize, z: &Subspace, b: &Subspace) -> Result<CohomologyResult, CohomologyError> {
        let q = quotient_dim(z, b)?;
        let representatives = q
            .representatives
            .into_iter()
            .map(|v| Cochain::from_coords(p, self.g_dim(), self.a_dim(), v))
            .collect::<Result<_, _>>()?;
        Ok(CohomologyResult {
            p,
            dim: q.dim,
            z_dim: z.dim(),
            b_dim: b.dim(),
            representatives,
        })
    }
}

fn assemble(rows: usize, cols: usize, blocks: Vec<Vec<(usize, usize, Rational)>>) -> RatMatrix {
    let mut m = RatMatrix::zeros(rows, cols);
    for (r, c, v) in blocks.into_iter().flatten() {
        m[(r, c)] += v;
    }
    m
}

fn build_differential(module: &LieModule, src: &ExteriorBasis, dst: &ExteriorBasis) -> RatMatrix {
    let a = module.dim();
    let g = module.algebra();
    let blocks = par::map_range(dst.len(), |r| {
        let tuple = &dst.tuples()[r];
        let mut entries = Vec::new();
        for k in 0..tuple.len() {
            let sign = if k % 2 == 0 { Rational::one() } else { -Rational::one() };
            let mut rest = tuple.clone();
            rest.remove(k);
            let col = src.rank(&rest).expect("tuple in range");
            let rho = module.action(tuple[k]);
            for i in 0..a {
                for j in 0..a {
                    if !rho[(i, j)].is_zero() {
                        entries.push((r * a + i, col * a + j, &sign * &rho[(i, j)]));
                    }
                }
            }
        }
        for k in 0..tuple.len() {
            for l in k + 1..tuple.len() {
                let rest: Vec<usize> =
                    tuple.iter().enumerate().filter(|&(q, _)| q != k && q != l).map(|(_, &x)| x).collect();
                for (m, c) in g.bracket_basis(tuple[k], tuple[l]).iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let mut t = Vec::with_capacity(rest.len() + 1);
                    t.push(m);
                    t.extend_from_slice(&rest);
                    if let Some(s) = sort_with_sign(&mut t) {
                        let col = src.rank(&t).expect("tuple in range");
                        let v = if (k + l) % 2 == 0 { s } else { -s };
                        let v = if v < 0 { -c.clone() } else { c.clone() };
                        for i in 0..a {
                            entries.push((r * a + i, col * a + i, v.clone()));
                        }
                    }
                }
            }
        }
        entries
    });
    assemble(dst.len() * a, src.len() * a, blocks)
}

/// Matrix of `d_p` on `C^p(g, a)`.
pub fn ce_differential(p: usize, module: &LieModule) -> Result<RatMatrix, CohomologyError> {
    CeComplex::new(module.clone()).differential(p).cloned()
}

pub fn cohomology(p: usize, module: &LieModule) -> Result<CohomologyResult, CohomologyError> {
    CeComplex::new(module.clone()).cohomology(p)
}

pub fn relative_subspace(p: usize, pair: &LeviPair, module: &LieModule) -> Result<Subspace, CohomologyError> {
    CeComplex::new(module.clone()).relative_subspace(p, pair)
}

pub fn relative_cohomology(p: usize, pair: &LeviPair, module: &LieModule) -> Result<CohomologyResult, CohomologyError> {
    CeComplex::new(module.clone()).relative_cohomology(p, pair)
}
