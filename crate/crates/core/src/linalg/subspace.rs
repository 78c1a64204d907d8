use num_traits::Zero;

use super::matrix::{rref_rows, RatMatrix};
use super::rational::Rational;
use super::LinalgError;

/// A linear subspace of `Q^n`, stored by its canonical RREF basis.
///
/// Two subspaces are equal exactly when their stored bases are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self::from_vectors(
            ambient_dim,
            (0..ambient_dim)
                .map(|i| {
                    let mut v = vec![Rational::zero(); ambient_dim];
                    v[i] = num_traits::One::one();
                    v
                })
                .collect(),
        )
    }

    /// Span of `vectors`. Panics if a vector has the wrong length.
    pub fn from_vectors(ambient_dim: usize, vectors: Vec<Vec<Rational>>) -> Self {
        for v in &vectors {
            assert_eq!(v.len(), ambient_dim, "vector length does not match ambient dimension");
        }
        let (basis, pivots) = rref_rows(vectors, ambient_dim);
        Subspace { ambient_dim, basis, pivots }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis as the rows of a matrix.
    pub fn basis_matrix(&self) -> RatMatrix {
        RatMatrix::from_rows(self.ambient_dim, self.basis.clone())
    }

    /// Remainder of `v` after eliminating every pivot coordinate.
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.ambient_dim, "vector length does not match ambient dimension");
        let mut out = v.to_vec();
        for (row, &pc) in self.basis.iter().zip(&self.pivots) {
            if out[pc].is_zero() {
                continue;
            }
            let f = out[pc].clone();
            for (o, x) in out.iter_mut().zip(row) {
                if !x.is_zero() {
                    *o -= &f * x;
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.ambient_dim == self.ambient_dim && other.basis.iter().all(|v| self.contains(v))
    }

    /// Coefficients of `v` in the stored basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&pc| v[pc].clone()).collect())
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim, "ambient dimension mismatch");
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Subspace::from_vectors(self.ambient_dim, vs)
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim, "ambient dimension mismatch");
        let (k, l) = (self.dim(), other.dim());
        if k == 0 || l == 0 {
            return Subspace::zero(self.ambient_dim);
        }
        // columns u_1..u_k, -w_1..-w_l; kernel vectors give the common elements
        let m = RatMatrix::from_fn(self.ambient_dim, k + l, |r, c| {
            if c < k {
                self.basis[c][r].clone()
            } else {
                -other.basis[c - k][r].clone()
            }
        });
        let vectors = m
            .kernel()
            .basis()
            .iter()
            .map(|coeffs| self.combine(&coeffs[..k]))
            .collect();
        Subspace::from_vectors(self.ambient_dim, vectors)
    }

    /// `sum_i coeffs[i] * basis[i]`.
    pub fn combine(&self, coeffs: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.ambient_dim];
        for (c, row) in coeffs.iter().zip(&self.basis) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(row) {
                if !x.is_zero() {
                    *o += c * x;
                }
            }
        }
        out
    }
}

/// `z / b` for subspaces `b ⊆ z`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub dim: usize,
    /// Canonical lifts of a quotient basis: the RREF basis of `z` reduced
    /// modulo the pivots of `b`.
    pub representatives: Vec<Vec<Rational>>,
}

pub fn quotient_dim(z: &Subspace, b: &Subspace) -> Result<Quotient, LinalgError> {
    if z.ambient_dim != b.ambient_dim {
        return Err(LinalgError::DimensionMismatch { expected: z.ambient_dim, found: b.ambient_dim });
    }
    if let Some(index) = b.basis.iter().position(|v| !z.contains(v)) {
        return Err(LinalgError::ContainmentViolation { index });
    }
    let reduced: Vec<Vec<Rational>> = z.basis.iter().map(|v| b.reduce(v)).collect();
    let (representatives, _) = rref_rows(reduced, z.ambient_dim);
    debug_assert_eq!(representatives.len(), z.dim() - b.dim());
    Ok(Quotient { dim: representatives.len(), representatives })
}
