use num_traits::{One, Zero};

use super::LieError;
use crate::linalg::{RatMatrix, Rational, Subspace};

/// Lie algebra given by structure constants `[e_i, e_j] = sum_k c[i][j][k] e_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    labels: Vec<String>,
    consts: Vec<Rational>,
}

impl LieAlgebra {
    /// Validated constructor; `consts` is indexed `i * n * n + j * n + k`.
    pub fn new(name: impl Into<String>, labels: Vec<String>, consts: Vec<Rational>) -> Result<Self, LieError> {
        let g = Self::new_unchecked(name, labels, consts)?;
        g.validate()?;
        Ok(g)
    }

    /// Checks only the shape; antisymmetry and Jacobi are left to [`Self::validate`].
    pub fn new_unchecked(
        name: impl Into<String>,
        labels: Vec<String>,
        consts: Vec<Rational>,
    ) -> Result<Self, LieError> {
        let n = labels.len();
        if consts.len() != n * n * n {
            return Err(LieError::ShapeMismatch(format!(
                "expected {} structure constants, found {}",
                n * n * n,
                consts.len()
            )));
        }
        Ok(LieAlgebra { name: name.into(), labels, consts })
    }

    /// Builds from the brackets `[e_i, e_j]` for listed pairs; the reversed
    /// pairs are filled in by antisymmetry. Listing both orders inconsistently
    /// is reported as an antisymmetry violation.
    pub fn from_brackets(
        name: impl Into<String>,
        labels: Vec<String>,
        brackets: &[(usize, usize, Vec<(usize, Rational)>)],
    ) -> Result<Self, LieError> {
        let n = labels.len();
        let mut consts = vec![Rational::zero(); n * n * n];
        let mut given = vec![false; n * n];
        for (i, j, coeffs) in brackets {
            for &idx in [i, j].into_iter().chain(coeffs.iter().map(|(k, _)| k)) {
                if idx >= n {
                    return Err(LieError::IndexOutOfRange { index: idx, dim: n });
                }
            }
            given[i * n + j] = true;
            for (k, c) in coeffs {
                consts[(i * n + j) * n + k] += c;
            }
        }
        for i in 0..n {
            for j in 0..n {
                if given[i * n + j] && !given[j * n + i] {
                    for k in 0..n {
                        consts[(j * n + i) * n + k] = -consts[(i * n + j) * n + k].clone();
                    }
                }
            }
        }
        Self::new(name, labels, consts)
    }

    /// Integer-coefficient convenience wrapper around [`Self::from_brackets`].
    pub fn from_int_brackets(name: &str, labels: &[&str], brackets: &[(usize, usize, &[(usize, i64)])]) -> Self {
        let brackets: Vec<_> = brackets
            .iter()
            .map(|(i, j, cs)| (*i, *j, cs.iter().map(|&(k, c)| (k, Rational::from_integer(c.into()))).collect()))
            .collect();
        Self::from_brackets(name, labels.iter().map(|s| s.to_string()).collect(), &brackets)
            .expect("built-in structure constants are valid")
    }

    pub fn abelian(n: usize) -> Self {
        let labels = (1..=n).map(|i| format!("e{i}")).collect();
        LieAlgebra { name: format!("abelian{n}"), labels, consts: vec![Rational::zero(); n * n * n] }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rational {
        let n = self.dim();
        &self.consts[(i * n + j) * n + k]
    }

    pub fn structure_constants(&self) -> &[Rational] {
        &self.consts
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Rational] {
        let n = self.dim();
        &self.consts[(i * n + j) * n..(i * n + j + 1) * n]
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Vec<Rational> {
        let n = self.dim();
        let mut out = vec![Rational::zero(); n];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let s = xi * yj;
                for (o, c) in out.iter_mut().zip(self.bracket_basis(i, j)) {
                    if !c.is_zero() {
                        *o += &s * c;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad(e_i)`; column `j` holds `[e_i, e_j]`.
    pub fn ad(&self, i: usize) -> RatMatrix {
        let n = self.dim();
        RatMatrix::from_fn(n, n, |k, j| self.structure_constant(i, j, k).clone())
    }

    /// Antisymmetry and Jacobi on all basis triples.
    pub fn validate(&self) -> Result<(), LieError> {
        let n = self.dim();
        let mut violations = Vec::new();
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    let a = self.structure_constant(i, j, k);
                    let b = self.structure_constant(j, i, k);
                    if &-a.clone() != b {
                        violations.push((i, j, k));
                    }
                }
            }
        }
        if !violations.is_empty() {
            return Err(LieError::AntisymmetryViolation { violations });
        }
        let mut triples = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    if !self.jacobiator(i, j, k).iter().all(Zero::is_zero) {
                        triples.push((i, j, k));
                    }
                }
            }
        }
        if triples.is_empty() {
            Ok(())
        } else {
            Err(LieError::JacobiViolation { triples })
        }
    }

    /// `[e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]`.
    pub fn jacobiator(&self, i: usize, j: usize, k: usize) -> Vec<Rational> {
        let n = self.dim();
        let unit = |a: usize| {
            let mut v = vec![Rational::zero(); n];
            v[a] = Rational::one();
            v
        };
        let term = |a: usize, b: usize, c: usize| self.bracket(&unit(a), self.bracket_basis(b, c));
        let mut out = term(i, j, k);
        for (o, (x, y)) in out.iter_mut().zip(term(j, k, i).into_iter().zip(term(k, i, j))) {
            *o += x + y;
        }
        out
    }

    /// `[U, W]` for subspaces of the algebra.
    pub fn bracket_spaces(&self, u: &Subspace, w: &Subspace) -> Subspace {
        let mut vs = Vec::new();
        for x in u.basis() {
            for y in w.basis() {
                vs.push(self.bracket(x, y));
            }
        }
        Subspace::from_vectors(self.dim(), vs)
    }

    /// Span of all `[e_i, e_j]`.
    pub fn derived_subalgebra(&self) -> Subspace {
        let n = self.dim();
        let mut vs = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                vs.push(self.bracket_basis(i, j).to_vec());
            }
        }
        Subspace::from_vectors(n, vs)
    }

    /// `g ⊇ [g,g] ⊇ [g,[g,g]] ⊇ ...` until it stabilizes.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = Subspace::full(self.dim());
        let mut series = vec![full.clone()];
        loop {
            let last = series.last().expect("series is nonempty");
            let next = self.bracket_spaces(&full, last);
            if &next == last {
                break;
            }
            let stop = next.dim() == 0;
            series.push(next);
            if stop {
                break;
            }
        }
        series
    }

    pub fn is_nilpotent(&self) -> bool {
        self.lower_central_series().last().is_some_and(|s| s.dim() == 0)
    }

    /// `K(e_i, e_j) = tr(ad e_i ∘ ad e_j)`.
    pub fn killing_form(&self) -> RatMatrix {
        let n = self.dim();
        let ads: Vec<RatMatrix> = (0..n).map(|i| self.ad(i)).collect();
        let mut k = RatMatrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let t = (&ads[i] * &ads[j]).trace();
                k[(j, i)] = t.clone();
                k[(i, j)] = t;
            }
        }
        k
    }

    pub fn center(&self) -> Subspace {
        let n = self.dim();
        if n == 0 {
            return Subspace::zero(0);
        }
        let stacked = (0..n).map(|i| self.ad(i)).reduce(|a, b| a.vstack(&b)).expect("n > 0");
        // x central iff ad(e_i) x = 0 for every i
        stacked.kernel()
    }

    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        s.contains_subspace(&self.bracket_spaces(s, s))
    }

    pub fn is_ideal(&self, s: &Subspace) -> bool {
        s.contains_subspace(&self.bracket_spaces(&Subspace::full(self.dim()), s))
    }

    /// The subalgebra spanned by the basis vectors `indices`, in that basis.
    pub fn restrict(&self, indices: &[usize]) -> Result<LieAlgebra, LieError> {
        let n = self.dim();
        let m = indices.len();
        let mut inside = vec![false; n];
        for &i in indices {
            if i >= n {
                return Err(LieError::IndexOutOfRange { index: i, dim: n });
            }
            inside[i] = true;
        }
        let mut consts = vec![Rational::zero(); m * m * m];
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                for (k, c) in self.bracket_basis(i, j).iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    if !inside[k] {
                        return Err(LieError::NotASubalgebra);
                    }
                    let pos = indices.iter().position(|&x| x == k).expect("index is inside");
                    consts[(a * m + b) * m + pos] = c.clone();
                }
            }
        }
        let labels = indices.iter().map(|&i| self.labels[i].clone()).collect();
        Ok(LieAlgebra { name: format!("{}_sub", self.name), labels, consts })
    }

    /// Span of the basis vectors `indices` as a subspace.
    pub fn coordinate_subspace(&self, indices: &[usize]) -> Subspace {
        let n = self.dim();
        Subspace::from_vectors(
            n,
            indices
                .iter()
                .map(|&i| {
                    let mut v = vec![Rational::zero(); n];
                    v[i] = Rational::one();
                    v
                })
                .collect(),
        )
    }
}
