use std::collections::HashMap;
use std::ops::{Add, Neg, Sub};

use num_traits::Zero;

use super::CohomologyError;
use crate::linalg::Rational;

/// Strictly increasing `p`-tuples from `0..n`, in lexicographic order.
#[derive(Clone, Debug)]
pub struct ExteriorBasis {
    n: usize,
    p: usize,
    tuples: Vec<Vec<usize>>,
    index: HashMap<Vec<usize>, usize>,
}

impl ExteriorBasis {
    pub fn new(n: usize, p: usize) -> Self {
        let mut tuples = Vec::new();
        if p <= n {
            let mut cur: Vec<usize> = (0..p).collect();
            loop {
                tuples.push(cur.clone());
                // advance to the next combination
                let Some(i) = (0..p).rev().find(|&i| cur[i] < n - p + i) else {
                    break;
                };
                cur[i] += 1;
                for j in i + 1..p {
                    cur[j] = cur[j - 1] + 1;
                }
            }
        }
        let index = tuples.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect();
        ExteriorBasis { n, p, tuples, index }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn len(&self) -> usize {
        self.tuples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tuples.is_empty()
    }

    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    /// Position of a strictly increasing tuple.
    pub fn rank(&self, tuple: &[usize]) -> Option<usize> {
        self.index.get(tuple).copied()
    }
}

/// Sorts `t` in place; returns the sign of the sorting permutation, or
/// `None` if `t` has a repeated entry.
pub fn sort_with_sign(t: &mut [usize]) -> Option<i64> {
    let mut sign = 1;
    for i in 1..t.len() {
        let mut j = i;
        while j > 0 && t[j - 1] > t[j] {
            t.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
        if j > 0 && t[j - 1] == t[j] {
            return None;
        }
    }
    if t.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(sign)
}

/// Alternating `p`-cochain on a `g_dim`-dimensional algebra with values in an
/// `a_dim`-dimensional module. Coordinate `rank(I) * a_dim + b` is the
/// `b`-th component of `ω(e_I)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain {
    p: usize,
    g_dim: usize,
    a_dim: usize,
    coords: Vec<Rational>,
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

impl Cochain {
    pub fn zero(p: usize, g_dim: usize, a_dim: usize) -> Self {
        Cochain { p, g_dim, a_dim, coords: vec![Rational::zero(); binomial(g_dim, p) * a_dim] }
    }

    pub fn from_coords(p: usize, g_dim: usize, a_dim: usize, coords: Vec<Rational>) -> Result<Self, CohomologyError> {
        let expected = binomial(g_dim, p) * a_dim;
        if coords.len() != expected {
            return Err(CohomologyError::ShapeMismatch(format!(
                "a {p}-cochain on dim {g_dim} with {a_dim}-dim values has {expected} coordinates, got {}",
                coords.len()
            )));
        }
        Ok(Cochain { p, g_dim, a_dim, coords })
    }

    pub fn degree(&self) -> usize {
        self.p
    }

    pub fn g_dim(&self) -> usize {
        self.g_dim
    }

    pub fn a_dim(&self) -> usize {
        self.a_dim
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn same_shape(&self, other: &Cochain) -> bool {
        (self.p, self.g_dim, self.a_dim) == (other.p, other.g_dim, other.a_dim)
    }

    /// `ω(e_{t_1}, ..., e_{t_p})` for an arbitrary index tuple.
    pub fn evaluate(&self, basis: &ExteriorBasis, tuple: &[usize]) -> Vec<Rational> {
        let mut t = tuple.to_vec();
        let Some(sign) = sort_with_sign(&mut t) else {
            return vec![Rational::zero(); self.a_dim];
        };
        let r = basis.rank(&t).expect("tuple in range");
        self.coords[r * self.a_dim..(r + 1) * self.a_dim]
            .iter()
            .map(|x| if sign < 0 { -x.clone() } else { x.clone() })
            .collect()
    }

    pub fn scale(&self, s: &Rational) -> Cochain {
        Cochain { coords: self.coords.iter().map(|x| x * s).collect(), ..self.clone() }
    }
}

impl Add for &Cochain {
    type Output = Cochain;
    fn add(self, rhs: &Cochain) -> Cochain {
        assert!(self.same_shape(rhs), "cochain shape mismatch");
        Cochain { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a + b).collect(), ..self.clone() }
    }
}

impl Sub for &Cochain {
    type Output = Cochain;
    fn sub(self, rhs: &Cochain) -> Cochain {
        assert!(self.same_shape(rhs), "cochain shape mismatch");
        Cochain { coords: self.coords.iter().zip(&rhs.coords).map(|(a, b)| a - b).collect(), ..self.clone() }
    }
}

impl Neg for &Cochain {
    type Output = Cochain;
    fn neg(self) -> Cochain {
        Cochain { coords: self.coords.iter().map(|a| -a).collect(), ..self.clone() }
    }
}
