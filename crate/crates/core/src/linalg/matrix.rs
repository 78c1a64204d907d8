use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::rational::{format_rational, lcm_of_denominators, Rational};
use super::subspace::Subspace;
use crate::par;

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        RatMatrix { rows, cols, data }
    }

    /// Builds a matrix from rows. Panics if the rows have different lengths.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "ragged matrix rows");
            data.extend(row);
        }
        RatMatrix { rows: n, cols, data }
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(
            cols,
            rows.iter().map(|r| r.iter().map(|&x| Rational::from_integer(x.into())).collect()).collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Rational> {
        (0..self.rows).map(|r| self[(r, c)].clone()).collect()
    }

    pub fn row_vecs(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn scale(&self, s: &Rational) -> Self {
        RatMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = Rational::zero();
                for (a, b) in self.row(r).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc += a * b;
                    }
                }
                acc
            })
            .collect()
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).fold(Rational::zero(), |acc, i| acc + &self[(i, i)])
    }

    pub fn is_nilpotent(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let mut p = self.clone();
        for _ in 1..self.rows.max(1) {
            if p.is_zero() {
                return true;
            }
            p = &p * self;
        }
        p.is_zero()
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        RatMatrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        Self::from_fn(self.rows, self.cols + other.cols, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                other[(r, c - self.cols)].clone()
            }
        })
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let (reduced, pivots) = rref_rows(self.row_vecs(), self.cols);
        let mut out = RatMatrix::zeros(self.rows, self.cols);
        for (r, row) in reduced.into_iter().enumerate() {
            for (c, x) in row.into_iter().enumerate() {
                out[(r, c)] = x;
            }
        }
        (out, pivots)
    }

    pub fn rank(&self) -> usize {
        rref_rows(self.row_vecs(), self.cols).1.len()
    }

    /// `{ v : self * v = 0 }`.
    pub fn kernel(&self) -> Subspace {
        let (reduced, pivots) = rref_rows(self.row_vecs(), self.cols);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let basis = (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![Rational::zero(); self.cols];
                v[free] = Rational::one();
                for (row, &pc) in reduced.iter().zip(&pivots) {
                    v[pc] = -row[free].clone();
                }
                v
            })
            .collect();
        Subspace::from_vectors(self.cols, basis)
    }

    /// Column space.
    pub fn image(&self) -> Subspace {
        Subspace::from_vectors(self.rows, self.transpose().row_vecs())
    }

    pub fn row_space(&self) -> Subspace {
        Subspace::from_vectors(self.cols, self.row_vecs())
    }

    /// One solution of `self * x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let rows = (0..self.rows)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                row.push(b[r].clone());
                row
            })
            .collect();
        let (reduced, pivots) = rref_rows(rows, self.cols + 1);
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (row, &pc) in reduced.iter().zip(&pivots) {
            x[pc] = row[self.cols].clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<RatMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let (reduced, pivots) = rref_rows(self.hstack(&RatMatrix::identity(n)).row_vecs(), 2 * n);
        if pivots.len() < n || pivots.iter().take(n).enumerate().any(|(i, &p)| i != p) {
            return None;
        }
        Some(RatMatrix::from_fn(n, n, |r, c| reduced[r][n + c].clone()))
    }
}

/// Row reduction of `rows` (each of length `cols`). Returns the nonzero rows
/// of the reduced row echelon form and their pivot columns.
///
/// Rows are scaled to integers and eliminated fraction-free (Bareiss), so
/// intermediate entries stay minors of the input. Only the final
/// back-substitution works with fractions.
pub(crate) fn rref_rows(rows: Vec<Vec<Rational>>, cols: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut a: Vec<Vec<BigInt>> = rows
        .into_iter()
        .filter(|row| row.iter().any(|x| !x.is_zero()))
        .map(|row| {
            let l = lcm_of_denominators(&row);
            row.iter().map(|x| (x * &l).to_integer()).collect()
        })
        .collect();
    let m = a.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == m {
            break;
        }
        let Some(found) = (r..m).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, found);
        let (top, bottom) = a.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let p = &pivot_row[c];
        let prev_ref = &prev;
        par::for_each_mut(bottom, cols - c, |row| {
            let lead = std::mem::take(&mut row[c]);
            if lead.is_zero() {
                if row[c + 1..].iter().all(Zero::is_zero) {
                    return;
                }
                for j in c + 1..cols {
                    if !row[j].is_zero() {
                        row[j] = exact_div(p * &row[j], prev_ref);
                    }
                }
            } else {
                for j in c + 1..cols {
                    let t = p * &row[j] - &lead * &pivot_row[j];
                    row[j] = exact_div(t, prev_ref);
                }
            }
        });
        prev = a[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);

    let mut reduced: Vec<Vec<Rational>> = a
        .into_iter()
        .zip(&pivots)
        .map(|(row, &pc)| {
            let p = row[pc].clone();
            row.into_iter().map(|x| Rational::new(x, p.clone())).collect()
        })
        .collect();
    for k in (0..reduced.len()).rev() {
        let pc = pivots[k];
        let (top, rest) = reduced.split_at_mut(k);
        let pivot_row = &rest[0];
        par::for_each_mut(top, cols - pc, |row| {
            if row[pc].is_zero() {
                return;
            }
            let f = row[pc].clone();
            for j in pc..cols {
                if !pivot_row[j].is_zero() {
                    row[j] -= &f * &pivot_row[j];
                }
            }
        });
    }
    (reduced, pivots)
}

fn exact_div(t: BigInt, d: &BigInt) -> BigInt {
    if d.is_one() {
        return t;
    }
    let (q, rem) = t.div_rem(d);
    debug_assert!(rem.is_zero(), "Bareiss division was not exact");
    q
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (r, c): (usize, usize)) -> &Rational {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Rational {
        assert!(r < self.rows && c < self.cols, "matrix index out of range");
        &mut self.data[r * self.cols + c]
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;
    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = RatMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl Add for &RatMatrix {
    type Output = RatMatrix;
    fn add(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sum shape mismatch");
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &RatMatrix {
    type Output = RatMatrix;
    fn sub(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix difference shape mismatch");
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &RatMatrix {
    type Output = RatMatrix;
    fn neg(self) -> RatMatrix {
        RatMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(format_rational).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}
