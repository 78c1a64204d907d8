use std::sync::Arc;

use num_traits::Zero;

use super::{Monomial, MultiPoly, VanEstError};
use crate::lie::{LieAlgebra, LieModule};
use crate::linalg::{RatMatrix, Rational};

/// Degree bound for the fixed-point search of a polynomial inverse.
const INVERSE_DEGREE_LIMIT: usize = 16;

/// A unipotent group on affine `d`-space: identity at the origin, product
/// `law(x, y) = x + y + (higher terms)` in the variables `x1..xd, y1..yd`,
/// inverse a polynomial map in `x1..xd`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyGroup {
    name: String,
    d: usize,
    law: Vec<MultiPoly>,
    inverse: Vec<MultiPoly>,
}

impl PolyGroup {
    /// Validates the law; the inverse is derived when not supplied.
    pub fn new(name: impl Into<String>, law: Vec<MultiPoly>, inverse: Option<Vec<MultiPoly>>) -> Result<Self, VanEstError> {
        let d = law.len();
        if let Some((i, p)) = law.iter().enumerate().find(|(_, p)| p.nvars() != 2 * d) {
            return Err(VanEstError::ShapeMismatch(format!(
                "law coordinate {} has {} variables, expected {}",
                i + 1,
                p.nvars(),
                2 * d
            )));
        }
        check_identity_and_form(d, &law)?;
        check_associative(d, &law)?;
        let inverse = match inverse {
            Some(inv) => {
                if inv.len() != d || inv.iter().any(|p| p.nvars() != d) {
                    return Err(VanEstError::ShapeMismatch(format!("inverse must be {d} polynomials in x1..x{d}")));
                }
                inv
            }
            None => find_inverse(d, &law)?,
        };
        check_inverse(d, &law, &inverse)?;
        Ok(PolyGroup { name: name.into(), d, law, inverse })
    }

    /// `G_a^d` with the additive law.
    pub fn vector_group(d: usize) -> Self {
        let law = (0..d).map(|i| &MultiPoly::var(2 * d, i) + &MultiPoly::var(2 * d, d + i)).collect();
        PolyGroup::new(format!("ga{d}"), law, None).expect("additive law")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn law(&self) -> &[MultiPoly] {
        &self.law
    }

    pub fn inverse(&self) -> &[MultiPoly] {
        &self.inverse
    }

    /// `law` composed onto variable blocks `(left, right)` of a ring with
    /// `nvars` variables, each block holding `d` coordinates.
    pub fn law_on_blocks(&self, nvars: usize, left: usize, right: usize) -> Vec<MultiPoly> {
        let map: Vec<usize> = (0..self.d).map(|i| left * self.d + i).chain((0..self.d).map(|i| right * self.d + i)).collect();
        self.law.iter().map(|p| p.rename(nvars, &map)).collect()
    }

    /// Lie algebra with `[e_i, e_j]_k = B_k(e_i, e_j) - B_k(e_j, e_i)`, where
    /// `B_k` is the coefficient of `x_i y_j` in the `k`-th law coordinate.
    pub fn lie_algebra(&self) -> LieAlgebra {
        let d = self.d;
        let mut consts = vec![Rational::zero(); d * d * d];
        for (k, p) in self.law.iter().enumerate() {
            for i in 0..d {
                for j in 0..d {
                    let c = bilinear_coefficient(p, d, i, j) - bilinear_coefficient(p, d, j, i);
                    consts[(i * d + j) * d + k] = c;
                }
            }
        }
        let labels = (1..=d).map(|i| format!("e{i}")).collect();
        LieAlgebra::new(format!("Lie({})", self.name), labels, consts).expect("bracket of a group law satisfies Jacobi")
    }
}

pub(crate) fn bilinear_coefficient(p: &MultiPoly, d: usize, i: usize, j: usize) -> Rational {
    let mut exps = vec![0; 2 * d];
    exps[i] += 1;
    exps[d + j] += 1;
    p.coefficient(&Monomial::from_exponents(exps))
}

fn xs(nvars: usize, d: usize, block: usize) -> Vec<MultiPoly> {
    (0..d).map(|i| MultiPoly::var(nvars, block * d + i)).collect()
}

fn check_identity_and_form(d: usize, law: &[MultiPoly]) -> Result<(), VanEstError> {
    let zero_d: Vec<MultiPoly> = (0..d).map(|_| MultiPoly::zero(d)).collect();
    let x = xs(d, d, 0);
    for (k, p) in law.iter().enumerate() {
        let left: Vec<MultiPoly> = x.iter().cloned().chain(zero_d.iter().cloned()).collect();
        let right: Vec<MultiPoly> = zero_d.iter().cloned().chain(x.iter().cloned()).collect();
        if p.substitute(&left) != x[k] || p.substitute(&right) != x[k] {
            return Err(VanEstError::NoIdentity { coordinate: k + 1 });
        }
        let expected = &MultiPoly::var(2 * d, k) + &MultiPoly::var(2 * d, d + k);
        if !p.constant_term().is_zero() || p.homogeneous_part(1) != expected {
            return Err(VanEstError::NotUnipotentForm { coordinate: k + 1 });
        }
    }
    Ok(())
}

fn check_associative(d: usize, law: &[MultiPoly]) -> Result<(), VanEstError> {
    let n = 3 * d;
    let xy: Vec<MultiPoly> = law.iter().map(|p| p.shift(n, 0)).collect();
    let yz: Vec<MultiPoly> = law.iter().map(|p| p.shift(n, d)).collect();
    let left_args: Vec<MultiPoly> = xy.iter().cloned().chain(xs(n, d, 2)).collect();
    let right_args: Vec<MultiPoly> = xs(n, d, 0).into_iter().chain(yz.iter().cloned()).collect();
    for (k, p) in law.iter().enumerate() {
        if p.substitute(&left_args) != p.substitute(&right_args) {
            return Err(VanEstError::NotAssociative { coordinate: k + 1 });
        }
    }
    Ok(())
}

/// Solves `law(x, v) = 0` by the iteration `v <- -x - H(x, v)` with `H` the
/// nonlinear part of the law, raising the truncation degree each step.
fn find_inverse(d: usize, law: &[MultiPoly]) -> Result<Vec<MultiPoly>, VanEstError> {
    let x = xs(d, d, 0);
    let nonlinear: Vec<MultiPoly> = law.iter().map(|p| p.filter(|m| m.degree() >= 2)).collect();
    let mut v: Vec<MultiPoly> = x.iter().map(|p| -p).collect();
    for deg in 2..=INVERSE_DEGREE_LIMIT + 1 {
        let args: Vec<MultiPoly> = x.iter().cloned().chain(v.iter().cloned()).collect();
        let next: Vec<MultiPoly> =
            (0..d).map(|k| (&(-&x[k]) - &nonlinear[k].substitute(&args)).truncate(deg)).collect();
        if next == v && check_inverse(d, law, &v).is_ok() {
            return Ok(v);
        }
        v = next;
    }
    Err(VanEstError::BadInverse {
        reason: format!("no polynomial inverse of degree <= {INVERSE_DEGREE_LIMIT}"),
    })
}

fn check_inverse(d: usize, law: &[MultiPoly], inverse: &[MultiPoly]) -> Result<(), VanEstError> {
    let x = xs(d, d, 0);
    let right: Vec<MultiPoly> = x.iter().cloned().chain(inverse.iter().cloned()).collect();
    let left: Vec<MultiPoly> = inverse.iter().cloned().chain(x.iter().cloned()).collect();
    for (k, p) in law.iter().enumerate() {
        if !p.substitute(&right).is_zero() || !p.substitute(&left).is_zero() {
            return Err(VanEstError::BadInverse { reason: format!("law(x, inverse(x)) is nonzero in coordinate {}", k + 1) });
        }
    }
    Ok(())
}

/// A polynomial representation `G -> GL(a)` by unipotent matrices, entries
/// in `x1..xd`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAction {
    d: usize,
    matrix: Vec<Vec<MultiPoly>>,
}

impl GroupAction {
    pub fn trivial(d: usize, a_dim: usize) -> Self {
        let matrix = (0..a_dim)
            .map(|r| (0..a_dim).map(|c| if r == c { MultiPoly::one(d) } else { MultiPoly::zero(d) }).collect())
            .collect();
        GroupAction { d, matrix }
    }

    /// Checks `A(0) = 1`, `A(law(x, y)) = A(x) A(y)` and unipotency.
    pub fn new(group: &PolyGroup, matrix: Vec<Vec<MultiPoly>>) -> Result<Self, VanEstError> {
        let d = group.dim();
        let a = matrix.len();
        if matrix.iter().any(|row| row.len() != a || row.iter().any(|p| p.nvars() != d)) {
            return Err(VanEstError::ShapeMismatch(format!("action must be a square matrix of polynomials in x1..x{d}")));
        }
        let action = GroupAction { d, matrix };
        let at_zero = action.map_entries(|p| MultiPoly::constant(d, p.constant_term()));
        if at_zero != GroupAction::trivial(d, a).matrix {
            return Err(VanEstError::BadAction("action at the identity is not the identity matrix".into()));
        }
        let n = 2 * d;
        let composed = action.map_entries(|p| p.substitute(&group.law_on_blocks(n, 0, 1)));
        let ax = action.map_entries(|p| p.shift(n, 0));
        let ay = action.map_entries(|p| p.shift(n, d));
        if composed != mat_mul(&ax, &ay, n) {
            return Err(VanEstError::BadAction("A(x y) differs from A(x) A(y)".into()));
        }
        let nil: Vec<Vec<MultiPoly>> = action
            .matrix
            .iter()
            .enumerate()
            .map(|(r, row)| row.iter().enumerate().map(|(c, p)| if r == c { p - &MultiPoly::one(d) } else { p.clone() }).collect())
            .collect();
        let mut power = nil.clone();
        for _ in 1..a {
            power = mat_mul(&power, &nil, d);
        }
        if a > 0 && power.iter().flatten().any(|p| !p.is_zero()) {
            return Err(VanEstError::BadAction("action is not unipotent".into()));
        }
        Ok(action)
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn group_dim(&self) -> usize {
        self.d
    }

    pub fn matrix(&self) -> &[Vec<MultiPoly>] {
        &self.matrix
    }

    pub fn is_trivial(&self) -> bool {
        *self == GroupAction::trivial(self.d, self.dim())
    }

    pub(crate) fn map_entries(&self, f: impl Fn(&MultiPoly) -> MultiPoly) -> Vec<Vec<MultiPoly>> {
        self.matrix.iter().map(|row| row.iter().map(&f).collect()).collect()
    }

    /// Derived action `rho(e_i) = dA/dx_i (0)` of the Lie algebra of `group`.
    pub fn derived_module(&self, lie: Arc<LieAlgebra>) -> Result<LieModule, VanEstError> {
        let a = self.dim();
        let action = (0..self.d)
            .map(|i| {
                let m = Monomial::var(self.d, i);
                RatMatrix::from_fn(a, a, |r, c| self.matrix[r][c].coefficient(&m))
            })
            .collect();
        Ok(LieModule::new(lie, a, action)?)
    }
}

fn mat_mul(x: &[Vec<MultiPoly>], y: &[Vec<MultiPoly>], nvars: usize) -> Vec<Vec<MultiPoly>> {
    let a = x.len();
    (0..a)
        .map(|r| {
            (0..a)
                .map(|c| {
                    let mut acc = MultiPoly::zero(nvars);
                    for k in 0..a {
                        acc = &acc + &(&x[r][k] * &y[k][c]);
                    }
                    acc
                })
                .collect()
        })
        .collect()
}
