use std::collections::HashMap;
use std::sync::Arc;

use num_traits::Zero;

use super::cochain::Differential;
use super::group::bilinear_coefficient;
use super::sparse::{unit, Echelon, SparseVec};
use super::{group_differential, monomials_up_to, GroupAction, Monomial, MultiPoly, PolyCochain, PolyGroup, VanEstError};
use crate::cohomology::{relative_cohomology, Cochain, ExteriorBasis};
use crate::lie::LeviPair;
use crate::linalg::Rational;
use crate::par;

/// `h(D) = dim Z^p(D) - dim(B^p(D) ∩ C^p_{<=D})` at the requested bound
/// and the two below it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedCohomology {
    pub p: usize,
    pub max_degree: usize,
    pub h_of_d: usize,
    /// `(bound, h)` for the bounds `D-2..=D` that are nonnegative.
    pub history: Vec<(usize, usize)>,
    pub stabilized: bool,
    pub representatives: Vec<PolyCochain>,
}

/// Basis cochains `(component, monomial)` of degree at most `max_degree`.
fn unit_basis(vars: usize, a: usize, max_degree: usize) -> Vec<(usize, Monomial)> {
    let monos = monomials_up_to(vars, max_degree);
    (0..a).flat_map(|b| monos.iter().cloned().map(move |m| (b, m))).collect()
}

struct Keys {
    index: HashMap<(usize, Monomial), usize>,
    degree: Vec<usize>,
}

impl Keys {
    fn new() -> Self {
        Keys { index: HashMap::new(), degree: Vec::new() }
    }

    fn intern(&mut self, b: usize, m: &Monomial) -> usize {
        if let Some(&i) = self.index.get(&(b, m.clone())) {
            return i;
        }
        let i = self.degree.len();
        self.degree.push(m.degree());
        self.index.insert((b, m.clone()), i);
        i
    }

    fn sparse(&mut self, image: &[MultiPoly]) -> SparseVec {
        let mut v = SparseVec::new();
        for (b, p) in image.iter().enumerate() {
            for (m, c) in p.terms() {
                v.insert(self.intern(b, m), c.clone());
            }
        }
        v
    }
}

pub fn truncated_group_cohomology(
    group: &PolyGroup,
    action: &GroupAction,
    p: usize,
    max_degree: usize,
) -> Result<TruncatedCohomology, VanEstError> {
    if action.group_dim() != group.dim() {
        return Err(VanEstError::ShapeMismatch("action and group dimensions differ".into()));
    }
    let d = group.dim();
    let a = action.dim();

    // delta on p-cochains, images keyed in C^{p+1}
    let basis_p = unit_basis(p * d, a, max_degree);
    let dp = Differential::new(group, action, p, max_degree);
    let images_p = par::map(&basis_p, |(b, m)| dp.apply_unit(*b, m));
    let mut keys_next = Keys::new();
    let images_p: Vec<SparseVec> = images_p.iter().map(|img| keys_next.sparse(img)).collect();

    // delta on (p-1)-cochains, images keyed by their position in basis_p
    // when of degree <= max_degree, otherwise by an overflow key
    let position: HashMap<&(usize, Monomial), usize> = basis_p.iter().enumerate().map(|(i, k)| (k, i)).collect();
    let lower: Vec<(usize, SparseVec, SparseVec)> = if p == 0 {
        Vec::new()
    } else {
        let basis_prev = unit_basis((p - 1) * d, a, max_degree);
        let dprev = Differential::new(group, action, p - 1, max_degree);
        let images = par::map(&basis_prev, |(b, m)| dprev.apply_unit(*b, m));
        let mut overflow = Keys::new();
        basis_prev
            .iter()
            .zip(images)
            .map(|((_, m), img)| {
                let mut low = SparseVec::new();
                let mut high = Vec::new();
                for (b, poly) in img.iter().enumerate() {
                    for (mono, c) in poly.terms() {
                        match position.get(&(b, mono.clone())) {
                            Some(&i) => {
                                low.insert(i, c.clone());
                            }
                            None => high.push((b, mono.clone(), c.clone())),
                        }
                    }
                }
                let high = high.into_iter().map(|(b, mono, c)| (overflow.intern(b, &mono), c)).collect();
                (m.degree(), low, high)
            })
            .collect()
    };

    let mut history = Vec::new();
    let mut representatives = Vec::new();
    for bound in max_degree.saturating_sub(2)..=max_degree {
        let (h, reps) = h_at(&basis_p, &images_p, &lower, bound);
        history.push((bound, h));
        if bound == max_degree {
            representatives = reps
                .into_iter()
                .map(|v| {
                    let mut comps = vec![MultiPoly::zero(p * d); a];
                    for (i, c) in v {
                        let (b, m) = &basis_p[i];
                        comps[*b].add_term(m.clone(), c);
                    }
                    PolyCochain::new(p, d, comps).expect("shapes agree")
                })
                .collect();
        }
    }
    let h_of_d = history.last().expect("nonempty").1;
    let stabilized = history.len() == 3 && history.iter().all(|&(_, h)| h == h_of_d);
    Ok(TruncatedCohomology { p, max_degree, h_of_d, history, stabilized, representatives })
}

/// `h` at one bound, with representatives as sparse vectors over `basis_p`.
fn h_at(
    basis_p: &[(usize, Monomial)],
    images_p: &[SparseVec],
    lower: &[(usize, SparseVec, SparseVec)],
    bound: usize,
) -> (usize, Vec<SparseVec>) {
    let mut cocycles = Vec::new();
    let mut ech = Echelon::default();
    for (i, ((_, m), img)) in basis_p.iter().zip(images_p).enumerate() {
        if m.degree() > bound {
            continue;
        }
        if let Some(k) = ech.insert(img.clone(), unit(i)) {
            cocycles.push(k);
        }
    }

    // coboundaries of degree <= bound: combinations of lower images whose
    // parts above the bound cancel
    let mut above = Echelon::default();
    let mut coboundaries = Echelon::default();
    for (j, (deg, low, high)) in lower.iter().enumerate() {
        if *deg > bound {
            continue;
        }
        let mut over: SparseVec = high.clone();
        for (&i, c) in low {
            if basis_p[i].1.degree() > bound {
                over.insert(usize::MAX - i, c.clone());
            }
        }
        if let Some(combo) = above.insert(over, unit(j)) {
            let mut v = SparseVec::new();
            for (&jj, s) in &combo {
                for (&i, c) in &lower[jj].1 {
                    let e = v.entry(i).or_insert_with(Rational::zero);
                    *e += s * c;
                    if e.is_zero() {
                        v.remove(&i);
                    }
                }
            }
            coboundaries.insert(v, SparseVec::new());
        }
    }

    let mut reps = Vec::new();
    for z in cocycles {
        let mut v = z;
        let mut scratch = SparseVec::new();
        coboundaries.reduce(&mut v, &mut scratch);
        if !v.is_empty() && coboundaries.insert(v.clone(), SparseVec::new()).is_none() {
            reps.push(v);
        }
    }
    (reps.len(), reps)
}

/// Lie 2-cochain `omega(e_i, e_j) = Bil(e_i, e_j) - Bil(e_j, e_i)`, where
/// `Bil` is the part of `f(g_0, g_1)` bilinear in the two arguments.
pub fn differentiate_cocycle(f: &PolyCochain, group: &PolyGroup, action: &GroupAction) -> Result<Cochain, VanEstError> {
    if f.degree_n() != 2 {
        return Err(VanEstError::ShapeMismatch(format!("expected a group 2-cochain, got degree {}", f.degree_n())));
    }
    if !group_differential(f, group, action)?.is_zero() {
        return Err(VanEstError::NotACocycle);
    }
    let d = group.dim();
    let a = f.a_dim();
    let basis = ExteriorBasis::new(d, 2);
    let coords = basis
        .tuples()
        .iter()
        .flat_map(|t| {
            f.components()
                .iter()
                .map(move |p| bilinear_coefficient(p, d, t[0], t[1]) - bilinear_coefficient(p, d, t[1], t[0]))
        })
        .collect();
    Ok(Cochain::from_coords(2, d, a, coords)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VanEstReport {
    pub group_side: TruncatedCohomology,
    pub lie_dim: usize,
    /// True when the group side stabilized and agrees with the Lie side;
    /// false means inconclusive.
    pub conclusive: bool,
}

/// Compares truncated algebraic group cohomology with the cohomology of
/// the Lie algebra (relative to the trivial Levi part).
pub fn vanest_compare(
    group: &PolyGroup,
    action: &GroupAction,
    p: usize,
    max_degree: usize,
) -> Result<VanEstReport, VanEstError> {
    let group_side = truncated_group_cohomology(group, action, p, max_degree)?;
    let lie = Arc::new(group.lie_algebra());
    let module = action.derived_module(lie.clone())?;
    let pair = LeviPair::unipotent(lie)?;
    let lie_dim = relative_cohomology(p, &pair, &module)?.dim;
    if group_side.stabilized && group_side.h_of_d != lie_dim {
        return Err(VanEstError::Mismatch { group_dim: group_side.h_of_d, lie_dim });
    }
    let conclusive = group_side.stabilized;
    Ok(VanEstReport { group_side, lie_dim, conclusive })
}
