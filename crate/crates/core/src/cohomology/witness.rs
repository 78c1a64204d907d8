use num_traits::{One, Zero};

use super::{Cochain, CeComplex, CohomologyError};
use crate::lie::{invariant_projection, LeviPair, LieModule};
use crate::linalg::{RatMatrix, Rational, Subspace};

/// Outcome of comparing relative 2-cocycles with absolute coboundaries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InjectivityReport {
    pub relative_cocycle_dim: usize,
    pub relative_coboundary_dim: usize,
    /// `dim (Z^2_rel ∩ B^2_abs)`; equals the relative coboundary dimension
    /// exactly when `H^2_rel -> H^2_abs` is injective.
    pub absolute_coboundary_meet_dim: usize,
    /// For each basis vector `w` of `Z^2_rel ∩ B^2_abs`, a relative
    /// 1-cochain `k` with `d k = w`.
    pub witnesses: Vec<(Cochain, Cochain)>,
}

/// Verifies that every relative 2-cocycle which is an absolute coboundary is
/// a relative coboundary, producing a checked witness for each basis vector.
pub fn restriction_injectivity_check(pair: &LeviPair, module: &LieModule) -> Result<InjectivityReport, CohomologyError> {
    let cx = CeComplex::new(module.clone());
    injectivity_in(&cx, pair)
}

pub(crate) fn injectivity_in(cx: &CeComplex, pair: &LeviPair) -> Result<InjectivityReport, CohomologyError> {
    let (n, a) = (cx.g_dim(), cx.a_dim());
    let rel2 = cx.relative_subspace(2, pair)?;
    let z_rel = cx.cocycles_in(2, &rel2)?;
    let b_rel = cx.image_of(1, &cx.relative_subspace(1, pair)?)?;
    let b_abs = if n >= 1 { cx.image_of(1, &Subspace::full(cx.cochain_dim(1)))? } else { Subspace::zero(0) };
    let meet = z_rel.intersection(&b_abs);
    for v in meet.basis() {
        if !b_rel.contains(v) {
            return Err(CohomologyError::InjectivityFailure { cocycle: Cochain::from_coords(2, n, a, v.clone())? });
        }
    }
    let witnesses = meet
        .basis()
        .iter()
        .map(|v| {
            let omega = Cochain::from_coords(2, n, a, v.clone())?;
            let k = witness_in(cx, &omega, pair)?;
            Ok((omega, k))
        })
        .collect::<Result<_, CohomologyError>>()?;
    Ok(InjectivityReport {
        relative_cocycle_dim: z_rel.dim(),
        relative_coboundary_dim: b_rel.dim(),
        absolute_coboundary_meet_dim: meet.dim(),
        witnesses,
    })
}

/// For a relative 2-cochain `omega = d h` with `h` absolute, returns a
/// relative 1-cochain `k` with `d k = omega`.
pub fn relative_coboundary_witness(
    omega: &Cochain,
    pair: &LeviPair,
    module: &LieModule,
) -> Result<Cochain, CohomologyError> {
    witness_in(&CeComplex::new(module.clone()), omega, pair)
}

fn red_invariant_subspace(cx: &CeComplex, p: usize, pair: &LeviPair) -> Subspace {
    let dim = cx.cochain_dim(p);
    let mut stacked = RatMatrix::zeros(0, dim);
    for &r in pair.red_indices() {
        stacked = stacked.vstack(&cx.invariance_operator(p, r));
    }
    stacked.kernel()
}

pub(crate) fn witness_in(cx: &CeComplex, omega: &Cochain, pair: &LeviPair) -> Result<Cochain, CohomologyError> {
    cx.check_shape(omega)?;
    if omega.degree() != 2 {
        return Err(CohomologyError::ShapeMismatch(format!("expected a 2-cochain, got degree {}", omega.degree())));
    }
    let (n, a) = (cx.g_dim(), cx.a_dim());
    if !cx.relative_subspace(2, pair)?.contains(omega.coords()) {
        return Err(CohomologyError::NotRelative);
    }
    if omega.is_zero() {
        return Ok(Cochain::zero(1, n, a));
    }
    let d1 = cx.differential(1)?;
    let invariant = red_invariant_subspace(cx, 1, pair);
    let restricted = d1 * &invariant.basis_matrix().transpose();
    let y = match restricted.solve(omega.coords()) {
        Some(y) => y,
        None if d1.solve(omega.coords()).is_some() => return Err(CohomologyError::NoInvariantPrimitive),
        None => return Err(CohomologyError::NotACoboundary),
    };
    let h = Cochain::from_coords(1, n, a, invariant.combine(&y))?;
    let f = correct_in(cx, &h, pair)?;
    let k = &h - &f;
    if cx.apply_d(&k)? != *omega {
        return Err(CohomologyError::WitnessCheckFailed("d k differs from omega".into()));
    }
    if !cx.relative_subspace(1, pair)?.contains(k.coords()) {
        return Err(CohomologyError::WitnessCheckFailed("k is not relative".into()));
    }
    Ok(k)
}

/// Given a `g_red`-invariant 1-cochain `h` with `h(g_red) ⊆ a^g`, returns an
/// invariant 1-cochain `f` that agrees with `h` on the center of `g_red`
/// and vanishes on `[g, g]`; `f` is closed and `h - f` vanishes on `g_red`.
pub fn correct_invariant_primitive(h: &Cochain, pair: &LeviPair, module: &LieModule) -> Result<Cochain, CohomologyError> {
    correct_in(&CeComplex::new(module.clone()), h, pair)
}

fn correct_in(cx: &CeComplex, h: &Cochain, pair: &LeviPair) -> Result<Cochain, CohomologyError> {
    cx.check_shape(h)?;
    if h.degree() != 1 {
        return Err(CohomologyError::ShapeMismatch(format!("expected a 1-cochain, got degree {}", h.degree())));
    }
    let (n, a) = (cx.g_dim(), cx.a_dim());
    let hmat = RatMatrix::from_fn(a, n, |b, i| h.coords()[i * a + b].clone());
    let fixed = cx.module().invariants();
    if pair.red_indices().iter().any(|&r| !fixed.contains(&hmat.column(r))) {
        return Err(CohomologyError::NotRelative);
    }
    let center = pair.red_center();
    let derived = cx.algebra().derived_subalgebra();
    if center.intersection(&derived).dim() != 0 {
        return Err(CohomologyError::CenterMeetsDerived);
    }
    let mut columns: Vec<Vec<Rational>> = center.basis().iter().chain(derived.basis()).cloned().collect();
    let mut span = Subspace::from_vectors(n, columns.clone());
    for i in 0..n {
        let mut e = vec![Rational::zero(); n];
        e[i] = Rational::one();
        if !span.contains(&e) {
            span = span.sum(&Subspace::from_vectors(n, vec![e.clone()]));
            columns.push(e);
        }
    }
    let basis = RatMatrix::from_fn(n, n, |r, c| columns[c][r].clone());
    let targets = RatMatrix::from_fn(a, n, |b, c| {
        if c < center.dim() {
            hmat.mul_vec(&columns[c])[b].clone()
        } else {
            Rational::zero()
        }
    });
    let inverse = basis.inverse().ok_or(CohomologyError::CenterMeetsDerived)?;
    let f = &targets * &inverse;
    let coords = (0..n).flat_map(|i| (0..a).map(move |b| (i, b))).map(|(i, b)| f[(b, i)].clone()).collect();
    Cochain::from_coords(1, n, a, coords)
}

/// Projection of a module onto its `g_red`-invariants along `g_red . M`;
/// commutes with the `g_red` action.
pub fn reynolds_projection(module: &LieModule, pair: &LeviPair) -> Result<RatMatrix, CohomologyError> {
    let (inv, moved) = invariant_projection(module, pair)?;
    let n = module.dim();
    let columns: Vec<&Vec<Rational>> = inv.basis().iter().chain(moved.basis()).collect();
    let basis = RatMatrix::from_fn(n, n, |r, c| columns[c][r].clone());
    let keep = RatMatrix::from_fn(n, n, |r, c| if r == c && r < inv.dim() { Rational::one() } else { Rational::zero() });
    let inverse = basis.inverse().ok_or(CohomologyError::Linalg(crate::linalg::LinalgError::Singular))?;
    Ok(&(&basis * &keep) * &inverse)
}
