mod common;

use std::sync::Arc;

use algext::cohomology::{
    relative_coboundary_witness, relative_cohomology, restriction_injectivity_check, reynolds_projection, CeComplex,
    Cochain, ExteriorBasis,
};
use algext::extension::{
    baer_sum, ext_alg, extension_algebra_from_cocycle, is_lie_homomorphism, pushforward_cocycle, FiniteAbelianGroup,
};
use algext::formats::{lie_file_from_algebra, module_file_from_module, LieFile, ModuleFile};
use algext::lie::{standard, AlgGroupData, CoeffGroupData, LeviPair, LieAlgebra, LieModule};
use algext::linalg::{smith_normal_form, IntMatrix, RatMatrix, Subspace};
use algext::par;
use algext::vanest::{
    delta_squared_check, differentiate_cocycle, group_differential, monomials_up_to, parse_poly,
    truncated_group_cohomology, GroupAction, MultiPoly, PolyCochain, PolyGroup,
};
use common::*;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;
use rand::Rng;

fn cochain(p: usize, m: &LieModule, coords: Vec<Q>) -> Cochain {
    Cochain::from_coords(p, m.algebra().dim(), m.dim(), coords).unwrap()
}

fn heisenberg() -> PolyGroup {
    let law = ["x1 + y1", "x2 + y2", "x3 + y3 + x1*y2"].iter().map(|s| parse_poly(s, 3, true).unwrap()).collect();
    PolyGroup::new("H3", law, None).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 32, .. ProptestConfig::default() })]

    #[test]
    fn d_squared_is_zero(seed in any::<u64>()) {
        let m = random_module(&mut rng(seed));
        let cx = CeComplex::new(m.clone());
        for p in 0..m.algebra().dim().saturating_sub(1) {
            let dd = cx.differential(p + 1).unwrap() * cx.differential(p).unwrap();
            prop_assert!(dd.is_zero());
        }
    }

    #[test]
    fn relative_complex_is_a_subcomplex(seed in any::<u64>()) {
        let (pair, m) = random_levi_case(&mut rng(seed));
        for p in 0..=pair.algebra().dim() {
            let r = relative_cohomology(p, &pair, &m).unwrap();
            prop_assert_eq!(r.dim + r.b_dim, r.z_dim);
            prop_assert_eq!(r.representatives.len(), r.dim);
        }
    }

    #[test]
    fn restriction_is_injective(seed in any::<u64>()) {
        let (pair, m) = random_levi_case(&mut rng(seed));
        let report = restriction_injectivity_check(&pair, &m).unwrap();
        prop_assert_eq!(report.absolute_coboundary_meet_dim, report.relative_coboundary_dim);
    }

    #[test]
    fn witness_round_trips(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (pair, m) = random_levi_case(&mut r);
        let cx = CeComplex::new(m.clone());
        let rel2 = cx.relative_subspace(2, &pair).unwrap();
        let b_abs = cx.image_of(1, &Subspace::full(cx.cochain_dim(1))).unwrap();
        let meet = cx.cocycles_in(2, &rel2).unwrap().intersection(&b_abs);
        let omega = cochain(2, &m, random_in(&mut r, &meet));
        let f = relative_coboundary_witness(&omega, &pair, &m).unwrap();
        prop_assert_eq!(cx.apply_d(&f).unwrap(), omega);
        let a = m.dim();
        for &i in pair.red_indices() {
            prop_assert!(is_all_zero(&f.coords()[i * a..(i + 1) * a]));
        }
        for &x in pair.red_indices() {
            prop_assert!(is_all_zero(&cx.invariance_operator(1, x).mul_vec(f.coords())));
        }
    }

    #[test]
    fn jacobi_iff_cocycle(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = random_module(&mut r);
        prop_assume!(m.algebra().dim() >= 2);
        let cx = CeComplex::new(m.clone());
        let z2 = cx.cocycles_in(2, &Subspace::full(cx.cochain_dim(2))).unwrap();
        let mut coords = random_in(&mut r, &z2);
        if r.gen_bool(0.5) {
            let noise = random_vector(&mut r, coords.len());
            coords = coords.iter().zip(&noise).map(|(a, b)| a + b).collect();
        }
        let omega = cochain(2, &m, coords);
        let is_cocycle = cx.apply_d(&omega).unwrap().is_zero();
        let ext = extension_algebra_from_cocycle(&omega, &m);
        prop_assert_eq!(ext.is_ok(), is_cocycle);
        if let Ok(e) = ext {
            prop_assert!(e.total().validate().is_ok());
            prop_assert!(is_lie_homomorphism(&e.projection_matrix(), e.total(), m.algebra()));
        }
    }

    #[test]
    fn cohomologous_cocycles_give_isomorphic_extensions(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = random_module(&mut r);
        prop_assume!(m.algebra().dim() >= 2);
        let cx = CeComplex::new(m.clone());
        let z2 = cx.cocycles_in(2, &Subspace::full(cx.cochain_dim(2))).unwrap();
        let omega = cochain(2, &m, random_in(&mut r, &z2));
        let f = cochain(1, &m, random_vector(&mut r, cx.cochain_dim(1)));
        let shifted = &omega - &cx.apply_d(&f).unwrap();
        let src = extension_algebra_from_cocycle(&omega, &m).unwrap();
        let dst = extension_algebra_from_cocycle(&shifted, &m).unwrap();
        let phi = src.base_change(&f).unwrap();
        prop_assert!(phi.inverse().is_some());
        prop_assert!(is_lie_homomorphism(&phi, src.total(), dst.total()));
    }

    #[test]
    fn pushforward_commutes_with_d(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = random_module(&mut r);
        let g = m.algebra().clone();
        // the diagonal M -> M ⊕ M and a scalar map M -> M are equivariant
        let s = q(r.gen_range(-3..=3));
        let n = m.dim();
        let diag = RatMatrix::from_fn(2 * n, n, |i, j| if i % n == j { s.clone() } else { q(0) });
        let target = m.direct_sum(&m).unwrap();
        let p = r.gen_range(0..g.dim());
        let c = cochain(p, &m, random_vector(&mut r, ExteriorBasis::new(g.dim(), p).len() * n));
        let src = CeComplex::new(m.clone());
        let dst = CeComplex::new(target.clone());
        let lhs = dst.apply_d(&pushforward_cocycle(&diag, &c, &m, &target).unwrap()).unwrap();
        let rhs = pushforward_cocycle(&diag, &src.apply_d(&c).unwrap(), &m, &target).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn baer_sum_is_linear(seed in any::<u64>()) {
        let mut r = rng(seed);
        let m = random_module(&mut r);
        prop_assume!(m.algebra().dim() >= 2);
        let cx = CeComplex::new(m.clone());
        let z2 = cx.cocycles_in(2, &Subspace::full(cx.cochain_dim(2))).unwrap();
        let c1 = cochain(2, &m, random_in(&mut r, &z2));
        let c2 = cochain(2, &m, random_in(&mut r, &z2));
        let sum = baer_sum(&c1, &c2).unwrap();
        prop_assert!((&(&sum - &c1) - &c2).is_zero());
        prop_assert!(cx.apply_d(&sum).unwrap().is_zero());
        prop_assert!(baer_sum(&c1, &-&c1).unwrap().is_zero());
    }

    #[test]
    fn reductive_simply_connected_ext_is_trivial(torus in 0usize..4, coeff_torus in 0usize..4, which in 0usize..3) {
        let g = Arc::new(match which {
            0 => standard::sl2(),
            1 => standard::gl2(),
            _ => LieAlgebra::abelian(torus.max(1)),
        });
        let pair = LeviPair::reductive(g.clone()).unwrap();
        let center = pair.red_center().dim();
        let data = AlgGroupData::new(pair.clone(), FiniteAbelianGroup::trivial(), torus.min(center)).unwrap();
        let coeff = CoeffGroupData::new(coeff_torus, LieModule::trivial(g, 1), &pair).unwrap();
        prop_assert!(ext_alg(&data, &coeff).unwrap().is_trivial());
    }

    #[test]
    fn reynolds_is_an_equivariant_idempotent(seed in any::<u64>()) {
        let (pair, m) = random_levi_case(&mut rng(seed));
        let p = reynolds_projection(&m, &pair).unwrap();
        prop_assert_eq!(&p * &p, p.clone());
        for &i in pair.red_indices() {
            prop_assert_eq!(&p * m.action(i), m.action(i) * &p);
        }
        prop_assert_eq!(p.rank(), m.invariants_of(pair.red_indices()).dim());
    }

    #[test]
    fn lie_files_round_trip(seed in any::<u64>()) {
        let m = random_module(&mut rng(seed));
        let g = m.algebra();
        let text = serde_json::to_string(&lie_file_from_algebra(g, None)).unwrap();
        let back: LieFile = serde_json::from_str(&text).unwrap();
        let g2 = Arc::new(back.to_algebra("t").unwrap());
        prop_assert_eq!(&*g2, &**g);
        let text = serde_json::to_string(&module_file_from_module(&m)).unwrap();
        let back: ModuleFile = serde_json::from_str(&text).unwrap();
        let m2 = back.to_module(g2, "t").unwrap();
        prop_assert_eq!(m2.actions(), m.actions());
    }

    #[test]
    fn results_do_not_depend_on_thread_count(seed in any::<u64>()) {
        let (pair, m) = random_levi_case(&mut rng(seed));
        let run = |jobs| par::with_jobs(Some(jobs), || {
            (0..=pair.algebra().dim()).map(|p| relative_cohomology(p, &pair, &m).unwrap()).collect::<Vec<_>>()
        });
        prop_assert_eq!(run(1), run(4));
    }

    #[test]
    fn smith_form_is_a_divisibility_chain(entries in proptest::collection::vec(-9i64..=9, 9)) {
        let rows: Vec<&[i64]> = entries.chunks(3).collect();
        let m = IntMatrix::from_i64(&rows);
        let snf = smith_normal_form(&m);
        for w in snf.factors.windows(2) {
            prop_assert!(w[0].is_zero() && w[1].is_zero() || !w[0].is_zero() && (&w[1] % &w[0]).is_zero());
        }
        let det: BigInt = snf.factors.iter().product();
        prop_assert_eq!(det.abs(), m.determinant().abs());
        let back = snf.u.mul(&m).mul(&snf.v);
        for i in 0..3 {
            for j in 0..3 {
                let expected = if i == j { snf.factors.get(i).cloned().unwrap_or_default() } else { BigInt::zero() };
                prop_assert_eq!(&back[(i, j)], &expected);
            }
        }
    }

    #[test]
    fn rank_nullity(entries in proptest::collection::vec(-3i64..=3, 12)) {
        let rows: Vec<&[i64]> = entries.chunks(4).collect();
        let m = RatMatrix::from_i64(&rows);
        prop_assert_eq!(m.rank() + m.kernel().dim(), 4);
        let (r, _) = m.rref();
        prop_assert_eq!(r.rref().0, r);
        prop_assert_eq!(m.rank(), rank(&m.row_vecs()));
    }

    #[test]
    fn polynomials_print_and_parse_back(entries in proptest::collection::vec((-4i64..=4, 0u32..3, 0u32..3), 0..6)) {
        let mut p = MultiPoly::zero(2);
        for (c, e1, e2) in entries {
            p.add_term(algext::vanest::Monomial::from_exponents(vec![e1, e2]), q(c));
        }
        let names = vec!["x1".to_string(), "x2".to_string()];
        let back = parse_poly(&p.to_string_with(&names), 2, false).unwrap();
        prop_assert_eq!(back, p);
    }

    #[test]
    fn delta_squared_on_random_cochains(seed in any::<u64>()) {
        let mut r = rng(seed);
        let g = heisenberg();
        let triv = GroupAction::trivial(3, 1);
        let n = r.gen_range(0..=2usize);
        let monos = monomials_up_to(3 * n, 2);
        let mut f = MultiPoly::zero(3 * n);
        for m in &monos {
            if r.gen_bool(0.3) {
                f.add_term(m.clone(), q(r.gen_range(-3..=3)));
            }
        }
        let f = PolyCochain::new(n, 3, vec![f]).unwrap();
        let df = group_differential(&f, &g, &triv).unwrap();
        prop_assert!(group_differential(&df, &g, &triv).unwrap().is_zero());
    }

    #[test]
    fn differentiated_coboundaries_are_lie_coboundaries(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (g, action) = if r.gen_bool(0.5) {
            (heisenberg(), GroupAction::trivial(3, 1))
        } else {
            (PolyGroup::vector_group(2), GroupAction::trivial(2, 1))
        };
        let d = g.dim();
        let mut h = MultiPoly::zero(d);
        for m in monomials_up_to(d, 3) {
            if r.gen_bool(0.4) {
                h.add_term(m, q(r.gen_range(-3..=3)));
            }
        }
        let f = group_differential(&PolyCochain::new(1, d, vec![h]).unwrap(), &g, &action).unwrap();
        let omega = differentiate_cocycle(&f, &g, &action).unwrap();
        let lie = Arc::new(g.lie_algebra());
        let cx = CeComplex::new(action.derived_module(lie).unwrap());
        let b2 = cx.image_of(1, &Subspace::full(cx.cochain_dim(1))).unwrap();
        prop_assert!(b2.contains(omega.coords()));
    }
}

#[test]
fn whitehead_vanishing() {
    let g = Arc::new(standard::sl2());
    for n in 0..=4 {
        let irrep = standard::sl2_irrep(g.clone(), n);
        let m = LieModule::trivial(g.clone(), 1).direct_sum(&irrep).unwrap();
        let cx = CeComplex::new(m);
        assert_eq!(cx.cohomology(1).unwrap().dim, 0, "n = {n}");
        assert_eq!(cx.cohomology(2).unwrap().dim, 0, "n = {n}");
    }
}

#[test]
fn truncated_dims_are_monotone() {
    let h3 = heisenberg();
    let cases = [
        (PolyGroup::vector_group(1), 1usize, 4usize),
        (PolyGroup::vector_group(1), 2, 4),
        (PolyGroup::vector_group(2), 2, 4),
        (h3.clone(), 1, 4),
        (h3, 2, 4),
    ];
    for (g, p, max_d) in cases {
        let triv = GroupAction::trivial(g.dim(), 1);
        let r = truncated_group_cohomology(&g, &triv, p, max_d).unwrap();
        for w in r.history.windows(2) {
            assert!(w[0].1 <= w[1].1, "{} p = {p}: {:?}", g.name(), r.history);
        }
    }
}

#[test]
fn additive_group_has_no_higher_cohomology() {
    let ga = PolyGroup::vector_group(1);
    let triv = GroupAction::trivial(1, 1);
    for p in 2..=3 {
        for max_d in 1..=4 {
            let r = truncated_group_cohomology(&ga, &triv, p, max_d).unwrap();
            assert_eq!(r.h_of_d, 0, "p = {p} D = {max_d}");
        }
    }
}

#[test]
fn delta_squared_spanning_sets() {
    let triv3 = GroupAction::trivial(3, 1);
    let h3 = heisenberg();
    for n in 0..=2 {
        assert!(delta_squared_check(&h3, &triv3, n, 2).is_ok());
    }
    let ga = PolyGroup::vector_group(1);
    let jordan = GroupAction::new(&ga, vec![
        vec![parse_poly("1", 1, false).unwrap(), parse_poly("x1", 1, false).unwrap()],
        vec![parse_poly("0", 1, false).unwrap(), parse_poly("1", 1, false).unwrap()],
    ])
    .unwrap();
    for n in 0..=2 {
        assert!(delta_squared_check(&ga, &jordan, n, 3).is_ok());
    }
}
