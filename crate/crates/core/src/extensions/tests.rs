use proptest::prelude::*;

use super::*;
use crate::cochains::{covariant_delta, nr_bracket, Cochain, Connection};
use crate::gvs::{int, is_zero_vector, zero_vector, GradedLinearMap, Matrix, Parity, Scalar};
use crate::superlie::{catalog, is_homomorphism, SuperLieAlgebra};
use crate::testkit::*;

fn jacobi_oracle(e: &SuperLieAlgebra) -> bool {
    let n = e.dim();
    let unit = |i| crate::gvs::unit_vector(n, i);
    let sign = |a: usize, b: usize| {
        if (e.parity(a) * e.parity(b)).is_odd() {
            int(-1)
        } else {
            int(1)
        }
    };
    for i in 0..n {
        for j in 0..n {
            let ij = e.bracket(&unit(i), &unit(j));
            let ji = e.bracket(&unit(j), &unit(i));
            let anti: Vec<Scalar> = ij.iter().zip(&ji).map(|(a, b)| a + &sign(i, j) * b).collect();
            if !is_zero_vector(&anti) {
                return false;
            }
            for k in 0..n {
                let mut sum = zero_vector(n);
                for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                    let inner = e.bracket(&unit(b), &unit(c));
                    let t = e.bracket(&unit(a), &inner);
                    for (s, v) in sum.iter_mut().zip(t) {
                        *s += &sign(a, c) * v;
                    }
                }
                if !is_zero_vector(&sum) {
                    return false;
                }
            }
        }
    }
    true
}

fn a(even: usize, odd: usize) -> SuperLieAlgebra {
    catalog::abelian_dims(even, odd)
}

fn susy_datum(c: i64) -> ExtensionDatum {
    let g = a(0, 1);
    let h = a(1, 0);
    let mut rho = Cochain::zero(g.space().clone(), h.space().clone(), 2, Parity::Even);
    rho.set(&[0, 0], vec![int(c)]).unwrap();
    let alpha = Connection::zero(g.space().clone(), h.space().clone());
    ExtensionDatum::new(g, h, alpha, rho).unwrap()
}

fn heis_datum() -> ExtensionDatum {
    let g = a(2, 0);
    let h = a(1, 0);
    let mut rho = Cochain::zero(g.space().clone(), h.space().clone(), 2, Parity::Even);
    rho.set(&[0, 1], vec![int(1)]).unwrap();
    let alpha = Connection::zero(g.space().clone(), h.space().clone());
    ExtensionDatum::new(g, h, alpha, rho).unwrap()
}

fn zero_map(d: &ExtensionDatum) -> GradedLinearMap {
    GradedLinearMap::zero(d.g().space().clone(), d.h().space().clone(), Parity::Even)
}

fn same_structure(x: &SuperLieAlgebra, y: &SuperLieAlgebra) -> bool {
    x.space().parities() == y.space().parities()
        && (0..x.dim()).all(|i| (0..x.dim()).all(|j| x.bracket_basis(i, j) == y.bracket_basis(i, j)))
}

#[test]
fn induced_examples() {
    let d = corpus::susy_over_line().data().unwrap();
    assert!(d.alpha().is_zero());
    assert_eq!(d.rho_at(0, 0), vec![int(2)]);

    let d = corpus::heis_over_plane().data().unwrap();
    assert_eq!(d.rho_at(0, 1), vec![int(1)]);
    assert_eq!(d.rho_at(1, 0), vec![int(-1)]);

    let split = corpus::sl2_times_susy().data().unwrap();
    assert!(split.rho().is_zero());
    assert!(split.alpha().is_zero());
}

#[test]
fn corpus_triples_are_exact() {
    for (name, ext) in corpus::all() {
        assert!(jacobi_oracle(ext.e()), "{name}");
        let d = ext.data().unwrap();
        assert!(d.check().passed(), "{name}: {:?}", d.check());
    }
}

#[test]
fn check_examples() {
    assert!(ExtensionDatum::trivial(a(1, 1), a(2, 1)).check().passed());
    assert!(susy_datum(2).check().passed());
    assert!(heis_datum().check().passed());

    let d = heis_datum();
    let h = catalog::heis3();
    // projection onto P is not a derivation of heis3
    let mut op = Matrix::zeros(3, 3);
    op.set(0, 0, int(1));
    let g = a(1, 0);
    let alpha = Connection::from_matrices(g.space().clone(), h.space().clone(), vec![op]).unwrap();
    let rho = Cochain::zero(g.space().clone(), h.space().clone(), 2, Parity::Even);
    let broken = ExtensionDatum::new(g, h, alpha, rho).unwrap();
    let report = broken.check();
    assert!(!report.passed());
    assert_eq!(report.non_derivations[0].generator, 0);
    assert!(matches!(build_extension(&broken), Err(ExtensionError::InvalidDatum(_))));
    assert!(d.check().passed());
}

#[test]
fn build_examples() {
    let d = ExtensionDatum::trivial(a(1, 0), a(0, 1));
    assert!(build_extension(&d).unwrap().e().is_abelian());

    let susy = build_extension(&susy_datum(2)).unwrap();
    assert!(same_structure(susy.e(), &catalog::susy_line()));
    let heis = build_extension(&heis_datum()).unwrap();
    // h ⊕ g = (Z, P, Q) against heis3 = (P, Q, Z)
    let perm = Matrix::from_columns(
        &[
            crate::gvs::unit_vector(3, 1),
            crate::gvs::unit_vector(3, 2),
            crate::gvs::unit_vector(3, 0),
        ],
        3,
    )
    .unwrap();
    let rebased = heis.e().change_basis(&perm, catalog::heis3().space().clone()).unwrap();
    assert!(same_structure(&rebased, &catalog::heis3()));
}

#[test]
fn round_trip_on_corpus() {
    for (name, ext) in corpus::all() {
        let d = ext.data().unwrap();
        let built = build_extension(&d).unwrap();
        assert!(jacobi_oracle(built.e()), "{name}");
        assert_eq!(built.data().unwrap(), d, "{name}");
    }
}

#[test]
fn transform_examples() {
    let d = heis_datum();
    assert_eq!(transform_datum(&d, &zero_map(&d)).unwrap(), d);
    let mut m = Matrix::zeros(1, 2);
    m.set(0, 0, int(1));
    let b = GradedLinearMap::new(d.g().space().clone(), d.h().space().clone(), Parity::Even, m).unwrap();
    let d2 = transform_datum(&d, &b).unwrap();
    assert_eq!(d2.alpha(), d.alpha());
    assert_eq!(d2.rho_at(0, 1), vec![int(1)]);
    assert!(check_equivalence_witness(&d, &d2, &b).unwrap());
    assert!(isomorphism_holds(&d, &b).unwrap());

    let odd = GradedLinearMap::zero(d.g().space().clone(), d.h().space().clone(), Parity::Odd);
    assert!(matches!(transform_datum(&d, &odd), Err(ExtensionError::NotDegreeZero)));
}

#[test]
fn susy_scalings_are_rigid() {
    let d2 = susy_datum(2);
    let d4 = susy_datum(4);
    assert!(!check_equivalence_witness(&d2, &d4, &zero_map(&d2)).unwrap());
    // g is purely odd and h purely even: the only degree-0 b is zero
    assert!(zero_map(&d2).matrix().is_zero());
    assert_eq!(zero_map(&d2).matrix().rows() * zero_map(&d2).matrix().cols(), 1);
    assert!(solve_split_abelian(&d2).unwrap().is_none());
}

#[test]
fn split_examples() {
    let d = ExtensionDatum::trivial(a(2, 1), a(1, 1));
    assert!(check_split_witness(&d, &zero_map(&d)).unwrap());
    assert_eq!(solve_split_abelian(&d).unwrap().unwrap(), zero_map(&d));

    let heis = heis_datum();
    assert!(solve_split_abelian(&heis).unwrap().is_none());
    let mut rng = rng(21);
    for _ in 0..5 {
        let b = random_graded_map(&mut rng, heis.g().space(), heis.h().space(), Parity::Even);
        assert!(!check_split_witness(&heis, &b).unwrap());
    }
    let nonab = corpus::sl2_times_susy().data().unwrap();
    assert!(matches!(solve_split_abelian(&nonab), Err(ExtensionError::NotAbelian)));
}

#[test]
fn split_witness_recovered_from_shift() {
    let mut rng = rng(4);
    for (name, ext) in corpus::all() {
        let base = ext.data().unwrap();
        if !base.rho().is_zero() || !connection_is_homomorphism(&base).unwrap() {
            continue;
        }
        let b0 = random_graded_map(&mut rng, base.g().space(), base.h().space(), Parity::Even);
        let moved = transform_datum(&base, &b0).unwrap();
        // moving back by -b0 flattens: ρ' = δ_α' b0 - ½[b0, b0]∧ for the new α'
        assert!(check_split_witness(&moved, &b0).unwrap(), "{name}");
    }
}

#[test]
fn solve_split_abelian_consistency() {
    let mut rng = rng(8);
    let g = catalog::gl11();
    let h = a(1, 1);
    for _ in 0..5 {
        let d = ExtensionDatum::trivial(g.clone(), h.clone());
        let b0 = random_graded_map(&mut rng, g.space(), h.space(), Parity::Even);
        let target = transform_datum(&d, &b0).unwrap();
        let b = solve_split_abelian(&target).unwrap().unwrap();
        assert!(check_split_witness(&target, &b).unwrap());
    }
}

#[test]
fn pullback_examples() {
    let sl2 = catalog::sl2();
    let out_dim = sl2.out_quotient().unwrap().out.dim();
    assert_eq!(out_dim, 0);
    for g in [a(1, 0), catalog::sl2()] {
        let zero = GradedLinearMap::zero(
            g.space().clone(),
            crate::gvs::SuperVectorSpace::zero_space(),
            Parity::Even,
        );
        let ext = pullback_extension(&sl2, &g, &zero).unwrap();
        assert_eq!(ext.e().dim(), 3 + g.dim());
        let direct = sl2.direct_sum(&g, "direct");
        assert!(same_structure(&ext.normalized().unwrap(), &direct));
        assert!(jacobi_oracle(ext.e()));
    }
    let heis = catalog::heis3();
    let g = a(1, 0);
    let out = heis.out_quotient().unwrap().out;
    let zero = GradedLinearMap::zero(g.space().clone(), out.space().clone(), Parity::Even);
    assert!(matches!(pullback_extension(&heis, &g, &zero), Err(ExtensionError::HasCenter)));
}

/// `[X, Y1] = Y1`, `[X, Y2] = Y2`: centerless, `out ≅ gl(2)/scalars`.
fn aff2() -> SuperLieAlgebra {
    let space = crate::gvs::SuperVectorSpace::from_pairs([
        ("X", Parity::Even),
        ("Y1", Parity::Even),
        ("Y2", Parity::Even),
    ])
    .unwrap();
    SuperLieAlgebra::builder("aff2", space)
        .bracket("X", "Y1", [("Y1", int(1))])
        .and_then(|b| b.bracket("X", "Y2", [("Y2", int(1))]))
        .and_then(|b| b.build())
        .unwrap()
}

#[test]
fn pullback_induces_alpha_bar() {
    let h = aff2();
    assert!(h.center().is_empty());
    let out = h.out_quotient().unwrap();
    assert_eq!(out.out.dim(), 3);
    let g = a(1, 0);
    for k in 0..3 {
        let mut m = Matrix::zeros(3, 1);
        m.set(k, 0, int(1));
        let alpha_bar =
            GradedLinearMap::new(g.space().clone(), out.out.space().clone(), Parity::Even, m).unwrap();
        let ext = pullback_extension(&h, &g, &alpha_bar).unwrap();
        assert!(jacobi_oracle(ext.e()));
        let d = ext.data().unwrap();
        assert!(d.check().passed());
        assert_eq!(out.project(d.alpha().operator(0)).unwrap(), alpha_bar.image_of_basis(0));
    }
}

#[test]
fn violated_cyclic_identity_breaks_jacobi() {
    // α = 0 with h abelian: the curvature identity holds for any ρ, the cyclic
    // one is δρ = 0; on sl2 ⊕ line, ρ(H, T) ≠ 0 is not closed
    let g = catalog::sl2().direct_sum(&a(1, 0), "gl2");
    let h = a(1, 0);
    let mut rho = Cochain::zero(g.space().clone(), h.space().clone(), 2, Parity::Even);
    rho.set(&[0, 3], vec![int(1)]).unwrap();
    let alpha = Connection::zero(g.space().clone(), h.space().clone());
    let d = ExtensionDatum::new(g, h, alpha, rho).unwrap();
    let report = d.check();
    assert!(report.curvature.is_empty());
    assert!(!report.cyclic.is_empty());
    assert!(!jacobi_oracle(&extension_bracket(&d)));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn sections_satisfy_identities(seed in any::<u64>(), pick in 0usize..9) {
        let mut rng = rng(seed);
        let (_, ext) = corpus::all().swap_remove(pick);
        let ext = random_rebase(&mut rng, &ext);
        let (s, b) = random_section(&mut rng, &ext);
        let d = ext.induced_data(&s).unwrap();
        prop_assert!(d.check().passed());
        let base = ext.induced_data(&ext.canonical_section()).unwrap();
        prop_assert_eq!(transform_datum(&base, &b).unwrap(), d.clone());
        prop_assert!(isomorphism_holds(&base, &b).unwrap());
        let built = build_extension(&d).unwrap();
        prop_assert_eq!(built.data().unwrap(), d);
    }

    #[test]
    fn delta_squared_is_curvature_bracket(seed in any::<u64>(), pick in 0usize..9, p in 0usize..3) {
        let mut rng = rng(seed);
        let (_, ext) = corpus::all().swap_remove(pick);
        let ext = random_rebase(&mut rng, &ext);
        let (s, _) = random_section(&mut rng, &ext);
        let d = ext.induced_data(&s).unwrap();
        let y = Parity::from_bit(rand::Rng::gen_range(&mut rng, 0..2)).unwrap();
        let phi = random_cochain(&mut rng, d.g().space(), d.h().space(), p, y);
        let once = covariant_delta(d.g(), d.alpha(), &phi).unwrap();
        let twice = covariant_delta(d.g(), d.alpha(), &once).unwrap();
        prop_assert_eq!(twice, nr_bracket(d.rho(), &phi, d.h()).unwrap());
    }

    #[test]
    fn homomorphism_of_iso(seed in any::<u64>(), pick in 0usize..9) {
        let mut rng = rng(seed);
        let (_, ext) = corpus::all().swap_remove(pick);
        let d = ext.data().unwrap();
        let b = random_graded_map(&mut rng, d.g().space(), d.h().space(), Parity::Even);
        let phi = transform_isomorphism(&d, &b).unwrap();
        let e1 = build_extension(&d).unwrap();
        let e2 = build_extension(&transform_datum(&d, &b).unwrap()).unwrap();
        prop_assert!(is_homomorphism(&phi, e1.e(), e2.e()).unwrap());
    }
}
