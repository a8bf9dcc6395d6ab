use proptest::prelude::*;
use rand::Rng;

use super::*;
use crate::gvs::{int, ratio, unit_vector, zero_vector, Parity, Scalar, SuperVectorSpace};
use crate::superlie::catalog;
use crate::testkit::*;

fn even() -> Parity {
    Parity::Even
}

fn odd() -> Parity {
    Parity::Odd
}

fn scalar_form(source: &SuperVectorSpace, arity: usize, weight: Parity) -> Cochain {
    Cochain::zero(source.clone(), SuperVectorSpace::trivial_line(), arity, weight)
}

fn dual(source: &SuperVectorSpace, i: usize) -> Cochain {
    let mut c = scalar_form(source, 1, source.parity(i));
    c.set(&[i], vec![int(1)]).unwrap();
    c
}

fn factorial(n: usize) -> i64 {
    (1..=n as i64).product()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Full symmetrisation over `S_{q+p}` with the `1/(q! p!)` prefactor.
fn wedge_full_sum(psi: &Cochain, phi: &Cochain, tuple: &[usize]) -> Vec<Scalar> {
    let (q, p) = (psi.arity(), phi.arity());
    let x: Vec<Parity> = tuple.iter().map(|&i| phi.source().parity(i)).collect();
    let mut out = zero_vector(phi.target().dim());
    for sigma in permutations(q + p) {
        let s = multigraded_sign(&sigma, &ParityWord(x.clone())).unwrap();
        let b: Parity = sigma[..q].iter().map(|&a| x[a]).sum();
        let sign = if (phi.weight() * b).is_odd() { -s } else { s };
        let args: Vec<usize> = sigma.iter().map(|&a| tuple[a]).collect();
        let u = psi.evaluate(&args[..q]).unwrap();
        let v = phi.evaluate(&args[q..]).unwrap();
        for (o, vi) in out.iter_mut().zip(&v) {
            *o += int(sign as i64) * &u[0] * vi;
        }
    }
    let norm = ratio(1, factorial(q) * factorial(p));
    out.iter().map(|c| c * &norm).collect()
}

#[test]
fn evaluate_swaps() {
    let ev = SuperVectorSpace::numbered("e", vec![even(), even()]);
    let mut phi = Cochain::zero(ev.clone(), SuperVectorSpace::trivial_line(), 2, even());
    phi.set(&[0, 1], vec![int(5)]).unwrap();
    assert_eq!(phi.evaluate(&[1, 0]).unwrap(), vec![int(-5)]);
    assert_eq!(phi.evaluate(&[0, 0]).unwrap(), vec![int(0)]);

    let od = SuperVectorSpace::numbered("f", vec![odd(), odd()]);
    let mut psi = Cochain::zero(od, SuperVectorSpace::trivial_line(), 2, even());
    psi.set(&[0, 1], vec![int(5)]).unwrap();
    assert_eq!(psi.evaluate(&[1, 0]).unwrap(), vec![int(5)]);
    psi.set(&[0, 0], vec![int(3)]).unwrap();
    assert_eq!(psi.evaluate(&[0, 0]).unwrap(), vec![int(3)]);
}

#[test]
fn set_rejects_bad_input() {
    let ev = SuperVectorSpace::numbered("e", vec![even(), odd()]);
    let mut phi = Cochain::zero(ev, SuperVectorSpace::trivial_line(), 2, even());
    assert!(matches!(phi.set(&[1, 0], vec![int(1)]), Err(CochainError::NotCanonical(_))));
    assert!(matches!(
        phi.set(&[0, 1], vec![int(1)]),
        Err(CochainError::NonHomogeneousValue(_))
    ));
    assert!(matches!(phi.evaluate(&[0, 7]), Err(CochainError::IndexOutOfRange(7))));
}

#[test]
fn wedge_examples() {
    let ev = SuperVectorSpace::numbered("e", vec![even(), even()]);
    let unit = Cochain::constant(ev.clone(), SuperVectorSpace::trivial_line(), even(), vec![int(1)])
        .unwrap();
    let mut phi = scalar_form(&ev, 1, even());
    phi.set(&[0], vec![int(2)]).unwrap();
    phi.set(&[1], vec![int(3)]).unwrap();
    assert_eq!(wedge(&unit, &phi).unwrap(), phi);

    let mut psi = scalar_form(&ev, 1, even());
    psi.set(&[0], vec![int(1)]).unwrap();
    psi.set(&[1], vec![int(-1)]).unwrap();
    // ψ(e0)φ(e1) − ψ(e1)φ(e0) = 3 + 2
    let w = wedge(&psi, &phi).unwrap();
    assert_eq!(w.evaluate(&[0, 1]).unwrap(), vec![int(5)]);

    let a01 = SuperVectorSpace::numbered("q", vec![odd()]);
    let q = dual(&a01, 0);
    let qq = wedge(&q, &q).unwrap();
    assert_eq!(qq.evaluate(&[0, 0]).unwrap(), wedge_full_sum(&q, &q, &[0, 0]));
    // two shuffles, each carrying (-1)^{y b} = -1
    assert_eq!(qq.evaluate(&[0, 0]).unwrap(), vec![int(-2)]);

    assert!(matches!(wedge(&q, &phi), Err(CochainError::Incompatible)));
    let non_scalar = Cochain::zero(ev.clone(), ev.clone(), 1, even());
    assert!(matches!(wedge(&non_scalar, &phi), Err(CochainError::NotScalar)));
}

#[test]
fn bracket_examples() {
    let sl2 = catalog::sl2();
    let g = SuperVectorSpace::numbered("x", vec![even(), odd()]);
    let a = Cochain::constant(g.clone(), sl2.space().clone(), even(), unit_vector(3, 1)).unwrap();
    let b = Cochain::constant(g.clone(), sl2.space().clone(), even(), unit_vector(3, 2)).unwrap();
    let ab = nr_bracket(&a, &b, &sl2).unwrap();
    assert_eq!(ab.evaluate(&[]).unwrap(), unit_vector(3, 0));

    let ab1 = catalog::abelian_dims(1, 1);
    let mut rng = rng(7);
    let phi = random_cochain(&mut rng, &g, ab1.space(), 2, even());
    let psi = random_cochain(&mut rng, &g, ab1.space(), 1, odd());
    assert!(nr_bracket(&phi, &psi, &ab1).unwrap().is_zero());

    let rho = random_cochain(&mut rng, &g, sl2.space(), 2, even());
    assert!(nr_bracket(&rho, &rho, &sl2).unwrap().is_zero());

    let wrong = Cochain::zero(g.clone(), SuperVectorSpace::trivial_line(), 1, even());
    assert!(matches!(nr_bracket(&wrong, &wrong, &sl2), Err(CochainError::TargetNotAlgebra)));
}

#[test]
fn chevalley_examples() {
    let sl2 = catalog::sl2();
    let dh = chevalley_delta(&sl2, &dual(sl2.space(), 0)).unwrap();
    assert_eq!(dh.evaluate(&[1, 2]).unwrap(), vec![int(-1)]);

    let susy = catalog::susy_line();
    let dh = chevalley_delta(&susy, &dual(susy.space(), 0)).unwrap();
    assert_eq!(dh.evaluate(&[1, 1]).unwrap(), vec![int(-2)]);

    let ab = catalog::abelian_dims(1, 2);
    let mut rng = rng(3);
    for arity in 0..3 {
        let phi = random_cochain(&mut rng, ab.space(), &SuperVectorSpace::trivial_line(), arity, odd());
        assert!(chevalley_delta(&ab, &phi).unwrap().is_zero());
    }
}

/// `(δ_α Φ)(X0, X1) = α_{X0}Φ(X1) − α_{X1}Φ(X0) − Φ([X0, X1])` for even data.
#[test]
fn classical_covariant_first_order() {
    let mut rng = rng(11);
    let g = catalog::sl2();
    let h = SuperVectorSpace::numbered("v", vec![even(), even()]);
    for _ in 0..5 {
        let alpha = random_connection(&mut rng, g.space(), &h);
        let phi = random_cochain(&mut rng, g.space(), &h, 1, even());
        let d = covariant_delta(&g, &alpha, &phi).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                let mut expect = alpha.operator(i).apply(&phi.evaluate(&[j]).unwrap()).unwrap();
                let back = alpha.operator(j).apply(&phi.evaluate(&[i]).unwrap()).unwrap();
                let br = g.bracket_basis(i, j);
                let mut inner = zero_vector(2);
                for (k, c) in br.iter().enumerate() {
                    for (o, v) in inner.iter_mut().zip(phi.evaluate(&[k]).unwrap()) {
                        *o += c * v;
                    }
                }
                for ((e, b), n) in expect.iter_mut().zip(back).zip(inner) {
                    *e -= b + n;
                }
                assert_eq!(d.evaluate(&[i, j]).unwrap(), expect);
            }
        }
    }
}

#[test]
fn delta_with_inner_action_squares_to_zero() {
    let mut rng = rng(5);
    for alg in small_algebras(4) {
        let alpha = Connection::new(
            alg.space().clone(),
            alg.space().clone(),
            (0..alg.dim()).map(|i| alg.ad_basis(i)).collect(),
        )
        .unwrap();
        for arity in 0..3 {
            for w in [even(), odd()] {
                let phi = random_cochain(&mut rng, alg.space(), alg.space(), arity, w);
                let dd = covariant_delta(&alg, &alpha, &covariant_delta(&alg, &alpha, &phi).unwrap())
                    .unwrap();
                assert!(dd.is_zero(), "{} arity {arity}", alg.name());
            }
        }
    }
}

#[test]
fn cochain_space_round_trip() {
    let mut rng = rng(9);
    let g = SuperVectorSpace::numbered("x", vec![even(), odd(), odd()]);
    let h = SuperVectorSpace::numbered("y", vec![odd(), even()]);
    let space = CochainSpace::new(g.clone(), h.clone(), 3, odd());
    let c = random_cochain(&mut rng, &g, &h, 3, odd());
    assert_eq!(space.cochain(&space.coordinates(&c).unwrap()), c);
    let other = CochainSpace::new(g, h, 3, even());
    assert!(matches!(other.coordinates(&c), Err(CochainError::Incompatible)));
}

#[test]
fn canonical_tuple_counts() {
    // Λ(g0) ⊗ S(g1) in each arity
    let parities = vec![even(), odd()];
    let counts: Vec<usize> = (0..5).map(|p| canonical_tuples(&parities, p).len()).collect();
    assert_eq!(counts, vec![1, 2, 2, 2, 2]);
    let parities = vec![even(), even(), even()];
    let counts: Vec<usize> = (0..5).map(|p| canonical_tuples(&parities, p).len()).collect();
    assert_eq!(counts, vec![1, 3, 3, 1, 0]);
}

fn compose(sigma: &[usize], tau: &[usize]) -> Vec<usize> {
    tau.iter().map(|&t| sigma[t]).collect()
}

fn random_tuple(rng: &mut rand_chacha::ChaCha8Rng, dim: usize, len: usize) -> Vec<usize> {
    (0..len).map(|_| rng.gen_range(0..dim)).collect()
}

fn random_permutation(rng: &mut rand_chacha::ChaCha8Rng, n: usize) -> Vec<usize> {
    let perms = permutations(n);
    perms[rng.gen_range(0..perms.len())].clone()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn sign_composition(k in 0usize..5, seed in any::<u64>()) {
        let mut rng = rng(seed);
        let x = ParityWord(random_parities(&mut rng, k));
        let sigma = random_permutation(&mut rng, k);
        let tau = random_permutation(&mut rng, k);
        let lhs = multigraded_sign(&compose(&sigma, &tau), &x).unwrap();
        let rhs = multigraded_sign(&sigma, &x).unwrap()
            * multigraded_sign(&tau, &x.permuted(&sigma)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn evaluation_consistency(seed in any::<u64>(), arity in 0usize..4) {
        let mut rng = rng(seed);
        let g = random_space(&mut rng, 3);
        let h = random_space(&mut rng, 2);
        let w = Parity::from_bit(rng.gen_range(0..2)).unwrap();
        let phi = random_cochain(&mut rng, &g, &h, arity, w);
        let t = random_tuple(&mut rng, g.dim(), arity);
        let sigma = random_permutation(&mut rng, arity);
        let x = ParityWord(t.iter().map(|&i| g.parity(i)).collect());
        let s = multigraded_sign(&sigma, &x).unwrap();
        let permuted: Vec<usize> = sigma.iter().map(|&a| t[a]).collect();
        let base = phi.evaluate(&t).unwrap();
        let expect: Vec<Scalar> = base.iter().map(|c| c * int(s as i64)).collect();
        prop_assert_eq!(phi.evaluate(&permuted).unwrap(), expect);
    }

    #[test]
    fn delta_output_is_graded_antisymmetric(seed in any::<u64>(), arity in 0usize..3) {
        let mut rng = rng(seed);
        let g = random_algebra(&mut rng, 4);
        let h = random_space(&mut rng, 2);
        let w = Parity::from_bit(rng.gen_range(0..2)).unwrap();
        let alpha = random_connection(&mut rng, g.space(), &h);
        let phi = random_cochain(&mut rng, g.space(), &h, arity, w);
        let t = random_tuple(&mut rng, g.dim(), arity + 1);
        let sigma = random_permutation(&mut rng, arity + 1);
        let x = ParityWord(t.iter().map(|&i| g.parity(i)).collect());
        let s = multigraded_sign(&sigma, &x).unwrap();
        let permuted: Vec<usize> = sigma.iter().map(|&a| t[a]).collect();
        let base = covariant_delta_at(&g, &alpha, &phi, &t).unwrap();
        let expect: Vec<Scalar> = base.iter().map(|c| c * int(s as i64)).collect();
        prop_assert_eq!(covariant_delta_at(&g, &alpha, &phi, &permuted).unwrap(), expect);
    }

    #[test]
    fn shuffle_sum_matches_full_sum(seed in any::<u64>(), q in 0usize..3, p in 0usize..3) {
        let mut rng = rng(seed);
        let g = random_space(&mut rng, 3);
        let h = random_space(&mut rng, 2);
        let z = Parity::from_bit(rng.gen_range(0..2)).unwrap();
        let y = Parity::from_bit(rng.gen_range(0..2)).unwrap();
        let psi = random_cochain(&mut rng, &g, &SuperVectorSpace::trivial_line(), q, z);
        let phi = random_cochain(&mut rng, &g, &h, p, y);
        let w = wedge(&psi, &phi).unwrap();
        for t in canonical_tuples(g.parities(), q + p) {
            prop_assert_eq!(w.evaluate(&t).unwrap(), wedge_full_sum(&psi, &phi, &t));
        }
    }

    #[test]
    fn leibniz(seed in any::<u64>(), q in 0usize..3, p in 0usize..3) {
        let mut rng = rng(seed);
        let g = random_algebra(&mut rng, 4);
        let h = random_space(&mut rng, 2);
        let z = Parity::from_bit(rng.gen_range(0..2)).unwrap();
        let y = Parity::from_bit(rng.gen_range(0..2)).unwrap();
        let alpha = random_connection(&mut rng, g.space(), &h);
        let psi = random_cochain(&mut rng, g.space(), &SuperVectorSpace::trivial_line(), q, z);
        let phi = random_cochain(&mut rng, g.space(), &h, p, y);
        let lhs = covariant_delta(&g, &alpha, &wedge(&psi, &phi).unwrap()).unwrap();
        let first = wedge(&chevalley_delta(&g, &psi).unwrap(), &phi).unwrap();
        let mut second = wedge(&psi, &covariant_delta(&g, &alpha, &phi).unwrap()).unwrap();
        if q % 2 == 1 {
            second = second.neg();
        }
        prop_assert_eq!(lhs, first.add(&second).unwrap());
    }

    #[test]
    fn bracket_graded_antisymmetry_and_jacobi(seed in any::<u64>()) {
        let mut rng = rng(seed);
        let h = random_algebra(&mut rng, 4);
        let g = random_space(&mut rng, 2);
        let mut forms = Vec::new();
        for _ in 0..3 {
            let p = rng.gen_range(0..3);
            let y = Parity::from_bit(rng.gen_range(0..2)).unwrap();
            forms.push(random_cochain(&mut rng, &g, h.space(), p, y));
        }
        let deg = |c: &Cochain| (c.arity() % 2 == 1, c.weight().is_odd());
        let koszul = |a: &Cochain, b: &Cochain| {
            let (pa, ya) = deg(a);
            let (pb, yb) = deg(b);
            (pa && pb) ^ (ya && yb)
        };
        let (a, b, c) = (&forms[0], &forms[1], &forms[2]);
        let ab = nr_bracket(a, b, &h).unwrap();
        let ba = nr_bracket(b, a, &h).unwrap();
        let expect = if koszul(a, b) { ba.clone() } else { ba.neg() };
        prop_assert_eq!(ab, expect);

        let term = |x: &Cochain, y: &Cochain, z: &Cochain| {
            let t = nr_bracket(x, &nr_bracket(y, z, &h).unwrap(), &h).unwrap();
            if koszul(x, z) { t.neg() } else { t }
        };
        let sum = term(a, b, c)
            .add(&term(b, c, a).with_spaces(g.clone(), h.space().clone()).unwrap())
            .and_then(|s| s.add(&term(c, a, b)));
        prop_assert!(sum.unwrap().is_zero());
    }
}
