//! Generators and golden cases shared by the integration tests.
#![allow(dead_code)]

pub mod golden;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use superext::cochains::{Cochain, CochainSpace};
use superext::extensions::ExtensionTriple;
use superext::gvs::{int, is_zero_vector, unit_vector, zero_vector, GradedLinearMap, Matrix, Parity, Scalar, SuperVectorSpace};
use superext::superlie::{catalog, SuperLieAlgebra};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small(rng: &mut ChaCha8Rng) -> Scalar {
    int(rng.gen_range(-3..=3))
}

pub fn random_graded_matrix(
    rng: &mut ChaCha8Rng,
    domain: &SuperVectorSpace,
    codomain: &SuperVectorSpace,
    degree: Parity,
) -> Matrix {
    let mut m = Matrix::zeros(codomain.dim(), domain.dim());
    for i in 0..codomain.dim() {
        for j in 0..domain.dim() {
            if codomain.parity(i) == domain.parity(j) + degree {
                m.set(i, j, small(rng));
            }
        }
    }
    m
}

pub fn random_even_map(rng: &mut ChaCha8Rng, domain: &SuperVectorSpace, codomain: &SuperVectorSpace) -> GradedLinearMap {
    let m = random_graded_matrix(rng, domain, codomain, Parity::Even);
    GradedLinearMap::new(domain.clone(), codomain.clone(), Parity::Even, m).unwrap()
}

pub fn random_even_automorphism(rng: &mut ChaCha8Rng, space: &SuperVectorSpace) -> Matrix {
    loop {
        let m = random_graded_matrix(rng, space, space, Parity::Even);
        if m.inverse().is_some() {
            return m;
        }
    }
}

pub fn random_cochain(
    rng: &mut ChaCha8Rng,
    source: &SuperVectorSpace,
    target: &SuperVectorSpace,
    arity: usize,
    weight: Parity,
) -> Cochain {
    let space = CochainSpace::new(source.clone(), target.clone(), arity, weight);
    let coords: Vec<Scalar> = (0..space.dim()).map(|_| small(rng)).collect();
    space.cochain(&coords)
}

pub fn small_algebras(max_dim: usize) -> Vec<SuperLieAlgebra> {
    let mut out: Vec<SuperLieAlgebra> = catalog::all().into_iter().filter(|a| a.dim() <= max_dim).collect();
    out.push(catalog::abelian_dims(1, 1));
    out.push(catalog::abelian_dims(0, 2));
    out
}

/// A catalog algebra of dimension at most `max_dim` in a random basis.
pub fn random_algebra(rng: &mut ChaCha8Rng, max_dim: usize) -> SuperLieAlgebra {
    let pool = small_algebras(max_dim);
    let alg = &pool[rng.gen_range(0..pool.len())];
    let t = random_even_automorphism(rng, alg.space());
    alg.change_basis(&t, alg.space().clone()).unwrap()
}

/// The same extension with `e` in a random parity-preserving basis.
pub fn random_rebase(rng: &mut ChaCha8Rng, ext: &ExtensionTriple) -> ExtensionTriple {
    let e = ext.e();
    let t = random_even_automorphism(rng, e.space());
    let inv = t.inverse().unwrap();
    let e2 = e.change_basis(&t, e.space().clone()).unwrap();
    let incl = inv.mul(ext.inclusion().matrix()).unwrap();
    let proj = ext.projection().matrix().mul(&t).unwrap();
    let inclusion = GradedLinearMap::new(ext.h().space().clone(), e.space().clone(), Parity::Even, incl).unwrap();
    let projection = GradedLinearMap::new(e.space().clone(), ext.g().space().clone(), Parity::Even, proj).unwrap();
    ExtensionTriple::new(ext.h().clone(), e2, ext.g().clone(), inclusion, projection, None).unwrap()
}

/// `s + i ∘ b` for the section `s`.
pub fn shifted_section(ext: &ExtensionTriple, s: &GradedLinearMap, b: &GradedLinearMap) -> GradedLinearMap {
    let ib = ext.inclusion().matrix().mul(b.matrix()).unwrap();
    let m = s.matrix().add(&ib).unwrap();
    GradedLinearMap::new(s.domain().clone(), s.codomain().clone(), Parity::Even, m).unwrap()
}

/// A random section and the shift `b` from the canonical one.
pub fn random_section(rng: &mut ChaCha8Rng, ext: &ExtensionTriple) -> (GradedLinearMap, GradedLinearMap) {
    let b = random_even_map(rng, ext.g().space(), ext.h().space());
    (shifted_section(ext, &ext.canonical_section(), &b), b)
}

fn koszul(e: &SuperLieAlgebra, a: usize, b: usize) -> Scalar {
    if (e.parity(a) * e.parity(b)).is_odd() {
        int(-1)
    } else {
        int(1)
    }
}

/// Graded antisymmetry and the cyclic graded Jacobi identity on every basis
/// pair and triple, straight from the bracket.
pub fn jacobi_oracle(e: &SuperLieAlgebra) -> bool {
    let n = e.dim();
    let unit = |i| unit_vector(n, i);
    for i in 0..n {
        for j in 0..n {
            let ij = e.bracket(&unit(i), &unit(j));
            let ji = e.bracket(&unit(j), &unit(i));
            let anti: Vec<Scalar> = ij.iter().zip(&ji).map(|(a, b)| a + &koszul(e, i, j) * b).collect();
            if !is_zero_vector(&anti) {
                return false;
            }
            for k in 0..n {
                let mut sum = zero_vector(n);
                for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                    let inner = e.bracket(&unit(b), &unit(c));
                    let t = e.bracket(&unit(a), &inner);
                    for (s, v) in sum.iter_mut().zip(t) {
                        *s += &koszul(e, a, c) * v;
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

pub fn same_structure(x: &SuperLieAlgebra, y: &SuperLieAlgebra) -> bool {
    x.space().parities() == y.space().parities()
        && x.dim() == y.dim()
        && (0..x.dim()).all(|i| (0..x.dim()).all(|j| x.bracket_basis(i, j) == y.bracket_basis(i, j)))
}
