//! Random generators shared by the unit tests.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cochains::{Cochain, CochainSpace, Connection};
use crate::gvs::{int, GradedLinearMap, Matrix, Parity, Scalar, SuperVectorSpace};
use crate::superlie::{catalog, SuperLieAlgebra};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small(rng: &mut ChaCha8Rng) -> Scalar {
    int(rng.gen_range(-3..=3))
}

pub fn random_parities(rng: &mut ChaCha8Rng, dim: usize) -> Vec<Parity> {
    (0..dim).map(|_| Parity::from_bit(rng.gen_range(0..2)).unwrap()).collect()
}

pub fn random_space(rng: &mut ChaCha8Rng, max_dim: usize) -> SuperVectorSpace {
    let dim = rng.gen_range(1..=max_dim);
    SuperVectorSpace::numbered("x", random_parities(rng, dim))
}

/// Random matrix from `domain` to `codomain` respecting `degree`.
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

pub fn random_graded_map(
    rng: &mut ChaCha8Rng,
    domain: &SuperVectorSpace,
    codomain: &SuperVectorSpace,
    degree: Parity,
) -> GradedLinearMap {
    let m = random_graded_matrix(rng, domain, codomain, degree);
    GradedLinearMap::new(domain.clone(), codomain.clone(), degree, m).unwrap()
}

/// Invertible degree-0 change of basis.
pub fn random_even_automorphism(rng: &mut ChaCha8Rng, space: &SuperVectorSpace) -> Matrix {
    loop {
        let m = random_graded_matrix(rng, space, space, Parity::Even);
        if m.inverse().is_some() {
            return m;
        }
    }
}

pub fn small_algebras(max_dim: usize) -> Vec<SuperLieAlgebra> {
    let mut out: Vec<SuperLieAlgebra> = catalog::all()
        .into_iter()
        .filter(|a| a.dim() <= max_dim)
        .collect();
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

pub fn random_connection(
    rng: &mut ChaCha8Rng,
    source: &SuperVectorSpace,
    target: &SuperVectorSpace,
) -> Connection {
    let mats = (0..source.dim())
        .map(|i| random_graded_matrix(rng, target, target, source.parity(i)))
        .collect();
    Connection::from_matrices(source.clone(), target.clone(), mats).unwrap()
}

/// The same extension with `e` in a random parity-preserving basis.
pub fn random_rebase(
    rng: &mut ChaCha8Rng,
    ext: &crate::extensions::ExtensionTriple,
) -> crate::extensions::ExtensionTriple {
    let e = ext.e();
    let t = random_even_automorphism(rng, e.space());
    let inv = t.inverse().unwrap();
    let e2 = e.change_basis(&t, e.space().clone()).unwrap();
    let incl = inv.mul(ext.inclusion().matrix()).unwrap();
    let proj = ext.projection().matrix().mul(&t).unwrap();
    let inclusion = GradedLinearMap::new(ext.h().space().clone(), e.space().clone(), Parity::Even, incl).unwrap();
    let projection = GradedLinearMap::new(e.space().clone(), ext.g().space().clone(), Parity::Even, proj).unwrap();
    crate::extensions::ExtensionTriple::new(
        ext.h().clone(),
        e2,
        ext.g().clone(),
        inclusion,
        projection,
        None,
    )
    .unwrap()
}

/// `s + i ∘ b` for the canonical section `s` and a random degree-0 `b`;
/// returns the section and `b`.
pub fn random_section(
    rng: &mut ChaCha8Rng,
    ext: &crate::extensions::ExtensionTriple,
) -> (GradedLinearMap, GradedLinearMap) {
    let b = random_graded_map(rng, ext.g().space(), ext.h().space(), Parity::Even);
    let s = shifted_section(ext, &ext.canonical_section(), &b);
    (s, b)
}

pub fn shifted_section(
    ext: &crate::extensions::ExtensionTriple,
    s: &GradedLinearMap,
    b: &GradedLinearMap,
) -> GradedLinearMap {
    let ib = ext.inclusion().matrix().mul(b.matrix()).unwrap();
    let m = s.matrix().add(&ib).unwrap();
    GradedLinearMap::new(s.domain().clone(), s.codomain().clone(), Parity::Even, m).unwrap()
}
