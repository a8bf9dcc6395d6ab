//! Super Lie algebras by structure constants: validation, `ad`, the graded
//! center, graded derivations, `out(h) = der(h)/ad(h)` and homomorphisms.

mod algebra;
pub mod catalog;
mod derivations;
mod validate;

pub use algebra::{is_homomorphism, AlgebraBuilder, SuperLieAlgebra};
pub use derivations::{graded_commutator, DerivationSpace, OutAlgebra};
pub use validate::{PairViolation, TripleViolation, ValidationReport};

use crate::gvs::GvsError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SuperLieError {
    #[error(transparent)]
    Space(#[from] GvsError),
    #[error("malformed structure constants: {0}")]
    Shape(String),
    #[error("unknown basis element `{0}`")]
    UnknownBasis(String),
    #[error("conflicting brackets for [{left}, {right}]")]
    ConflictingBracket { left: String, right: String },
    #[error("element is not parity-homogeneous")]
    NonHomogeneous,
    #[error("homomorphisms must have degree 0")]
    NotDegreeZero,
    #[error("internal consistency fault: {0}")]
    Internal(String),
}

#[cfg(test)]
mod tests {
    use super::catalog::*;
    use super::*;
    use crate::gvs::{int, unit_vector, GradedLinearMap, Matrix, Parity, SuperVectorSpace};

    #[test]
    fn catalog_algebras_validate() {
        for alg in all() {
            let report = alg.validate();
            assert!(report.passed(), "{} failed: {report:?}", alg.name());
        }
    }

    #[test]
    fn broken_degree_is_reported() {
        let space = SuperVectorSpace::from_pairs([("H", Parity::Even), ("Q", Parity::Odd)]).unwrap();
        let alg = SuperLieAlgebra::builder("broken", space)
            .bracket("Q", "Q", [("Q", int(1))])
            .unwrap()
            .build()
            .unwrap();
        let report = alg.validate();
        assert_eq!(report.degree_zero.len(), 1);
        assert_eq!((report.degree_zero[0].left, report.degree_zero[0].right), (1, 1));
    }

    #[test]
    fn builder_rejects_inconsistent_pair() {
        let space = SuperVectorSpace::from_pairs([("P", Parity::Even), ("Q", Parity::Even)]).unwrap();
        let r = SuperLieAlgebra::builder("x", space)
            .bracket("P", "Q", [("P", int(1))])
            .and_then(|b| b.bracket("Q", "P", [("P", int(1))]))
            .and_then(|b| b.build());
        assert!(matches!(r, Err(SuperLieError::ConflictingBracket { .. })));
    }

    #[test]
    fn ad_examples() {
        let a = abelian_dims(1, 1);
        assert!(a.ad(&[int(1), int(0)]).unwrap().is_zero());
        let s = sl2();
        let ad_h = s.ad(&unit_vector(3, 0)).unwrap();
        assert_eq!(ad_h.matrix(), &Matrix::diagonal(&[int(0), int(2), int(-2)]));
        let susy = susy_line();
        let ad_q = susy.ad(&unit_vector(2, 1)).unwrap();
        assert_eq!(ad_q.degree(), Parity::Odd);
        assert_eq!(ad_q.image_of_basis(1), vec![int(2), int(0)]);
        assert_eq!(ad_q.image_of_basis(0), vec![int(0), int(0)]);
        assert!(matches!(susy.ad(&[int(1), int(1)]), Err(SuperLieError::NonHomogeneous)));
    }

    #[test]
    fn center_examples() {
        assert_eq!(abelian_dims(1, 1).center().len(), 2);
        assert!(sl2().center().is_empty());
        assert_eq!(heis3().center(), vec![unit_vector(3, 2)]);
        assert_eq!(susy_line().center(), vec![unit_vector(2, 0)]);
    }

    #[test]
    fn derivation_counts() {
        let d = abelian_dims(1, 0).derivations();
        assert_eq!((d.space().dim_even(), d.space().dim_odd()), (1, 0));
        let d = sl2().derivations();
        assert_eq!(d.dim(), 3);
        assert_eq!(d.inner_count(), 3);
        let d = abelian_dims(1, 1).derivations();
        assert_eq!((d.space().dim_even(), d.space().dim_odd()), (2, 2));
        assert_eq!(d.inner_count(), 0);
        let alg = heis3();
        let d = alg.derivations();
        assert_eq!(d.dim(), 6);
        assert_eq!(d.inner_count(), 2);
        for member in d.basis() {
            assert!(alg.is_derivation(member));
        }
    }

    #[test]
    fn out_examples() {
        assert_eq!(sl2().out_quotient().unwrap().out.dim(), 0);
        let o = abelian_dims(1, 0).out_quotient().unwrap();
        assert_eq!(o.out.dim(), 1);
        assert!(o.out.is_abelian());
        let h = heis3();
        let o = h.out_quotient().unwrap();
        assert_eq!(o.out.dim(), o.derivations.dim() - o.derivations.inner_count());
        assert_eq!(o.out.dim(), 4);
        assert!(o.out.validate().passed());
        assert!(o.der_algebra.validate().passed());
    }

    #[test]
    fn projection_is_a_homomorphism_killing_inner() {
        for alg in [heis3(), susy_line(), gl11(), extended_susy_line()] {
            let o = alg.out_quotient().unwrap();
            assert!(is_homomorphism(&o.projection, &o.der_algebra, &o.out).unwrap());
            for k in 0..o.derivations.inner_count() {
                let coords = unit_vector(o.derivations.dim(), k);
                assert!(crate::gvs::is_zero_vector(&o.projection.apply(&coords).unwrap()));
            }
        }
    }

    #[test]
    fn homomorphism_examples() {
        let s = sl2();
        let id = GradedLinearMap::identity(s.space().clone());
        assert!(is_homomorphism(&id, &s, &s).unwrap());
        let z = GradedLinearMap::zero(s.space().clone(), s.space().clone(), Parity::Even);
        assert!(is_homomorphism(&z, &s, &s).unwrap());

        let h = heis3();
        let line = abelian("A(1|0)", &[("e", Parity::Even)]);
        let map = |row: [i64; 3]| {
            let m = Matrix::from_rows(vec![row.iter().map(|&x| int(x)).collect()]).unwrap();
            GradedLinearMap::new(h.space().clone(), line.space().clone(), Parity::Even, m).unwrap()
        };
        assert!(is_homomorphism(&map([1, 0, 0]), &h, &line).unwrap());
        assert!(is_homomorphism(&map([1, 1, 0]), &h, &line).unwrap());
        assert!(!is_homomorphism(&map([0, 0, 1]), &h, &line).unwrap());

        let odd = GradedLinearMap::zero(s.space().clone(), s.space().clone(), Parity::Odd);
        assert!(matches!(
            is_homomorphism(&odd, &s, &s),
            Err(SuperLieError::NotDegreeZero)
        ));
    }

    #[test]
    fn ad_is_a_derivation_and_center_is_kernel_of_ad() {
        for alg in all() {
            let n = alg.dim();
            for i in 0..n {
                assert!(alg.is_derivation(&alg.ad_basis(i)), "{}", alg.name());
            }
            // kernel of X ↦ ad_X, computed from the flattened ad matrices
            let cols: Vec<_> = (0..n).map(|i| alg.ad_basis(i).matrix().entries().to_vec()).collect();
            let kernel = Matrix::from_columns(&cols, n * n).unwrap().kernel_basis();
            assert_eq!(crate::gvs::span_rank(&kernel, n), alg.center().len());
            let mut both = kernel.clone();
            both.extend(alg.center());
            assert_eq!(crate::gvs::span_rank(&both, n), kernel.len());
        }
    }
}
