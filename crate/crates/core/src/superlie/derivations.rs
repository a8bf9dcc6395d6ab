use num_traits::Zero;

use crate::gvs::{
    quotient_space, signed, span_rank, unit_vector, GradedLinearMap, Matrix, Parity, Scalar,
    SuperVectorSpace,
};

use super::{SuperLieAlgebra, SuperLieError};

/// A basis of `der(h)`, ordered inner-first: members `0..inner_count()` are
/// `ad_H` for the recorded elements `H`, the rest complete the basis.
#[derive(Clone, Debug)]
pub struct DerivationSpace {
    basis: Vec<GradedLinearMap>,
    inner_elements: Vec<Vec<Scalar>>,
    space: SuperVectorSpace,
    algebra_dim: usize,
    // Columns are the flattened basis operators; used to read off coordinates.
    coordinate_matrix: Matrix,
}

impl DerivationSpace {
    pub fn basis(&self) -> &[GradedLinearMap] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn inner_count(&self) -> usize {
        self.inner_elements.len()
    }

    pub fn is_inner(&self, k: usize) -> bool {
        k < self.inner_count()
    }

    /// `H` with `basis()[k] = ad_H`, for inner members.
    pub fn inner_element(&self, k: usize) -> Option<&[Scalar]> {
        self.inner_elements.get(k).map(Vec::as_slice)
    }

    /// `der(h)` as a super vector space with basis `D0, D1, ...`.
    pub fn space(&self) -> &SuperVectorSpace {
        &self.space
    }

    /// Coordinates of an operator in the derivation basis, `None` if it is
    /// not a derivation.
    pub fn coordinates(&self, op: &Matrix) -> Option<Vec<Scalar>> {
        self.coordinate_matrix
            .solve(op.entries())
            .expect("operator has the algebra's dimension")
    }

    /// `Σ c_k D_k`.
    pub fn combination(&self, coords: &[Scalar]) -> Matrix {
        let side = self.algebra_dim;
        let flat = self.coordinate_matrix.apply(coords).expect("derivation coordinates");
        let rows = flat.chunks(side).map(<[Scalar]>::to_vec).collect();
        Matrix::from_rows_with_cols(rows, side, side).expect("square operators")
    }
}

impl SuperLieAlgebra {
    /// Solves the graded Leibniz system separately for each operator parity
    /// and returns an inner-first basis of `der(self)`.
    pub fn derivations(&self) -> DerivationSpace {
        let n = self.dim();
        let mut solutions: Vec<GradedLinearMap> = Vec::new();
        for degree in [Parity::Even, Parity::Odd] {
            // unknowns D[r][s] with parity(r) = parity(s) + degree
            let unknowns: Vec<(usize, usize)> = (0..n)
                .flat_map(|r| (0..n).map(move |s| (r, s)))
                .filter(|&(r, s)| self.parity(r) == self.parity(s) + degree)
                .collect();
            let mut rows: Vec<Vec<Scalar>> = Vec::new();
            for i in 0..n {
                let sign_i = (degree * self.parity(i)).is_odd();
                for j in 0..n {
                    let cij = self.bracket_basis(i, j);
                    for m in 0..n {
                        // D[e_i,e_j]_m - [D e_i, e_j]_m - (-1)^{d x_i} [e_i, D e_j]_m
                        let row: Vec<Scalar> = unknowns
                            .iter()
                            .map(|&(r, s)| {
                                let mut c = Scalar::zero();
                                if r == m {
                                    c += &cij[s];
                                }
                                if s == i {
                                    c -= &self.bracket_basis(r, j)[m];
                                }
                                if s == j {
                                    c -= signed(self.bracket_basis(i, r)[m].clone(), sign_i);
                                }
                                c
                            })
                            .collect();
                        if row.iter().any(|c| !c.is_zero()) {
                            rows.push(row);
                        }
                    }
                }
            }
            let count = rows.len();
            let system = Matrix::from_rows_with_cols(rows, count, unknowns.len())
                .expect("rows have one entry per unknown");
            for v in system.kernel_basis() {
                let mut op = Matrix::zeros(n, n);
                for (&(r, s), c) in unknowns.iter().zip(&v) {
                    op.set(r, s, c.clone());
                }
                solutions.push(
                    GradedLinearMap::new(self.space().clone(), self.space().clone(), degree, op)
                        .expect("unknowns respect the degree"),
                );
            }
        }

        let flat = |m: &Matrix| m.entries().to_vec();
        let ads: Vec<GradedLinearMap> = (0..n).map(|i| self.ad_basis(i)).collect();
        let ad_columns: Vec<Vec<Scalar>> = ads.iter().map(|a| flat(a.matrix())).collect();
        let independent = Matrix::from_columns(&ad_columns, n * n)
            .expect("flattened operators")
            .rref()
            .pivots;

        let mut basis: Vec<GradedLinearMap> = Vec::new();
        let mut vectors: Vec<Vec<Scalar>> = Vec::new();
        let mut inner_elements = Vec::new();
        for &i in &independent {
            basis.push(ads[i].clone());
            vectors.push(ad_columns[i].clone());
            inner_elements.push(unit_vector(n, i));
        }
        for d in solutions {
            let v = flat(d.matrix());
            vectors.push(v);
            if span_rank(&vectors, n * n) == vectors.len() {
                basis.push(d);
            } else {
                vectors.pop();
            }
        }
        let space = SuperVectorSpace::numbered("D", basis.iter().map(|d| d.degree()).collect());
        let coordinate_matrix = Matrix::from_columns(&vectors, n * n).expect("flattened operators");
        DerivationSpace {
            basis,
            inner_elements,
            space,
            algebra_dim: n,
            coordinate_matrix,
        }
    }
}

/// `der(h)` as a super Lie algebra under the graded commutator, and the
/// quotient `out(h) = der(h)/ad(h)` with its projection.
#[derive(Clone, Debug)]
pub struct OutAlgebra {
    pub derivations: DerivationSpace,
    pub der_algebra: SuperLieAlgebra,
    pub out: SuperLieAlgebra,
    /// `π: der(h) → out(h)`, degree 0, kernel `ad(h)`.
    pub projection: GradedLinearMap,
}

impl OutAlgebra {
    /// Representative derivation of an `out(h)` basis element: the matching
    /// complement member of the derivation basis.
    pub fn representative(&self, out_index: usize) -> &GradedLinearMap {
        &self.derivations.basis()[self.derivations.inner_count() + out_index]
    }

    /// `π(D)` for an arbitrary derivation operator.
    pub fn project(&self, op: &Matrix) -> Option<Vec<Scalar>> {
        let coords = self.derivations.coordinates(op)?;
        Some(self.projection.apply(&coords).expect("der coordinates"))
    }
}

/// Graded commutator `AB - (-1)^{ab} BA`.
pub fn graded_commutator(a: &Matrix, pa: Parity, b: &Matrix, pb: Parity) -> Matrix {
    let ab = a.mul(b).expect("square operators");
    let ba = b.mul(a).expect("square operators");
    if (pa * pb).is_odd() {
        ab.add(&ba).expect("same shape")
    } else {
        ab.sub(&ba).expect("same shape")
    }
}

impl SuperLieAlgebra {
    pub fn out_quotient(&self) -> Result<OutAlgebra, SuperLieError> {
        let derivations = self.derivations();
        let dim = derivations.dim();
        let basis = derivations.basis();
        let mut structure = vec![vec![Vec::new(); dim]; dim];
        for a in 0..dim {
            for b in 0..dim {
                let c = graded_commutator(
                    basis[a].matrix(),
                    basis[a].degree(),
                    basis[b].matrix(),
                    basis[b].degree(),
                );
                structure[a][b] = derivations.coordinates(&c).ok_or_else(|| {
                    SuperLieError::Internal("commutator of derivations is not a derivation".into())
                })?;
            }
        }
        let der_algebra = SuperLieAlgebra::from_structure(
            format!("der({})", self.name()),
            derivations.space().clone(),
            structure,
        )?;
        let r = derivations.inner_count();
        let inner: Vec<Vec<Scalar>> = (0..r).map(|k| unit_vector(dim, k)).collect();
        let quotient = quotient_space(derivations.space(), &inner)?;
        let projection = quotient.projection;
        let m = quotient.space.dim();
        let out_space = SuperVectorSpace::numbered("O", quotient.space.parities().to_vec());

        // ad(h) must be an ideal for the induced bracket to exist.
        for a in 0..r {
            for b in 0..dim {
                let image = projection.apply(der_algebra.bracket_basis(a, b))?;
                if image.iter().any(|c| !c.is_zero()) {
                    return Err(SuperLieError::Internal(
                        "ad(h) is not an ideal of der(h)".into(),
                    ));
                }
            }
        }
        let mut out_structure = vec![vec![Vec::new(); m]; m];
        for (a, &ra) in quotient.representatives.iter().enumerate() {
            for (b, &rb) in quotient.representatives.iter().enumerate() {
                out_structure[a][b] = projection.apply(der_algebra.bracket_basis(ra, rb))?;
            }
        }
        let out = SuperLieAlgebra::from_structure(
            format!("out({})", self.name()),
            out_space.clone(),
            out_structure,
        )?;
        let projection = GradedLinearMap::new(
            derivations.space().clone(),
            out_space,
            Parity::Even,
            projection.into_matrix(),
        )?;
        Ok(OutAlgebra {
            derivations,
            der_algebra,
            out,
            projection,
        })
    }
}
