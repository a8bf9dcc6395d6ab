use num_traits::Zero;

use super::matrix::{complement_indices, Matrix};
use super::{GvsError, Parity, Scalar, SuperVectorSpace};

/// A linear map between super vector spaces that shifts parity by `degree`.
///
/// Entry `(i, j)` of the matrix is the coefficient of codomain basis vector
/// `i` in the image of domain basis vector `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GradedLinearMap {
    domain: SuperVectorSpace,
    codomain: SuperVectorSpace,
    degree: Parity,
    matrix: Matrix,
}

impl GradedLinearMap {
    pub fn new(
        domain: SuperVectorSpace,
        codomain: SuperVectorSpace,
        degree: Parity,
        matrix: Matrix,
    ) -> Result<Self, GvsError> {
        if matrix.rows() != codomain.dim() || matrix.cols() != domain.dim() {
            return Err(GvsError::ShapeMismatch {
                left: (codomain.dim(), domain.dim()),
                right: (matrix.rows(), matrix.cols()),
            });
        }
        for i in 0..matrix.rows() {
            for j in 0..matrix.cols() {
                if !matrix.get(i, j).is_zero() && codomain.parity(i) != domain.parity(j) + degree {
                    return Err(GvsError::NonHomogeneousEntry { row: i, col: j, degree });
                }
            }
        }
        Ok(GradedLinearMap {
            domain,
            codomain,
            degree,
            matrix,
        })
    }

    /// Infers the degree from the nonzero entries; the zero map gets degree 0.
    pub fn with_inferred_degree(
        domain: SuperVectorSpace,
        codomain: SuperVectorSpace,
        matrix: Matrix,
    ) -> Result<Self, GvsError> {
        let mut degree = Parity::Even;
        'outer: for i in 0..matrix.rows().min(codomain.dim()) {
            for j in 0..matrix.cols().min(domain.dim()) {
                if !matrix.get(i, j).is_zero() {
                    degree = codomain.parity(i) + domain.parity(j);
                    break 'outer;
                }
            }
        }
        GradedLinearMap::new(domain, codomain, degree, matrix)
    }

    pub fn zero(domain: SuperVectorSpace, codomain: SuperVectorSpace, degree: Parity) -> Self {
        let matrix = Matrix::zeros(codomain.dim(), domain.dim());
        GradedLinearMap {
            domain,
            codomain,
            degree,
            matrix,
        }
    }

    pub fn identity(space: SuperVectorSpace) -> Self {
        let matrix = Matrix::identity(space.dim());
        GradedLinearMap {
            domain: space.clone(),
            codomain: space,
            degree: Parity::Even,
            matrix,
        }
    }

    pub fn domain(&self) -> &SuperVectorSpace {
        &self.domain
    }

    pub fn codomain(&self) -> &SuperVectorSpace {
        &self.codomain
    }

    pub fn degree(&self) -> Parity {
        self.degree
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> Matrix {
        self.matrix
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>, GvsError> {
        self.matrix.apply(v)
    }

    /// Image of domain basis vector `j`.
    pub fn image_of_basis(&self, j: usize) -> Vec<Scalar> {
        self.matrix.column(j)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &GradedLinearMap) -> Result<GradedLinearMap, GvsError> {
        if inner.codomain.parities() != self.domain.parities() {
            return Err(GvsError::DimensionMismatch {
                expected: self.domain.dim(),
                found: inner.codomain.dim(),
            });
        }
        Ok(GradedLinearMap {
            domain: inner.domain.clone(),
            codomain: self.codomain.clone(),
            degree: self.degree + inner.degree,
            matrix: self.matrix.mul(&inner.matrix)?,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }
}

/// `ambient / span(sub_basis)` with its degree-0 projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub space: SuperVectorSpace,
    pub projection: GradedLinearMap,
    /// Ambient indices of the standard vectors representing the quotient basis.
    pub representatives: Vec<usize>,
}

/// Quotient by a span of parity-homogeneous vectors. The quotient basis is
/// represented by the standard vectors at the non-pivot positions of the
/// row-reduced `sub_basis`; each inherits its ambient name and parity.
pub fn quotient_space(
    ambient: &SuperVectorSpace,
    sub_basis: &[Vec<Scalar>],
) -> Result<Quotient, GvsError> {
    for (k, v) in sub_basis.iter().enumerate() {
        if v.len() != ambient.dim() {
            return Err(GvsError::DimensionMismatch {
                expected: ambient.dim(),
                found: v.len(),
            });
        }
        if ambient.parity_of(v).is_none() {
            return Err(GvsError::NonHomogeneousVector(k));
        }
    }
    let reps = complement_indices(sub_basis, ambient.dim())?;
    let space = SuperVectorSpace::new(
        reps.iter().map(|&i| ambient.name(i).to_string()).collect(),
        reps.iter().map(|&i| ambient.parity(i)).collect(),
    )?;
    // Coordinates in the basis (sub_basis, e_reps); the projection keeps the
    // trailing block.
    let mut columns: Vec<Vec<Scalar>> = sub_basis.to_vec();
    columns.extend(reps.iter().map(|&i| super::unit_vector(ambient.dim(), i)));
    let change = Matrix::from_columns(&columns, ambient.dim())?;
    let inv = change.inverse().ok_or(GvsError::DependentVectors)?;
    let k = sub_basis.len();
    let rows = (0..reps.len()).map(|r| inv.row(k + r).to_vec()).collect();
    let proj = Matrix::from_rows_with_cols(rows, reps.len(), ambient.dim())?;
    let projection = GradedLinearMap::new(ambient.clone(), space.clone(), Parity::Even, proj)?;
    Ok(Quotient {
        space,
        projection,
        representatives: reps,
    })
}
