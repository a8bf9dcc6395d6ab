//! Exact scalars, super vector spaces, graded linear maps and the
//! row-reduction kernel shared by every other module.

mod map;
mod matrix;
mod scalar;
mod space;

pub use map::{quotient_space, GradedLinearMap, Quotient};
pub use matrix::{
    add_vectors, axpy, complement_basis, complement_indices, is_zero_vector, kernel_basis,
    scale_vector, solve_linear, span_rank, sub_vectors, unit_vector, zero_vector, Matrix, Rref,
};
pub use scalar::{
    format_scalar, int, is_negative, one, parse_scalar, ratio, signed, zero, Parity, Scalar,
};
pub use space::SuperVectorSpace;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GvsError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("duplicate basis name `{0}`")]
    DuplicateName(String),
    #[error("entry ({row}, {col}) violates homogeneity for degree {degree}")]
    NonHomogeneousEntry { row: usize, col: usize, degree: Parity },
    #[error("vector {0} is not parity-homogeneous")]
    NonHomogeneousVector(usize),
    #[error("input vectors are linearly dependent")]
    DependentVectors,
    #[error("cannot parse `{0}` as an exact rational")]
    ParseScalar(String),
}
