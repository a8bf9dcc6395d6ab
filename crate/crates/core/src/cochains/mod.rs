//! Graded-antisymmetric cochains `g^p → h`, the multigraded sign, the wedge
//! product, the `[·,·]∧` bracket and the covariant exterior derivative.
//!
//! In the scalar-valued Chevalley differential the form being
//! differentiated appears on both sides; it is the same cochain.

mod cochain;
mod ops;
mod sign;
mod space;

pub use cochain::{canonical_tuples, canonicalize, is_canonical, Cochain, Connection};
pub use ops::{chevalley_delta, covariant_delta, covariant_delta_at, nr_bracket, wedge};
pub use sign::{multigraded_sign, shuffle_permutation, shuffles, ParityWord};
pub use space::CochainSpace;

/// Largest arity accepted by default by the cohomology and CLI layers.
pub const DEFAULT_ARITY_CAP: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CochainError {
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("not a permutation")]
    NotAPermutation,
    #[error("tuple {0:?} is not canonical")]
    NotCanonical(Vec<usize>),
    #[error("value on {0:?} is not of the required parity")]
    NonHomogeneousValue(Vec<usize>),
    #[error("basis index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("cochains live on different spaces or degrees")]
    Incompatible,
    #[error("left factor of a wedge must be scalar-valued")]
    NotScalar,
    #[error("target does not carry the given bracket")]
    TargetNotAlgebra,
    #[error("operator {0} does not have the parity of its basis element")]
    ConnectionDegree(usize),
    #[error("arity {arity} exceeds the cap {cap}")]
    ArityCap { arity: usize, cap: usize },
}

#[cfg(test)]
mod tests;
