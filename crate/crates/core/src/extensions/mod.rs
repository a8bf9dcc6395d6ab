//! Extensions `0 → h → e → g → 0`: the data `(α, ρ)` induced by a section,
//! the conditions they satisfy, the algebra built from them, changes of
//! section, split witnesses and the pullback along `g → out(h)`.

mod datum;
mod moves;
mod pullback;
mod triple;

pub mod corpus;

pub use datum::{CyclicResidual, DatumReport, DerivationFailure, ExtensionDatum, OperatorResidual};
pub use moves::{
    check_equivalence_witness, check_split_witness, connection_is_homomorphism,
    isomorphism_holds, solve_split_abelian, transform_datum, transform_isomorphism,
};
pub use pullback::pullback_extension;
pub use triple::{build_extension, extension_bracket, ExtensionTriple};

use crate::cochains::CochainError;
use crate::gvs::GvsError;
use crate::superlie::SuperLieError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExtensionError {
    #[error(transparent)]
    Space(#[from] GvsError),
    #[error(transparent)]
    Algebra(#[from] SuperLieError),
    #[error(transparent)]
    Cochain(#[from] CochainError),
    #[error("{0}")]
    Mismatch(String),
    #[error("maps must have degree 0")]
    NotDegreeZero,
    #[error("sequence is not exact: {0}")]
    NotExact(String),
    #[error("p ∘ s is not the identity")]
    NotASection,
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("curvature on ({0}, {1}) does not lie in i(h)")]
    CurvatureOutsideKernel(usize, usize),
    #[error("datum fails its conditions")]
    InvalidDatum(Box<DatumReport>),
    #[error("h is not abelian")]
    NotAbelian,
    #[error("h has nonzero center")]
    HasCenter,
    #[error("map is not a homomorphism into out(h)")]
    NotHomomorphism,
    #[error("internal consistency fault: {0}")]
    Internal(String),
}

#[cfg(test)]
mod tests;
