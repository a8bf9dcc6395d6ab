//! Graded Chevalley cohomology with coefficients in a `g`-module, the
//! `g`-module `Z(h)`, and the obstruction and classification of extensions
//! inducing a given `ᾱ: g → out(h)`.
//!
//! The torsor of extension classes is reported relative to the base point
//! `(α, ρ - μ)` fixed by the deterministic lift, the canonical curvature and
//! the canonical preimage `μ`; that base point is a choice.

mod complex;
mod module;
mod pipeline;

pub use complex::{cohomology_space, CohomologyReport, WeightComponent};
pub use module::{center_module, Center, GModule};
pub use pipeline::{
    classify_extensions, lambda, lift_alpha_bar, obstruction_class, rho_from_lift,
    Classification, ObstructionReport,
};

use crate::cochains::CochainError;
use crate::extensions::ExtensionError;
use crate::gvs::GvsError;
use crate::superlie::SuperLieError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CohomologyError {
    #[error(transparent)]
    Space(#[from] GvsError),
    #[error(transparent)]
    Algebra(#[from] SuperLieError),
    #[error(transparent)]
    Cochain(#[from] CochainError),
    #[error(transparent)]
    Extension(#[from] ExtensionError),
    #[error("{0}")]
    Mismatch(String),
    #[error("arity {arity} exceeds the cap {cap}")]
    ArityCap { arity: usize, cap: usize },
    #[error("action is not a homomorphism on ({0}, {1})")]
    NotAModule(usize, usize),
    #[error("ᾱ is not a homomorphism into out(h)")]
    NotHomomorphism,
    #[error("[α_X, α_Y] - α_[X,Y] is not inner on ({0}, {1})")]
    DefectNotInner(usize, usize),
    #[error("internal consistency fault: {0}")]
    Internal(String),
}
