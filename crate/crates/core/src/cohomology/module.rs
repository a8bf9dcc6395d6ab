use crate::cochains::Connection;
use crate::gvs::{Matrix, Scalar, SuperVectorSpace};
use crate::superlie::{graded_commutator, OutAlgebra, SuperLieAlgebra};

use super::CohomologyError;

/// A graded `g`-module: a degree-0 action `g → End(M)` with
/// `action_{[X,Y]} = [action_X, action_Y]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GModule {
    g: SuperLieAlgebra,
    action: Connection,
}

impl GModule {
    pub fn new(g: SuperLieAlgebra, action: Connection) -> Result<GModule, CohomologyError> {
        if action.source() != g.space() {
            return Err(CohomologyError::Mismatch("action must be indexed by the basis of g".into()));
        }
        let n = g.dim();
        for i in 0..n {
            for j in 0..n {
                let comm = graded_commutator(
                    action.operator(i),
                    g.parity(i),
                    action.operator(j),
                    g.parity(j),
                );
                if comm != action.at(g.bracket_basis(i, j)) {
                    return Err(CohomologyError::NotAModule(i, j));
                }
            }
        }
        Ok(GModule { g, action })
    }

    pub fn trivial(g: SuperLieAlgebra, space: SuperVectorSpace) -> GModule {
        let action = Connection::zero(g.space().clone(), space);
        GModule { g, action }
    }

    pub fn g(&self) -> &SuperLieAlgebra {
        &self.g
    }

    pub fn space(&self) -> &SuperVectorSpace {
        self.action.target()
    }

    pub fn action(&self) -> &Connection {
        &self.action
    }
}

/// The graded center with its basis as columns in coordinates of `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Center {
    pub space: SuperVectorSpace,
    /// `dim h × dim Z(h)`
    pub inclusion: Matrix,
}

impl Center {
    pub fn of(h: &SuperLieAlgebra) -> Center {
        let basis = h.center();
        let space = h
            .space()
            .subspace(&basis, "z")
            .expect("center vectors are homogeneous");
        let inclusion = Matrix::from_columns(&basis, h.dim()).expect("columns");
        Center { space, inclusion }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// Coordinates in `Z(h)` of a vector of `h`, `None` if it is not central.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.inclusion.solve(v).expect("shape")
    }
}

/// `Z(h)` as a `g`-module through any lift of `ᾱ`.
pub fn center_module(
    h: &SuperLieAlgebra,
    g: &SuperLieAlgebra,
    out: &OutAlgebra,
    alpha: &Connection,
) -> Result<(Center, GModule), CohomologyError> {
    let center = Center::of(h);
    let z = center.dim();
    for k in 0..out.derivations.inner_count() {
        let op = out.derivations.basis()[k].matrix();
        if !op.mul(&center.inclusion)?.is_zero() {
            return Err(CohomologyError::Internal("inner derivation moves the center".into()));
        }
    }
    let mut ops = Vec::with_capacity(g.dim());
    for i in 0..g.dim() {
        let image = alpha.operator(i).mul(&center.inclusion)?;
        let mut cols = Vec::with_capacity(z);
        for c in 0..z {
            cols.push(center.coordinates(&image.column(c)).ok_or_else(|| {
                CohomologyError::Internal("lifted derivation does not preserve the center".into())
            })?);
        }
        ops.push(Matrix::from_columns(&cols, z)?);
    }
    let action = Connection::from_matrices(g.space().clone(), center.space.clone(), ops)?;
    Ok((center, GModule::new(g.clone(), action)?))
}
