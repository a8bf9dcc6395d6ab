use crate::cochains::{Cochain, Connection};
use crate::gvs::{axpy, is_zero_vector, signed, zero_vector, Matrix, Parity, Scalar};
use crate::superlie::{graded_commutator, SuperLieAlgebra};

use super::ExtensionError;

/// A super connection `α: g → der(h)` and a curvature `ρ ∈ L^{2,0}(g; h)`.
///
/// Construction checks shapes and degrees only; [`ExtensionDatum::check`]
/// evaluates the derivation property and the two extension identities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionDatum {
    g: SuperLieAlgebra,
    h: SuperLieAlgebra,
    alpha: Connection,
    rho: Cochain,
}

impl ExtensionDatum {
    pub fn new(
        g: SuperLieAlgebra,
        h: SuperLieAlgebra,
        alpha: Connection,
        rho: Cochain,
    ) -> Result<ExtensionDatum, ExtensionError> {
        if alpha.source() != g.space() || alpha.target() != h.space() {
            return Err(ExtensionError::Mismatch("α must map g into operators on h".into()));
        }
        if rho.source() != g.space() || rho.target() != h.space() {
            return Err(ExtensionError::Mismatch("ρ must be a cochain from g to h".into()));
        }
        if rho.arity() != 2 || rho.weight() != Parity::Even {
            return Err(ExtensionError::Mismatch("ρ must have arity 2 and weight 0".into()));
        }
        Ok(ExtensionDatum { g, h, alpha, rho })
    }

    /// `α = 0`, `ρ = 0`: the direct product.
    pub fn trivial(g: SuperLieAlgebra, h: SuperLieAlgebra) -> ExtensionDatum {
        let alpha = Connection::zero(g.space().clone(), h.space().clone());
        let rho = Cochain::zero(g.space().clone(), h.space().clone(), 2, Parity::Even);
        ExtensionDatum { g, h, alpha, rho }
    }

    pub fn g(&self) -> &SuperLieAlgebra {
        &self.g
    }

    pub fn h(&self) -> &SuperLieAlgebra {
        &self.h
    }

    pub fn alpha(&self) -> &Connection {
        &self.alpha
    }

    pub fn rho(&self) -> &Cochain {
        &self.rho
    }

    pub fn with_rho(&self, rho: Cochain) -> Result<ExtensionDatum, ExtensionError> {
        ExtensionDatum::new(self.g.clone(), self.h.clone(), self.alpha.clone(), rho)
    }

    pub fn with_alpha(&self, alpha: Connection) -> Result<ExtensionDatum, ExtensionError> {
        ExtensionDatum::new(self.g.clone(), self.h.clone(), alpha, self.rho.clone())
    }

    /// `ρ(e_i, e_j)`.
    pub fn rho_at(&self, i: usize, j: usize) -> Vec<Scalar> {
        self.rho.evaluate(&[i, j]).expect("basis indices of g")
    }

    /// `[α_X, α_Y] - α_{[X,Y]} - ad_{ρ(X,Y)}` on `(e_i, e_j)`.
    pub fn curvature_residual(&self, i: usize, j: usize) -> Matrix {
        let (xi, xj) = (self.g.parity(i), self.g.parity(j));
        let comm = graded_commutator(self.alpha.operator(i), xi, self.alpha.operator(j), xj);
        let along = self.alpha.at(self.g.bracket_basis(i, j));
        let ad = self.h.ad_matrix(&self.rho_at(i, j));
        comm.sub(&along).and_then(|m| m.sub(&ad)).expect("square operators")
    }

    /// `Σ_cyclic (-1)^{xz} (α_X ρ(Y,Z) - ρ([X,Y],Z))` on `(e_i, e_j, e_k)`.
    pub fn cyclic_residual(&self, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        let mut out = zero_vector(self.h.dim());
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            let s = signed(Scalar::from_integer(1.into()), (self.g.parity(a) * self.g.parity(c)).is_odd());
            let act = self.alpha.operator(a).apply(&self.rho_at(b, c)).expect("operator on h");
            axpy(&mut out, &s, &act);
            for (m, cm) in self.g.bracket_basis(a, b).iter().enumerate() {
                if num_traits::Zero::is_zero(cm) {
                    continue;
                }
                axpy(&mut out, &(-(&s * cm)), &self.rho_at(m, c));
            }
        }
        out
    }

    pub fn check(&self) -> DatumReport {
        let n = self.g.dim();
        let mut report = DatumReport::default();
        for i in 0..n {
            if let Some((a, b, residual)) =
                self.h.derivation_residual(self.alpha.operator(i), self.g.parity(i))
            {
                report.non_derivations.push(DerivationFailure {
                    generator: i,
                    pair: (a, b),
                    residual,
                });
            }
        }
        for i in 0..n {
            for j in 0..n {
                let r = self.curvature_residual(i, j);
                if !r.is_zero() {
                    report.curvature.push(OperatorResidual { pair: (i, j), residual: r });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let r = self.cyclic_residual(i, j, k);
                    if !is_zero_vector(&r) {
                        report.cyclic.push(CyclicResidual {
                            triple: (i, j, k),
                            residual: r,
                        });
                    }
                }
            }
        }
        report
    }
}

/// `α_{e_generator}` violates the Leibniz rule on the basis pair `pair`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationFailure {
    pub generator: usize,
    pub pair: (usize, usize),
    pub residual: Vec<Scalar>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorResidual {
    pub pair: (usize, usize),
    pub residual: Matrix,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicResidual {
    pub triple: (usize, usize, usize),
    pub residual: Vec<Scalar>,
}

/// Every failing location of the datum conditions; empty lists mean pass.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DatumReport {
    pub non_derivations: Vec<DerivationFailure>,
    /// `[α_X, α_Y] - α_{[X,Y]} = ad_{ρ(X,Y)}`
    pub curvature: Vec<OperatorResidual>,
    /// the cyclic identity `δ_α ρ = 0` up to sign
    pub cyclic: Vec<CyclicResidual>,
}

impl DatumReport {
    pub fn passed(&self) -> bool {
        self.non_derivations.is_empty() && self.curvature.is_empty() && self.cyclic.is_empty()
    }
}
