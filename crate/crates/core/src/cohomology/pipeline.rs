use crate::cochains::{canonical_tuples, covariant_delta, Cochain, Connection};
use crate::extensions::{build_extension, ExtensionDatum};
use crate::gvs::{GradedLinearMap, Matrix, Parity, Scalar};
use crate::superlie::{graded_commutator, is_homomorphism, OutAlgebra, SuperLieAlgebra};

use super::{center_module, cohomology_space, Center, CohomologyError, CohomologyReport, GModule};

fn check_alpha_bar(
    g: &SuperLieAlgebra,
    out: &OutAlgebra,
    alpha_bar: &GradedLinearMap,
) -> Result<GradedLinearMap, CohomologyError> {
    if alpha_bar.degree() != Parity::Even {
        return Err(CohomologyError::Mismatch("ᾱ must have degree 0".into()));
    }
    if alpha_bar.domain().parities() != g.space().parities()
        || alpha_bar.codomain().parities() != out.out.space().parities()
    {
        return Err(CohomologyError::Mismatch("ᾱ must map g into out(h)".into()));
    }
    Ok(GradedLinearMap::new(
        g.space().clone(),
        out.out.space().clone(),
        Parity::Even,
        alpha_bar.matrix().clone(),
    )?)
}

fn lift_with(
    h: &SuperLieAlgebra,
    g: &SuperLieAlgebra,
    out: &OutAlgebra,
    alpha_bar: &GradedLinearMap,
) -> Result<Connection, CohomologyError> {
    let n = h.dim();
    let mut ops = Vec::with_capacity(g.dim());
    for j in 0..g.dim() {
        let mut m = Matrix::zeros(n, n);
        for (k, c) in alpha_bar.image_of_basis(j).iter().enumerate() {
            if num_traits::Zero::is_zero(c) {
                continue;
            }
            m = m.add(&out.representative(k).matrix().scale(c))?;
        }
        ops.push(m);
    }
    Ok(Connection::from_matrices(g.space().clone(), h.space().clone(), ops)?)
}

/// `α(e_j) = Σ_k ᾱ_{kj} D_k` over the complement members `D_k` of the
/// inner-first derivation basis, so that `π ∘ α = ᾱ`.
pub fn lift_alpha_bar(
    h: &SuperLieAlgebra,
    g: &SuperLieAlgebra,
    alpha_bar: &GradedLinearMap,
) -> Result<Connection, CohomologyError> {
    let out = h.out_quotient()?;
    let alpha_bar = check_alpha_bar(g, &out, alpha_bar)?;
    lift_with(h, g, &out, &alpha_bar)
}

/// `ρ(X, Y)` as the canonical solution `H` of
/// `ad_H = [α_X, α_Y] - α_{[X,Y]}`.
pub fn rho_from_lift(
    h: &SuperLieAlgebra,
    g: &SuperLieAlgebra,
    alpha: &Connection,
) -> Result<Cochain, CohomologyError> {
    let m = h.dim();
    let ads: Vec<Vec<Scalar>> = (0..m).map(|k| h.ad_basis(k).matrix().entries().to_vec()).collect();
    let system = Matrix::from_columns(&ads, m * m)?;
    let mut rho = Cochain::zero(g.space().clone(), h.space().clone(), 2, Parity::Even);
    for t in canonical_tuples(g.space().parities(), 2) {
        let (i, j) = (t[0], t[1]);
        let defect = graded_commutator(alpha.operator(i), g.parity(i), alpha.operator(j), g.parity(j))
            .sub(&alpha.at(g.bracket_basis(i, j)))?;
        let value = system
            .solve(defect.entries())?
            .ok_or(CohomologyError::DefectNotInner(i, j))?;
        rho.set(&t, value)?;
    }
    Ok(rho)
}

#[derive(Clone, Debug)]
pub struct ObstructionReport {
    pub alpha: Connection,
    pub rho: Cochain,
    pub center: Center,
    pub module: GModule,
    /// `δ_α ρ` in coordinates of `Z(h)`
    pub lambda: Cochain,
    pub h3: CohomologyReport,
    /// coordinates of `[λ]` on the weight-0 representatives of `H³`
    pub class: Vec<Scalar>,
    /// `μ` with `δ_ᾱ μ = λ`, valued in `Z(h)`, when the class vanishes
    pub mu: Option<Cochain>,
}

impl ObstructionReport {
    pub fn vanishes(&self) -> bool {
        self.class.iter().all(num_traits::Zero::is_zero)
    }

    /// A `Z(h)`-valued cochain viewed in `h`.
    pub fn into_h(&self, c: &Cochain, h: &SuperLieAlgebra) -> Result<Cochain, CohomologyError> {
        Ok(c.map_values(&self.center.inclusion, h.space().clone())?)
    }

    /// `(α, ρ - μ)` when the class vanishes.
    pub fn base_datum(
        &self,
        h: &SuperLieAlgebra,
        g: &SuperLieAlgebra,
    ) -> Result<Option<ExtensionDatum>, CohomologyError> {
        let Some(mu) = &self.mu else { return Ok(None) };
        let rho = self.rho.sub(&self.into_h(mu, h)?)?;
        Ok(Some(ExtensionDatum::new(g.clone(), h.clone(), self.alpha.clone(), rho)?))
    }
}

/// `λ = δ_α ρ` for any connection and curvature, as a cochain in `h`.
pub fn lambda(g: &SuperLieAlgebra, alpha: &Connection, rho: &Cochain) -> Result<Cochain, CohomologyError> {
    Ok(covariant_delta(g, alpha, rho)?)
}

fn into_center(center: &Center, c: &Cochain) -> Result<Cochain, CohomologyError> {
    let mut out = Cochain::zero(c.source().clone(), center.space.clone(), c.arity(), c.weight());
    for (t, v) in c.entries() {
        let z = center
            .coordinates(v)
            .ok_or_else(|| CohomologyError::Internal(format!("λ{t:?} is not central")))?;
        out.set(t, z)?;
    }
    Ok(out)
}

pub fn obstruction_class(
    h: &SuperLieAlgebra,
    g: &SuperLieAlgebra,
    alpha_bar: &GradedLinearMap,
    cap: usize,
) -> Result<ObstructionReport, CohomologyError> {
    let out = h.out_quotient()?;
    let alpha_bar = check_alpha_bar(g, &out, alpha_bar)?;
    if !is_homomorphism(&alpha_bar, g, &out.out)? {
        return Err(CohomologyError::NotHomomorphism);
    }
    let alpha = lift_with(h, g, &out, &alpha_bar)?;
    let rho = rho_from_lift(h, g, &alpha)?;
    let (center, module) = center_module(h, g, &out, &alpha)?;
    let lambda = into_center(&center, &lambda(g, &alpha, &rho)?)?;
    if !covariant_delta(g, module.action(), &lambda)?.is_zero() {
        return Err(CohomologyError::Internal("δ λ ≠ 0".into()));
    }
    let h3 = cohomology_space(&module, 3, cap)?;
    let w = h3.weight(Parity::Even);
    let class = w
        .class_of(&lambda)?
        .ok_or_else(|| CohomologyError::Internal("λ is not a cocycle".into()))?;
    let mut report = ObstructionReport {
        alpha,
        rho,
        center,
        module,
        lambda,
        class,
        mu: None,
        h3,
    };
    if report.vanishes() {
        let mu = report
            .h3
            .weight(Parity::Even)
            .preimage(&report.lambda)?
            .ok_or_else(|| CohomologyError::Internal("vanishing class without preimage".into()))?;
        report.mu = Some(mu);
    }
    Ok(report)
}

#[derive(Clone, Debug)]
pub struct Classification {
    pub obstruction: ObstructionReport,
    /// `H²(g; Z(h))`; absent when obstructed
    pub h2: Option<CohomologyReport>,
    /// the chosen base point `(α, ρ - μ)`
    pub base: Option<ExtensionDatum>,
    /// `(α, ρ - μ + ν)` for the weight-0 representatives `ν` of `H²`
    pub generators: Vec<ExtensionDatum>,
    pub centerless: bool,
    pub abelian: bool,
}

impl Classification {
    pub fn obstructed(&self) -> bool {
        self.base.is_none()
    }
}

pub fn classify_extensions(
    h: &SuperLieAlgebra,
    g: &SuperLieAlgebra,
    alpha_bar: &GradedLinearMap,
    cap: usize,
) -> Result<Classification, CohomologyError> {
    let obstruction = obstruction_class(h, g, alpha_bar, cap)?;
    let centerless = obstruction.center.dim() == 0;
    let abelian = h.is_abelian();
    let Some(base) = obstruction.base_datum(h, g)? else {
        return Ok(Classification {
            obstruction,
            h2: None,
            base: None,
            generators: Vec::new(),
            centerless,
            abelian,
        });
    };
    let h2 = cohomology_space(&obstruction.module, 2, cap)?;
    let mut generators = Vec::new();
    for nu in h2.weight(Parity::Even).representative_cochains() {
        let rho = base.rho().add(&obstruction.into_h(&nu, h)?)?;
        generators.push(base.with_rho(rho)?);
    }
    for d in std::iter::once(&base).chain(&generators) {
        build_extension(d)?;
    }
    Ok(Classification {
        obstruction,
        h2: Some(h2),
        base: Some(base),
        generators,
        centerless,
        abelian,
    })
}
