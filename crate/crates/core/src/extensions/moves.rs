use crate::cochains::{covariant_delta, nr_bracket, Cochain, CochainSpace};
use crate::gvs::{ratio, GradedLinearMap, Matrix, Parity};
use crate::superlie::is_homomorphism;

use super::{build_extension, ExtensionDatum, ExtensionError};

fn check_witness(d: &ExtensionDatum, b: &GradedLinearMap) -> Result<(), ExtensionError> {
    if b.degree() != Parity::Even {
        return Err(ExtensionError::NotDegreeZero);
    }
    if b.domain() != d.g().space() || b.codomain() != d.h().space() {
        return Err(ExtensionError::Mismatch("witness must map g into h".into()));
    }
    Ok(())
}

/// `δ_α b + ½[b, b]∧` for a degree-0 map `b: g → h`.
fn curvature_shift(d: &ExtensionDatum, b: &Cochain) -> Result<Cochain, ExtensionError> {
    let delta = covariant_delta(d.g(), d.alpha(), b)?;
    let half = nr_bracket(b, b, d.h())?.scale(&ratio(1, 2));
    Ok(delta.add(&half)?)
}

/// `α' = α + ad ∘ b`, `ρ' = ρ + δ_α b + ½[b, b]∧`: the data of the section
/// `s + i ∘ b`.
pub fn transform_datum(
    d: &ExtensionDatum,
    b: &GradedLinearMap,
) -> Result<ExtensionDatum, ExtensionError> {
    check_witness(d, b)?;
    let bc = Cochain::from_linear_map(b);
    let extra: Vec<Matrix> = (0..d.g().dim())
        .map(|j| d.h().ad_matrix(&b.image_of_basis(j)))
        .collect();
    let alpha = d.alpha().add_matrices(&extra)?;
    let rho = d.rho().add(&curvature_shift(d, &bc)?)?;
    ExtensionDatum::new(d.g().clone(), d.h().clone(), alpha, rho)
}

/// `H + X ↦ H - b(X) + X`, from the algebra of `d` to the algebra of
/// `transform_datum(d, b)`.
pub fn transform_isomorphism(
    d: &ExtensionDatum,
    b: &GradedLinearMap,
) -> Result<GradedLinearMap, ExtensionError> {
    check_witness(d, b)?;
    let (m, n) = (d.h().dim(), d.g().dim());
    let mut t = Matrix::identity(m + n);
    for k in 0..m {
        for j in 0..n {
            t.set(k, m + j, -b.matrix().get(k, j).clone());
        }
    }
    let space = d.h().space().direct_sum(d.g().space());
    Ok(GradedLinearMap::new(space.clone(), space, Parity::Even, t)?)
}

/// Whether `b` carries `d` to `d2` exactly.
pub fn check_equivalence_witness(
    d: &ExtensionDatum,
    d2: &ExtensionDatum,
    b: &GradedLinearMap,
) -> Result<bool, ExtensionError> {
    if d.g() != d2.g() || d.h() != d2.h() {
        return Err(ExtensionError::Mismatch("data connect different algebras".into()));
    }
    Ok(transform_datum(d, b)? == *d2)
}

/// Whether `ρ = δ_α b - ½[b, b]∧`. When it holds, also confirms that the
/// section moved by `-b` is flat with a homomorphic connection.
pub fn check_split_witness(d: &ExtensionDatum, b: &GradedLinearMap) -> Result<bool, ExtensionError> {
    check_witness(d, b)?;
    let bc = Cochain::from_linear_map(b);
    let delta = covariant_delta(d.g(), d.alpha(), &bc)?;
    let half = nr_bracket(&bc, &bc, d.h())?.scale(&ratio(1, 2));
    if *d.rho() != delta.sub(&half)? {
        return Ok(false);
    }
    let neg = GradedLinearMap::new(
        b.domain().clone(),
        b.codomain().clone(),
        Parity::Even,
        b.matrix().neg(),
    )?;
    let flat = transform_datum(d, &neg)?;
    if !flat.rho().is_zero() {
        return Err(ExtensionError::Internal("moved curvature does not vanish".into()));
    }
    if !connection_is_homomorphism(&flat)? {
        return Err(ExtensionError::Internal("moved connection is not a homomorphism".into()));
    }
    Ok(true)
}

/// `α_{[X,Y]} = [α_X, α_Y]` on all basis pairs.
pub fn connection_is_homomorphism(d: &ExtensionDatum) -> Result<bool, ExtensionError> {
    let n = d.g().dim();
    for i in 0..n {
        for j in 0..n {
            let comm = crate::superlie::graded_commutator(
                d.alpha().operator(i),
                d.g().parity(i),
                d.alpha().operator(j),
                d.g().parity(j),
            );
            if comm != d.alpha().at(d.g().bracket_basis(i, j)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// For abelian `h`: the canonical `b` with `ρ = δ_α b`, if any.
pub fn solve_split_abelian(d: &ExtensionDatum) -> Result<Option<GradedLinearMap>, ExtensionError> {
    if !d.h().is_abelian() {
        return Err(ExtensionError::NotAbelian);
    }
    let g = d.g().space();
    let h = d.h().space();
    let c1 = CochainSpace::new(g.clone(), h.clone(), 1, Parity::Even);
    let c2 = CochainSpace::new(g.clone(), h.clone(), 2, Parity::Even);
    let delta = c1.operator_matrix(&c2, |c| covariant_delta(d.g(), d.alpha(), c))?;
    let Some(coords) = delta.solve(&c2.coordinates(d.rho())?)? else {
        return Ok(None);
    };
    let b = c1.cochain(&coords);
    let mut m = Matrix::zeros(h.dim(), g.dim());
    for j in 0..g.dim() {
        for (k, c) in b.evaluate(&[j])?.into_iter().enumerate() {
            m.set(k, j, c);
        }
    }
    Ok(Some(GradedLinearMap::new(g.clone(), h.clone(), Parity::Even, m)?))
}

/// Structure-level check that `transform_isomorphism(d, b)` is an
/// isomorphism of the two built algebras.
pub fn isomorphism_holds(d: &ExtensionDatum, b: &GradedLinearMap) -> Result<bool, ExtensionError> {
    let e = build_extension(d)?;
    let e2 = build_extension(&transform_datum(d, b)?)?;
    let phi = transform_isomorphism(d, b)?;
    Ok(phi.matrix().inverse().is_some() && is_homomorphism(&phi, e.e(), e2.e())?)
}
