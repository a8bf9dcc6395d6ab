use crate::gvs::{is_zero_vector, zero_vector, GradedLinearMap, Matrix, Parity, Scalar};
use crate::superlie::{is_homomorphism, SuperLieAlgebra};

use super::{ExtensionError, ExtensionTriple};

/// The subalgebra `{(D, X) : π(D) = ᾱ(X)}` of `der(h) × g` for centerless
/// `h`, with `i(H) = (ad_H, 0)` and `p(D, X) = X`.
///
/// Its basis is `(ad_{e_k}, 0)` followed by `(α(e_j), e_j)` with `α` the lift
/// of `ᾱ` through the stored complement of `ad(h)`; the section is
/// `e_j ↦ (α(e_j), e_j)`.
pub fn pullback_extension(
    h: &SuperLieAlgebra,
    g: &SuperLieAlgebra,
    alpha_bar: &GradedLinearMap,
) -> Result<ExtensionTriple, ExtensionError> {
    if !h.center().is_empty() {
        return Err(ExtensionError::HasCenter);
    }
    let out = h.out_quotient()?;
    if alpha_bar.domain().parities() != g.space().parities()
        || alpha_bar.codomain().parities() != out.out.space().parities()
    {
        return Err(ExtensionError::Mismatch("ᾱ must map g into out(h)".into()));
    }
    let alpha_bar = GradedLinearMap::new(
        g.space().clone(),
        out.out.space().clone(),
        alpha_bar.degree(),
        alpha_bar.matrix().clone(),
    )?;
    if !is_homomorphism(&alpha_bar, g, &out.out)? {
        return Err(ExtensionError::NotHomomorphism);
    }
    let ders = &out.derivations;
    let (m, n, r) = (h.dim(), g.dim(), ders.inner_count());
    let product = out.der_algebra.direct_sum(g, "der×g");
    let width = ders.dim() + n;
    let mut basis: Vec<Vec<Scalar>> = Vec::with_capacity(m + n);
    for k in 0..m {
        let mut v = zero_vector(width);
        let ad = ders
            .coordinates(h.ad_basis(k).matrix())
            .ok_or_else(|| ExtensionError::Internal("ad is not a derivation".into()))?;
        v[..ders.dim()].clone_from_slice(&ad);
        basis.push(v);
    }
    for j in 0..n {
        let mut v = zero_vector(width);
        for (o, c) in alpha_bar.image_of_basis(j).into_iter().enumerate() {
            v[r + o] = c;
        }
        v[ders.dim() + j] = Scalar::from_integer(1.into());
        basis.push(v);
    }
    for v in &basis {
        let pd = out.projection.apply(&v[..ders.dim()])?;
        let ax = alpha_bar.apply(&v[ders.dim()..])?;
        let diff: Vec<Scalar> = pd.iter().zip(&ax).map(|(a, b)| a - b).collect();
        if !is_zero_vector(&diff) {
            return Err(ExtensionError::Internal("pullback basis leaves the fibre product".into()));
        }
    }
    let space = h.space().direct_sum(g.space());
    let name = format!("{}.{}", h.name(), g.name());
    let e = product.subalgebra(name, &basis, space.clone())?;

    let mut incl = Matrix::zeros(m + n, m);
    let mut proj = Matrix::zeros(n, m + n);
    let mut sect = Matrix::zeros(m + n, n);
    for k in 0..m {
        incl.set(k, k, Scalar::from_integer(1.into()));
    }
    for j in 0..n {
        proj.set(j, m + j, Scalar::from_integer(1.into()));
        sect.set(m + j, j, Scalar::from_integer(1.into()));
    }
    let inclusion = GradedLinearMap::new(h.space().clone(), space.clone(), Parity::Even, incl)?;
    let projection = GradedLinearMap::new(space.clone(), g.space().clone(), Parity::Even, proj)?;
    let section = GradedLinearMap::new(g.space().clone(), space, Parity::Even, sect)?;
    ExtensionTriple::new(h.clone(), e, g.clone(), inclusion, projection, Some(section))
}
