use crate::cochains::{Cochain, Connection};
use crate::gvs::{signed, zero_vector, GradedLinearMap, Matrix, Parity, Scalar};
use crate::superlie::{is_homomorphism, SuperLieAlgebra};

use super::{ExtensionDatum, ExtensionError};

/// An exact sequence `0 → h → e → g → 0` of super Lie algebras, optionally
/// with a degree-0 linear section `s` of `p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionTriple {
    h: SuperLieAlgebra,
    e: SuperLieAlgebra,
    g: SuperLieAlgebra,
    inclusion: GradedLinearMap,
    projection: GradedLinearMap,
    section: Option<GradedLinearMap>,
}

impl ExtensionTriple {
    pub fn new(
        h: SuperLieAlgebra,
        e: SuperLieAlgebra,
        g: SuperLieAlgebra,
        inclusion: GradedLinearMap,
        projection: GradedLinearMap,
        section: Option<GradedLinearMap>,
    ) -> Result<ExtensionTriple, ExtensionError> {
        if inclusion.degree() != Parity::Even || projection.degree() != Parity::Even {
            return Err(ExtensionError::NotDegreeZero);
        }
        if !is_homomorphism(&inclusion, &h, &e)? {
            return Err(ExtensionError::NotExact("i is not a homomorphism".into()));
        }
        if !is_homomorphism(&projection, &e, &g)? {
            return Err(ExtensionError::NotExact("p is not a homomorphism".into()));
        }
        if !projection.compose(&inclusion)?.is_zero() {
            return Err(ExtensionError::NotExact("p ∘ i ≠ 0".into()));
        }
        if inclusion.matrix().rank() != h.dim() {
            return Err(ExtensionError::NotExact("i is not injective".into()));
        }
        if projection.matrix().rank() != g.dim() {
            return Err(ExtensionError::NotExact("p is not surjective".into()));
        }
        if e.dim() != h.dim() + g.dim() {
            return Err(ExtensionError::NotExact("ker p ≠ im i".into()));
        }
        let triple = ExtensionTriple {
            h,
            e,
            g,
            inclusion,
            projection,
            section: None,
        };
        match section {
            Some(s) => triple.with_section(s),
            None => Ok(triple),
        }
    }

    pub fn with_section(mut self, s: GradedLinearMap) -> Result<ExtensionTriple, ExtensionError> {
        self.check_section(&s)?;
        self.section = Some(s);
        Ok(self)
    }

    pub fn h(&self) -> &SuperLieAlgebra {
        &self.h
    }

    pub fn e(&self) -> &SuperLieAlgebra {
        &self.e
    }

    pub fn g(&self) -> &SuperLieAlgebra {
        &self.g
    }

    pub fn inclusion(&self) -> &GradedLinearMap {
        &self.inclusion
    }

    pub fn projection(&self) -> &GradedLinearMap {
        &self.projection
    }

    pub fn section(&self) -> Option<&GradedLinearMap> {
        self.section.as_ref()
    }

    pub fn check_section(&self, s: &GradedLinearMap) -> Result<(), ExtensionError> {
        if s.degree() != Parity::Even {
            return Err(ExtensionError::NotDegreeZero);
        }
        if s.domain().parities() != self.g.space().parities()
            || s.codomain().parities() != self.e.space().parities()
        {
            return Err(ExtensionError::Mismatch("section must map g into e".into()));
        }
        let ps = self.projection.matrix().mul(s.matrix())?;
        if ps != Matrix::identity(self.g.dim()) {
            return Err(ExtensionError::NotASection);
        }
        Ok(())
    }

    /// The section sending `e_j` to the canonical solution of `p(v) = e_j`.
    pub fn canonical_section(&self) -> GradedLinearMap {
        let n = self.g.dim();
        let columns: Vec<Vec<Scalar>> = (0..n)
            .map(|j| {
                self.projection
                    .matrix()
                    .solve(&crate::gvs::unit_vector(n, j))
                    .expect("shape")
                    .expect("p is surjective")
            })
            .collect();
        let m = Matrix::from_columns(&columns, self.e.dim()).expect("columns");
        GradedLinearMap::new(self.g.space().clone(), self.e.space().clone(), Parity::Even, m)
            .expect("a degree-0 system has homogeneous canonical solutions")
    }

    /// `i^{-1}(v)`, or `None` when `v ∉ i(h)`.
    fn pull_back(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        self.inclusion.matrix().solve(v).expect("shape")
    }

    /// The connection and curvature of the section `s`.
    pub fn induced_data(&self, s: &GradedLinearMap) -> Result<ExtensionDatum, ExtensionError> {
        self.check_section(s)?;
        let (n, m) = (self.g.dim(), self.h.dim());
        let images: Vec<Vec<Scalar>> = (0..n).map(|j| s.image_of_basis(j)).collect();
        let incl: Vec<Vec<Scalar>> = (0..m).map(|k| self.inclusion.image_of_basis(k)).collect();
        let mut ops = Vec::with_capacity(n);
        for sx in &images {
            let mut cols = Vec::with_capacity(m);
            for ih in &incl {
                let v = self.e.bracket(sx, ih);
                cols.push(self.pull_back(&v).ok_or(ExtensionError::NotAnIdeal)?);
            }
            ops.push(Matrix::from_columns(&cols, m)?);
        }
        let alpha = Connection::from_matrices(self.g.space().clone(), self.h.space().clone(), ops)?;
        let mut rho = Cochain::zero(self.g.space().clone(), self.h.space().clone(), 2, Parity::Even);
        for t in crate::cochains::canonical_tuples(self.g.space().parities(), 2) {
            let (i, j) = (t[0], t[1]);
            let top = self.e.bracket(&images[i], &images[j]);
            let low = s.apply(self.g.bracket_basis(i, j))?;
            let diff: Vec<Scalar> = top.iter().zip(&low).map(|(a, b)| a - b).collect();
            let value = self
                .pull_back(&diff)
                .ok_or(ExtensionError::CurvatureOutsideKernel(i, j))?;
            rho.set(&t, value)?;
        }
        ExtensionDatum::new(self.g.clone(), self.h.clone(), alpha, rho)
    }

    /// Induced data of the stored section, or of the canonical one.
    pub fn data(&self) -> Result<ExtensionDatum, ExtensionError> {
        match &self.section {
            Some(s) => self.induced_data(s),
            None => self.induced_data(&self.canonical_section()),
        }
    }

    /// `e` rewritten on `h ⊕ g` through the stored (or canonical) section.
    pub fn normalized(&self) -> Result<SuperLieAlgebra, ExtensionError> {
        Ok(build_extension(&self.data()?)?.e)
    }
}

/// The algebra `h ⊕ g` with
/// `[H1+X1, H2+X2] = [H1,H2] + α_{X1}H2 - (-1)^{x2 h1} α_{X2}H1 + ρ(X1,X2) + [X1,X2]`,
/// with `i`, `p` and `s` the canonical inclusion, projection and section.
pub fn build_extension(d: &ExtensionDatum) -> Result<ExtensionTriple, ExtensionError> {
    let report = d.check();
    if !report.passed() {
        return Err(ExtensionError::InvalidDatum(Box::new(report)));
    }
    Ok(assemble(d))
}

/// The bracket on `h ⊕ g` without checking the datum first.
pub fn extension_bracket(d: &ExtensionDatum) -> SuperLieAlgebra {
    let (h, g) = (d.h(), d.g());
    let (m, n) = (h.dim(), g.dim());
    let space = h.space().direct_sum(g.space());
    let mut structure = vec![vec![zero_vector(m + n); m + n]; m + n];
    for a in 0..m {
        for b in 0..m {
            structure[a][b][..m].clone_from_slice(h.bracket_basis(a, b));
        }
        for j in 0..n {
            // [H_a, X_j] = -(-1)^{x_j h_a} α_{X_j} H_a
            let odd = (g.parity(j) * h.parity(a)).is_odd();
            let col = d.alpha().operator(j).column(a);
            for (k, c) in col.into_iter().enumerate() {
                structure[a][m + j][k] = signed(-c, odd);
            }
        }
    }
    for i in 0..n {
        for b in 0..m {
            structure[m + i][b][..m].clone_from_slice(&d.alpha().operator(i).column(b));
        }
        for j in 0..n {
            let v = &mut structure[m + i][m + j];
            v[..m].clone_from_slice(&d.rho_at(i, j));
            v[m..].clone_from_slice(g.bracket_basis(i, j));
        }
    }
    let name = format!("{}.{}", h.name(), g.name());
    SuperLieAlgebra::from_structure(name, space, structure).expect("square structure")
}

fn assemble(d: &ExtensionDatum) -> ExtensionTriple {
    let (h, g) = (d.h(), d.g());
    let (m, n) = (h.dim(), g.dim());
    let e = extension_bracket(d);
    let mut incl = Matrix::zeros(m + n, m);
    for k in 0..m {
        incl.set(k, k, Scalar::from_integer(1.into()));
    }
    let mut proj = Matrix::zeros(n, m + n);
    let mut sect = Matrix::zeros(m + n, n);
    for j in 0..n {
        proj.set(j, m + j, Scalar::from_integer(1.into()));
        sect.set(m + j, j, Scalar::from_integer(1.into()));
    }
    let inclusion = GradedLinearMap::new(h.space().clone(), e.space().clone(), Parity::Even, incl)
        .expect("parity-preserving");
    let projection = GradedLinearMap::new(e.space().clone(), g.space().clone(), Parity::Even, proj)
        .expect("parity-preserving");
    let section = GradedLinearMap::new(g.space().clone(), e.space().clone(), Parity::Even, sect)
        .expect("parity-preserving");
    ExtensionTriple {
        h: h.clone(),
        e,
        g: g.clone(),
        inclusion,
        projection,
        section: Some(section),
    }
}

impl ExtensionTriple {
    /// `0 → h → e → e/h → 0` for an ideal spanned by `ideal` (independent,
    /// homogeneous). `h` carries the restricted bracket in the given basis,
    /// `e/h` the induced bracket on the quotient basis of [`quotient_space`].
    pub fn from_ideal(
        e: &SuperLieAlgebra,
        ideal: &[Vec<Scalar>],
    ) -> Result<ExtensionTriple, ExtensionError> {
        let h_space = e.space().subspace(ideal, "h")?;
        let h = e.subalgebra(format!("{}.ideal", e.name()), ideal, h_space.clone())?;
        let basis = Matrix::from_columns(ideal, e.dim())?;
        for v in ideal {
            for i in 0..e.dim() {
                let w = e.bracket(&crate::gvs::unit_vector(e.dim(), i), v);
                if basis.solve(&w)?.is_none() {
                    return Err(ExtensionError::NotAnIdeal);
                }
            }
        }
        let q = crate::gvs::quotient_space(e.space(), ideal)?;
        let k = q.representatives.len();
        let mut structure = vec![vec![Vec::new(); k]; k];
        for (a, &ra) in q.representatives.iter().enumerate() {
            for (b, &rb) in q.representatives.iter().enumerate() {
                structure[a][b] = q.projection.apply(e.bracket_basis(ra, rb))?;
            }
        }
        let g = SuperLieAlgebra::from_structure(format!("{}.quotient", e.name()), q.space.clone(), structure)?;
        let inclusion = GradedLinearMap::new(h_space, e.space().clone(), Parity::Even, basis)?;
        let projection = GradedLinearMap::new(
            e.space().clone(),
            q.space,
            Parity::Even,
            q.projection.into_matrix(),
        )?;
        ExtensionTriple::new(h, e.clone(), g, inclusion, projection, None)
    }
}
