use std::collections::BTreeMap;

use num_traits::Zero;

use crate::gvs::{
    axpy, is_zero_vector, signed, zero_vector, GradedLinearMap, Matrix, Parity, Scalar,
    SuperVectorSpace,
};

use super::SuperLieError;

/// A finite-dimensional super Lie algebra given by structure constants.
///
/// `bracket_basis(i, j)` is the coordinate vector of `[e_i, e_j]`.
/// Construction only checks shapes; call [`SuperLieAlgebra::validate`] for the
/// algebraic axioms.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SuperLieAlgebra {
    name: String,
    space: SuperVectorSpace,
    structure: Vec<Vec<Scalar>>, // index i * n + j
}

impl SuperLieAlgebra {
    pub fn from_structure(
        name: impl Into<String>,
        space: SuperVectorSpace,
        structure: Vec<Vec<Vec<Scalar>>>,
    ) -> Result<Self, SuperLieError> {
        let n = space.dim();
        if structure.len() != n || structure.iter().any(|row| row.len() != n) {
            return Err(SuperLieError::Shape(format!("expected {n}x{n} brackets")));
        }
        let flat: Vec<Vec<Scalar>> = structure.into_iter().flatten().collect();
        if flat.iter().any(|v| v.len() != n) {
            return Err(SuperLieError::Shape(format!(
                "every bracket must have {n} coordinates"
            )));
        }
        Ok(SuperLieAlgebra {
            name: name.into(),
            space,
            structure: flat,
        })
    }

    pub fn abelian(name: impl Into<String>, space: SuperVectorSpace) -> Self {
        let n = space.dim();
        SuperLieAlgebra {
            name: name.into(),
            space,
            structure: vec![zero_vector(n); n * n],
        }
    }

    pub fn builder(name: impl Into<String>, space: SuperVectorSpace) -> AlgebraBuilder {
        AlgebraBuilder {
            name: name.into(),
            space,
            entries: BTreeMap::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn space(&self) -> &SuperVectorSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.space.parity(i)
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Scalar] {
        &self.structure[i * self.dim() + j]
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = zero_vector(n);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                axpy(&mut out, &(a * b), self.bracket_basis(i, j));
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.structure.iter().all(|v| is_zero_vector(v))
    }

    /// Matrix of `ad_X` for an arbitrary (not necessarily homogeneous) `X`.
    pub fn ad_matrix(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..n {
                for (k, c) in self.bracket_basis(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        *m.entry_mut(k, j) += a * c;
                    }
                }
            }
        }
        m
    }

    /// `ad_X` as a graded map of degree `parity(X)`.
    pub fn ad(&self, x: &[Scalar]) -> Result<GradedLinearMap, SuperLieError> {
        let parity = self
            .space
            .parity_of(x)
            .ok_or(SuperLieError::NonHomogeneous)?;
        Ok(GradedLinearMap::new(
            self.space.clone(),
            self.space.clone(),
            parity,
            self.ad_matrix(x),
        )?)
    }

    pub fn ad_basis(&self, i: usize) -> GradedLinearMap {
        let mut x = zero_vector(self.dim());
        x[i] = Scalar::from_integer(1.into());
        self.ad(&x).expect("basis vectors are homogeneous")
    }

    /// Basis of the graded center `{Z : [e_i, Z] = 0 for all i}`.
    pub fn center(&self) -> Vec<Vec<Scalar>> {
        let n = self.dim();
        let mut stacked = Matrix::zeros(0, n);
        for i in 0..n {
            stacked = stacked
                .vstack(self.ad_basis(i).matrix())
                .expect("square ad matrices");
        }
        stacked.kernel_basis()
    }

    /// Graded Leibniz rule `D[X,Y] = [DX,Y] + (-1)^{d x}[X,DY]` on all basis pairs.
    pub fn is_derivation(&self, d: &GradedLinearMap) -> bool {
        self.derivation_residual(d.matrix(), d.degree()).is_none()
    }

    /// First basis pair on which the Leibniz rule fails for an operator of
    /// parity `degree`, with the residual.
    pub fn derivation_residual(
        &self,
        d: &Matrix,
        degree: Parity,
    ) -> Option<(usize, usize, Vec<Scalar>)> {
        let n = self.dim();
        if d.rows() != n || d.cols() != n {
            return Some((0, 0, Vec::new()));
        }
        let images: Vec<Vec<Scalar>> = (0..n).map(|j| d.column(j)).collect();
        for i in 0..n {
            for j in 0..n {
                let lhs = d.apply(self.bracket_basis(i, j)).expect("square");
                let mut rhs = self.bracket(&images[i], &unit(n, j));
                let second = self.bracket(&unit(n, i), &images[j]);
                let s = signed(Scalar::from_integer(1.into()), (degree * self.parity(i)).is_odd());
                axpy(&mut rhs, &s, &second);
                let res: Vec<Scalar> = lhs.iter().zip(&rhs).map(|(a, b)| a - b).collect();
                if !is_zero_vector(&res) {
                    return Some((i, j, res));
                }
            }
        }
        None
    }

    /// `self ⊕ other` with the product bracket.
    pub fn direct_sum(&self, other: &SuperLieAlgebra, name: impl Into<String>) -> SuperLieAlgebra {
        let n = self.dim();
        let m = other.dim();
        let space = self.space.direct_sum(&other.space);
        let mut structure = vec![zero_vector(n + m); (n + m) * (n + m)];
        for i in 0..n {
            for j in 0..n {
                structure[i * (n + m) + j][..n].clone_from_slice(self.bracket_basis(i, j));
            }
        }
        for i in 0..m {
            for j in 0..m {
                structure[(n + i) * (n + m) + n + j][n..].clone_from_slice(other.bracket_basis(i, j));
            }
        }
        SuperLieAlgebra {
            name: name.into(),
            space,
            structure,
        }
    }

    /// Structure constants in the basis given by the columns of `basis`,
    /// which must be invertible and parity-preserving column by column.
    pub fn change_basis(
        &self,
        basis: &Matrix,
        space: SuperVectorSpace,
    ) -> Result<SuperLieAlgebra, SuperLieError> {
        let n = self.dim();
        if basis.rows() != n || basis.cols() != n || space.dim() != n {
            return Err(SuperLieError::Shape("change of basis must be square".into()));
        }
        GradedLinearMap::new(space.clone(), self.space.clone(), Parity::Even, basis.clone())?;
        let inv = basis
            .inverse()
            .ok_or_else(|| SuperLieError::Shape("singular change of basis".into()))?;
        let cols: Vec<Vec<Scalar>> = (0..n).map(|j| basis.column(j)).collect();
        let mut structure = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let b = self.bracket(&cols[i], &cols[j]);
                structure.push(inv.apply(&b)?);
            }
        }
        Ok(SuperLieAlgebra {
            name: self.name.clone(),
            space,
            structure,
        })
    }
}

impl SuperLieAlgebra {
    /// The subalgebra spanned by `basis` (independent, homogeneous with the
    /// parities of `space`), in that basis.
    pub fn subalgebra(
        &self,
        name: impl Into<String>,
        basis: &[Vec<Scalar>],
        space: SuperVectorSpace,
    ) -> Result<SuperLieAlgebra, SuperLieError> {
        let n = self.dim();
        if basis.len() != space.dim() || basis.iter().any(|v| v.len() != n) {
            return Err(SuperLieError::Shape("subalgebra basis does not match its space".into()));
        }
        for (k, v) in basis.iter().enumerate() {
            if !self.space.lies_in(v, space.parity(k)) {
                return Err(SuperLieError::NonHomogeneous);
            }
        }
        let m = Matrix::from_columns(basis, n)?;
        if m.rank() != basis.len() {
            return Err(SuperLieError::Space(crate::gvs::GvsError::DependentVectors));
        }
        let mut structure = Vec::with_capacity(basis.len() * basis.len());
        for a in basis {
            for b in basis {
                let c = m
                    .solve(&self.bracket(a, b))?
                    .ok_or_else(|| SuperLieError::Shape("span is not closed under the bracket".into()))?;
                structure.push(c);
            }
        }
        Ok(SuperLieAlgebra {
            name: name.into(),
            space,
            structure,
        })
    }
}

fn unit(n: usize, i: usize) -> Vec<Scalar> {
    crate::gvs::unit_vector(n, i)
}

/// Incremental construction by named brackets; `[e_j, e_i]` is filled in by
/// graded antisymmetry unless given explicitly.
#[derive(Clone, Debug)]
pub struct AlgebraBuilder {
    name: String,
    space: SuperVectorSpace,
    entries: BTreeMap<(usize, usize), Vec<Scalar>>,
}

impl AlgebraBuilder {
    /// Sets `[left, right]` to the combination `value` of named basis vectors.
    pub fn bracket<S: AsRef<str>>(
        mut self,
        left: &str,
        right: &str,
        value: impl IntoIterator<Item = (S, Scalar)>,
    ) -> Result<Self, SuperLieError> {
        self.set(left, right, value)?;
        Ok(self)
    }

    pub fn set<S: AsRef<str>>(
        &mut self,
        left: &str,
        right: &str,
        value: impl IntoIterator<Item = (S, Scalar)>,
    ) -> Result<(), SuperLieError> {
        let i = self.index(left)?;
        let j = self.index(right)?;
        let mut v = zero_vector(self.space.dim());
        for (name, c) in value {
            let k = self.index(name.as_ref())?;
            v[k] += c;
        }
        if let Some(old) = self.entries.get(&(i, j)) {
            if *old != v {
                return Err(SuperLieError::ConflictingBracket {
                    left: left.to_string(),
                    right: right.to_string(),
                });
            }
        }
        self.entries.insert((i, j), v);
        Ok(())
    }

    fn index(&self, name: &str) -> Result<usize, SuperLieError> {
        self.space
            .index_of(name)
            .ok_or_else(|| SuperLieError::UnknownBasis(name.to_string()))
    }

    pub fn build(self) -> Result<SuperLieAlgebra, SuperLieError> {
        let n = self.space.dim();
        let mut structure = vec![zero_vector(n); n * n];
        for (&(i, j), v) in &self.entries {
            structure[i * n + j] = v.clone();
        }
        for (&(i, j), v) in &self.entries {
            let odd = (self.space.parity(i) * self.space.parity(j)).is_odd();
            // [e_j, e_i] = -(-1)^{x_i x_j} [e_i, e_j]
            let mirrored: Vec<Scalar> = v.iter().map(|c| signed(-c.clone(), odd)).collect();
            match self.entries.get(&(j, i)) {
                Some(explicit) if *explicit != mirrored => {
                    return Err(SuperLieError::ConflictingBracket {
                        left: self.space.name(j).to_string(),
                        right: self.space.name(i).to_string(),
                    });
                }
                Some(_) => {}
                None => structure[j * n + i] = mirrored,
            }
        }
        Ok(SuperLieAlgebra {
            name: self.name,
            space: self.space,
            structure,
        })
    }
}

/// Whether `f` is a homomorphism: `f[e_i,e_j] = [f e_i, f e_j]` on all basis pairs.
pub fn is_homomorphism(
    f: &GradedLinearMap,
    from: &SuperLieAlgebra,
    to: &SuperLieAlgebra,
) -> Result<bool, SuperLieError> {
    if f.degree() != Parity::Even {
        return Err(SuperLieError::NotDegreeZero);
    }
    if f.domain().parities() != from.space().parities()
        || f.codomain().parities() != to.space().parities()
    {
        return Err(SuperLieError::Shape(
            "map does not connect the given algebras".into(),
        ));
    }
    let n = from.dim();
    let images: Vec<Vec<Scalar>> = (0..n).map(|j| f.image_of_basis(j)).collect();
    for i in 0..n {
        for j in 0..n {
            let lhs = f.apply(from.bracket_basis(i, j))?;
            let rhs = to.bracket(&images[i], &images[j]);
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
