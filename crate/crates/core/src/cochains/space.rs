use std::collections::HashMap;

use num_traits::Zero;

use crate::gvs::{one, zero_vector, Matrix, Parity, Scalar, SuperVectorSpace};

use super::cochain::{canonical_tuples, Cochain};
use super::CochainError;

/// Coordinates on `L^{p,y}(g; h)`: one coordinate per canonical tuple `t`
/// and target basis index `k` with `parity(k) = y + parity(t)`.
#[derive(Clone, Debug)]
pub struct CochainSpace {
    source: SuperVectorSpace,
    target: SuperVectorSpace,
    arity: usize,
    weight: Parity,
    basis: Vec<(Vec<usize>, usize)>,
    index: HashMap<(Vec<usize>, usize), usize>,
}

impl CochainSpace {
    pub fn new(
        source: SuperVectorSpace,
        target: SuperVectorSpace,
        arity: usize,
        weight: Parity,
    ) -> CochainSpace {
        let mut basis = Vec::new();
        for t in canonical_tuples(source.parities(), arity) {
            let p: Parity = weight + t.iter().map(|&i| source.parity(i)).sum();
            for k in 0..target.dim() {
                if target.parity(k) == p {
                    basis.push((t.clone(), k));
                }
            }
        }
        let index = basis.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect();
        CochainSpace {
            source,
            target,
            arity,
            weight,
            basis,
            index,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn weight(&self) -> Parity {
        self.weight
    }

    pub fn source(&self) -> &SuperVectorSpace {
        &self.source
    }

    pub fn target(&self) -> &SuperVectorSpace {
        &self.target
    }

    /// `(tuple, target index)` of coordinate `i`.
    pub fn basis_label(&self, i: usize) -> (&[usize], usize) {
        let (t, k) = &self.basis[i];
        (t, *k)
    }

    pub fn coordinates(&self, c: &Cochain) -> Result<Vec<Scalar>, CochainError> {
        if c.arity() != self.arity
            || c.weight() != self.weight
            || c.source().parities() != self.source.parities()
            || c.target().parities() != self.target.parities()
        {
            return Err(CochainError::Incompatible);
        }
        let mut out = zero_vector(self.dim());
        for (t, v) in c.entries() {
            for (k, x) in v.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let i = self
                    .index
                    .get(&(t.clone(), k))
                    .ok_or_else(|| CochainError::NonHomogeneousValue(t.clone()))?;
                out[*i] = x.clone();
            }
        }
        Ok(out)
    }

    pub fn cochain(&self, coords: &[Scalar]) -> Cochain {
        let mut c = Cochain::zero(
            self.source.clone(),
            self.target.clone(),
            self.arity,
            self.weight,
        );
        let mut values: HashMap<&[usize], Vec<Scalar>> = HashMap::new();
        for (i, x) in coords.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let (t, k) = &self.basis[i];
            values
                .entry(t.as_slice())
                .or_insert_with(|| zero_vector(self.target.dim()))[*k] = x.clone();
        }
        let mut sorted: Vec<_> = values.into_iter().collect();
        sorted.sort();
        for (t, v) in sorted {
            c.insert_unchecked(t.to_vec(), v);
        }
        c
    }

    pub fn basis_cochain(&self, i: usize) -> Cochain {
        let mut coords = zero_vector(self.dim());
        coords[i] = one();
        self.cochain(&coords)
    }

    /// Matrix of a linear cochain operator `self → codomain`.
    pub fn operator_matrix(
        &self,
        codomain: &CochainSpace,
        op: impl Fn(&Cochain) -> Result<Cochain, CochainError>,
    ) -> Result<Matrix, CochainError> {
        let mut columns = Vec::with_capacity(self.dim());
        for i in 0..self.dim() {
            columns.push(codomain.coordinates(&op(&self.basis_cochain(i))?)?);
        }
        Ok(Matrix::from_columns(&columns, codomain.dim()).expect("coordinate columns"))
    }
}
