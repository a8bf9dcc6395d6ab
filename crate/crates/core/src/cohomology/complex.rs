use crate::cochains::{covariant_delta, Cochain, CochainSpace};
use crate::gvs::{complement_basis, Matrix, Parity, Scalar};

use super::{CohomologyError, GModule};

/// `H^{n,y}(g; M)` for one weight `y`, in coordinates of `L^{n,y}`.
#[derive(Clone, Debug)]
pub struct WeightComponent {
    pub weight: Parity,
    pub cochains: CochainSpace,
    lower: CochainSpace,
    /// `δ: L^{n-1,y} → L^{n,y}`
    incoming: Matrix,
    pub cocycles: Vec<Vec<Scalar>>,
    pub coboundaries: Vec<Vec<Scalar>>,
    pub representatives: Vec<Vec<Scalar>>,
    /// columns: coboundaries, then representatives
    splitting: Matrix,
}

impl WeightComponent {
    pub fn dim(&self) -> usize {
        self.representatives.len()
    }

    pub fn representative_cochains(&self) -> Vec<Cochain> {
        self.representatives.iter().map(|v| self.cochains.cochain(v)).collect()
    }

    fn is_cocycle(&self, coords: &[Scalar]) -> bool {
        let m = Matrix::from_columns(&self.cocycles, self.cochains.dim()).expect("columns");
        m.solve(coords).expect("shape").is_some()
    }

    /// Coordinates of the class of a cocycle on `representatives`, or `None`
    /// if `c` is not a cocycle.
    pub fn class_of(&self, c: &Cochain) -> Result<Option<Vec<Scalar>>, CohomologyError> {
        let coords = self.cochains.coordinates(c)?;
        if !self.is_cocycle(&coords) {
            return Ok(None);
        }
        let x = self
            .splitting
            .solve(&coords)?
            .ok_or_else(|| CohomologyError::Internal("cocycle outside its splitting".into()))?;
        Ok(Some(x[self.coboundaries.len()..].to_vec()))
    }

    /// The canonical `μ` with `δμ = c`, if `c` is a coboundary.
    pub fn preimage(&self, c: &Cochain) -> Result<Option<Cochain>, CohomologyError> {
        let coords = self.cochains.coordinates(c)?;
        Ok(self.incoming.solve(&coords)?.map(|x| self.lower.cochain(&x)))
    }
}

#[derive(Clone, Debug)]
pub struct CohomologyReport {
    pub arity: usize,
    /// indexed by weight: `[y = 0, y = 1]`
    pub components: [WeightComponent; 2],
}

impl CohomologyReport {
    pub fn dims(&self) -> (usize, usize) {
        (self.components[0].dim(), self.components[1].dim())
    }

    pub fn weight(&self, y: Parity) -> &WeightComponent {
        &self.components[y.bit() as usize]
    }
}

fn delta_matrix(
    module: &GModule,
    from: &CochainSpace,
    to: &CochainSpace,
) -> Result<Matrix, CohomologyError> {
    Ok(from.operator_matrix(to, |c| covariant_delta(module.g(), module.action(), c))?)
}

fn component(module: &GModule, n: usize, y: Parity) -> Result<WeightComponent, CohomologyError> {
    let g = module.g().space();
    let m = module.space();
    let here = CochainSpace::new(g.clone(), m.clone(), n, y);
    let above = CochainSpace::new(g.clone(), m.clone(), n + 1, y);
    let lower = CochainSpace::new(g.clone(), m.clone(), n.saturating_sub(1), y);
    let incoming = if n == 0 {
        Matrix::zeros(here.dim(), 0)
    } else {
        delta_matrix(module, &lower, &here)?
    };
    let outgoing = delta_matrix(module, &here, &above)?;
    let cocycles = outgoing.kernel_basis();
    let coboundaries: Vec<Vec<Scalar>> = incoming
        .rref()
        .pivots
        .iter()
        .map(|&c| incoming.column(c))
        .collect();
    // coboundaries in cocycle coordinates, then complete by unit vectors
    let z = Matrix::from_columns(&cocycles, here.dim())?;
    let mut inside = Vec::with_capacity(coboundaries.len());
    for b in &coboundaries {
        inside.push(
            z.solve(b)?
                .ok_or_else(|| CohomologyError::Internal("δ ∘ δ ≠ 0 for a module".into()))?,
        );
    }
    let representatives: Vec<Vec<Scalar>> = complement_basis(&inside, cocycles.len())?
        .iter()
        .map(|u| z.apply(u).expect("shape"))
        .collect();
    let mut cols = coboundaries.clone();
    cols.extend(representatives.iter().cloned());
    let splitting = Matrix::from_columns(&cols, here.dim())?;
    Ok(WeightComponent {
        weight: y,
        cochains: here,
        lower,
        incoming,
        cocycles,
        coboundaries,
        representatives,
        splitting,
    })
}

/// `H^n(g; M)` split by weight, for `n ≤ cap`.
pub fn cohomology_space(module: &GModule, n: usize, cap: usize) -> Result<CohomologyReport, CohomologyError> {
    if n > cap {
        return Err(CohomologyError::ArityCap { arity: n, cap });
    }
    Ok(CohomologyReport {
        arity: n,
        components: [component(module, n, Parity::Even)?, component(module, n, Parity::Odd)?],
    })
}
