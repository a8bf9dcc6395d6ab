use std::collections::BTreeMap;

use crate::gvs::{
    is_zero_vector, scale_vector, GradedLinearMap, Matrix, Parity, Scalar, SuperVectorSpace,
};

use super::sign::multigraded_sign_is_negative;
use super::CochainError;

/// Weakly increasing index tuples of length `arity` in which no even index
/// repeats, in lexicographic order.
pub fn canonical_tuples(parities: &[Parity], arity: usize) -> Vec<Vec<usize>> {
    fn rec(
        parities: &[Parity],
        left: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        let start = match cur.last() {
            None => 0,
            Some(&l) if parities[l].is_odd() => l,
            Some(&l) => l + 1,
        };
        for i in start..parities.len() {
            cur.push(i);
            rec(parities, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(parities, arity, &mut Vec::with_capacity(arity), &mut out);
    out
}

pub fn is_canonical(tuple: &[usize], parities: &[Parity]) -> bool {
    tuple.iter().all(|&i| i < parities.len())
        && tuple.windows(2).all(|w| w[0] < w[1] || (w[0] == w[1] && parities[w[0]].is_odd()))
}

/// Sorts `tuple` into canonical order. Returns the sorted tuple and whether
/// the reordering carries sign `-1`, or `None` if an even index repeats.
pub fn canonicalize(tuple: &[usize], parities: &[Parity]) -> Option<(Vec<usize>, bool)> {
    let mut order: Vec<usize> = (0..tuple.len()).collect();
    order.sort_by_key(|&a| (tuple[a], a));
    let sorted: Vec<usize> = order.iter().map(|&a| tuple[a]).collect();
    if sorted
        .windows(2)
        .any(|w| w[0] == w[1] && !parities[w[0]].is_odd())
    {
        return None;
    }
    // tuple = (sorted_{π(0)}, ...), with π(a) the sorted position of tuple[a]
    let mut pi = vec![0; tuple.len()];
    for (pos, &a) in order.iter().enumerate() {
        pi[a] = pos;
    }
    let x: Vec<Parity> = sorted.iter().map(|&i| parities[i]).collect();
    Some((sorted, multigraded_sign_is_negative(&pi, &x)))
}

/// A graded-antisymmetric `p`-linear map `g^p → h` of weight `y`, stored by
/// its values on canonical basis tuples. Zero values are not stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cochain {
    source: SuperVectorSpace,
    target: SuperVectorSpace,
    arity: usize,
    weight: Parity,
    values: BTreeMap<Vec<usize>, Vec<Scalar>>,
}

impl Cochain {
    pub fn zero(
        source: SuperVectorSpace,
        target: SuperVectorSpace,
        arity: usize,
        weight: Parity,
    ) -> Cochain {
        Cochain {
            source,
            target,
            arity,
            weight,
            values: BTreeMap::new(),
        }
    }

    /// A 0-cochain: a single vector of `target` of parity `weight`.
    pub fn constant(
        source: SuperVectorSpace,
        target: SuperVectorSpace,
        weight: Parity,
        value: Vec<Scalar>,
    ) -> Result<Cochain, CochainError> {
        let mut c = Cochain::zero(source, target, 0, weight);
        c.set(&[], value)?;
        Ok(c)
    }

    /// The 1-cochain `X ↦ b(X)` of a linear map `b: g → h` of degree `weight`.
    pub fn from_linear_map(b: &GradedLinearMap) -> Cochain {
        let mut c = Cochain::zero(b.domain().clone(), b.codomain().clone(), 1, b.degree());
        for j in 0..b.domain().dim() {
            c.insert_unchecked(vec![j], b.image_of_basis(j));
        }
        c
    }

    pub fn source(&self) -> &SuperVectorSpace {
        &self.source
    }

    pub fn target(&self) -> &SuperVectorSpace {
        &self.target
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn weight(&self) -> Parity {
        self.weight
    }

    /// Nonzero canonical values.
    pub fn entries(&self) -> impl Iterator<Item = (&Vec<usize>, &Vec<Scalar>)> {
        self.values.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Parity the value on `tuple` must have.
    pub fn value_parity(&self, tuple: &[usize]) -> Parity {
        self.weight + tuple.iter().map(|&i| self.source.parity(i)).sum()
    }

    /// Sets the value on a canonical tuple, checking homogeneity.
    pub fn set(&mut self, tuple: &[usize], value: Vec<Scalar>) -> Result<(), CochainError> {
        if tuple.len() != self.arity {
            return Err(CochainError::LengthMismatch {
                expected: self.arity,
                found: tuple.len(),
            });
        }
        if !is_canonical(tuple, self.source.parities()) {
            return Err(CochainError::NotCanonical(tuple.to_vec()));
        }
        if value.len() != self.target.dim() {
            return Err(CochainError::LengthMismatch {
                expected: self.target.dim(),
                found: value.len(),
            });
        }
        if !self.target.lies_in(&value, self.value_parity(tuple)) {
            return Err(CochainError::NonHomogeneousValue(tuple.to_vec()));
        }
        self.insert_unchecked(tuple.to_vec(), value);
        Ok(())
    }

    pub(crate) fn insert_unchecked(&mut self, tuple: Vec<usize>, value: Vec<Scalar>) {
        if is_zero_vector(&value) {
            self.values.remove(&tuple);
        } else {
            self.values.insert(tuple, value);
        }
    }

    /// Stored value on a canonical tuple; `None` means zero.
    pub fn canonical_value(&self, tuple: &[usize]) -> Option<&Vec<Scalar>> {
        self.values.get(tuple)
    }

    /// `Φ(e_{t_1}, ..., e_{t_p})` for an arbitrary basis tuple.
    pub fn evaluate(&self, tuple: &[usize]) -> Result<Vec<Scalar>, CochainError> {
        if tuple.len() != self.arity {
            return Err(CochainError::LengthMismatch {
                expected: self.arity,
                found: tuple.len(),
            });
        }
        if let Some(&bad) = tuple.iter().find(|&&i| i >= self.source.dim()) {
            return Err(CochainError::IndexOutOfRange(bad));
        }
        Ok(self.evaluate_unchecked(tuple))
    }

    pub(crate) fn evaluate_unchecked(&self, tuple: &[usize]) -> Vec<Scalar> {
        let zero = || vec![Scalar::from_integer(0.into()); self.target.dim()];
        let Some((sorted, negative)) = canonicalize(tuple, self.source.parities()) else {
            return zero();
        };
        match self.values.get(&sorted) {
            None => zero(),
            Some(v) if negative => v.iter().map(|c| -c).collect(),
            Some(v) => v.clone(),
        }
    }

    fn check_compatible(&self, other: &Cochain) -> Result<(), CochainError> {
        if self.source != other.source
            || self.target != other.target
            || self.arity != other.arity
            || self.weight != other.weight
        {
            return Err(CochainError::Incompatible);
        }
        Ok(())
    }

    pub fn add(&self, other: &Cochain) -> Result<Cochain, CochainError> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (t, v) in &other.values {
            let sum = match out.values.get(t) {
                Some(w) => w.iter().zip(v).map(|(a, b)| a + b).collect(),
                None => v.clone(),
            };
            out.insert_unchecked(t.clone(), sum);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Cochain) -> Result<Cochain, CochainError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Cochain {
        self.scale(&Scalar::from_integer((-1).into()))
    }

    pub fn scale(&self, c: &Scalar) -> Cochain {
        let mut out = Cochain::zero(
            self.source.clone(),
            self.target.clone(),
            self.arity,
            self.weight,
        );
        for (t, v) in &self.values {
            out.insert_unchecked(t.clone(), scale_vector(c, v));
        }
        out
    }

    /// Post-composes every value with a degree-0 linear map into `target`.
    pub fn map_values(
        &self,
        map: &Matrix,
        target: SuperVectorSpace,
    ) -> Result<Cochain, CochainError> {
        if map.cols() != self.target.dim() || map.rows() != target.dim() {
            return Err(CochainError::Incompatible);
        }
        let mut out = Cochain::zero(self.source.clone(), target, self.arity, self.weight);
        for (t, v) in &self.values {
            let w = map.apply(v).expect("checked shape");
            if !out.target.lies_in(&w, out.value_parity(t)) {
                return Err(CochainError::NonHomogeneousValue(t.clone()));
            }
            out.insert_unchecked(t.clone(), w);
        }
        Ok(out)
    }

    /// Same values reinterpreted over a space with identical parities.
    pub fn with_spaces(
        &self,
        source: SuperVectorSpace,
        target: SuperVectorSpace,
    ) -> Result<Cochain, CochainError> {
        if !source.same_shape(&self.source) || !target.same_shape(&self.target) {
            return Err(CochainError::Incompatible);
        }
        Ok(Cochain {
            source,
            target,
            ..self.clone()
        })
    }
}

/// A degree-0 linear map `g → End(V)`, stored as one operator per basis
/// element of `g`; operator `i` has parity `x_i`. Covers both the super
/// connections `α: g → der(h)` and module actions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Connection {
    source: SuperVectorSpace,
    target: SuperVectorSpace,
    operators: Vec<GradedLinearMap>,
}

impl Connection {
    pub fn new(
        source: SuperVectorSpace,
        target: SuperVectorSpace,
        operators: Vec<GradedLinearMap>,
    ) -> Result<Connection, CochainError> {
        if operators.len() != source.dim() {
            return Err(CochainError::LengthMismatch {
                expected: source.dim(),
                found: operators.len(),
            });
        }
        for (i, op) in operators.iter().enumerate() {
            if op.domain().parities() != target.parities()
                || op.codomain().parities() != target.parities()
            {
                return Err(CochainError::Incompatible);
            }
            if op.degree() != source.parity(i) {
                return Err(CochainError::ConnectionDegree(i));
            }
        }
        Ok(Connection {
            source,
            target,
            operators,
        })
    }

    pub fn zero(source: SuperVectorSpace, target: SuperVectorSpace) -> Connection {
        let operators = source
            .parities()
            .iter()
            .map(|&p| GradedLinearMap::zero(target.clone(), target.clone(), p))
            .collect();
        Connection {
            source,
            target,
            operators,
        }
    }

    /// From raw matrices, assigning operator `i` the parity of `e_i`.
    pub fn from_matrices(
        source: SuperVectorSpace,
        target: SuperVectorSpace,
        matrices: Vec<Matrix>,
    ) -> Result<Connection, CochainError> {
        let ops = matrices
            .into_iter()
            .enumerate()
            .map(|(i, m)| {
                GradedLinearMap::new(target.clone(), target.clone(), source.parity(i), m)
                    .map_err(|_| CochainError::ConnectionDegree(i))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Connection::new(source, target, ops)
    }

    pub fn source(&self) -> &SuperVectorSpace {
        &self.source
    }

    pub fn target(&self) -> &SuperVectorSpace {
        &self.target
    }

    pub fn operators(&self) -> &[GradedLinearMap] {
        &self.operators
    }

    pub fn operator(&self, i: usize) -> &Matrix {
        self.operators[i].matrix()
    }

    /// `α_X` for an arbitrary element `X` of the source.
    pub fn at(&self, x: &[Scalar]) -> Matrix {
        let n = self.target.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, c) in x.iter().enumerate() {
            if num_traits::Zero::is_zero(c) {
                continue;
            }
            m = m.add(&self.operators[i].matrix().scale(c)).expect("square operators");
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.operators.iter().all(GradedLinearMap::is_zero)
    }

    /// Operator-wise sum with another connection on the same spaces.
    pub fn add_matrices(&self, extra: &[Matrix]) -> Result<Connection, CochainError> {
        if extra.len() != self.operators.len() {
            return Err(CochainError::Incompatible);
        }
        let mats = self
            .operators
            .iter()
            .zip(extra)
            .map(|(op, m)| op.matrix().add(m).map_err(|_| CochainError::Incompatible))
            .collect::<Result<Vec<_>, _>>()?;
        Connection::from_matrices(self.source.clone(), self.target.clone(), mats)
    }
}
