use std::collections::HashSet;

use super::{GvsError, Parity, Scalar};
use num_traits::{One, Zero};

/// A Z₂-graded vector space with an ordered, named, parity-homogeneous basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SuperVectorSpace {
    names: Vec<String>,
    parities: Vec<Parity>,
}

impl SuperVectorSpace {
    pub fn new(names: Vec<String>, parities: Vec<Parity>) -> Result<Self, GvsError> {
        if names.len() != parities.len() {
            return Err(GvsError::DimensionMismatch {
                expected: names.len(),
                found: parities.len(),
            });
        }
        let mut seen = HashSet::new();
        for n in &names {
            if !seen.insert(n.as_str()) {
                return Err(GvsError::DuplicateName(n.clone()));
            }
        }
        Ok(SuperVectorSpace { names, parities })
    }

    /// Build from `(name, parity)` pairs.
    pub fn from_pairs<S: Into<String>>(
        pairs: impl IntoIterator<Item = (S, Parity)>,
    ) -> Result<Self, GvsError> {
        let (names, parities) = pairs.into_iter().map(|(n, p)| (n.into(), p)).unzip();
        SuperVectorSpace::new(names, parities)
    }

    /// Basis `prefix0, prefix1, ...` with the given parities.
    pub fn numbered(prefix: &str, parities: Vec<Parity>) -> Self {
        let names = (0..parities.len()).map(|i| format!("{prefix}{i}")).collect();
        SuperVectorSpace { names, parities }
    }

    pub fn zero_space() -> Self {
        SuperVectorSpace {
            names: Vec::new(),
            parities: Vec::new(),
        }
    }

    /// The trivial coefficient line: one even basis vector.
    pub fn trivial_line() -> Self {
        SuperVectorSpace {
            names: vec!["1".to_string()],
            parities: vec![Parity::Even],
        }
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn dim_even(&self) -> usize {
        self.parities.iter().filter(|p| !p.is_odd()).count()
    }

    pub fn dim_odd(&self) -> usize {
        self.parities.iter().filter(|p| p.is_odd()).count()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_trivial_line(&self) -> bool {
        self.dim() == 1 && !self.parities[0].is_odd()
    }

    /// Parity of a vector, `None` if it mixes parities. The zero vector is even.
    pub fn parity_of(&self, v: &[Scalar]) -> Option<Parity> {
        let mut found: Option<Parity> = None;
        for (c, &p) in v.iter().zip(&self.parities) {
            if c.is_zero() {
                continue;
            }
            match found {
                None => found = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
        Some(found.unwrap_or(Parity::Even))
    }

    /// Whether `v` lies in the homogeneous component of parity `p`.
    pub fn lies_in(&self, v: &[Scalar], p: Parity) -> bool {
        v.iter()
            .zip(&self.parities)
            .all(|(c, &q)| c.is_zero() || q == p)
    }

    /// `self ⊕ other`. Clashing names in `other` get a `'` suffix until unique.
    pub fn direct_sum(&self, other: &SuperVectorSpace) -> SuperVectorSpace {
        let mut names = self.names.clone();
        let mut seen: HashSet<String> = names.iter().cloned().collect();
        for n in &other.names {
            let mut candidate = n.clone();
            while seen.contains(&candidate) {
                candidate.push('\'');
            }
            seen.insert(candidate.clone());
            names.push(candidate);
        }
        let mut parities = self.parities.clone();
        parities.extend_from_slice(&other.parities);
        SuperVectorSpace { names, parities }
    }

    /// The space with basis `vectors` (homogeneous, in coordinates of
    /// `self`). A vector equal to a basis element keeps its name; the others
    /// are named `{prefix}{k}`.
    pub fn subspace(&self, vectors: &[Vec<Scalar>], prefix: &str) -> Result<SuperVectorSpace, GvsError> {
        let mut names = Vec::with_capacity(vectors.len());
        let mut parities = Vec::with_capacity(vectors.len());
        for (k, v) in vectors.iter().enumerate() {
            let p = self.parity_of(v).ok_or(GvsError::NonHomogeneousVector(k))?;
            let support: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
            if support.len() == 1 && v[support[0]].is_one() {
                names.push(self.names[support[0]].clone());
            } else {
                names.push(format!("{prefix}{k}"));
            }
            parities.push(p);
        }
        SuperVectorSpace::new(names, parities)
    }

    /// Equal parity sequences, names ignored.
    pub fn same_shape(&self, other: &SuperVectorSpace) -> bool {
        self.parities == other.parities
    }
}
