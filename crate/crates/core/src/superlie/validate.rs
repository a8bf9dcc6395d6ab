use num_traits::Zero;

use crate::gvs::{axpy, is_zero_vector, one, signed, zero_vector, Scalar};

use super::SuperLieAlgebra;

/// A bracket `[e_left, e_right]` that breaks an axiom, with the offending vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairViolation {
    pub left: usize,
    pub right: usize,
    pub residual: Vec<Scalar>,
}

/// A basis triple with nonzero graded Jacobi cyclic sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleViolation {
    pub indices: (usize, usize, usize),
    pub residual: Vec<Scalar>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub degree_zero: Vec<PairViolation>,
    pub antisymmetry: Vec<PairViolation>,
    pub jacobi: Vec<TripleViolation>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.degree_zero.is_empty() && self.antisymmetry.is_empty() && self.jacobi.is_empty()
    }
}

impl SuperLieAlgebra {
    /// Checks that the bracket has degree 0, is graded antisymmetric and
    /// satisfies `Σ_cyclic (-1)^{xz} [X,[Y,Z]] = 0` on basis triples.
    ///
    /// When antisymmetry holds the Jacobiator is graded antisymmetric in its
    /// arguments, so only triples `i ≤ j ≤ k` are evaluated; otherwise all
    /// ordered triples are.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim();
        let space = self.space();
        let mut report = ValidationReport::default();
        for i in 0..n {
            for j in 0..n {
                let v = self.bracket_basis(i, j);
                let expected = self.parity(i) + self.parity(j);
                if !space.lies_in(v, expected) {
                    let residual = v
                        .iter()
                        .enumerate()
                        .map(|(k, c)| {
                            if space.parity(k) == expected {
                                Scalar::zero()
                            } else {
                                c.clone()
                            }
                        })
                        .collect();
                    report.degree_zero.push(PairViolation {
                        left: i,
                        right: j,
                        residual,
                    });
                }
                if i <= j {
                    let odd = (self.parity(i) * self.parity(j)).is_odd();
                    let mut sum = v.to_vec();
                    axpy(&mut sum, &signed(one(), odd), self.bracket_basis(j, i));
                    if !is_zero_vector(&sum) {
                        report.antisymmetry.push(PairViolation {
                            left: i,
                            right: j,
                            residual: sum,
                        });
                    }
                }
            }
        }
        let reduced = report.antisymmetry.is_empty();
        for i in 0..n {
            for j in (if reduced { i } else { 0 })..n {
                for k in (if reduced { j } else { 0 })..n {
                    let residual = self.jacobi_cyclic_sum(i, j, k);
                    if !is_zero_vector(&residual) {
                        report.jacobi.push(TripleViolation {
                            indices: (i, j, k),
                            residual,
                        });
                    }
                }
            }
        }
        report
    }

    /// `Σ_cyclic (-1)^{xz} [X,[Y,Z]]` for `(X,Y,Z) = (e_i, e_j, e_k)`.
    pub fn jacobi_cyclic_sum(&self, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        let n = self.dim();
        let mut sum = zero_vector(n);
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            let inner = self.bracket_basis(b, c);
            let mut outer = zero_vector(n);
            for (m, coeff) in inner.iter().enumerate() {
                axpy(&mut outer, coeff, self.bracket_basis(a, m));
            }
            let odd = (self.parity(a) * self.parity(c)).is_odd();
            axpy(&mut sum, &signed(one(), odd), &outer);
        }
        sum
    }
}
