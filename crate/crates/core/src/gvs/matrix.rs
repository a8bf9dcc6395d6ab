//! Dense exact matrices and the row-reduction kernel.
//!
//! Every elimination uses the leftmost available pivot and never reorders
//! columns, so kernels, particular solutions and complements are fixed
//! functions of the input entries.

use std::fmt;

use num_traits::{One, Zero};

use super::{GvsError, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>, // row-major
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Matrix, GvsError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        Matrix::from_rows_with_cols(rows, r, c)
    }

    /// Like [`Matrix::from_rows`] but with an explicit column count, which
    /// matters for matrices with zero rows.
    pub fn from_rows_with_cols(
        rows: Vec<Vec<Scalar>>,
        nrows: usize,
        ncols: usize,
    ) -> Result<Matrix, GvsError> {
        if rows.len() != nrows {
            return Err(GvsError::DimensionMismatch {
                expected: nrows,
                found: rows.len(),
            });
        }
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(GvsError::DimensionMismatch {
                    expected: ncols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    /// Matrix whose `j`-th column is `columns[j]`; `nrows` is needed when
    /// there are no columns.
    pub fn from_columns(columns: &[Vec<Scalar>], nrows: usize) -> Result<Matrix, GvsError> {
        let mut m = Matrix::zeros(nrows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != nrows {
                return Err(GvsError::DimensionMismatch {
                    expected: nrows,
                    found: col.len(),
                });
            }
            for (i, x) in col.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        Ok(m)
    }

    pub fn diagonal(entries: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(entries.len(), entries.len());
        for (i, x) in entries.iter().enumerate() {
            m.set(i, i, x.clone());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, x: Scalar) {
        self.data[r * self.cols + c] = x;
    }

    pub fn entry_mut(&mut self, r: usize, c: usize) -> &mut Scalar {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix, GvsError> {
        if self.cols != other.rows {
            return Err(GvsError::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.get(k, c);
                    if !b.is_zero() {
                        *out.entry_mut(r, c) += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &[Scalar]) -> Result<Vec<Scalar>, GvsError> {
        if v.len() != self.cols {
            return Err(GvsError::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        let mut out = vec![Scalar::zero(); self.rows];
        for (r, slot) in out.iter_mut().enumerate() {
            for (c, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    let a = self.get(r, c);
                    if !a.is_zero() {
                        *slot += a * x;
                    }
                }
            }
        }
        Ok(out)
    }

    fn same_dims(&self, other: &Matrix) -> Result<(), GvsError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(GvsError::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix, GvsError> {
        self.same_dims(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect();
        Ok(Matrix { data, ..*self })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix, GvsError> {
        self.same_dims(other)?;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect();
        Ok(Matrix { data, ..*self })
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        let data = self.data.iter().map(|a| a * c).collect();
        Matrix { data, ..*self }
    }

    pub fn neg(&self) -> Matrix {
        let data = self.data.iter().map(|a| -a).collect();
        Matrix { data, ..*self }
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Result<Matrix, GvsError> {
        if self.rows != other.rows {
            return Err(GvsError::DimensionMismatch {
                expected: self.rows,
                found: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..other.cols {
                out.set(r, self.cols + c, other.get(r, c).clone());
            }
        }
        Ok(out)
    }

    /// `self` stacked above `other`.
    pub fn vstack(&self, other: &Matrix) -> Result<Matrix, GvsError> {
        if self.cols != other.cols {
            return Err(GvsError::DimensionMismatch {
                expected: self.cols,
                found: other.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Gauss-Jordan elimination with leftmost pivots.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..m.cols {
                    m.data.swap(p * m.cols + c, row * m.cols + c);
                }
            }
            let inv = m.get(row, col).recip();
            for c in col..m.cols {
                let x = m.get(row, c) * &inv;
                m.set(row, c, x);
            }
            for r in 0..m.rows {
                if r == row {
                    continue;
                }
                let f = m.get(r, col).clone();
                if f.is_zero() {
                    continue;
                }
                for c in col..m.cols {
                    let x = m.get(row, c);
                    if !x.is_zero() {
                        let delta = &f * x;
                        *m.entry_mut(r, c) -= delta;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Kernel basis: one vector per free column `f`, with `1` at `f` and the
    /// negated reduced entries at the pivot positions.
    pub fn kernel_basis(&self) -> Vec<Vec<Scalar>> {
        let Rref { matrix, pivots } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Scalar::zero(); self.cols];
                v[f] = Scalar::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -matrix.get(r, f).clone();
                }
                v
            })
            .collect()
    }

    /// Canonical particular solution of `self · x = rhs`: free coordinates
    /// are set to zero. `None` when `rhs` is not in the image.
    pub fn solve(&self, rhs: &[Scalar]) -> Result<Option<Vec<Scalar>>, GvsError> {
        if rhs.len() != self.rows {
            return Err(GvsError::DimensionMismatch {
                expected: self.rows,
                found: rhs.len(),
            });
        }
        let rhs_col = Matrix::from_columns(&[rhs.to_vec()], self.rows)?;
        let Rref { matrix, pivots } = self.hstack(&rhs_col)?.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![Scalar::zero(); self.cols];
        for (r, &p) in pivots.iter().enumerate() {
            x[p] = matrix.get(r, self.cols).clone();
        }
        Ok(Some(x))
    }

    /// Inverse of a square matrix, `None` if singular.
    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let Rref { matrix, pivots } = self.hstack(&Matrix::identity(n)).ok()?.rref();
        if n > 0 && pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Matrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                inv.set(r, c, matrix.get(r, n + c).clone());
            }
        }
        Some(inv)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// `solve_linear` on a plain matrix; see [`Matrix::solve`].
pub fn solve_linear(a: &Matrix, rhs: &[Scalar]) -> Result<Option<Vec<Scalar>>, GvsError> {
    a.solve(rhs)
}

pub fn kernel_basis(a: &Matrix) -> Vec<Vec<Scalar>> {
    a.kernel_basis()
}

/// Indices of the standard basis vectors completing `subspace` to a basis of
/// the ambient space: the non-pivot columns of the row-reduced subspace basis.
pub fn complement_indices(
    subspace: &[Vec<Scalar>],
    ambient_dim: usize,
) -> Result<Vec<usize>, GvsError> {
    let m = Matrix::from_rows_with_cols(subspace.to_vec(), subspace.len(), ambient_dim)?;
    let pivots = m.rref().pivots;
    if pivots.len() < subspace.len() {
        return Err(GvsError::DependentVectors);
    }
    Ok((0..ambient_dim).filter(|c| !pivots.contains(c)).collect())
}

pub fn complement_basis(
    subspace: &[Vec<Scalar>],
    ambient_dim: usize,
) -> Result<Vec<Vec<Scalar>>, GvsError> {
    Ok(complement_indices(subspace, ambient_dim)?
        .into_iter()
        .map(|i| unit_vector(ambient_dim, i))
        .collect())
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

pub fn zero_vector(n: usize) -> Vec<Scalar> {
    vec![Scalar::zero(); n]
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `dst += c · src`.
pub fn axpy(dst: &mut [Scalar], c: &Scalar, src: &[Scalar]) {
    if c.is_zero() {
        return;
    }
    for (d, s) in dst.iter_mut().zip(src) {
        if !s.is_zero() {
            *d += c * s;
        }
    }
}

pub fn add_vectors(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub_vectors(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale_vector(c: &Scalar, a: &[Scalar]) -> Vec<Scalar> {
    a.iter().map(|x| c * x).collect()
}

/// Rank of the span of `vectors` in an ambient space of dimension `dim`.
pub fn span_rank(vectors: &[Vec<Scalar>], dim: usize) -> usize {
    Matrix::from_rows_with_cols(vectors.to_vec(), vectors.len(), dim)
        .map(|m| m.rank())
        .unwrap_or(0)
}
