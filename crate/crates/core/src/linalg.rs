//! Exact dense linear algebra over a scalar field.
//!
//! All kernels and ranks in the crate come from Gaussian elimination with
//! the deterministic pivot rule "first nonzero entry, scanning columns left
//! to right": when columns are indexed by a graded-lex monomial basis this
//! makes every reduced basis canonical.

use crate::error::{Error, Result};
use crate::scalar::{Scalar, ScalarField};

/// Dense row-major matrix of scalars from one field.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: ScalarField,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize, field: ScalarField) -> Self {
        let data = vec![field.zero(); rows * cols];
        Matrix {
            rows,
            cols,
            field,
            data,
        }
    }

    pub fn from_rows(field: ScalarField, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::ArityMismatch {
                    expected: ncols,
                    found: row.len(),
                });
            }
            for s in row {
                if s.field() != &field {
                    return Err(Error::FieldMismatch);
                }
                data.push(s);
            }
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            field,
            data,
        })
    }

    pub fn identity(n: usize, field: ScalarField) -> Self {
        let mut m = Self::zeros(n, n, field);
        for i in 0..n {
            let one = m.field.one();
            m.set(i, i, one);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> &ScalarField {
        &self.field
    }

    pub fn entry(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.data[i * self.cols + j] = value;
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Self::zeros(self.cols, self.rows, self.field.clone());
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.entry(i, j).clone());
            }
        }
        out
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::ArityMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        if self.field != rhs.field {
            return Err(Error::FieldMismatch);
        }
        let mut out = Self::zeros(self.rows, rhs.cols, self.field.clone());
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = self.field.zero();
                for k in 0..self.cols {
                    let prod = self.entry(i, k).checked_mul(rhs.entry(k, j))?;
                    acc = acc.checked_add(&prod)?;
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Reduced row echelon form together with the pivot column indices.
    pub fn rref(&self) -> Result<(Matrix, Vec<usize>)> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            if pivot_row >= m.rows {
                break;
            }
            let Some(sel) = (pivot_row..m.rows).find(|&r| !m.entry(r, col).is_zero()) else {
                continue;
            };
            if sel != pivot_row {
                for j in 0..m.cols {
                    m.data.swap(sel * m.cols + j, pivot_row * m.cols + j);
                }
            }
            let inv = m.entry(pivot_row, col).invert()?;
            for j in col..m.cols {
                let v = m.entry(pivot_row, j).checked_mul(&inv)?;
                m.set(pivot_row, j, v);
            }
            for r in 0..m.rows {
                if r != pivot_row && !m.entry(r, col).is_zero() {
                    let factor = m.entry(r, col).clone();
                    for j in col..m.cols {
                        let delta = factor.checked_mul(m.entry(pivot_row, j))?;
                        let v = m.entry(r, j).checked_sub(&delta)?;
                        m.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        Ok((m, pivots))
    }

    pub fn rank(&self) -> Result<usize> {
        Ok(self.rref()?.1.len())
    }

    /// Canonical basis of the right kernel `{v : M v = 0}`, one vector per
    /// free column, each with a 1 in its free position.
    pub fn kernel_basis(&self) -> Result<Vec<Vec<Scalar>>> {
        let (r, pivots) = self.rref()?;
        let mut basis = Vec::new();
        let mut pivot_iter = pivots.iter().copied().enumerate().collect::<Vec<_>>();
        pivot_iter.sort_by_key(|&(_, col)| col);
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for &(row, col) in &pivot_iter {
                v[col] = r.entry(row, free).checked_neg();
            }
            basis.push(v);
        }
        Ok(basis)
    }

    pub fn det(&self) -> Result<Scalar> {
        if self.rows != self.cols {
            return Err(Error::ArityMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = self.field.one();
        for col in 0..n {
            let Some(sel) = (col..n).find(|&r| !m.entry(r, col).is_zero()) else {
                return Ok(self.field.zero());
            };
            if sel != col {
                for j in 0..n {
                    m.data.swap(sel * n + j, col * n + j);
                }
                det = det.checked_neg();
            }
            let pivot = m.entry(col, col).clone();
            det = det.checked_mul(&pivot)?;
            let inv = pivot.invert()?;
            for r in col + 1..n {
                if m.entry(r, col).is_zero() {
                    continue;
                }
                let factor = m.entry(r, col).checked_mul(&inv)?;
                for j in col..n {
                    let delta = factor.checked_mul(m.entry(col, j))?;
                    let v = m.entry(r, j).checked_sub(&delta)?;
                    m.set(r, j, v);
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Matrix> {
        if self.rows != self.cols {
            return Err(Error::ArityMismatch {
                expected: self.rows,
                found: self.cols,
            });
        }
        let n = self.rows;
        // augment with identity and reduce
        let mut aug = Matrix::zeros(n, 2 * n, self.field.clone());
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.entry(i, j).clone());
            }
            let one = self.field.one();
            aug.set(i, n + i, one);
        }
        let (r, pivots) = aug.rref()?;
        if pivots.len() < n || pivots.iter().take(n).enumerate().any(|(i, &c)| c != i) {
            return Err(Error::SingularMatrix);
        }
        let mut out = Matrix::zeros(n, n, self.field.clone());
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, r.entry(i, n + j).clone());
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_integer(n)
    }

    fn mat(rows: Vec<Vec<i64>>) -> Matrix {
        Matrix::from_rows(
            ScalarField::Rational,
            rows.into_iter()
                .map(|r| r.into_iter().map(s).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn rank_and_kernel() {
        let m = mat(vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]]);
        assert_eq!(m.rank().unwrap(), 2);
        let kernel = m.kernel_basis().unwrap();
        assert_eq!(kernel.len(), 1);
        // M v = 0 exactly
        for i in 0..3 {
            let mut acc = s(0);
            for j in 0..3 {
                acc = acc
                    .checked_add(&m.entry(i, j).checked_mul(&kernel[0][j]).unwrap())
                    .unwrap();
            }
            assert!(acc.is_zero());
        }
    }

    #[test]
    fn kernel_of_zero_rows_is_full() {
        let m = Matrix::zeros(0, 3, ScalarField::Rational);
        assert_eq!(m.kernel_basis().unwrap().len(), 3);
    }

    #[test]
    fn determinant_and_inverse() {
        let m = mat(vec![vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert!(m.det().unwrap().is_one());
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(3, ScalarField::Rational));
        let singular = mat(vec![vec![1, 2], vec![2, 4]]);
        assert!(singular.det().unwrap().is_zero());
        assert_eq!(singular.inverse(), Err(Error::SingularMatrix));
    }
}
