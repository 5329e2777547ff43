//! Dense matrices and exact Gaussian elimination over a [`Field`].

use alloc::vec;
use alloc::vec::Vec;

use crate::field::Field;
use crate::{Error, Result};

/// Row-major dense matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        Self {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self> {
        let n = rows.len();
        let m = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != m) {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: bad.len(),
            });
        }
        Ok(Self {
            rows: n,
            cols: m,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[Vec<E>]) -> Result<Self> {
        let n = columns.first().map_or(0, Vec::len);
        if let Some(bad) = columns.iter().find(|c| c.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.len(),
            });
        }
        Ok(Self::from_fn(n, columns.len(), |i, j| columns[j][i].clone()))
    }

    pub fn identity<F: Field<Elem = E>>(field: &F, n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { field.one() } else { field.zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: E) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }
}

pub fn dot<F: Field>(field: &F, x: &[F::Elem], y: &[F::Elem]) -> F::Elem {
    x.iter()
        .zip(y)
        .fold(field.zero(), |acc, (a, b)| field.add(&acc, &field.mul(a, b)))
}

pub fn vec_add<F: Field>(field: &F, x: &[F::Elem], y: &[F::Elem]) -> Vec<F::Elem> {
    x.iter().zip(y).map(|(a, b)| field.add(a, b)).collect()
}

pub fn vec_scale<F: Field>(field: &F, s: &F::Elem, x: &[F::Elem]) -> Vec<F::Elem> {
    x.iter().map(|a| field.mul(s, a)).collect()
}

pub fn zero_vec<F: Field>(field: &F, n: usize) -> Vec<F::Elem> {
    vec![field.zero(); n]
}

/// `i`-th standard basis vector of length `n`.
pub fn unit_vec<F: Field>(field: &F, n: usize, i: usize) -> Vec<F::Elem> {
    let mut v = zero_vec(field, n);
    v[i] = field.one();
    v
}

pub fn mat_mul<F: Field>(
    field: &F,
    a: &Matrix<F::Elem>,
    b: &Matrix<F::Elem>,
) -> Result<Matrix<F::Elem>> {
    if a.cols() != b.rows() {
        return Err(Error::DimensionMismatch {
            expected: a.cols(),
            found: b.rows(),
        });
    }
    let bt = b.transpose();
    Ok(Matrix::from_fn(a.rows(), b.cols(), |i, j| {
        dot(field, a.row(i), bt.row(j))
    }))
}

pub fn mat_vec<F: Field>(field: &F, a: &Matrix<F::Elem>, x: &[F::Elem]) -> Result<Vec<F::Elem>> {
    if a.cols() != x.len() {
        return Err(Error::DimensionMismatch {
            expected: a.cols(),
            found: x.len(),
        });
    }
    Ok((0..a.rows()).map(|i| dot(field, a.row(i), x)).collect())
}

/// In-place reduced row echelon form on the first `pivot_cols` columns.
/// Pivots are chosen in ascending column order, first nonzero row below the
/// current rank. Returns the pivot column of each pivot row.
fn rref<F: Field>(field: &F, m: &mut Matrix<F::Elem>, pivot_cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..pivot_cols {
        let Some(p) = (rank..m.rows).find(|&r| !field.is_zero(m.get(r, col))) else {
            continue;
        };
        if p != rank {
            for j in 0..m.cols {
                m.data.swap(p * m.cols + j, rank * m.cols + j);
            }
        }
        let scale = field
            .inv(m.get(rank, col))
            .expect("pivot entry is nonzero");
        for j in 0..m.cols {
            let v = field.mul(&scale, m.get(rank, j));
            m.set(rank, j, v);
        }
        let pivot_row = m.row(rank).to_vec();
        for r in 0..m.rows {
            if r == rank || field.is_zero(m.get(r, col)) {
                continue;
            }
            let factor = m.get(r, col).clone();
            for (j, pv) in pivot_row.iter().enumerate() {
                let v = field.add(m.get(r, j), &field.mul(&factor, pv));
                m.set(r, j, v);
            }
        }
        pivots.push(col);
        rank += 1;
    }
    pivots
}

pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    let mut work = m.clone();
    rref(field, &mut work, m.cols()).len()
}

pub fn is_invertible<F: Field>(field: &F, m: &Matrix<F::Elem>) -> bool {
    m.is_square() && rank(field, m) == m.rows()
}

pub fn inverse<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Result<Matrix<F::Elem>> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch {
            expected: m.rows(),
            found: m.cols(),
        });
    }
    let n = m.rows();
    let mut aug = Matrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            m.get(i, j).clone()
        } else if j - n == i {
            field.one()
        } else {
            field.zero()
        }
    });
    if rref(field, &mut aug, n).len() < n {
        return Err(Error::SingularMatrix);
    }
    Ok(Matrix::from_fn(n, n, |i, j| aug.get(i, n + j).clone()))
}

/// One solution of `a·x = b`, or `None` if the system is inconsistent.
/// Pivots in ascending column order; free unknowns are zero.
pub fn solve<F: Field>(field: &F, a: &Matrix<F::Elem>, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    assert_eq!(a.rows(), b.len(), "right-hand side length");
    let n = a.cols();
    let mut aug = Matrix::from_fn(a.rows(), n + 1, |i, j| {
        if j < n {
            a.get(i, j).clone()
        } else {
            b[i].clone()
        }
    });
    let pivots = rref(field, &mut aug, n);
    if (pivots.len()..aug.rows()).any(|r| !field.is_zero(aug.get(r, n))) {
        return None;
    }
    let mut x = zero_vec(field, n);
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = aug.get(r, n).clone();
    }
    Some(x)
}

/// Whether the vectors are linearly independent.
pub fn independent<F: Field>(field: &F, vectors: &[Vec<F::Elem>]) -> bool {
    match Matrix::from_rows(vectors.to_vec()) {
        Ok(m) => rank(field, &m) == vectors.len(),
        Err(_) => false,
    }
}
