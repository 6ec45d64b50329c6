//! Dense integer matrices with exact determinant and unimodular inverse.

use std::fmt;
use std::ops::{Index, IndexMut};

use crate::Scalar;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Builds a matrix from row vectors. Every row must have length `cols`.
    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Option<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return None;
            }
            data.extend(r);
        }
        Some(Matrix { rows: n, cols, data })
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| r.iter().map(|&v| T::from_i64(v)).collect()).collect();
        Self::from_rows(rows, cols).expect("ragged rows")
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

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t[(c, r)] = self[(r, c)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(r, k)];
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = &other[(k, c)];
                    if !b.is_zero() {
                        out[(r, c)] = out[(r, c)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }

    /// Row vector (given as a slice) times this matrix.
    pub fn left_mul_row(&self, row: &[T]) -> Vec<T> {
        assert_eq!(row.len(), self.rows);
        (0..self.cols)
            .map(|c| row.iter().enumerate().fold(T::zero(), |acc, (k, v)| acc + v.clone() * self[(k, c)].clone()))
            .collect()
    }

    /// Copies the rectangular window `[r0, r0+h) x [c0, c0+w)`.
    pub fn window(&self, r0: usize, c0: usize, h: usize, w: usize) -> Self {
        let mut out = Self::zeros(h, w);
        for r in 0..h {
            for c in 0..w {
                out[(r, c)] = self[(r0 + r, c0 + c)].clone();
            }
        }
        out
    }

    /// Keeps the listed rows and columns, in the given order.
    pub fn select(&self, idx: &[usize]) -> Self {
        let n = idx.len();
        let mut out = Self::zeros(n, n);
        for (i, &r) in idx.iter().enumerate() {
            for (j, &c) in idx.iter().enumerate() {
                out[(i, j)] = self[(r, c)].clone();
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn max_abs(&self) -> T {
        self.data.iter().map(|v| v.abs()).max().unwrap_or_else(T::zero)
    }

    /// Exact determinant by Bareiss fraction-free elimination.
    pub fn det(&self) -> T {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return T::one();
        }
        let mut a = self.clone();
        let mut sign = T::one();
        let mut prev = T::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !a[(r, k)].is_zero()) else {
                    return T::zero();
                };
                a.swap_rows(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = a[(i, j)].clone() * a[(k, k)].clone() - a[(i, k)].clone() * a[(k, j)].clone();
                    a[(i, j)] = v / prev.clone();
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * a[(n - 1, n - 1)].clone()
    }

    pub fn is_unimodular(&self) -> bool {
        self.is_square() && self.det().is_unit()
    }

    /// Exact inverse of a unimodular matrix, computed with unimodular row
    /// operations only. Returns `None` when the matrix is not invertible over
    /// the integers.
    pub fn inverse_unimodular(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            // Euclid on column `col` below the diagonal until one entry survives.
            loop {
                let pivot = (col..n)
                    .filter(|&r| !a[(r, col)].is_zero())
                    .min_by(|&x, &y| a[(x, col)].abs().cmp(&a[(y, col)].abs()))?;
                a.swap_rows(col, pivot);
                inv.swap_rows(col, pivot);
                let mut done = true;
                for r in col + 1..n {
                    if a[(r, col)].is_zero() {
                        continue;
                    }
                    let q = a[(r, col)].div_floor(&a[(col, col)]);
                    a.add_row_multiple(r, col, &-q.clone());
                    inv.add_row_multiple(r, col, &-q);
                    if !a[(r, col)].is_zero() {
                        done = false;
                    }
                }
                if done {
                    break;
                }
            }
            if !a[(col, col)].is_unit() {
                return None;
            }
            if a[(col, col)].is_negative() {
                a.negate_row(col);
                inv.negate_row(col);
            }
        }
        for col in (0..n).rev() {
            for r in 0..col {
                let q = a[(r, col)].clone();
                if !q.is_zero() {
                    a.add_row_multiple(r, col, &-q.clone());
                    inv.add_row_multiple(r, col, &-q);
                }
            }
        }
        Some(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn add_row_multiple(&mut self, target: usize, source: usize, factor: &T) {
        for c in 0..self.cols {
            let v = self[(source, c)].clone() * factor.clone();
            self[(target, c)] = self[(target, c)].clone() + v;
        }
    }

    fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            self[(r, c)] = -self[(r, c)].clone();
        }
    }

    /// Block-diagonal sum of square blocks.
    pub fn block_diag(blocks: &[Self]) -> Self {
        let n: usize = blocks.iter().map(|b| b.rows).sum();
        let mut out = Self::zeros(n, n);
        let mut off = 0;
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out[(off + r, off + c)] = b[(r, c)].clone();
                }
            }
            off += b.rows;
        }
        out
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.data[r * self.cols + c]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.data[r * self.cols + c]
    }
}

impl<T: fmt::Debug> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:?}", self.data[r * self.cols + c])?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type M = Matrix<BigInt>;

    #[test]
    fn det_small() {
        assert_eq!(M::from_i64_rows(&[&[0, 1], &[-1, 0]]).det(), BigInt::from(1));
        assert_eq!(M::from_i64_rows(&[&[0, 0], &[0, 0]]).det(), BigInt::from(0));
        assert_eq!(M::zeros(0, 0).det(), BigInt::from(1));
        let m = M::from_i64_rows(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 1]]);
        // 2(3-2) - 0 + 1(1-3) = 0
        assert_eq!(m.det(), BigInt::from(0));
        let m = M::from_i64_rows(&[&[0, 2, 1], &[1, 0, 0], &[3, 1, 1]]);
        // expand on row 1: -1 * (2*1 - 1*1) = -1
        assert_eq!(m.det(), BigInt::from(-1));
    }

    #[test]
    fn det_generic_over_i64() {
        let m = Matrix::<i64>::from_i64_rows(&[&[4, 3], &[6, 3]]);
        assert_eq!(m.det(), -6);
    }

    #[test]
    fn unimodular_inverse() {
        let p = M::from_i64_rows(&[&[2, 3, 0], &[1, 2, 0], &[5, -7, 1]]);
        assert!(p.is_unimodular());
        let inv = p.inverse_unimodular().unwrap();
        assert_eq!(p.mul(&inv), M::identity(3));
        assert_eq!(inv.mul(&p), M::identity(3));
        assert!(M::from_i64_rows(&[&[2, 0], &[0, 1]]).inverse_unimodular().is_none());
        assert!(M::from_i64_rows(&[&[1, 2], &[2, 4]]).inverse_unimodular().is_none());
    }
}
