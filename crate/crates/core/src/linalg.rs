//! Dense exact linear algebra: reduced row echelon form and what follows from
//! it (rank, kernels, inverses, linear solves).

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use crate::error::{Error, Result};
use crate::scalar::{Rational, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<S = Rational> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.rows).map(|i| {
                self.row(i)
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
            }))
            .finish()
    }
}

impl<S: Scalar> Matrix<S> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = S::one();
        }
        m
    }

    pub fn diagonal(entries: &[S]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(Error::DimensionMismatch {
                expected: c,
                found: bad.len(),
            });
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<S>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column length");
            for (i, x) in col.iter().enumerate() {
                m[(i, j)] = x.clone();
            }
        }
        m
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

    pub fn row(&self, i: usize) -> &[S] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<S> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<S>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(S::is_zero)
    }

    pub fn scale(&self, s: &S) -> Self {
        self.map(|x| x.clone() * s.clone())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn mul_vec(&self, v: &[S]) -> Vec<S> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect()
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = S::one() / m[(r, c)].clone();
            for j in c..m.cols {
                let x = m[(r, j)].clone();
                if !x.is_zero() {
                    m[(r, j)] = x * inv.clone();
                }
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in c..m.cols {
                    let x = m[(r, j)].clone();
                    if !x.is_zero() {
                        let y = m[(i, j)].clone() - f.clone() * x;
                        m[(i, j)] = y;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{v : Mv = 0}`, one vector per free column,
    /// with a `1` in that column.
    pub fn nullspace(&self) -> Vec<Vec<S>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![S::zero(); self.cols];
            v[free] = S::one();
            for (row, &p) in pivots.iter().enumerate() {
                let x = r[(row, free)].clone();
                if !x.is_zero() {
                    v[p] = -x;
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Echelon basis of the row space.
    pub fn row_space(&self) -> Vec<Vec<S>> {
        let (r, pivots) = self.rref();
        (0..pivots.len()).map(|i| r.row(i).to_vec()).collect()
    }

    pub fn determinant(&self) -> S {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let mut m = self.clone();
        let n = m.rows;
        let mut det = S::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return S::zero();
            };
            if p != c {
                m.swap_rows(p, c);
                det = -det;
            }
            let pivot = m[(c, c)].clone();
            det = det * pivot.clone();
            for i in c + 1..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone() / pivot.clone();
                for j in c..n {
                    let y = m[(i, j)].clone() - f.clone() * m[(c, j)].clone();
                    m[(i, j)] = y;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = S::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    /// Some solution of `Mx = b`, or `None` when the system is inconsistent.
    /// Free variables are set to zero.
    pub fn solve(&self, b: &[S]) -> Option<Vec<S>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![S::zero(); self.cols];
        for (row, &p) in pivots.iter().enumerate() {
            x[p] = r[(row, self.cols)].clone();
        }
        Some(x)
    }
}

impl<S> Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.data[i * self.cols + j]
    }
}

impl<S> IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.data[i * self.cols + j]
    }
}

impl<S: Scalar> Mul for &Matrix<S> {
    type Output = Matrix<S>;
    fn mul(self, rhs: &Matrix<S>) -> Matrix<S> {
        assert_eq!(self.cols, rhs.rows, "matrix product shape");
        let mut out: Matrix<S> = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        let y = out[(i, j)].clone() + a.clone() * b.clone();
                        out[(i, j)] = y;
                    }
                }
            }
        }
        out
    }
}

/// Greedily keeps the vectors (in order) that are linearly independent of the
/// ones kept before them. Returns their indices.
pub fn independent_subset<S: Scalar>(vectors: &[Vec<S>]) -> Vec<usize> {
    let mut kept: Vec<usize> = Vec::new();
    let mut echelon: Vec<(usize, Vec<S>)> = Vec::new();
    for (idx, v) in vectors.iter().enumerate() {
        let mut w = v.clone();
        for (p, row) in &echelon {
            if !w[*p].is_zero() {
                let f = w[*p].clone();
                for (x, y) in w.iter_mut().zip(row) {
                    if !y.is_zero() {
                        *x = x.clone() - f.clone() * y.clone();
                    }
                }
            }
        }
        if let Some(p) = w.iter().position(|x| !x.is_zero()) {
            let inv = S::one() / w[p].clone();
            for x in w.iter_mut() {
                *x = x.clone() * inv.clone();
            }
            for (_, row) in echelon.iter_mut() {
                if !row[p].is_zero() {
                    let f = row[p].clone();
                    for (x, y) in row.iter_mut().zip(&w) {
                        *x = x.clone() - f.clone() * y.clone();
                    }
                }
            }
            echelon.push((p, w));
            kept.push(idx);
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| int(x)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn rref_and_rank() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        let (r, piv) = a.rref();
        assert_eq!(piv, vec![0, 1]);
        assert_eq!(r, m(&[&[1, 0, 1], &[0, 1, 1], &[0, 0, 0]]));
        assert_eq!(a.rank(), 2);
    }

    #[test]
    fn nullspace_is_killed() {
        let a = m(&[&[1, 2, 3, 4], &[0, 1, 1, 0]]);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(a.mul_vec(v).iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn inverse_and_determinant() {
        let a = m(&[&[2, 1], &[7, 4]]);
        assert_eq!(a.determinant(), int(1));
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, Matrix::identity(2));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_none());
        assert_eq!(m(&[&[0, 1], &[1, 0]]).determinant(), int(-1));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let a = m(&[&[1, 1], &[1, -1], &[2, 0]]);
        let x = a.solve(&[int(3), int(1), int(4)]).unwrap();
        assert_eq!(x, vec![int(2), int(1)]);
        assert!(a.solve(&[int(3), int(1), int(5)]).is_none());
    }

    #[test]
    fn independent_subset_keeps_first_occurrences() {
        let vs = vec![
            vec![int(1), int(0)],
            vec![int(2), int(0)],
            vec![rat(1, 2), int(3)],
            vec![int(0), int(1)],
        ];
        assert_eq!(independent_subset(&vs), vec![0, 2]);
    }
}
