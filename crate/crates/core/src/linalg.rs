//! Dense matrices over a [`Gf`], with exact Gaussian elimination.
//!
//! Elimination always pivots on the leftmost available column and the
//! topmost available row, so kernels and images are reproducible.

use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

use crate::field::{Elem, Gf};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl Index<(usize, usize)> for Matrix {
    type Output = Elem;
    fn index(&self, (i, j): (usize, usize)) -> &Elem {
        assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Elem {
        assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Elem::ZERO; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Elem::ONE;
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Elem) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Elem>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_cols(cols: &[Vec<Elem>], rows: usize) -> Self {
        Matrix::from_fn(rows, cols.len(), |i, j| cols[j][i])
    }

    /// Small integer entries, reduced into the prime subfield.
    pub fn from_ints(f: &Gf, rows: &[&[i64]]) -> Self {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| f.from_int(v)).collect()).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Elem> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn map(&self, mut f: impl FnMut(Elem) -> Elem) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&e| f(e)).collect() }
    }

    pub fn add(&self, f: &Gf, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(&a, &b)| f.add(a, b)).collect(),
        }
    }

    pub fn scale(&self, f: &Gf, c: Elem) -> Matrix {
        self.map(|e| f.mul(c, e))
    }

    pub fn mul(&self, f: &Gf, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        Matrix::from_fn(self.rows, other.cols, |i, j| {
            f.sum((0..self.cols).map(|l| f.mul(self[(i, l)], other[(l, j)])))
        })
    }

    pub fn mul_vec(&self, f: &Gf, v: &[Elem]) -> Vec<Elem> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| f.sum(self.row(i).iter().zip(v).map(|(&a, &b)| f.mul(a, b))))
            .collect()
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        Matrix::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)]
            } else {
                other[(i, j - self.cols)]
            }
        })
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self, f: &Gf) -> (Matrix, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..a.cols {
            if row == a.rows {
                break;
            }
            let Some(pr) = (row..a.rows).find(|&r| !a[(r, col)].is_zero()) else {
                continue;
            };
            a.swap_rows(row, pr);
            let inv = f.inv(a[(row, col)]).unwrap();
            for j in col..a.cols {
                a[(row, j)] = f.mul(a[(row, j)], inv);
            }
            for r in 0..a.rows {
                if r != row && !a[(r, col)].is_zero() {
                    let factor = a[(r, col)];
                    for j in col..a.cols {
                        let t = f.mul(factor, a[(row, j)]);
                        a[(r, j)] = f.sub(a[(r, j)], t);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (a, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub fn rank(&self, f: &Gf) -> usize {
        self.rref(f).1.len()
    }

    /// Basis of the right null space `{v : A v = 0}`, one vector per free column.
    pub fn kernel(&self, f: &Gf) -> Vec<Vec<Elem>> {
        let (r, pivots) = self.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![Elem::ZERO; self.cols];
                v[fc] = Elem::ONE;
                for (i, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(r[(i, fc)]);
                }
                v
            })
            .collect()
    }

    pub fn det(&self, f: &Gf) -> Elem {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let mut a = self.clone();
        let n = a.rows;
        let mut det = Elem::ONE;
        for col in 0..n {
            let Some(pr) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
                return Elem::ZERO;
            };
            if pr != col {
                a.swap_rows(pr, col);
                det = f.neg(det);
            }
            let pivot = a[(col, col)];
            det = f.mul(det, pivot);
            let inv = f.inv(pivot).unwrap();
            for r in col + 1..n {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let factor = f.mul(a[(r, col)], inv);
                for j in col..n {
                    let t = f.mul(factor, a[(col, j)]);
                    a[(r, j)] = f.sub(a[(r, j)], t);
                }
            }
        }
        det
    }

    pub fn inverse(&self, f: &Gf) -> Option<Matrix> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let (r, pivots) = self.hstack(&Matrix::identity(n)).rref(f);
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Matrix::from_fn(n, n, |i, j| r[(i, n + j)]))
    }

    /// Keeps a maximal linearly independent prefix-greedy subset of the rows.
    pub fn independent_rows(vectors: &[Vec<Elem>], f: &Gf) -> Vec<Vec<Elem>> {
        let mut kept: Vec<Vec<Elem>> = Vec::new();
        for v in vectors {
            let mut trial = kept.clone();
            trial.push(v.clone());
            if Matrix::from_rows(trial).rank(f) > kept.len() {
                kept.push(v.clone());
            }
        }
        kept
    }
}
