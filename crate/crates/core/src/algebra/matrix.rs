use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Zero};

use super::GaussianInt;

/// Dense row-major matrix over the Gaussian integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GaussianMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<GaussianInt>,
}

impl GaussianMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        GaussianMatrix {
            rows,
            cols,
            entries: vec![GaussianInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = GaussianMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = GaussianInt::one();
        }
        m
    }

    /// Builds a matrix from nested rows. Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<GaussianInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        GaussianMatrix {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
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

    pub fn entries(&self) -> &[GaussianInt] {
        &self.entries
    }

    pub fn conjugate_transpose(&self) -> GaussianMatrix {
        let mut t = GaussianMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].conj();
            }
        }
        t
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.conjugate_transpose()
    }

    pub fn scale(&self, k: &GaussianInt) -> GaussianMatrix {
        GaussianMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e * k).collect(),
        }
    }

    /// Matrix product. Panics on a shape mismatch.
    pub fn mul(&self, rhs: &GaussianMatrix) -> GaussianMatrix {
        assert_eq!(self.cols, rhs.rows, "shape mismatch");
        let mut out = GaussianMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> GaussianInt {
        let mut t = GaussianInt::zero();
        for i in 0..self.rows.min(self.cols) {
            t += &self[(i, i)];
        }
        t
    }

    /// `P M Pᵀ` where row/column `i` of the result is row/column `perm[i]` of
    /// `self`.
    pub fn permute(&self, perm: &[usize]) -> GaussianMatrix {
        self.submatrix(perm, perm)
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> GaussianMatrix {
        let mut out = GaussianMatrix::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                out[(a, b)] = self[(i, j)].clone();
            }
        }
        out
    }
}

impl Index<(usize, usize)> for GaussianMatrix {
    type Output = GaussianInt;
    fn index(&self, (i, j): (usize, usize)) -> &GaussianInt {
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for GaussianMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut GaussianInt {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Display for GaussianMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianInt {
        GaussianInt::new(re, im)
    }

    #[test]
    fn hermitian_check() {
        let h = GaussianMatrix::from_rows(vec![vec![g(0, 0), g(0, 1)], vec![g(0, -1), g(0, 0)]]);
        assert!(h.is_hermitian());
        let s = GaussianMatrix::from_rows(vec![vec![g(0, 0), g(1, 0)], vec![g(-1, 0), g(0, 0)]]);
        assert!(!s.is_hermitian());
        assert!(!GaussianMatrix::zeros(2, 3).is_hermitian());
    }

    #[test]
    fn product_and_trace() {
        let a = GaussianMatrix::from_rows(vec![vec![g(1, 1), g(2, 0)], vec![g(0, 0), g(0, 1)]]);
        let p = a.mul(&GaussianMatrix::identity(2));
        assert_eq!(p, a);
        let sq = a.mul(&a);
        // (1+i)^2 = 2i; (1+i)*2 + 2*i = 2+4i; i*i = -1
        assert_eq!(sq[(0, 0)], g(0, 2));
        assert_eq!(sq[(0, 1)], g(2, 4));
        assert_eq!(sq[(1, 1)], g(-1, 0));
        assert_eq!(sq.trace(), g(-1, 2));
    }

    #[test]
    fn permutation_moves_rows_and_columns() {
        let a = GaussianMatrix::from_rows(vec![vec![g(1, 0), g(2, 0)], vec![g(3, 0), g(4, 0)]]);
        let p = a.permute(&[1, 0]);
        assert_eq!(p[(0, 0)], g(4, 0));
        assert_eq!(p[(0, 1)], g(3, 0));
    }
}
