//! Dense square matrices over the integers.
//!
//! All graph-side identities checked by this crate are exact integer
//! statements (entries count neighbors or paths), so no floating point is
//! involved anywhere.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

/// A square integer matrix with rows and columns indexed by vertices in a
/// fixed declared order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    n: usize,
    data: Vec<i64>,
}

impl Matrix {
    /// The zero matrix of size `n`.
    pub fn zeros(n: usize) -> Matrix {
        Matrix {
            n,
            data: vec![0; n * n],
        }
    }

    /// The identity matrix of size `n`.
    pub fn identity(n: usize) -> Matrix {
        let mut m = Matrix::zeros(n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from rows; all rows must have length `rows.len()`.
    pub fn from_rows(rows: &[Vec<i64>]) -> Matrix {
        let n = rows.len();
        let mut m = Matrix::zeros(n);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "matrix rows must be square");
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, v);
            }
        }
        m
    }

    /// Side length.
    pub fn size(&self) -> usize {
        self.n
    }

    /// Entry at `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.data[row * self.n + col]
    }

    /// Sets the entry at `(row, col)`.
    pub fn set(&mut self, row: usize, col: usize, value: i64) {
        self.data[row * self.n + col] = value;
    }

    /// Matrix product `self · other`.
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let mut out = Matrix::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let v = self.get(r, k);
                if v == 0 {
                    continue;
                }
                for c in 0..n {
                    out.data[r * n + c] += v * other.get(k, c);
                }
            }
        }
        out
    }

    /// Entrywise sum.
    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a += b;
        }
        out
    }

    /// Entrywise difference.
    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a -= b;
        }
        out
    }

    /// True iff every entry is zero.
    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// Sum of the diagonal entries.
    pub fn trace(&self) -> i64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    /// Rows as plain vectors, handy for serialization.
    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|r| (0..self.n).map(|c| self.get(r, c)).collect())
            .collect()
    }
}

impl fmt::Display for Matrix {
    /// One row per line, entries separated by single spaces.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut line = String::new();
        for r in 0..self.n {
            line.clear();
            for c in 0..self.n {
                if c > 0 {
                    line.push(' ');
                }
                let _ = write!(line, "{}", self.get(r, c));
            }
            if r > 0 {
                f.write_str("\n")?;
            }
            f.write_str(&line)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiply_and_identity() {
        let a = Matrix::from_rows(&[vec![1, 2], vec![3, 4]]);
        let i = Matrix::identity(2);
        assert_eq!(a.mul(&i), a);
        assert_eq!(i.mul(&a), a);
        let b = Matrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert_eq!(a.mul(&b), Matrix::from_rows(&[vec![2, 1], vec![4, 3]]));
        assert_ne!(a.mul(&b), b.mul(&a));
    }

    #[test]
    fn display_rows() {
        let a = Matrix::from_rows(&[vec![1, 0], vec![-2, 7]]);
        assert_eq!(a.to_string(), "1 0\n-2 7");
    }
}
