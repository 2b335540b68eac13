//! Non-negative integer matrices.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::linalg::{q, QMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ShapeError {
    #[error("matrix must have at least one row and one column")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    Ragged {
        row: usize,
        len: usize,
        expected: usize,
    },
}

/// A non-negative integer matrix with at least one row and one column.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows > 0 && cols > 0, "IntMatrix must be non-empty");
        Self {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(size: usize) -> Self {
        Self::from_fn(size, size, |i, j| u64::from(i == j))
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> u64) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.data[i * cols + j] = f(i, j);
            }
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<u64>>) -> Result<Self, ShapeError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if nrows == 0 || ncols == 0 {
            return Err(ShapeError::Empty);
        }
        if let Some((row, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != ncols) {
            return Err(ShapeError::Ragged {
                row,
                len: r.len(),
                expected: ncols,
            });
        }
        Ok(Self {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// `v * w^T`.
    pub fn outer(v: &[u64], w: &[u64]) -> Self {
        Self::from_fn(v.len(), w.len(), |i, j| v[i] * w[j])
    }

    /// The `size x size` matrix whose only nonzero row is `row` at `index`.
    pub fn single_row(size: usize, index: usize, row: &[u64]) -> Self {
        assert_eq!(row.len(), size);
        Self::from_fn(size, size, |i, j| if i == index { row[j] } else { 0 })
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

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[u64] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_positive(&self) -> bool {
        self.data.iter().all(|&x| x > 0)
    }

    pub fn trace(&self) -> u64 {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn diagonal(&self) -> Vec<u64> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i))
            .collect()
    }

    pub fn nonzero_rows(&self) -> Vec<usize> {
        (0..self.rows)
            .filter(|&i| self.row(i).iter().any(|&x| x != 0))
            .collect()
    }

    pub fn has_zero_column(&self) -> bool {
        (0..self.cols).any(|j| (0..self.rows).all(|i| self.get(i, j) == 0))
    }

    pub fn has_zero_row(&self) -> bool {
        (0..self.rows).any(|i| self.row(i).iter().all(|&x| x == 0))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(
            self.cols, other.rows,
            "dimension mismatch in IntMatrix::mul"
        );
        Self::from_fn(self.rows, other.cols, |i, j| {
            (0..self.cols)
                .map(|k| self.get(i, k) * other.get(k, j))
                .sum()
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `self - other`, or `None` when some entry would go negative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()?;
        Some(Self {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn scale(&self, k: u64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * k).collect(),
        }
    }

    /// Entrywise `self <= other`.
    pub fn le(&self, other: &Self) -> bool {
        self.data.iter().zip(&other.data).all(|(a, b)| a <= b)
    }

    /// Simultaneous row and column permutation: entry `(a, b)` of the result
    /// is entry `(perm[a], perm[b])` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert!(self.is_square() && perm.len() == self.rows);
        Self::from_fn(self.rows, self.cols, |a, b| self.get(perm[a], perm[b]))
    }

    /// Irreducible in the Perron-Frobenius sense: the support digraph is
    /// strongly connected.
    pub fn is_irreducible(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let n = self.rows;
        let reach = |forward: bool| {
            let mut seen = vec![false; n];
            let mut stack = vec![0];
            seen[0] = true;
            while let Some(i) = stack.pop() {
                #[allow(clippy::needless_range_loop)]
                for j in 0..n {
                    let edge = if forward {
                        self.get(i, j)
                    } else {
                        self.get(j, i)
                    };
                    if edge > 0 && !seen[j] {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
            seen.into_iter().all(|s| s)
        };
        reach(true) && reach(false)
    }

    pub fn to_qmatrix(&self) -> QMatrix {
        QMatrix::from_rows(
            (0..self.rows)
                .map(|i| self.row(i).iter().map(|&x| q(x as i64)).collect())
                .collect(),
        )
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_rows())
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .data
            .iter()
            .map(|x| x.to_string().len())
            .max()
            .unwrap_or(1);
        for i in 0..self.rows {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = self.row(i).iter().map(|x| format!("{x:>width$}")).collect();
            write!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for IntMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_rows().serialize(s)
    }
}

impl<'de> Deserialize<'de> for IntMatrix {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let rows = Vec::<Vec<u64>>::deserialize(d)?;
        IntMatrix::from_rows(rows).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn irreducibility() {
        let m = IntMatrix::from_rows(vec![vec![2, 1], vec![2, 1]]).unwrap();
        assert!(m.is_irreducible());
        let t = IntMatrix::from_rows(vec![vec![2, 1], vec![0, 0]]).unwrap();
        assert!(!t.is_irreducible());
    }

    #[test]
    fn permutation_and_products() {
        let m = IntMatrix::from_rows(vec![vec![1, 2], vec![1, 2]]).unwrap();
        let p = m.permuted(&[1, 0]);
        assert_eq!(
            p,
            IntMatrix::from_rows(vec![vec![2, 1], vec![2, 1]]).unwrap()
        );
        assert_eq!(p.mul(&p), p.scale(3));
        assert_eq!(p.trace(), 3);
        assert!(p.checked_sub(&p.scale(2)).is_none());
    }

    #[test]
    fn rejects_ragged_json() {
        assert!(serde_json::from_str::<IntMatrix>("[[1,2],[3]]").is_err());
        assert!(serde_json::from_str::<IntMatrix>("[]").is_err());
        let m: IntMatrix = serde_json::from_str("[[1,2],[3,4]]").unwrap();
        assert_eq!(serde_json::to_string(&m).unwrap(), "[[1,2],[3,4]]");
    }
}
