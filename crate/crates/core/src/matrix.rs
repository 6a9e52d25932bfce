//! Dense integer matrices with exact fraction-free elimination.

use std::fmt;
use std::ops::{Index, IndexMut, Mul, Sub};

use serde::{Deserialize, Serialize};

/// Row-major dense matrix over the integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    /// Builds a matrix from rows; panics if the rows are ragged.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self { rows: r, cols: c, data: rows.concat() }
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[Vec<i64>]) -> Self {
        let c = columns.len();
        let r = columns.first().map_or(0, Vec::len);
        let mut m = Self::zeros(r, c);
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), r, "ragged columns");
            for (i, &x) in col.iter().enumerate() {
                m[(i, j)] = x;
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

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<i64> {
        (0..self.rows).map(|i| self[(i, j)]).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)];
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Divides every entry by `d`, returning `None` unless all divisions are exact.
    pub fn div_exact(&self, d: i64) -> Option<Self> {
        if d == 0 || self.data.iter().any(|x| x % d != 0) {
            return None;
        }
        Some(Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x / d).collect() })
    }

    /// Rank over the rationals, computed by Bareiss elimination.
    pub fn rank(&self) -> usize {
        let (rank, _) = bareiss(self.rows, self.cols, self.widened());
        rank
    }

    /// Determinant of a square matrix, computed by Bareiss elimination.
    pub fn det(&self) -> i64 {
        assert!(self.is_square(), "determinant of a non-square matrix");
        if self.rows == 0 {
            return 1;
        }
        let (rank, det) = bareiss(self.rows, self.cols, self.widened());
        if rank < self.rows {
            0
        } else {
            i64::try_from(det).expect("determinant overflows i64")
        }
    }

    /// Classical adjugate: `self * adj = det * I`.
    pub fn adjugate(&self) -> Self {
        assert!(self.is_square());
        let n = self.rows;
        let mut adj = Self::zeros(n, n);
        if n == 1 {
            adj[(0, 0)] = 1;
            return adj;
        }
        for i in 0..n {
            for j in 0..n {
                let minor = self.minor(i, j);
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                adj[(j, i)] = sign * minor.det();
            }
        }
        adj
    }

    fn minor(&self, skip_row: usize, skip_col: usize) -> Self {
        let rows: Vec<Vec<i64>> = (0..self.rows)
            .filter(|&i| i != skip_row)
            .map(|i| {
                self.row(i)
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != skip_col)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        Self::from_rows(&rows)
    }

    fn widened(&self) -> Vec<i128> {
        self.data.iter().map(|&x| x as i128).collect()
    }
}

/// Fraction-free row reduction. Returns the rank and, for full-rank square
/// input, the determinant (sign-corrected for row swaps).
fn bareiss(rows: usize, cols: usize, mut a: Vec<i128>) -> (usize, i128) {
    let mut prev: i128 = 1;
    let mut rank = 0;
    let mut sign = 1;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&r| a[r * cols + col] != 0) else {
            continue;
        };
        if p != rank {
            for j in 0..cols {
                a.swap(p * cols + j, rank * cols + j);
            }
            sign = -sign;
        }
        let pivot = a[rank * cols + col];
        for i in rank + 1..rows {
            let factor = a[i * cols + col];
            for j in col + 1..cols {
                let v = pivot * a[i * cols + j] - factor * a[rank * cols + j];
                debug_assert_eq!(v % prev, 0, "Bareiss division must be exact");
                a[i * cols + j] = v / prev;
            }
            a[i * cols + col] = 0;
        }
        prev = pivot;
        rank += 1;
    }
    (rank, sign * prev)
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = i64;
    fn index(&self, (i, j): (usize, usize)) -> &i64 {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut i64 {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    out.data[i * rhs.cols + j] += a * rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;
    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Ratio;
    use proptest::prelude::*;

    // Independent oracle: Gaussian elimination over the rationals.
    fn rational_rank(m: &IntMatrix) -> usize {
        let mut a: Vec<Vec<Ratio<i128>>> = m
            .to_rows()
            .into_iter()
            .map(|r| r.into_iter().map(|x| Ratio::from_integer(x as i128)).collect())
            .collect();
        let (rows, cols) = (m.rows(), m.cols());
        let mut rank = 0;
        for col in 0..cols {
            let Some(p) = (rank..rows).find(|&r| a[r][col] != Ratio::from_integer(0)) else {
                continue;
            };
            a.swap(p, rank);
            for i in 0..rows {
                if i != rank {
                    let f = a[i][col] / a[rank][col];
                    for j in 0..cols {
                        let v = a[rank][j] * f;
                        a[i][j] -= v;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn identity_rank_and_det() {
        let id = IntMatrix::identity(5);
        assert_eq!(id.rank(), 5);
        assert_eq!(id.det(), 1);
        assert_eq!(IntMatrix::zeros(3, 3).rank(), 0);
    }

    #[test]
    fn cartan_determinants() {
        let a3 = IntMatrix::from_rows(&[vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]]);
        assert_eq!(a3.det(), 4);
        let adj = a3.adjugate();
        assert_eq!(&a3 * &adj, {
            let mut d = IntMatrix::identity(3);
            for i in 0..3 {
                d[(i, i)] = 4;
            }
            d
        });
    }

    #[test]
    fn rank_with_skipped_columns() {
        let m = IntMatrix::from_rows(&[vec![0, 2, 4], vec![0, 1, 2], vec![0, 3, 7]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.det(), 0);
    }

    proptest! {
        #[test]
        fn bareiss_rank_matches_rational_rank(
            rows in 1usize..6, cols in 1usize..6,
            seed in proptest::collection::vec(-3i64..=3, 36)
        ) {
            let data: Vec<Vec<i64>> = (0..rows).map(|i| seed[i * 6..i * 6 + cols].to_vec()).collect();
            let m = IntMatrix::from_rows(&data);
            prop_assert_eq!(m.rank(), rational_rank(&m));
        }
    }
}
