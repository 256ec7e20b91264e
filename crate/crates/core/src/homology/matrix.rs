//! Dense and sparse integer matrices with arbitrary-precision entries.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Dense row-major matrix over `Z`.
#[derive(Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows<T: Into<BigInt> + Copy>(rows: &[Vec<T>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Self::zeros(r, c);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c, "ragged rows");
            for (j, &v) in row.iter().enumerate() {
                m[(i, j)] = v.into();
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

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
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

    pub fn mul(&self, other: &IntegerMatrix) -> IntegerMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[target] += factor * row[source]`.
    pub fn add_row_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let s = &self.entries[source * self.cols + j];
            if !s.is_zero() {
                let v = s * factor;
                self.entries[target * self.cols + j] += v;
            }
        }
    }

    /// `col[target] += factor * col[source]`.
    pub fn add_col_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let s = &self.entries[i * self.cols + source];
            if !s.is_zero() {
                let v = s * factor;
                self.entries[i * self.cols + target] += v;
            }
        }
    }

    pub fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let e = &mut self.entries[i * self.cols + j];
            *e = -std::mem::take(e);
        }
    }

    pub fn negate_col(&mut self, j: usize) {
        for i in 0..self.rows {
            let e = &mut self.entries[i * self.cols + j];
            *e = -std::mem::take(e);
        }
    }

    /// Replaces rows `a`, `b` by `(p a + q b, r a + s b)`.
    pub fn combine_rows(&mut self, a: usize, b: usize, [p, q, r, s]: [&BigInt; 4]) {
        for j in 0..self.cols {
            let x = self.entries[a * self.cols + j].clone();
            let y = self.entries[b * self.cols + j].clone();
            if x.is_zero() && y.is_zero() {
                continue;
            }
            self.entries[a * self.cols + j] = p * &x + q * &y;
            self.entries[b * self.cols + j] = r * &x + s * &y;
        }
    }

    /// Replaces columns `a`, `b` by `(p a + q b, r a + s b)`.
    pub fn combine_cols(&mut self, a: usize, b: usize, [p, q, r, s]: [&BigInt; 4]) {
        for i in 0..self.rows {
            let x = self.entries[i * self.cols + a].clone();
            let y = self.entries[i * self.cols + b].clone();
            if x.is_zero() && y.is_zero() {
                continue;
            }
            self.entries[i * self.cols + a] = p * &x + q * &y;
            self.entries[i * self.cols + b] = r * &x + s * &y;
        }
    }

    /// Determinant by fraction-free (Bareiss) elimination. Square only.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[(k, k)].is_zero() {
                match (k + 1..n).find(|&i| !a[(i, k)].is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                    a[(i, j)] = v;
                }
            }
            prev = a[(k, k)].clone();
        }
        sign * a[(n - 1, n - 1)].clone()
    }

    /// Rank over `Q` by fraction-free elimination.
    pub fn rational_rank(&self) -> usize {
        let mut a = self.clone();
        let (rows, cols) = (a.rows, a.cols);
        let mut rank = 0;
        let mut prev = BigInt::one();
        for c in 0..cols {
            if rank == rows {
                break;
            }
            let Some(p) = (rank..rows).find(|&i| !a[(i, c)].is_zero()) else {
                continue;
            };
            a.swap_rows(p, rank);
            for i in rank + 1..rows {
                for j in c + 1..cols {
                    let v = (&a[(i, j)] * &a[(rank, c)] - &a[(i, c)] * &a[(rank, j)]) / &prev;
                    a[(i, j)] = v;
                }
                a[(i, c)] = BigInt::zero();
            }
            prev = a[(rank, c)].clone();
            rank += 1;
        }
        rank
    }

    pub fn to_sparse(&self) -> SparseMatrix {
        let rows = (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(j, v)| (j, v.clone()))
                    .collect()
            })
            .collect();
        SparseMatrix {
            cols: self.cols,
            rows,
        }
    }

    pub fn max_abs(&self) -> BigInt {
        self.entries.iter().map(|e| e.abs()).max().unwrap_or_default()
    }
}

impl Index<(usize, usize)> for IntegerMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntegerMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for IntegerMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntegerMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Sparse row, column indices strictly increasing, no stored zeros.
pub type SparseRow = Vec<(usize, BigInt)>;

/// Row-sparse matrix over `Z`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparseMatrix {
    pub cols: usize,
    pub rows: Vec<SparseRow>,
}

impl SparseMatrix {
    pub fn new(cols: usize) -> Self {
        Self {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn push_row(&mut self, mut row: SparseRow) {
        row.sort_by_key(|(j, _)| *j);
        let mut merged: SparseRow = Vec::with_capacity(row.len());
        for (j, v) in row {
            match merged.last_mut() {
                Some((lj, lv)) if *lj == j => *lv += v,
                _ => merged.push((j, v)),
            }
        }
        merged.retain(|(_, v)| !v.is_zero());
        debug_assert!(merged.iter().all(|(j, _)| *j < self.cols));
        self.rows.push(merged);
    }

    pub fn to_dense(&self) -> IntegerMatrix {
        let mut m = IntegerMatrix::zeros(self.rows.len(), self.cols);
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row {
                m[(i, *j)] = v.clone();
            }
        }
        m
    }

    /// `self · other`, where `self` is `r × k` and `other` is `k × c`.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.cols, other.rows.len(), "dimension mismatch");
        let mut out = SparseMatrix::new(other.cols);
        for row in &self.rows {
            let mut acc: std::collections::BTreeMap<usize, BigInt> = Default::default();
            for (k, a) in row {
                for (j, b) in &other.rows[*k] {
                    *acc.entry(*j).or_default() += a * b;
                }
            }
            out.push_row(acc.into_iter().collect());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }
}
