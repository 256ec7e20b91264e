//! Integer row lattices in `Z^dim` kept in Hermite form, with sparse rows.
//!
//! Used to decide membership in the integer span of a generator set and to
//! express span members in the lattice basis.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::{SparseMatrix, SparseRow};

#[derive(Clone, Debug, Default)]
pub struct Lattice {
    dim: usize,
    rows: Vec<SparseRow>,
    /// Leading column → index into `rows`.
    pivots: BTreeMap<usize, usize>,
    reduced: bool,
}

impl Lattice {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            rows: Vec::new(),
            pivots: BTreeMap::new(),
            reduced: true,
        }
    }

    pub fn from_rows<I: IntoIterator<Item = SparseRow>>(dim: usize, rows: I) -> Self {
        let mut l = Self::new(dim);
        for r in rows {
            l.insert(r);
        }
        l.hermite_reduce();
        l
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds a vector to the generating set. Returns whether the lattice grew.
    pub fn insert(&mut self, mut v: SparseRow) -> bool {
        debug_assert!(v.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(v.iter().all(|(j, x)| *j < self.dim && !x.is_zero()));
        loop {
            let Some((c, a)) = v.first().cloned() else {
                return false;
            };
            let Some(&r) = self.pivots.get(&c) else {
                if a.is_negative() {
                    v.iter_mut().for_each(|(_, x)| *x = -std::mem::take(x));
                }
                self.pivots.insert(c, self.rows.len());
                self.rows.push(v);
                self.reduced = false;
                self.keep_small();
                return true;
            };
            let p = self.rows[r][0].1.clone();
            if a.is_multiple_of(&p) {
                let q = -(&a / &p);
                v = axpy(&v, &self.rows[r], &BigInt::from(1), &q);
                continue;
            }
            let e = p.extended_gcd(&a);
            let row = std::mem::take(&mut self.rows[r]);
            // [[x, y], [a/g, -p/g]] is unimodular
            let new_row = axpy(&row, &v, &e.x, &e.y);
            let new_v = axpy(&row, &v, &(&a / &e.gcd), &-(&p / &e.gcd));
            debug_assert!(new_row.first().map(|(j, _)| *j) == Some(c));
            self.rows[r] = new_row;
            self.reduced = false;
            v = new_v;
            if v.is_empty() {
                self.keep_small();
                return true;
            }
        }
    }

    /// Re-reduces once entries grow, which keeps intermediate coefficients
    /// from exploding over long insertion sequences.
    fn keep_small(&mut self) {
        const MAX_BITS: u64 = 64;
        if self.rows.iter().any(|r| r.iter().any(|(_, x)| x.bits() > MAX_BITS)) {
            self.hermite_reduce();
        }
    }

    /// Puts the basis in reduced Hermite form: rows sorted by pivot,
    /// positive pivots, entries above each pivot in `[0, pivot)`.
    pub fn hermite_reduce(&mut self) {
        if self.reduced {
            return;
        }
        let order: Vec<usize> = self.pivots.values().copied().collect();
        let mut rows: Vec<SparseRow> = order.iter().map(|&i| std::mem::take(&mut self.rows[i])).collect();
        for r in 0..rows.len() {
            if rows[r][0].1.is_negative() {
                rows[r].iter_mut().for_each(|(_, x)| *x = -std::mem::take(x));
            }
            let (c, p) = rows[r][0].clone();
            for i in 0..r {
                let Ok(pos) = rows[i].binary_search_by_key(&c, |(j, _)| *j) else {
                    continue;
                };
                let q = rows[i][pos].1.div_floor(&p);
                if !q.is_zero() {
                    rows[i] = axpy(&rows[i], &rows[r], &BigInt::from(1), &-q);
                }
            }
        }
        self.pivots = rows.iter().enumerate().map(|(i, r)| (r[0].0, i)).collect();
        self.rows = rows;
        self.reduced = true;
    }

    /// Basis rows in pivot order (after [`Lattice::hermite_reduce`]).
    pub fn basis(&mut self) -> &[SparseRow] {
        self.hermite_reduce();
        &self.rows
    }

    pub fn basis_matrix(&mut self) -> SparseMatrix {
        let dim = self.dim;
        SparseMatrix {
            cols: dim,
            rows: self.basis().to_vec(),
        }
    }

    /// Coefficients of `v` in the current basis rows, or `None` if `v` is
    /// not in the lattice.
    pub fn coordinates(&self, v: &SparseRow) -> Option<Vec<BigInt>> {
        let mut coords = vec![BigInt::zero(); self.rows.len()];
        let mut v = v.clone();
        while let Some((c, a)) = v.first().cloned() {
            let &r = self.pivots.get(&c)?;
            let p = &self.rows[r][0].1;
            if !a.is_multiple_of(p) {
                return None;
            }
            let q = &a / p;
            v = axpy(&v, &self.rows[r], &BigInt::from(1), &-&q);
            coords[r] = q;
        }
        Some(coords)
    }

    pub fn contains(&self, v: &SparseRow) -> bool {
        self.coordinates(v).is_some()
    }
}

/// `s·a + t·b` for sorted sparse rows.
fn axpy(a: &SparseRow, b: &SparseRow, s: &BigInt, t: &BigInt) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    loop {
        let (col, v) = match (a.get(i), b.get(j)) {
            (Some((ca, va)), Some((cb, vb))) if ca == cb => {
                i += 1;
                j += 1;
                (*ca, s * va + t * vb)
            }
            (Some((ca, va)), Some((cb, _))) if ca < cb => {
                i += 1;
                (*ca, s * va)
            }
            (Some((ca, va)), None) => {
                i += 1;
                (*ca, s * va)
            }
            (_, Some((cb, vb))) => {
                j += 1;
                (*cb, t * vb)
            }
            (None, None) => break,
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::matrix::IntegerMatrix;
    use crate::homology::snf::hermite_normal_form;

    fn sparse(v: &[i64]) -> SparseRow {
        v.iter()
            .enumerate()
            .filter(|(_, x)| **x != 0)
            .map(|(j, x)| (j, BigInt::from(*x)))
            .collect()
    }

    #[test]
    fn membership() {
        let l = Lattice::from_rows(3, [sparse(&[2, 0, 0]), sparse(&[0, 3, 3])]);
        assert!(l.contains(&sparse(&[4, 6, 6])));
        assert!(l.contains(&sparse(&[0, 0, 0])));
        assert!(!l.contains(&sparse(&[1, 0, 0])));
        assert!(!l.contains(&sparse(&[0, 3, 0])));
        assert_eq!(
            l.coordinates(&sparse(&[-2, 9, 9])).unwrap(),
            vec![BigInt::from(-1), BigInt::from(3)]
        );
    }

    #[test]
    fn gcd_merge() {
        // 4 and 6 generate 2Z in the first coordinate
        let mut l = Lattice::from_rows(2, [sparse(&[4, 1]), sparse(&[6, 0])]);
        assert_eq!(l.rank(), 2);
        assert!(l.contains(&sparse(&[2, -1])));
        assert!(l.contains(&sparse(&[0, 3])));
        assert!(!l.contains(&sparse(&[2, 0])));
        // index of the lattice is |det| = 6
        let b = l.basis().to_vec();
        let dense = SparseMatrix { cols: 2, rows: b }.to_dense();
        assert_eq!(dense.determinant().abs(), BigInt::from(6));
    }

    #[test]
    fn matches_dense_hermite() {
        let rows = vec![
            vec![2i64, 3, 6, 2, 0],
            vec![5, 6, 1, 6, 1],
            vec![8, 3, 1, 1, -4],
            vec![7, 9, 7, 8, 1],
            vec![0, 0, 0, 0, 0],
        ];
        let hf = hermite_normal_form(&IntegerMatrix::from_rows(&rows));
        let mut l = Lattice::from_rows(5, rows.iter().map(|r| sparse(r)));
        let basis = l.basis_matrix().to_dense();
        for i in 0..hf.rank() {
            assert_eq!(basis.row(i), hf.h.row(i));
        }
        assert_eq!(basis.rows(), hf.rank());
    }
}
