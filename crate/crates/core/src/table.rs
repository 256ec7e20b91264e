//! Finite rack and quandle operation tables and their scalar invariants.
//!
//! Elements are `0..n`. The operation is right-distributive:
//! `table[x][y] = x * y`, and every column `x ↦ x * y` is the right
//! translation `R_y`.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::par;
use crate::perm::{self, GroupError, Permutation, PermutationGroup, DEFAULT_CLOSURE_CAP};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ValidationError {
    #[error("table is empty")]
    Empty,
    #[error("row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry ({row}, {col}) = {value} is outside 0..{order}")]
    OutOfRangeEntry {
        row: usize,
        col: usize,
        value: i64,
        order: usize,
    },
    #[error("rack axiom 1 fails: column {0} is not a bijection")]
    ColumnNotBijective(usize),
    #[error("rack axiom 2 fails: (a*b)*c != (a*c)*(b*c) at a={0}, b={1}, c={2}")]
    SelfDistributivityFails(usize, usize, usize),
    #[error("idempotency fails: {0}*{0} != {0}")]
    IdempotencyFails(usize),
    #[error("inner representation is ill-defined at columns {0} and {1}")]
    InnQuandleIllDefined(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Rack,
    Quandle,
}

/// A validated finite rack. `is_quandle` records idempotency.
#[derive(Clone, PartialEq, Eq)]
pub struct QuandleTable {
    order: usize,
    table: Vec<u32>,
    is_quandle: bool,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for QuandleTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QuandleTable")
            .field("order", &self.order)
            .field("rows", &self.rows())
            .finish()
    }
}

impl QuandleTable {
    /// Validates a raw 0-based table. Rack axioms are always enforced;
    /// idempotency only in [`Mode::Quandle`].
    pub fn from_rows(rows: &[Vec<i64>], mode: Mode) -> Result<Self, ValidationError> {
        let n = rows.len();
        if n == 0 {
            return Err(ValidationError::Empty);
        }
        let mut table = Vec::with_capacity(n * n);
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(ValidationError::NotSquare {
                    row,
                    len: r.len(),
                    expected: n,
                });
            }
            for (col, &value) in r.iter().enumerate() {
                if value < 0 || value as u64 >= n as u64 {
                    return Err(ValidationError::OutOfRangeEntry {
                        row,
                        col,
                        value,
                        order: n,
                    });
                }
                table.push(value as u32);
            }
        }
        Self::from_flat(n, table, mode)
    }

    /// Builds from `op(x, y) = x * y`, then validates.
    pub fn from_fn<F>(n: usize, mode: Mode, op: F) -> Result<Self, ValidationError>
    where
        F: Fn(usize, usize) -> usize,
    {
        if n == 0 {
            return Err(ValidationError::Empty);
        }
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                let v = op(x, y);
                if v >= n {
                    return Err(ValidationError::OutOfRangeEntry {
                        row: x,
                        col: y,
                        value: v as i64,
                        order: n,
                    });
                }
                table.push(v as u32);
            }
        }
        Self::from_flat(n, table, mode)
    }

    pub(crate) fn from_flat(
        n: usize,
        table: Vec<u32>,
        mode: Mode,
    ) -> Result<Self, ValidationError> {
        debug_assert_eq!(table.len(), n * n);
        let t = Self {
            order: n,
            table,
            is_quandle: false,
            labels: None,
        };
        t.check_columns()?;
        t.check_distributive()?;
        let idem = (0..n).find(|&x| t.op(x, x) != x);
        match (mode, idem) {
            (Mode::Quandle, Some(x)) => Err(ValidationError::IdempotencyFails(x)),
            (_, idem) => Ok(Self {
                is_quandle: idem.is_none(),
                ..t
            }),
        }
    }

    fn check_columns(&self) -> Result<(), ValidationError> {
        let n = self.order;
        let mut seen = vec![false; n];
        for y in 0..n {
            seen.iter_mut().for_each(|s| *s = false);
            for x in 0..n {
                let v = self.op(x, y);
                if seen[v] {
                    return Err(ValidationError::ColumnNotBijective(y));
                }
                seen[v] = true;
            }
        }
        Ok(())
    }

    fn check_distributive(&self) -> Result<(), ValidationError> {
        let n = self.order;
        let hit = par::find_first(0..n, |a| {
            for b in 0..n {
                let ab = self.op(a, b);
                for c in 0..n {
                    if self.op(ab, c) != self.op(self.op(a, c), self.op(b, c)) {
                        return Some((b, c));
                    }
                }
            }
            None
        });
        match hit {
            Some((a, (b, c))) => Err(ValidationError::SelfDistributivityFails(a, b, c)),
            None => Ok(()),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.order, "one label per element");
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_quandle(&self) -> bool {
        self.is_quandle
    }

    /// `x * y`.
    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.order + y] as usize
    }

    pub(crate) fn flat(&self) -> &[u32] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order)
            .map(|x| (0..self.order).map(|y| self.op(x, y)).collect())
            .collect()
    }

    /// The table with rows and columns swapped (left-distributive input).
    pub fn transpose_rows(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let n = rows.len();
        (0..n)
            .map(|x| (0..n).map(|y| rows.get(y).and_then(|r| r.get(x)).copied().unwrap_or(-1)).collect())
            .collect()
    }

    /// Right translation `R_b: x ↦ x * b`.
    pub fn translate(&self, b: usize) -> Permutation {
        assert!(b < self.order, "element {b} out of range");
        Permutation::from_images_unchecked((0..self.order).map(|x| self.op(x, b) as u32).collect())
    }

    pub fn translations(&self) -> Vec<Permutation> {
        (0..self.order).map(|b| self.translate(b)).collect()
    }

    /// Left-associated product `(((x * y1) * y2) ... ) * yk`.
    pub fn product(&self, x: usize, ys: &[usize]) -> usize {
        ys.iter().fold(x, |acc, &y| self.op(acc, y))
    }

    /// `x *^k y`.
    pub fn power(&self, x: usize, y: usize, k: usize) -> usize {
        (0..k).fold(x, |acc, _| self.op(acc, y))
    }

    pub fn inner_group(&self) -> Result<PermutationGroup, GroupError> {
        self.inner_group_with_cap(DEFAULT_CLOSURE_CAP)
    }

    pub fn inner_group_with_cap(&self, cap: usize) -> Result<PermutationGroup, GroupError> {
        PermutationGroup::generate(self.order, self.translations(), cap)
    }

    /// Least `k ≥ 1` with `x *^k y = x` everywhere: lcm of the orders of `R_b`.
    pub fn type_of(&self) -> u64 {
        (0..self.order).fold(1u64, |acc, b| acc.lcm(&self.translate(b).order()))
    }

    pub fn is_connected(&self) -> bool {
        perm::orbit(self.order, &self.translations(), 0).len() == self.order
    }

    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let gens = self.translations();
        let mut done = vec![false; self.order];
        let mut out = Vec::new();
        for x in 0..self.order {
            if !done[x] {
                let o = perm::orbit(self.order, &gens, x);
                o.iter().for_each(|&i| done[i] = true);
                out.push(o);
            }
        }
        out
    }

    /// `(x*y)*(u*v) = (x*u)*(y*v)` for all quadruples.
    pub fn is_medial(&self) -> bool {
        self.medial_witness().is_none()
    }

    pub fn medial_witness(&self) -> Option<[usize; 4]> {
        let n = self.order;
        par::find_first(0..n, |x| {
            for y in 0..n {
                let xy = self.op(x, y);
                for u in 0..n {
                    let xu = self.op(x, u);
                    for v in 0..n {
                        if self.op(xy, self.op(u, v)) != self.op(xu, self.op(y, v)) {
                            return Some([y, u, v]);
                        }
                    }
                }
            }
            None
        })
        .map(|(x, [y, u, v])| [x, y, u, v])
    }

    /// Whether `a ↦ R_a` is injective.
    pub fn is_faithful(&self) -> bool {
        let mut cols = self.translations();
        cols.sort_unstable();
        cols.windows(2).all(|w| w[0] != w[1])
    }

    pub fn is_trivial(&self) -> bool {
        (0..self.order).all(|x| (0..self.order).all(|y| self.op(x, y) == x))
    }

    pub fn invariants(&self) -> Result<InvariantReport, GroupError> {
        self.invariants_with_cap(DEFAULT_CLOSURE_CAP)
    }

    pub fn invariants_with_cap(&self, cap: usize) -> Result<InvariantReport, GroupError> {
        let inn = self.inner_group_with_cap(cap)?;
        Ok(InvariantReport {
            order: self.order,
            is_rack: true,
            is_quandle: self.is_quandle,
            is_connected: inn.orbit(0).len() == self.order,
            is_medial: self.is_medial(),
            is_faithful: self.is_faithful(),
            r#type: self.type_of(),
            inn_order: inn.order(),
            inn_exponent: inn.exponent(),
        })
    }

    /// The quandle of distinct right translations, `R_a ⋆ R_b = R_{a*b}`,
    /// with the surjection sending `x` to the index of `R_x`.
    /// Image elements are numbered by first occurrence.
    pub fn inner_representation(&self) -> Result<(QuandleTable, Vec<usize>), ValidationError> {
        let n = self.order;
        let cols = self.translations();
        let mut reps: Vec<usize> = Vec::new();
        let mut map = vec![0usize; n];
        for x in 0..n {
            match reps.iter().position(|&r| cols[r] == cols[x]) {
                Some(i) => map[x] = i,
                None => {
                    map[x] = reps.len();
                    reps.push(x);
                }
            }
        }
        let m = reps.len();
        let mut table = vec![0u32; m * m];
        for i in 0..m {
            for j in 0..m {
                table[i * m + j] = map[self.op(reps[i], reps[j])] as u32;
            }
        }
        for a in 0..n {
            for b in 0..n {
                if table[map[a] * m + map[b]] as usize != map[self.op(a, b)] {
                    return Err(ValidationError::InnQuandleIllDefined(a, b));
                }
            }
        }
        let mode = if self.is_quandle { Mode::Quandle } else { Mode::Rack };
        Ok((QuandleTable::from_flat(m, table, mode)?, map))
    }

    /// Relabels elements by `perm` (old index ↦ new index).
    pub fn relabel(&self, perm: &[usize]) -> QuandleTable {
        let n = self.order;
        let mut table = vec![0u32; n * n];
        for x in 0..n {
            for y in 0..n {
                table[perm[x] * n + perm[y]] = perm[self.op(x, y)] as u32;
            }
        }
        Self {
            order: n,
            table,
            is_quandle: self.is_quandle,
            labels: None,
        }
    }
}

/// Scalar invariants of a rack.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub order: usize,
    pub is_rack: bool,
    pub is_quandle: bool,
    pub is_connected: bool,
    pub is_medial: bool,
    pub is_faithful: bool,
    #[serde(rename = "type")]
    pub r#type: u64,
    pub inn_order: usize,
    pub inn_exponent: u64,
}

/// Validates a raw 0-based table and computes its invariants.
pub fn validate(rows: &[Vec<i64>], mode: Mode) -> crate::Result<InvariantReport> {
    let t = QuandleTable::from_rows(rows, mode)?;
    Ok(t.invariants()?)
}
