//! Smith and Hermite normal forms over `Z`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::{IntegerMatrix, SparseMatrix, SparseRow};

/// `U · M · V = D` with `D` diagonal, `d_1 | d_2 | ...`, `U` and `V`
/// unimodular. Trailing diagonal entries are zero past the rank.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub diagonal: Vec<BigInt>,
    pub left: Option<IntegerMatrix>,
    pub right: Option<IntegerMatrix>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().take_while(|d| !d.is_zero()).count()
    }

    /// The nonzero diagonal entries.
    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.diagonal[..self.rank()]
    }

    /// `D` as a full `rows × cols` matrix.
    pub fn diagonal_matrix(&self, rows: usize, cols: usize) -> IntegerMatrix {
        let mut d = IntegerMatrix::zeros(rows, cols);
        for (i, v) in self.diagonal.iter().enumerate() {
            d[(i, i)] = v.clone();
        }
        d
    }
}

/// Smith normal form with both transforms.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithForm {
    smith_with(m, true, true)
}

/// Smith normal form; `left`/`right` choose which transforms to accumulate.
pub fn smith_with(m: &IntegerMatrix, left: bool, right: bool) -> SmithForm {
    let (r, c) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = left.then(|| IntegerMatrix::identity(r));
    let mut v = right.then(|| IntegerMatrix::identity(c));
    let steps = r.min(c);
    let mut diagonal = Vec::with_capacity(steps);

    'outer: for t in 0..steps {
        loop {
            let Some((pi, pj)) = min_abs_nonzero(&a, t) else {
                break 'outer;
            };
            a.swap_rows(t, pi);
            if let Some(u) = u.as_mut() {
                u.swap_rows(t, pi);
            }
            a.swap_cols(t, pj);
            if let Some(v) = v.as_mut() {
                v.swap_cols(t, pj);
            }

            let mut clean = true;
            for i in t + 1..r {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = -a[(i, t)].div_floor(&a[(t, t)]);
                a.add_row_multiple(i, t, &q);
                if let Some(u) = u.as_mut() {
                    u.add_row_multiple(i, t, &q);
                }
                clean &= a[(i, t)].is_zero();
            }
            for j in t + 1..c {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = -a[(t, j)].div_floor(&a[(t, t)]);
                a.add_col_multiple(j, t, &q);
                if let Some(v) = v.as_mut() {
                    v.add_col_multiple(j, t, &q);
                }
                clean &= a[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }

            // the pivot must divide the remaining block
            let p = a[(t, t)].clone();
            let bad = (t + 1..r)
                .flat_map(|i| (t + 1..c).map(move |j| (i, j)))
                .find(|&(i, j)| !a[(i, j)].is_multiple_of(&p));
            match bad {
                Some((i, _)) => {
                    let one = BigInt::one();
                    a.add_row_multiple(t, i, &one);
                    if let Some(u) = u.as_mut() {
                        u.add_row_multiple(t, i, &one);
                    }
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            if let Some(u) = u.as_mut() {
                u.negate_row(t);
            }
        }
        diagonal.push(a[(t, t)].clone());
    }
    diagonal.resize(steps, BigInt::zero());
    SmithForm {
        diagonal,
        left: u,
        right: v,
    }
}

/// Smallest nonzero `|a[i][j]|` with `i, j >= t`, ties broken row-major.
fn min_abs_nonzero(a: &IntegerMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in t..a.rows() {
        for j in t..a.cols() {
            let v = &a[(i, j)];
            if v.is_zero() {
                continue;
            }
            let abs = v.abs();
            if best.as_ref().is_none_or(|(_, _, b)| abs < *b) {
                let unit = abs.is_one();
                best = Some((i, j, abs));
                if unit {
                    return best.map(|(i, j, _)| (i, j));
                }
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Row-style Hermite normal form: `U · M = H`, `U` unimodular, `H` in row
/// echelon form with positive pivots and entries above each pivot reduced
/// into `[0, pivot)`.
#[derive(Clone, Debug)]
pub struct HermiteForm {
    pub h: IntegerMatrix,
    pub u: IntegerMatrix,
    /// Pivot column of each nonzero row of `h`.
    pub pivots: Vec<usize>,
}

impl HermiteForm {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub fn hermite_normal_form(m: &IntegerMatrix) -> HermiteForm {
    let (r, c) = (m.rows(), m.cols());
    let mut h = m.clone();
    let mut u = IntegerMatrix::identity(r);
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..c {
        if row == r {
            break;
        }
        for i in row + 1..r {
            if h[(i, col)].is_zero() {
                continue;
            }
            if h[(row, col)].is_zero() {
                h.swap_rows(row, i);
                u.swap_rows(row, i);
                continue;
            }
            let a = h[(row, col)].clone();
            let b = h[(i, col)].clone();
            let e = a.extended_gcd(&b);
            // [[x, y], [-b/g, a/g]] has determinant 1
            let (p, q) = (e.x, e.y);
            let rr = -(&b / &e.gcd);
            let s = &a / &e.gcd;
            h.combine_rows(row, i, [&p, &q, &rr, &s]);
            u.combine_rows(row, i, [&p, &q, &rr, &s]);
        }
        if h[(row, col)].is_zero() {
            continue;
        }
        if h[(row, col)].is_negative() {
            h.negate_row(row);
            u.negate_row(row);
        }
        let p = h[(row, col)].clone();
        for i in 0..row {
            let q = -h[(i, col)].div_floor(&p);
            h.add_row_multiple(i, row, &q);
            u.add_row_multiple(i, row, &q);
        }
        pivots.push(col);
        row += 1;
    }
    HermiteForm { h, u, pivots }
}

/// Nonzero invariant factors of a sparse matrix, in divisibility order.
///
/// Unit pivots are eliminated sparsely first; the block that remains is
/// finished with a dense Smith reduction.
pub fn invariant_factors(m: &SparseMatrix) -> Vec<BigInt> {
    let mut rows: Vec<SparseRow> = m.rows.iter().filter(|r| !r.is_empty()).cloned().collect();
    let mut col_rows: Vec<Vec<usize>> = vec![Vec::new(); m.cols];
    for (i, row) in rows.iter().enumerate() {
        for (j, _) in row {
            col_rows[*j].push(i);
        }
    }
    let mut alive = vec![true; rows.len()];
    let mut units = 0usize;

    loop {
        let mut progress = false;
        for p in 0..rows.len() {
            if !alive[p] || rows[p].is_empty() {
                continue;
            }
            // unit entry in the sparsest column
            let pick = rows[p]
                .iter()
                .filter(|(_, v)| v.abs().is_one())
                .min_by_key(|(j, _)| col_rows[*j].len())
                .map(|(j, v)| (*j, v.clone()));
            let Some((c, pv)) = pick else { continue };
            let pivot_row = std::mem::take(&mut rows[p]);
            alive[p] = false;
            let others = std::mem::take(&mut col_rows[c]);
            for i in others {
                if i == p || !alive[i] {
                    continue;
                }
                let Ok(pos) = rows[i].binary_search_by_key(&c, |(j, _)| *j) else {
                    continue;
                };
                // pv = ±1, so dividing by it is multiplying by it
                let f = -(&rows[i][pos].1 * &pv);
                let (merged, fresh) = axpy(&rows[i], &pivot_row, &f);
                rows[i] = merged;
                for j in fresh {
                    col_rows[j].push(i);
                }
            }
            units += 1;
            progress = true;
        }
        if !progress {
            break;
        }
    }

    let rest: Vec<usize> = (0..rows.len())
        .filter(|&i| alive[i] && !rows[i].is_empty())
        .collect();
    let mut factors = vec![BigInt::one(); units];
    if !rest.is_empty() {
        let mut cols: Vec<usize> = rest
            .iter()
            .flat_map(|&i| rows[i].iter().map(|(j, _)| *j))
            .collect();
        cols.sort_unstable();
        cols.dedup();
        let mut dense = IntegerMatrix::zeros(rest.len(), cols.len());
        for (ri, &i) in rest.iter().enumerate() {
            for (j, v) in &rows[i] {
                let cj = cols.binary_search(j).expect("column present");
                dense[(ri, cj)] = v.clone();
            }
        }
        let snf = smith_with(&dense, false, false);
        factors.extend(snf.invariant_factors().iter().cloned());
    }
    factors
}

/// `a + f·b` for sorted sparse rows; also returns columns new to `a`.
fn axpy(a: &SparseRow, b: &SparseRow, f: &BigInt) -> (SparseRow, Vec<usize>) {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut fresh = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map(|(c, _)| *c);
        let cb = b.get(j).map(|(c, _)| *c);
        match (ca, cb) {
            (Some(x), Some(y)) if x == y => {
                let v = &a[i].1 + f * &b[j].1;
                if !v.is_zero() {
                    out.push((x, v));
                }
                i += 1;
                j += 1;
            }
            (Some(x), Some(y)) if x < y => {
                out.push(a[i].clone());
                i += 1;
            }
            (Some(_), None) => {
                out.push(a[i].clone());
                i += 1;
            }
            (_, Some(y)) => {
                out.push((y, f * &b[j].1));
                fresh.push(y);
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    (out, fresh)
}

pub fn rank(m: &SparseMatrix) -> usize {
    invariant_factors(m).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[Vec<i64>]) -> IntegerMatrix {
        IntegerMatrix::from_rows(rows)
    }

    fn check_smith(m: &IntegerMatrix) -> SmithForm {
        let s = smith_normal_form(m);
        let (u, v) = (s.left.as_ref().unwrap(), s.right.as_ref().unwrap());
        assert_eq!(u.mul(m).mul(v), s.diagonal_matrix(m.rows(), m.cols()));
        assert!(u.determinant().abs().is_one());
        assert!(v.determinant().abs().is_one());
        let f = s.invariant_factors();
        assert!(f.windows(2).all(|w| w[1].is_multiple_of(&w[0])));
        assert!(f.iter().all(|d| d.is_positive()));
        s
    }

    #[test]
    fn smith_examples() {
        let s = check_smith(&mat(&[vec![1, 0], vec![0, 1]]));
        assert_eq!(s.diagonal, vec![BigInt::from(1), BigInt::from(1)]);
        let s = check_smith(&mat(&[vec![2, 4], vec![6, 8]]));
        assert_eq!(s.diagonal, vec![BigInt::from(2), BigInt::from(4)]);
        let s = check_smith(&IntegerMatrix::zeros(3, 2));
        assert_eq!(s.rank(), 0);
        assert!(s.diagonal.iter().all(Zero::is_zero));
        let s = check_smith(&mat(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(s.invariant_factors(), &[BigInt::from(1), BigInt::from(6)]);
        let s = check_smith(&mat(&[vec![0, 0, 4], vec![0, 6, 0], vec![10, 0, 0], vec![1, 1, 1]]));
        assert_eq!(s.rank(), 3);
        check_smith(&IntegerMatrix::zeros(0, 3));
    }

    #[test]
    fn hermite_examples() {
        let m = mat(&[vec![2, 3, 6, 2], vec![5, 6, 1, 6], vec![8, 3, 1, 1]]);
        let hf = hermite_normal_form(&m);
        assert_eq!(hf.u.mul(&m), hf.h);
        assert!(hf.u.determinant().abs().is_one());
        assert_eq!(hf.rank(), 3);
        for (r, &c) in hf.pivots.iter().enumerate() {
            assert!(hf.h[(r, c)].is_positive());
            for above in 0..r {
                assert!(!hf.h[(above, c)].is_negative() && hf.h[(above, c)] < hf.h[(r, c)]);
            }
            for j in 0..c {
                assert!(hf.h[(r, j)].is_zero());
            }
        }
    }

    #[test]
    fn sparse_factors_match_dense() {
        let m = mat(&[
            vec![1, -1, 0, 0],
            vec![0, 2, -2, 0],
            vec![3, 0, 0, -3],
            vec![0, 0, 4, 4],
            vec![1, 1, 1, 1],
        ]);
        let dense = smith_with(&m, false, false);
        assert_eq!(invariant_factors(&m.to_sparse()), dense.invariant_factors().to_vec());
        assert_eq!(rank(&m.to_sparse()), m.rational_rank());
    }

    #[test]
    fn determinant_and_rank() {
        assert_eq!(mat(&[vec![2, 1], vec![7, 4]]).determinant(), BigInt::from(1));
        assert_eq!(mat(&[vec![1, 2], vec![2, 4]]).rational_rank(), 1);
        assert_eq!(mat(&[vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]).determinant(), BigInt::from(-1));
    }
}
