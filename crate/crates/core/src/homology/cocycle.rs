//! Rack and quandle 2-cocycles with coefficients in `Z_d`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::IntegerMatrix;
use super::snf::smith_with;
use super::HomologyError;
use crate::chains::FormalChain;
use crate::table::{Mode, QuandleTable};

/// `φ: X × X → Z_d`, stored row-major: `values[x·n + y] = φ(x, y)`.
/// A modulus of 0 means integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CocycleTable {
    pub order: usize,
    pub modulus: u64,
    pub mode: Mode,
    pub values: Vec<i64>,
}

impl CocycleTable {
    pub fn zero(order: usize, modulus: u64, mode: Mode) -> Self {
        Self {
            order,
            modulus,
            mode,
            values: vec![0; order * order],
        }
    }

    pub fn from_fn(order: usize, modulus: u64, mode: Mode, f: impl Fn(usize, usize) -> i64) -> Self {
        let mut c = Self::zero(order, modulus, mode);
        for x in 0..order {
            for y in 0..order {
                c.values[x * order + y] = c.reduce(f(x, y));
            }
        }
        c
    }

    pub fn get(&self, x: usize, y: usize) -> i64 {
        self.values[x * self.order + y]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.values.chunks(self.order.max(1)).map(<[i64]>::to_vec).collect()
    }

    pub fn reduce(&self, v: i64) -> i64 {
        match self.modulus {
            0 => v,
            d => v.rem_euclid(d as i64),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// First `(x, y, z)` where the cocycle condition fails, or `(x, x, x)`
    /// for a nonzero diagonal value in quandle mode.
    pub fn violation(&self, q: &QuandleTable) -> Option<(usize, usize, usize)> {
        let n = self.order;
        if q.order() != n || self.values.len() != n * n {
            return Some((0, 0, 0));
        }
        if self.mode == Mode::Quandle {
            if let Some(x) = (0..n).find(|&x| self.get(x, x) != 0) {
                return Some((x, x, x));
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let s = self.get(x, y) - self.get(x, z) + self.get(q.op(x, y), z)
                        - self.get(q.op(x, z), q.op(y, z));
                    if self.reduce(s) != 0 {
                        return Some((x, y, z));
                    }
                }
            }
        }
        None
    }

    pub fn check(&self, q: &QuandleTable) -> bool {
        self.violation(q).is_none()
    }

    pub fn add(&self, other: &CocycleTable) -> CocycleTable {
        let mut c = self.clone();
        for (a, b) in c.values.iter_mut().zip(&other.values) {
            *a = self.reduce(*a + b);
        }
        c
    }

    pub fn scale(&self, k: i64) -> CocycleTable {
        let mut c = self.clone();
        for a in c.values.iter_mut() {
            *a = self.reduce(*a * k);
        }
        c
    }
}

/// `δf(x, y) = f(x) − f(x*y)`, a quandle cocycle for any `f`.
pub fn coboundary(q: &QuandleTable, f: &[i64], modulus: u64) -> CocycleTable {
    let mode = if q.is_quandle() { Mode::Quandle } else { Mode::Rack };
    CocycleTable::from_fn(q.order(), modulus, mode, |x, y| f[x] - f[q.op(x, y)])
}

/// Solution module of the cocycle equations over `Z_d`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CocycleSpace {
    pub modulus: u64,
    pub mode: Mode,
    /// Generators of a direct decomposition; `generators[i]` has additive order `orders[i]`.
    pub generators: Vec<CocycleTable>,
    pub orders: Vec<u64>,
    /// `Π orders[i]`.
    #[serde(with = "bigint_string")]
    pub cardinality: BigInt,
}

impl CocycleSpace {
    /// Number of nonzero generators, i.e. the rank when `d` is prime.
    pub fn rank(&self) -> usize {
        self.generators.len()
    }

    /// Every member, each exactly once, or `None` when there are more than `cap`.
    pub fn members(&self, cap: usize) -> Option<Vec<CocycleTable>> {
        if self.cardinality > BigInt::from(cap) {
            return None;
        }
        let n = self.generators.first().map_or(0, |g| g.order);
        let mut out = vec![CocycleTable::zero(n, self.modulus, self.mode)];
        for (g, &k) in self.generators.iter().zip(&self.orders) {
            let mut next = Vec::with_capacity(out.len() * k as usize);
            for base in &out {
                let mut acc = base.clone();
                for _ in 0..k {
                    next.push(acc.clone());
                    acc = acc.add(g);
                }
            }
            out = next;
        }
        out.sort_by(|a, b| a.values.cmp(&b.values));
        Some(out)
    }
}

mod bigint_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Integer constraint rows in the unknowns `φ(x, y)`, indexed `x·n + y`,
/// each reduced mod `d`; duplicates and zero rows dropped.
fn constraint_rows(q: &QuandleTable, d: i64, mode: Mode) -> Vec<Vec<i64>> {
    let n = q.order();
    let mut rows = BTreeSet::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let mut r = vec![0i64; n * n];
                r[x * n + y] += 1;
                r[x * n + z] -= 1;
                r[q.op(x, y) * n + z] += 1;
                r[q.op(x, z) * n + q.op(y, z)] -= 1;
                r.iter_mut().for_each(|v| *v = v.rem_euclid(d));
                if r.iter().any(|&v| v != 0) {
                    rows.insert(r);
                }
            }
        }
    }
    if mode == Mode::Quandle {
        for x in 0..n {
            let mut r = vec![0i64; n * n];
            r[x * n + x] = 1;
            rows.insert(r);
        }
    }
    rows.into_iter().collect()
}

/// All `φ` with the cocycle condition (and `φ(x,x) = 0` in quandle mode)
/// over `Z_d`. The integer system is put in Smith form `U A V = D`; with
/// `ψ = V⁻¹φ` the equations decouple to `d_i ψ_i ≡ 0`, so `ψ_i` ranges over
/// the multiples of `d / gcd(d_i, d)`.
pub fn cocycle_space(q: &QuandleTable, d: u64, mode: Mode) -> Result<CocycleSpace, HomologyError> {
    if d < 2 {
        return Err(HomologyError::InvalidModulus(d));
    }
    if mode == Mode::Quandle && !q.is_quandle() {
        return Err(HomologyError::NotAQuandle("quandle cocycle"));
    }
    let n = q.order();
    let di = d as i64;
    let rows = constraint_rows(q, di, mode);
    let unknowns = n * n;
    let m = if rows.is_empty() {
        IntegerMatrix::zeros(0, unknowns)
    } else {
        IntegerMatrix::from_rows(&rows)
    };
    let snf = smith_with(&m, false, true);
    let v = snf.right.expect("right transform requested");
    let big_d = BigInt::from(d);

    let mut generators = Vec::new();
    let mut orders = Vec::new();
    let mut cardinality = BigInt::from(1);
    for i in 0..unknowns {
        let di_entry = snf.diagonal.get(i).cloned().unwrap_or_default();
        let g = if di_entry.is_zero() { big_d.clone() } else { di_entry.gcd(&big_d) };
        let g64 = g.to_u64().expect("divides d");
        if g64 == 1 {
            continue;
        }
        let step = &big_d / &g;
        let values = (0..unknowns)
            .map(|r| {
                let val: BigInt = (&v[(r, i)] * &step).mod_floor(&big_d);
                val.to_i64().expect("reduced mod d")
            })
            .collect();
        generators.push(CocycleTable {
            order: n,
            modulus: d,
            mode,
            values,
        });
        orders.push(g64);
        cardinality *= g64;
    }
    Ok(CocycleSpace {
        modulus: d,
        mode,
        generators,
        orders,
        cardinality,
    })
}

/// `Σ coef · φ(tuple)`, reduced mod `d` when `d > 0`.
pub fn evaluate_cocycle(phi: &CocycleTable, c: &FormalChain) -> Result<i64, HomologyError> {
    if c.degree() != 2 && !c.is_zero() {
        return Err(HomologyError::DegreeMismatch(c.degree()));
    }
    let mut acc = 0i64;
    for (t, k) in c.terms() {
        let (x, y) = (t[0] as usize, t[1] as usize);
        if x >= phi.order || y >= phi.order {
            return Err(HomologyError::CocycleShape {
                got: phi.order,
                want: x.max(y) + 1,
            });
        }
        acc = phi.reduce(acc + phi.reduce(k) * phi.get(x, y));
    }
    Ok(phi.reduce(acc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::Mode;

    fn dihedral3() -> QuandleTable {
        QuandleTable::from_fn(3, Mode::Quandle, |x, y| (2 * y + 3 - x) % 3).unwrap()
    }

    fn trivial(n: usize) -> QuandleTable {
        QuandleTable::from_fn(n, Mode::Quandle, |x, _| x).unwrap()
    }

    #[test]
    fn trivial_quandle_space() {
        for n in 1..=3 {
            for d in [2u64, 3, 4] {
                let s = cocycle_space(&trivial(n), d, Mode::Quandle).unwrap();
                assert_eq!(s.cardinality, BigInt::from(d).pow((n * n - n) as u32));
                let r = cocycle_space(&trivial(n), d, Mode::Rack).unwrap();
                assert_eq!(r.cardinality, BigInt::from(d).pow((n * n) as u32));
            }
        }
    }

    #[test]
    fn generators_are_cocycles() {
        let q = dihedral3();
        for d in [2u64, 3, 4, 6] {
            let s = cocycle_space(&q, d, Mode::Quandle).unwrap();
            for (g, &k) in s.generators.iter().zip(&s.orders) {
                assert!(g.check(&q));
                assert!(g.scale(k as i64).is_zero());
            }
        }
    }

    #[test]
    fn brute_force_agrees_for_dihedral() {
        let q = dihedral3();
        let d = 3u64;
        let s = cocycle_space(&q, d, Mode::Quandle).unwrap();
        let members = s.members(1 << 16).unwrap();
        let mut brute = Vec::new();
        for code in 0..3usize.pow(9) {
            let phi = CocycleTable::from_fn(3, d, Mode::Quandle, |x, y| ((code / 3usize.pow((3 * x + y) as u32)) % 3) as i64);
            if phi.check(&q) {
                brute.push(phi);
            }
        }
        brute.sort_by(|a, b| a.values.cmp(&b.values));
        assert_eq!(members, brute);
    }

    #[test]
    fn coboundary_and_evaluation() {
        let q = dihedral3();
        let f = [0i64, 1, 2];
        let delta = coboundary(&q, &f, 5);
        assert!(delta.check(&q));
        let zero = CocycleTable::zero(3, 5, Mode::Quandle);
        let c = FormalChain::from_terms(2, [(vec![0, 1], 3), (vec![2, 2], -1)]);
        assert_eq!(evaluate_cocycle(&zero, &c).unwrap(), 0);
        let want = (3 * delta.get(0, 1) - delta.get(2, 2)).rem_euclid(5);
        assert_eq!(evaluate_cocycle(&delta, &c).unwrap(), want);
        let bad = FormalChain::basis(vec![0, 1, 2]);
        assert!(matches!(evaluate_cocycle(&delta, &bad), Err(HomologyError::DegreeMismatch(3))));
    }

    #[test]
    fn rejects_small_modulus() {
        assert!(matches!(
            cocycle_space(&dihedral3(), 1, Mode::Quandle),
            Err(HomologyError::InvalidModulus(1))
        ));
    }
}
