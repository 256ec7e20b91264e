//! Standard families of quandles and a brute-force enumerator of small
//! connected quandles.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::par;
use crate::table::{Mode, QuandleTable, ValidationError};

/// Largest order [`enumerate_connected`] accepts by default.
pub const DEFAULT_ENUMERATION_CAP: usize = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("{0} is not a unit")]
    NotAUnit(String),
    #[error("map is not an automorphism: {0}")]
    NotAnAutomorphism(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("need p > n, got p = {p}, n = {n}")]
    PNotGreaterThanN { p: u64, n: usize },
    #[error("order {order} exceeds the enumeration cap {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Validation(#[from] ValidationError),
}

type Result<T> = std::result::Result<T, ConstructionError>;

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// `x * y = x`.
pub fn trivial(n: usize) -> Result<QuandleTable> {
    if n == 0 {
        return Err(ConstructionError::InvalidParameter("order must be positive".into()));
    }
    Ok(QuandleTable::from_fn(n, Mode::Quandle, |x, _| x)?)
}

/// `x * y = 2y − x mod n`.
pub fn dihedral(n: usize) -> Result<QuandleTable> {
    if n == 0 {
        return Err(ConstructionError::InvalidParameter("order must be positive".into()));
    }
    Ok(QuandleTable::from_fn(n, Mode::Quandle, |x, y| (2 * y + n - x % n) % n)?)
}

/// `x * y = t x + (1 − t) y` on `Z_n`.
pub fn alexander_zn(n: usize, t: usize) -> Result<QuandleTable> {
    if n == 0 {
        return Err(ConstructionError::InvalidParameter("order must be positive".into()));
    }
    let t = t % n;
    if n > 1 && t.gcd(&n) != 1 {
        return Err(ConstructionError::NotAUnit(format!("{t} mod {n}")));
    }
    let s = (1 + n - t) % n;
    Ok(QuandleTable::from_fn(n, Mode::Quandle, |x, y| (t * x + s * y) % n)?)
}

/// `Z_p[t]/(f)` with `f` monic; not necessarily a field.
/// Elements are coefficient vectors `c_0 + c_1 t + ...`, indexed by `Σ c_i p^i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRing {
    p: u64,
    /// Coefficients of `f`, constant term first; the last one is 1.
    modulus: Vec<u64>,
}

impl PolyRing {
    pub fn new(p: u64, modulus: Vec<u64>) -> Result<Self> {
        if !is_prime(p) {
            return Err(ConstructionError::NotPrime(p));
        }
        let modulus: Vec<u64> = modulus.into_iter().map(|c| c % p).collect();
        if modulus.len() < 2 || modulus.last() != Some(&1) {
            return Err(ConstructionError::InvalidParameter(
                "modulus must be monic of degree at least 1".into(),
            ));
        }
        let ring = Self { p, modulus };
        if ring.size().is_none() {
            return Err(ConstructionError::InvalidParameter("ring too large".into()));
        }
        Ok(ring)
    }

    /// Parses `t^3 + t^2 + 1`-style text (`x` also accepted as the variable).
    pub fn parse_poly(text: &str, p: u64) -> Result<Vec<u64>> {
        let bad = || ConstructionError::InvalidParameter(format!("cannot parse polynomial {text:?}"));
        let cleaned: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if cleaned.is_empty() {
            return Err(bad());
        }
        let mut coeffs: Vec<i64> = Vec::new();
        let mut term = String::new();
        let mut sign = 1i64;
        let flush = |term: &str, sign: i64, coeffs: &mut Vec<i64>| -> Result<()> {
            if term.is_empty() {
                return Err(bad());
            }
            let (c, e) = match term.find(['t', 'x']) {
                None => (term.parse::<i64>().map_err(|_| bad())?, 0usize),
                Some(i) => {
                    let c = match term[..i].trim_end_matches('*') {
                        "" => 1,
                        s => s.parse::<i64>().map_err(|_| bad())?,
                    };
                    let e = match &term[i + 1..] {
                        "" => 1,
                        s => s.strip_prefix('^').ok_or_else(bad)?.parse::<usize>().map_err(|_| bad())?,
                    };
                    (c, e)
                }
            };
            if coeffs.len() <= e {
                coeffs.resize(e + 1, 0);
            }
            coeffs[e] += sign * c;
            Ok(())
        };
        for (i, ch) in cleaned.chars().enumerate() {
            match ch {
                '+' | '-' if i > 0 => {
                    flush(&term, sign, &mut coeffs)?;
                    term.clear();
                    sign = if ch == '-' { -1 } else { 1 };
                }
                '-' => sign = -1,
                '+' => {}
                _ => term.push(ch),
            }
        }
        flush(&term, sign, &mut coeffs)?;
        Ok(coeffs.into_iter().map(|c| c.rem_euclid(p as i64) as u64).collect())
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn size(&self) -> Option<usize> {
        (self.p as usize).checked_pow(self.degree() as u32).filter(|&s| s <= 1 << 20)
    }

    pub fn encode(&self, c: &[u64]) -> usize {
        c.iter().rev().fold(0, |acc, &v| acc * self.p as usize + v as usize)
    }

    pub fn decode(&self, mut idx: usize) -> Vec<u64> {
        (0..self.degree())
            .map(|_| {
                let v = (idx % self.p as usize) as u64;
                idx /= self.p as usize;
                v
            })
            .collect()
    }

    /// Reduces an arbitrary coefficient vector modulo `(p, f)`.
    pub fn reduce(&self, c: &[u64]) -> Vec<u64> {
        let p = self.p;
        let d = self.degree();
        let mut c: Vec<u64> = c.iter().map(|v| v % p).collect();
        while c.len() > d {
            let lead = c.pop().unwrap();
            if lead != 0 {
                let shift = c.len() - d;
                for (i, &m) in self.modulus[..d].iter().enumerate() {
                    c[shift + i] = (c[shift + i] + (p - lead) * m) % p;
                }
            }
        }
        c.resize(d, 0);
        c
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.p).collect()
    }

    pub fn sub(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter().zip(b).map(|(x, y)| (x + self.p - y) % self.p).collect()
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut out = vec![0u64; a.len() + b.len()];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        self.reduce(&out)
    }

    pub fn one(&self) -> Vec<u64> {
        self.reduce(&[1])
    }

    /// Multiplication by `u` is a bijection.
    pub fn is_unit(&self, u: &[u64]) -> bool {
        let u = self.reduce(u);
        let one = self.one();
        let size = self.size().expect("checked at construction");
        (0..size).any(|i| self.mul(&u, &self.decode(i)) == one)
    }
}

impl fmt::Display for PolyRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .modulus
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(e, &c)| match (e, c) {
                (0, c) => c.to_string(),
                (1, 1) => "t".into(),
                (1, c) => format!("{c}t"),
                (e, 1) => format!("t^{e}"),
                (e, c) => format!("{c}t^{e}"),
            })
            .collect();
        write!(f, "Z_{}[t]/({})", self.p, terms.join(" + "))
    }
}

/// Alexander quandle `x * y = u x + (1 − u) y` on `Z_p[t]/(f)`.
pub fn alexander_poly(ring: &PolyRing, u: &[u64]) -> Result<QuandleTable> {
    if !ring.is_unit(u) {
        return Err(ConstructionError::NotAUnit(format!("{u:?} in {ring}")));
    }
    let u = ring.reduce(u);
    let s = ring.sub(&ring.one(), &u);
    let size = ring.size().expect("checked at construction");
    let elems: Vec<Vec<u64>> = (0..size).map(|i| ring.decode(i)).collect();
    let ux: Vec<Vec<u64>> = elems.iter().map(|x| ring.mul(&u, x)).collect();
    let sy: Vec<Vec<u64>> = elems.iter().map(|y| ring.mul(&s, y)).collect();
    Ok(QuandleTable::from_fn(size, Mode::Quandle, |x, y| {
        ring.encode(&ring.add(&ux[x], &sy[y]))
    })?)
}

/// Checks a 0-based Cayley table: closure, identity at index 0, inverses,
/// associativity. Returns the inverse map.
fn check_group(g: &[Vec<usize>]) -> Result<Vec<usize>> {
    let n = g.len();
    let bad = |m: String| Err(ConstructionError::InvalidGroup(m));
    if n == 0 || g.iter().any(|r| r.len() != n || r.iter().any(|&v| v >= n)) {
        return bad("table must be square with entries in range".into());
    }
    if (0..n).any(|x| g[0][x] != x || g[x][0] != x) {
        return bad("index 0 must be the identity".into());
    }
    let mut inv = vec![0; n];
    for x in 0..n {
        match (0..n).find(|&y| g[x][y] == 0) {
            Some(y) if g[y][x] == 0 => inv[x] = y,
            _ => return bad(format!("element {x} has no inverse")),
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if g[g[a][b]][c] != g[a][g[b][c]] {
                    return bad(format!("not associative at ({a}, {b}, {c})"));
                }
            }
        }
    }
    Ok(inv)
}

/// `x * y = f(x y⁻¹) y` for a group `G` (Cayley table, identity at 0) and
/// an automorphism `f` given by its images.
pub fn gen_alexander(g: &[Vec<usize>], f: &[usize]) -> Result<QuandleTable> {
    let inv = check_group(g)?;
    let n = g.len();
    if f.len() != n || f.iter().any(|&v| v >= n) || f.iter().collect::<BTreeSet<_>>().len() != n {
        return Err(ConstructionError::NotAnAutomorphism("not a bijection".into()));
    }
    for a in 0..n {
        for b in 0..n {
            if f[g[a][b]] != g[f[a]][f[b]] {
                return Err(ConstructionError::NotAnAutomorphism(format!(
                    "f({a}·{b}) ≠ f({a})·f({b})"
                )));
            }
        }
    }
    Ok(QuandleTable::from_fn(n, Mode::Quandle, |x, y| g[f[g[x][inv[y]]]][y])?)
}

/// `x * y = y⁻¹ x y`.
pub fn conjugation(g: &[Vec<usize>]) -> Result<QuandleTable> {
    let inv = check_group(g)?;
    Ok(QuandleTable::from_fn(g.len(), Mode::Quandle, |x, y| g[g[inv[y]][x]][y])?)
}

/// Cayley table of the symmetric group `S_k` (`k ≤ 5`), identity first,
/// composition "apply left factor first".
pub fn symmetric_group(k: usize) -> Result<Vec<Vec<usize>>> {
    if k == 0 || k > 5 {
        return Err(ConstructionError::InvalidParameter("need 1 ≤ k ≤ 5".into()));
    }
    let mut perms = Vec::new();
    let mut p: Vec<usize> = (0..k).collect();
    loop {
        perms.push(p.clone());
        if !next_permutation(&mut p) {
            break;
        }
    }
    let index = |q: &[usize]| perms.iter().position(|r| r == q).expect("closed");
    Ok(perms
        .iter()
        .map(|a| perms.iter().map(|b| index(&a.iter().map(|&i| b[i]).collect::<Vec<_>>())).collect())
        .collect())
}

/// `g_{m,n}(t) = Σ_{i<n} t^{im}` as a coefficient vector.
pub fn burnside_modulus(m: usize, n: usize) -> Vec<u64> {
    let mut c = vec![0u64; m * (n - 1) + 1];
    for i in 0..n {
        c[i * m] = 1;
    }
    c
}

/// Alexander quandle on `Z_p[t]/(g_{m,n})` with `u = t`; connected and
/// satisfying `x (y_1 .. y_m)^n = x`.
pub fn burnside_family(m: usize, n: usize, p: u64) -> Result<QuandleTable> {
    if m < 1 || n < 2 {
        return Err(ConstructionError::InvalidParameter(format!("need m ≥ 1, n ≥ 2, got ({m}, {n})")));
    }
    if !is_prime(p) {
        return Err(ConstructionError::NotPrime(p));
    }
    if p <= n as u64 {
        return Err(ConstructionError::PNotGreaterThanN { p, n });
    }
    let ring = PolyRing::new(p, burnside_modulus(m, n))?;
    let t: Vec<u64> = if ring.degree() == 1 {
        ring.reduce(&[0, 1])
    } else {
        let mut t = vec![0; ring.degree()];
        t[1] = 1;
        t
    };
    alexander_poly(&ring, &t)
}

/// Lexicographic successor; `false` once the last permutation is reached.
pub fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Lexicographically least flat table over all relabelings.
pub fn canonical_form(q: &QuandleTable) -> Vec<u32> {
    let n = q.order();
    let flat = q.flat();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<u32>> = None;
    let mut cur = vec![0u32; n * n];
    loop {
        for x in 0..n {
            for y in 0..n {
                cur[perm[x] * n + perm[y]] = perm[flat[x * n + y] as usize] as u32;
            }
        }
        if best.as_ref().is_none_or(|b| cur < *b) {
            best = Some(cur.clone());
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.expect("at least one relabeling")
}

pub fn is_isomorphic(a: &QuandleTable, b: &QuandleTable) -> bool {
    a.order() == b.order() && canonical_form(a) == canonical_form(b)
}

/// Columns of a partial table: `cols[y][x] = x * y`.
type Columns = Vec<Option<Vec<u8>>>;

/// Forces `R_{R_c(b)} = R_c R_b R_c⁻¹` wherever `R_b`, `R_c` are known.
/// Returns `false` on a contradiction.
fn propagate(cols: &mut Columns) -> bool {
    let n = cols.len();
    loop {
        let mut changed = false;
        for c in 0..n {
            let Some(rc) = cols[c].clone() else { continue };
            let mut rc_inv = vec![0u8; n];
            for (x, &v) in rc.iter().enumerate() {
                rc_inv[v as usize] = x as u8;
            }
            for b in 0..n {
                let Some(rb) = cols[b].as_ref() else { continue };
                let target: Vec<u8> = (0..n).map(|x| rc[rb[rc_inv[x] as usize] as usize]).collect();
                let b2 = rc[b] as usize;
                match &cols[b2] {
                    Some(existing) if *existing != target => return false,
                    Some(_) => {}
                    None => {
                        cols[b2] = Some(target);
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

fn search(cols: Columns, out: &mut Vec<QuandleTable>) {
    let mut cols = cols;
    if !propagate(&mut cols) {
        return;
    }
    let n = cols.len();
    let Some(y) = cols.iter().position(Option::is_none) else {
        let table = QuandleTable::from_fn(n, Mode::Quandle, |x, y| cols[y].as_ref().unwrap()[x] as usize);
        if let Ok(q) = table {
            if q.is_connected() {
                out.push(q);
            }
        }
        return;
    };
    for perm in perms_fixing(n, y) {
        let mut next = cols.clone();
        next[y] = Some(perm);
        search(next, out);
    }
}

fn perms_fixing(n: usize, y: usize) -> Vec<Vec<u8>> {
    let others: Vec<usize> = (0..n).filter(|&i| i != y).collect();
    let mut p: Vec<usize> = (0..others.len()).collect();
    let mut out = Vec::new();
    loop {
        let mut col = vec![0u8; n];
        col[y] = y as u8;
        for (i, &src) in others.iter().enumerate() {
            col[src] = others[p[i]] as u8;
        }
        out.push(col);
        if !next_permutation(&mut p) {
            break;
        }
    }
    out
}

/// All connected quandles of order `n` up to isomorphism, each in canonical
/// form, sorted by that form.
pub fn enumerate_connected(n: usize) -> Result<Vec<QuandleTable>> {
    enumerate_connected_with_cap(n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_connected_with_cap(n: usize, cap: usize) -> Result<Vec<QuandleTable>> {
    if n > cap {
        return Err(ConstructionError::CapExceeded { order: n, cap });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let roots = perms_fixing(n, 0);
    let found = par::map_slice(&roots, |r0| {
        let mut cols: Columns = vec![None; n];
        cols[0] = Some(r0.clone());
        let mut out = Vec::new();
        search(cols, &mut out);
        out.iter().map(canonical_form).collect::<Vec<_>>()
    });
    let forms: BTreeSet<Vec<u32>> = found.into_iter().flatten().collect();
    forms
        .into_iter()
        .map(|f| Ok(QuandleTable::from_fn(n, Mode::Quandle, |x, y| f[x * n + y] as usize)?))
        .collect()
}

/// A quandle with a display name.
#[derive(Clone, Debug)]
pub struct NamedQuandle {
    pub name: String,
    pub table: QuandleTable,
}

pub fn gf4() -> Result<QuandleTable> {
    let ring = PolyRing::new(2, vec![1, 1, 1])?;
    alexander_poly(&ring, &[0, 1])
}

/// `Z_2[t]/(t³ + t² + 1)` with `u = t`.
pub fn z2_t3_t2_1() -> Result<QuandleTable> {
    alexander_poly(&PolyRing::new(2, vec![1, 0, 1, 1])?, &[0, 1])
}

/// `Z_2[t]/(t³ + t + 1)` with `u = t`.
pub fn z2_t3_t_1() -> Result<QuandleTable> {
    alexander_poly(&PolyRing::new(2, vec![1, 1, 0, 1])?, &[0, 1])
}

/// The fixed test corpus.
pub fn builtin_corpus() -> Vec<NamedQuandle> {
    let build = || -> Result<Vec<NamedQuandle>> {
        let named = |name: &str, table: QuandleTable| NamedQuandle {
            name: name.to_string(),
            table,
        };
        Ok(vec![
            named("trivial(1)", trivial(1)?),
            named("trivial(2)", trivial(2)?),
            named("trivial(3)", trivial(3)?),
            named("dihedral(3)", dihedral(3)?),
            named("alexander_zn(5,2)", alexander_zn(5, 2)?),
            named("alexander_zn(5,3)", alexander_zn(5, 3)?),
            named("gf4", gf4()?),
            named("Z2[t]/(t^3+t^2+1)", z2_t3_t2_1()?),
            named("Z2[t]/(t^3+t+1)", z2_t3_t_1()?),
            named("burnside(1,2,3)", burnside_family(1, 2, 3)?),
            named("burnside(2,2,3)", burnside_family(2, 2, 3)?),
        ])
    };
    build().expect("built-in constructions are valid")
}

/// A quandle is a kei when its type is exactly 2.
pub fn is_kei(q: &QuandleTable) -> bool {
    q.is_quandle() && q.type_of() == 2
}
