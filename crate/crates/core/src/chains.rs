//! Free chain groups `C_n(X)` on `n`-tuples, face maps, the rack boundary,
//! the 2-chains attached to identities, and subcomplex generators.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::homology::lattice::Lattice;
use crate::homology::matrix::SparseRow;
use crate::identities::{satisfies, Assignment, Word};
use crate::par;
use crate::table::QuandleTable;

pub type Tuple = Vec<u32>;

/// Chain operations refuse degrees whose basis `|X|^n` exceeds this.
pub const DEFAULT_MAX_BASIS: usize = 200_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChainError {
    #[error("face index {h} out of range for degree {degree}")]
    IndexOutOfRange { h: usize, degree: usize },
    #[error("identity x{word} = x fails at {witness:?}")]
    IdentityNotSatisfied { word: Word, witness: Assignment },
    #[error("quandle is not medial: witness {0:?}")]
    NotMedial([usize; 4]),
    #[error("degree {degree} too small (need at least {min})")]
    DegreeTooSmall { degree: usize, min: usize },
    #[error("basis of C_{degree} has {order}^{degree} tuples, above the limit {limit}")]
    SizeGuardExceeded {
        order: usize,
        degree: usize,
        limit: usize,
    },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("assignment has {got} letter values, word needs {want}")]
    AssignmentArity { got: usize, want: usize },
    #[error("element {0} out of range")]
    ElementOutOfRange(usize),
    #[error("cannot parse chain: {0}")]
    Parse(String),
}

/// Sparse integer combination of `n`-tuples. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FormalChain {
    degree: usize,
    terms: BTreeMap<Tuple, i64>,
}

impl FormalChain {
    pub fn zero(degree: usize) -> Self {
        Self {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I>(degree: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Tuple, i64)>,
    {
        let mut c = Self::zero(degree);
        for (t, k) in terms {
            c.add_term(t, k);
        }
        c
    }

    pub fn basis(tuple: Tuple) -> Self {
        let degree = tuple.len();
        Self::from_terms(degree, [(tuple, 1)])
    }

    pub fn add_term(&mut self, tuple: Tuple, coef: i64) {
        assert_eq!(tuple.len(), self.degree, "tuple length must equal degree");
        if coef == 0 {
            return;
        }
        match self.terms.entry(tuple) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(coef);
            }
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Tuple, i64)> {
        self.terms.iter().map(|(t, &k)| (t, k))
    }

    pub fn coefficient(&self, tuple: &[u32]) -> i64 {
        self.terms.get(tuple).copied().unwrap_or(0)
    }

    pub fn add(&self, other: &FormalChain) -> FormalChain {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &FormalChain) -> FormalChain {
        self.combine(other, -1)
    }

    pub fn scale(&self, k: i64) -> FormalChain {
        FormalChain::from_terms(self.degree, self.terms().map(|(t, c)| (t.clone(), c * k)))
    }

    fn combine(&self, other: &FormalChain, sign: i64) -> FormalChain {
        if self.is_zero() {
            return other.scale(sign);
        }
        if !other.is_zero() {
            assert_eq!(self.degree, other.degree, "degree mismatch");
        }
        let mut out = self.clone();
        for (t, k) in other.terms() {
            out.add_term(t.clone(), sign * k);
        }
        out
    }

    /// Coordinates in the lexicographic tuple basis of `C_n(X)`.
    pub fn to_sparse_row(&self, order: usize) -> SparseRow {
        self.terms()
            .map(|(t, k)| (tuple_index(t, order), BigInt::from(k)))
            .collect()
    }

    pub fn from_sparse_row(order: usize, degree: usize, row: &SparseRow) -> FormalChain {
        FormalChain::from_terms(
            degree,
            row.iter().map(|(i, v)| {
                (
                    index_tuple(*i, order, degree),
                    v.to_i64().expect("chain coefficient fits in i64"),
                )
            }),
        )
    }

    /// Parses the text form written by `Display`: terms `coef * (t1,...,tn)`
    /// with 1-based labels, joined by `+`/`-`; `0` is the zero chain.
    pub fn parse(text: &str, degree: usize) -> Result<Self, ChainError> {
        let err = |m: &str| ChainError::Parse(format!("{m} in {text:?}"));
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s == "0" {
            return Ok(Self::zero(degree));
        }
        let mut chain = Self::zero(degree);
        let bytes = s.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            let mut sign = 1i64;
            match bytes[i] {
                b'+' => i += 1,
                b'-' => {
                    sign = -1;
                    i += 1
                }
                _ if i > 0 => return Err(err("expected + or -")),
                _ => {}
            }
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let coef: i64 = if i > start {
                let c = s[start..i].parse().map_err(|_| err("bad coefficient"))?;
                if bytes.get(i) != Some(&b'*') {
                    return Err(err("expected *"));
                }
                i += 1;
                c
            } else {
                1
            };
            if bytes.get(i) != Some(&b'(') {
                return Err(err("expected ("));
            }
            let close = s[i..].find(')').ok_or_else(|| err("unclosed ("))? + i;
            let tuple: Tuple = s[i + 1..close]
                .split(',')
                .map(|e| match e.parse::<u32>() {
                    Ok(v) if v >= 1 => Ok(v - 1),
                    _ => Err(err("labels are positive integers")),
                })
                .collect::<Result<_, _>>()?;
            if tuple.len() != degree {
                return Err(err("tuple length differs from degree"));
            }
            chain.add_term(tuple, sign * coef);
            i = close + 1;
        }
        Ok(chain)
    }
}

/// `coef * (t1,...,tn)` terms with 1-based labels.
impl fmt::Display for FormalChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (t, k)) in self.terms().enumerate() {
            let labels: Vec<String> = t.iter().map(|e| (e + 1).to_string()).collect();
            let tuple = format!("({})", labels.join(","));
            match (i, k < 0) {
                (0, false) => write!(f, "{k} * {tuple}")?,
                (0, true) => write!(f, "-{} * {tuple}", -k)?,
                (_, false) => write!(f, " + {k} * {tuple}")?,
                (_, true) => write!(f, " - {} * {tuple}", -k)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FormalChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}[{self}]", self.degree)
    }
}

/// Position of `t` in the lexicographic basis of `C_n(X)`.
pub fn tuple_index(t: &[u32], order: usize) -> usize {
    t.iter().fold(0usize, |acc, &e| acc * order + e as usize)
}

pub fn index_tuple(mut idx: usize, order: usize, degree: usize) -> Tuple {
    let mut t = vec![0u32; degree];
    for slot in t.iter_mut().rev() {
        *slot = (idx % order) as u32;
        idx /= order;
    }
    t
}

pub fn basis_size(order: usize, degree: usize, limit: usize) -> Result<usize, ChainError> {
    let guard = ChainError::SizeGuardExceeded {
        order,
        degree,
        limit,
    };
    let size = order.checked_pow(degree as u32).ok_or(guard.clone())?;
    if size > limit {
        return Err(guard);
    }
    Ok(size)
}

pub fn is_degenerate(t: &[u32]) -> bool {
    t.windows(2).any(|w| w[0] == w[1])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FaceKind {
    /// Deletes entry `h`.
    D,
    /// Acts by `* x_h` on entries before `h`, then deletes entry `h`.
    Delta,
}

/// `d_h` or `δ_h` applied to a tuple; `h` is 1-based.
pub fn face(q: &QuandleTable, t: &[u32], h: usize, kind: FaceKind) -> Result<Tuple, ChainError> {
    if h == 0 || h > t.len() {
        return Err(ChainError::IndexOutOfRange { h, degree: t.len() });
    }
    let xh = t[h - 1] as usize;
    Ok(t.iter()
        .enumerate()
        .filter(|(i, _)| *i != h - 1)
        .map(|(i, &e)| match kind {
            FaceKind::Delta if i < h - 1 => q.op(e as usize, xh) as u32,
            _ => e,
        })
        .collect())
}

/// Terms of `∂_n` on one tuple, `Σ_{h=2}^{n} (-1)^h (d_h - δ_h)`, unsimplified.
pub fn boundary_terms(q: &QuandleTable, t: &[u32], out: &mut Vec<(Tuple, i64)>) {
    let n = t.len();
    for h in 2..=n {
        let sign = if h % 2 == 0 { 1 } else { -1 };
        let xh = t[h - 1] as usize;
        let mut d = Vec::with_capacity(n - 1);
        let mut delta = Vec::with_capacity(n - 1);
        for (i, &e) in t.iter().enumerate() {
            if i == h - 1 {
                continue;
            }
            d.push(e);
            delta.push(if i < h - 1 { q.op(e as usize, xh) as u32 } else { e });
        }
        out.push((d, sign));
        out.push((delta, -sign));
    }
}

pub fn boundary(q: &QuandleTable, c: &FormalChain) -> FormalChain {
    let degree = c.degree().saturating_sub(1);
    let mut out = FormalChain::zero(degree);
    let mut buf = Vec::new();
    for (t, k) in c.terms() {
        buf.clear();
        boundary_terms(q, t, &mut buf);
        for (s, sign) in buf.drain(..) {
            out.add_term(s, sign * k);
        }
    }
    out
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strictness {
    /// The defining identity must hold in the rack.
    #[default]
    Strict,
    /// Build the chain regardless; its boundary need not vanish.
    Permissive,
}

/// `L_S = (x, y_tau(1)) + Σ_{i=1}^{k-1} (x ω_i, y_tau(i+1))` with
/// `ω_i = y_tau(1) ... y_tau(i)`.
pub fn cycle_ls(
    q: &QuandleTable,
    w: &Word,
    a: &Assignment,
    strictness: Strictness,
) -> Result<FormalChain, ChainError> {
    check_assignment(q, w, a)?;
    if strictness == Strictness::Strict {
        let r = satisfies(q, w);
        if let Some(witness) = r.witness {
            return Err(ChainError::IdentityNotSatisfied {
                word: w.clone(),
                witness,
            });
        }
    }
    Ok(cycle_ls_unchecked(q, w, a))
}

fn check_assignment(q: &QuandleTable, w: &Word, a: &Assignment) -> Result<(), ChainError> {
    if a.ys.len() != w.alphabet_size() {
        return Err(ChainError::AssignmentArity {
            got: a.ys.len(),
            want: w.alphabet_size(),
        });
    }
    if let Some(&e) = std::iter::once(&a.x).chain(&a.ys).find(|&&e| e >= q.order()) {
        return Err(ChainError::ElementOutOfRange(e));
    }
    Ok(())
}

pub(crate) fn cycle_ls_unchecked(q: &QuandleTable, w: &Word, a: &Assignment) -> FormalChain {
    let mut c = FormalChain::zero(2);
    let mut cur = a.x;
    for l in w.letters() {
        let y = a.ys[l];
        c.add_term(vec![cur as u32, y as u32], 1);
        cur = q.op(cur, y);
    }
    c
}

/// `[(x,y) + (x*y, u*v)] - [(x,u) + (x*u, y*v)]`.
pub fn medial_ls(
    q: &QuandleTable,
    [x, y, u, v]: [usize; 4],
    strictness: Strictness,
) -> Result<FormalChain, ChainError> {
    if let Some(&e) = [x, y, u, v].iter().find(|&&e| e >= q.order()) {
        return Err(ChainError::ElementOutOfRange(e));
    }
    if strictness == Strictness::Strict {
        if let Some(wit) = q.medial_witness() {
            return Err(ChainError::NotMedial(wit));
        }
    }
    let t = |a: usize, b: usize| vec![a as u32, b as u32];
    Ok(FormalChain::from_terms(
        2,
        [
            (t(x, y), 1),
            (t(q.op(x, y), q.op(u, v)), 1),
            (t(x, u), -1),
            (t(q.op(x, u), q.op(y, v)), -1),
        ],
    ))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum GeneratorKind {
    /// Tuples with two equal adjacent entries.
    Degenerate,
    /// Identity-shifted sums for the word; `leading_slot` also admits the
    /// variant with the distinguished entry in position 1.
    Identity { word: Word, leading_slot: bool },
}

impl GeneratorKind {
    pub fn identity(word: Word) -> Self {
        GeneratorKind::Identity {
            word,
            leading_slot: false,
        }
    }
}

/// Parameters that produced a generator: the 1-based position `j` after
/// which the distinguished entry sits, the free entries, the letter values.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub j: usize,
    pub xs: Vec<usize>,
    pub ys: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct GeneratorSet {
    pub degree: usize,
    pub order: usize,
    pub kind: GeneratorKind,
    pub chains: Vec<FormalChain>,
    pub provenance: Vec<Provenance>,
}

impl GeneratorSet {
    /// The lattice spanned by the generators, in tuple coordinates.
    pub fn span(&self) -> Lattice {
        let dim = self.order.pow(self.degree as u32);
        Lattice::from_rows(dim, self.chains.iter().map(|c| c.to_sparse_row(self.order)))
    }

    pub fn len(&self) -> usize {
        self.chains.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chains.is_empty()
    }

    pub fn contains(&self, c: &FormalChain) -> bool {
        self.chains.contains(c)
    }
}

pub fn subcomplex_generators(
    q: &QuandleTable,
    kind: &GeneratorKind,
    degree: usize,
) -> Result<GeneratorSet, ChainError> {
    subcomplex_generators_with_limit(q, kind, degree, DEFAULT_MAX_BASIS)
}

pub fn subcomplex_generators_with_limit(
    q: &QuandleTable,
    kind: &GeneratorKind,
    degree: usize,
    limit: usize,
) -> Result<GeneratorSet, ChainError> {
    let min = match kind {
        GeneratorKind::Identity {
            leading_slot: true, ..
        } => 1,
        _ => 2,
    };
    if degree < min {
        return Err(ChainError::DegreeTooSmall { degree, min });
    }
    let order = q.order();
    let size = basis_size(order, degree, limit)?;
    let mut chains = Vec::new();
    let mut provenance = Vec::new();
    match kind {
        GeneratorKind::Degenerate => {
            for idx in 0..size {
                let t = index_tuple(idx, order, degree);
                if let Some(j) = t.windows(2).position(|w| w[0] == w[1]) {
                    provenance.push(Provenance {
                        j: j + 1,
                        xs: t.iter().map(|&e| e as usize).collect(),
                        ys: Vec::new(),
                    });
                    chains.push(FormalChain::basis(t));
                }
            }
        }
        GeneratorKind::Identity { word, leading_slot } => {
            let m = word.alphabet_size();
            let free = degree - 1;
            let per_j = order
                .checked_pow((free + m) as u32)
                .filter(|&c| c <= limit.saturating_mul(64))
                .ok_or(ChainError::SizeGuardExceeded {
                    order,
                    degree: free + m,
                    limit,
                })?;
            let first_j = if *leading_slot { 0 } else { 1 };
            let js: Vec<usize> = (first_j..degree).collect();
            let built = par::map(0..js.len() * per_j, |i| {
                let j = js[i / per_j];
                let mut code = i % per_j;
                let mut xs = vec![0usize; free];
                for slot in xs.iter_mut().rev() {
                    *slot = code % order;
                    code /= order;
                }
                let mut ys = vec![0usize; m];
                for slot in ys.iter_mut().rev() {
                    *slot = code % order;
                    code /= order;
                }
                let chain = identity_generator(q, word, j, &xs, &ys);
                (chain, Provenance { j, xs, ys })
            });
            let mut seen: HashSet<FormalChain> = HashSet::new();
            for (c, p) in built {
                if seen.insert(c.clone()) {
                    chains.push(c);
                    provenance.push(p);
                }
            }
        }
    }
    Ok(GeneratorSet {
        degree,
        order,
        kind: kind.clone(),
        chains,
        provenance,
    })
}

/// `(x_1, .., x_j, y_tau(1), x_{j+2}, .., x_n)
///   + Σ_{i=1}^{k-1} (x_1 ω_i, .., x_j ω_i, y_tau(i+1), x_{j+2}, .., x_n)`,
/// where `xs` lists the free entries in order (positions other than `j+1`).
pub fn identity_generator(
    q: &QuandleTable,
    w: &Word,
    j: usize,
    xs: &[usize],
    ys: &[usize],
) -> FormalChain {
    let degree = xs.len() + 1;
    let mut prefix: Vec<usize> = xs[..j].to_vec();
    let mut c = FormalChain::zero(degree);
    for l in w.letters() {
        let y = ys[l];
        let t: Tuple = prefix
            .iter()
            .map(|&e| e as u32)
            .chain(std::iter::once(y as u32))
            .chain(xs[j..].iter().map(|&e| e as u32))
            .collect();
        c.add_term(t, 1);
        prefix.iter_mut().for_each(|e| *e = q.op(*e, y));
    }
    c
}

/// Integer-span membership, decided in Hermite form.
pub fn in_span(c: &FormalChain, gens: &GeneratorSet) -> Result<bool, ChainError> {
    if c.is_zero() {
        return Ok(true);
    }
    if c.degree() != gens.degree {
        return Err(ChainError::DegreeMismatch(c.degree(), gens.degree));
    }
    Ok(gens.span().contains(&c.to_sparse_row(gens.order)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::Mode;

    fn dihedral3() -> QuandleTable {
        QuandleTable::from_fn(3, Mode::Quandle, |x, y| (2 * y + 3 - x) % 3).unwrap()
    }

    fn chain(text: &str, degree: usize) -> FormalChain {
        FormalChain::parse(text, degree).unwrap()
    }

    #[test]
    fn faces() {
        let d = dihedral3();
        assert_eq!(face(&d, &[0, 1], 2, FaceKind::D).unwrap(), vec![0]);
        assert_eq!(face(&d, &[0, 1], 2, FaceKind::Delta).unwrap(), vec![2]);
        assert_eq!(face(&d, &[0, 1], 1, FaceKind::Delta).unwrap(), vec![1]);
        assert_eq!(
            face(&d, &[0, 1], 3, FaceKind::D),
            Err(ChainError::IndexOutOfRange { h: 3, degree: 2 })
        );
        assert!(face(&d, &[0, 1], 0, FaceKind::D).is_err());
    }

    #[test]
    fn boundary_examples() {
        let d = dihedral3();
        assert!(boundary(&d, &FormalChain::basis(vec![1, 1])).is_zero());
        assert_eq!(boundary(&d, &FormalChain::basis(vec![0, 1])), chain("(1) - (3)", 1));
        assert!(boundary(&d, &FormalChain::basis(vec![2])).is_zero());
    }

    #[test]
    fn text_form() {
        let c = FormalChain::from_terms(2, [(vec![2, 1], -2), (vec![0, 1], 1)]);
        assert_eq!(c.to_string(), "1 * (1,2) - 2 * (3,2)");
        assert_eq!(chain(&c.to_string(), 2), c);
        assert_eq!(FormalChain::zero(3).to_string(), "0");
        assert_eq!(chain("-1 * (2,2) + (1,1)", 2).to_string(), "1 * (1,1) - 1 * (2,2)");
        assert!(FormalChain::parse("(1,2", 2).is_err());
        assert!(FormalChain::parse("(0,2)", 2).is_err());
        assert!(FormalChain::parse("(1,2,3)", 2).is_err());
    }

    #[test]
    fn ls_on_dihedral() {
        let d = dihedral3();
        let w = Word::parse("aa").unwrap();
        let c = cycle_ls(&d, &w, &Assignment { x: 0, ys: vec![1] }, Strictness::Strict).unwrap();
        assert_eq!(c, chain("(1,2) + (3,2)", 2));
        assert!(boundary(&d, &c).is_zero());
        let bad = Word::parse("abab").unwrap();
        assert!(matches!(
            cycle_ls(&d, &bad, &Assignment { x: 0, ys: vec![1, 0] }, Strictness::Strict),
            Err(ChainError::IdentityNotSatisfied { .. })
        ));
        let c = cycle_ls(&d, &bad, &Assignment { x: 0, ys: vec![1, 0] }, Strictness::Permissive)
            .unwrap();
        let xw = d.product(0, &[1, 0, 1, 0]);
        assert_eq!(
            boundary(&d, &c),
            FormalChain::from_terms(1, [(vec![0], 1), (vec![xw as u32], -1)])
        );
        assert!(matches!(
            cycle_ls(&d, &w, &Assignment { x: 0, ys: vec![1, 2] }, Strictness::Permissive),
            Err(ChainError::AssignmentArity { got: 2, want: 1 })
        ));
    }

    #[test]
    fn ls_constant_assignment() {
        let d = dihedral3();
        let w = Word::parse("aaaa").unwrap();
        let c = cycle_ls(&d, &w, &Assignment { x: 2, ys: vec![2] }, Strictness::Strict).unwrap();
        assert_eq!(c, FormalChain::from_terms(2, [(vec![2, 2], 4)]));
        assert!(boundary(&d, &c).is_zero());
    }

    #[test]
    fn medial_examples() {
        let d = dihedral3();
        let z = medial_ls(&d, [1, 1, 1, 1], Strictness::Strict).unwrap();
        assert!(z.is_zero());
        let c = medial_ls(&d, [0, 1, 2, 0], Strictness::Strict).unwrap();
        assert!(boundary(&d, &c).is_zero());
    }

    #[test]
    fn degenerate_generators() {
        let triv = QuandleTable::from_fn(2, Mode::Quandle, |x, _| x).unwrap();
        let g = subcomplex_generators(&triv, &GeneratorKind::Degenerate, 2).unwrap();
        assert_eq!(g.chains, vec![chain("(1,1)", 2), chain("(2,2)", 2)]);
        assert!(matches!(
            subcomplex_generators(&triv, &GeneratorKind::Degenerate, 1),
            Err(ChainError::DegreeTooSmall { .. })
        ));
    }

    #[test]
    fn span_membership() {
        let d = dihedral3();
        let g = subcomplex_generators(&d, &GeneratorKind::identity(Word::parse("aa").unwrap()), 2)
            .unwrap();
        assert!(in_span(&FormalChain::zero(2), &g).unwrap());
        assert!(!in_span(&FormalChain::basis(vec![0, 1]), &g).unwrap());
        assert!(in_span(&g.chains[3].scale(-5).add(&g.chains[1]), &g).unwrap());
    }

    #[test]
    fn tuple_indexing() {
        for idx in 0..64 {
            assert_eq!(tuple_index(&index_tuple(idx, 4, 3), 4), idx);
        }
        assert_eq!(index_tuple(5, 3, 2), vec![1, 2]);
        assert!(basis_size(10, 6, DEFAULT_MAX_BASIS).is_err());
    }
}
