//! Boundary matrices and integer homology of the rack complex and its
//! quandle, degenerate and identity variants, plus exact linear algebra.

pub mod cocycle;
pub mod lattice;
pub mod matrix;
pub mod snf;

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chains::{
    basis_size, boundary, boundary_terms, index_tuple, is_degenerate, subcomplex_generators_with_limit,
    tuple_index, ChainError, FormalChain, GeneratorKind, Tuple, DEFAULT_MAX_BASIS,
};
use crate::identities::Word;
use crate::par;
use crate::table::QuandleTable;

use lattice::Lattice;
use matrix::{IntegerMatrix, SparseMatrix, SparseRow};

pub use cocycle::{coboundary, cocycle_space, evaluate_cocycle, CocycleSpace, CocycleTable};
pub use snf::{hermite_normal_form, smith_normal_form, HermiteForm, SmithForm};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error("the {0} complex needs a quandle")]
    NotAQuandle(&'static str),
    #[error("boundary leaves the subcomplex: {0}")]
    SubcomplexClosureViolated(String),
    #[error("homology degree must be at least 1")]
    DegreeZero,
    #[error("cocycle modulus must be at least 2, got {0}")]
    InvalidModulus(u64),
    #[error("evaluation needs a degree-2 chain, got degree {0}")]
    DegreeMismatch(usize),
    #[error("cocycle has {got} values, expected {want}")]
    CocycleShape { got: usize, want: usize },
}

/// Which chain complex to use.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "complex")]
pub enum Complex {
    Rack,
    /// Rack chains modulo degenerate tuples.
    Quandle,
    /// The degenerate subcomplex.
    Degenerate,
    /// The subcomplex generated by the identity-shifted sums of a word.
    Identity { word: Word, leading_slot: bool },
}

impl Complex {
    pub fn identity(word: Word) -> Self {
        Complex::Identity {
            word,
            leading_slot: false,
        }
    }

    pub fn name(&self) -> String {
        match self {
            Complex::Rack => "rack".into(),
            Complex::Quandle => "quandle".into(),
            Complex::Degenerate => "degenerate".into(),
            Complex::Identity { word, .. } => format!("identity({word})"),
        }
    }
}

/// `Z^r ⊕ Z_{d1} ⊕ ...` with `d1 | d2 | ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn trivial() -> Self {
        Self {
            free_rank: 0,
            torsion: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn free(rank: usize) -> Self {
        Self {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z_{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" ⊕ "))
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Factor {
    Small(u64),
    Big(String),
}

#[derive(Serialize, Deserialize)]
struct GroupRecord {
    free_rank: usize,
    torsion: Vec<Factor>,
    text: String,
}

impl Serialize for HomologyGroup {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GroupRecord {
            free_rank: self.free_rank,
            torsion: self
                .torsion
                .iter()
                .map(|d| d.to_u64().map_or_else(|| Factor::Big(d.to_string()), Factor::Small))
                .collect(),
            text: self.to_string(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for HomologyGroup {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = GroupRecord::deserialize(d)?;
        let torsion = r
            .torsion
            .into_iter()
            .map(|f| match f {
                Factor::Small(v) => Ok(BigInt::from(v)),
                Factor::Big(s) => s.parse().map_err(serde::de::Error::custom),
            })
            .collect::<Result<_, _>>()?;
        Ok(Self {
            free_rank: r.free_rank,
            torsion,
        })
    }
}

/// Describes the rows/columns of a boundary matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Basis {
    /// Basis tuples of a free chain group or a quotient of one.
    Tuples(Vec<Tuple>),
    /// Hermite basis chains of a generated sublattice.
    Lattice(Vec<FormalChain>),
}

impl Basis {
    pub fn len(&self) -> usize {
        match self {
            Basis::Tuples(t) => t.len(),
            Basis::Lattice(c) => c.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Element `i` as a chain in the tuple basis.
    pub fn chain(&self, i: usize) -> FormalChain {
        match self {
            Basis::Tuples(t) => FormalChain::basis(t[i].clone()),
            Basis::Lattice(c) => c[i].clone(),
        }
    }
}

/// Matrix of `∂_n` in row convention: row `i` holds the image of source
/// basis element `i` in target coordinates.
#[derive(Clone, Debug)]
pub struct BoundaryMatrix {
    pub degree: usize,
    pub matrix: SparseMatrix,
    pub source: Basis,
    pub target: Basis,
}

impl BoundaryMatrix {
    pub fn dense(&self) -> IntegerMatrix {
        self.matrix.to_dense()
    }
}

struct IdentityLevel {
    lattice: Lattice,
    chains: Vec<FormalChain>,
}

/// Lazily built boundary matrices of one complex over one rack.
pub struct ChainComplex {
    q: QuandleTable,
    complex: Complex,
    limit: usize,
    identity_levels: HashMap<usize, IdentityLevel>,
}

impl ChainComplex {
    pub fn new(q: &QuandleTable, complex: Complex) -> Result<Self, HomologyError> {
        Self::with_limit(q, complex, DEFAULT_MAX_BASIS)
    }

    pub fn with_limit(q: &QuandleTable, complex: Complex, limit: usize) -> Result<Self, HomologyError> {
        match complex {
            Complex::Quandle if !q.is_quandle() => return Err(HomologyError::NotAQuandle("quandle")),
            Complex::Degenerate if !q.is_quandle() => {
                return Err(HomologyError::NotAQuandle("degenerate"))
            }
            _ => {}
        }
        Ok(Self {
            q: q.clone(),
            complex,
            limit,
            identity_levels: HashMap::new(),
        })
    }

    pub fn complex(&self) -> &Complex {
        &self.complex
    }

    fn tuples(&self, degree: usize, keep: impl Fn(&[u32]) -> bool + Sync + Send) -> Result<Vec<Tuple>, HomologyError> {
        if degree == 0 {
            return Ok(Vec::new());
        }
        let n = self.q.order();
        let size = basis_size(n, degree, self.limit)?;
        Ok((0..size)
            .map(|i| index_tuple(i, n, degree))
            .filter(|t| keep(t))
            .collect())
    }

    fn identity_level(&mut self, degree: usize) -> Result<&IdentityLevel, HomologyError> {
        if !self.identity_levels.contains_key(&degree) {
            let Complex::Identity { word, leading_slot } = &self.complex else {
                unreachable!("identity levels only exist for identity complexes");
            };
            let min = if *leading_slot { 1 } else { 2 };
            let n = self.q.order();
            let level = if degree < min {
                IdentityLevel {
                    lattice: Lattice::new(n.pow(degree as u32)),
                    chains: Vec::new(),
                }
            } else {
                let kind = GeneratorKind::Identity {
                    word: word.clone(),
                    leading_slot: *leading_slot,
                };
                let gens = subcomplex_generators_with_limit(&self.q, &kind, degree, self.limit)?;
                let mut lattice = gens.span();
                let chains = lattice
                    .basis()
                    .iter()
                    .map(|r| FormalChain::from_sparse_row(n, degree, r))
                    .collect();
                IdentityLevel { lattice, chains }
            };
            self.identity_levels.insert(degree, level);
        }
        Ok(&self.identity_levels[&degree])
    }

    /// Basis of the degree-`n` chain group of this complex (`C_0 = 0`).
    pub fn basis(&mut self, degree: usize) -> Result<Basis, HomologyError> {
        Ok(match &self.complex {
            Complex::Rack => Basis::Tuples(self.tuples(degree, |_| true)?),
            Complex::Quandle => Basis::Tuples(self.tuples(degree, |t| !is_degenerate(t))?),
            Complex::Degenerate => Basis::Tuples(self.tuples(degree, is_degenerate)?),
            Complex::Identity { .. } => {
                if degree == 0 {
                    Basis::Lattice(Vec::new())
                } else {
                    Basis::Lattice(self.identity_level(degree)?.chains.clone())
                }
            }
        })
    }

    pub fn rank_of_group(&mut self, degree: usize) -> Result<usize, HomologyError> {
        Ok(self.basis(degree)?.len())
    }

    pub fn boundary_matrix(&mut self, degree: usize) -> Result<BoundaryMatrix, HomologyError> {
        let source = self.basis(degree)?;
        let target = if degree == 0 { Basis::Tuples(Vec::new()) } else { self.basis(degree - 1)? };
        let n = self.q.order();
        let q = &self.q;
        let cols = if degree <= 1 { 0 } else { target.len() };
        let mut matrix = SparseMatrix::new(cols);
        if degree <= 1 {
            matrix.rows = vec![Vec::new(); source.len()];
            return Ok(BoundaryMatrix {
                degree,
                matrix,
                source,
                target,
            });
        }

        let rows: Vec<Result<SparseRow, HomologyError>> = match (&self.complex, &source, &target) {
            (Complex::Identity { .. }, Basis::Lattice(src), Basis::Lattice(_)) => {
                let level = &self.identity_levels[&(degree - 1)];
                par::map_slice(src, |c| {
                    let image = boundary(q, c);
                    level
                        .lattice
                        .coordinates(&image.to_sparse_row(n))
                        .map(|coords| {
                            coords
                                .into_iter()
                                .enumerate()
                                .filter(|(_, v)| *v != BigInt::ZERO)
                                .collect()
                        })
                        .ok_or_else(|| HomologyError::SubcomplexClosureViolated(format!("∂({c}) = {image}")))
                })
            }
            (complex, Basis::Tuples(src), Basis::Tuples(tgt)) => {
                let full = n.pow((degree - 1) as u32);
                let mut position = vec![u32::MAX; full];
                for (i, t) in tgt.iter().enumerate() {
                    position[tuple_index(t, n)] = i as u32;
                }
                let strict = matches!(complex, Complex::Degenerate);
                par::map_slice(src, |t| {
                    let mut terms = Vec::new();
                    boundary_terms(q, t, &mut terms);
                    let mut row: Vec<(usize, i64)> = Vec::with_capacity(terms.len());
                    let mut outside = FormalChain::zero(degree - 1);
                    for (s, k) in terms {
                        match position[tuple_index(&s, n)] {
                            u32::MAX => {
                                if strict {
                                    outside.add_term(s, k);
                                }
                            }
                            p => row.push((p as usize, k)),
                        }
                    }
                    if !outside.is_zero() {
                        return Err(HomologyError::SubcomplexClosureViolated(format!(
                            "∂({}) has {outside} outside the subcomplex",
                            FormalChain::basis(t.clone())
                        )));
                    }
                    row.sort_unstable_by_key(|(j, _)| *j);
                    let mut merged: SparseRow = Vec::with_capacity(row.len());
                    for (j, k) in row {
                        match merged.last_mut() {
                            Some((lj, lv)) if *lj == j => *lv += k,
                            _ => merged.push((j, BigInt::from(k))),
                        }
                    }
                    merged.retain(|(_, v)| *v != BigInt::ZERO);
                    Ok(merged)
                })
            }
            _ => unreachable!("basis kinds match the complex"),
        };
        matrix.rows = rows.into_iter().collect::<Result<_, _>>()?;
        Ok(BoundaryMatrix {
            degree,
            matrix,
            source,
            target,
        })
    }

    /// `H_n = ker ∂_n / im ∂_{n+1}` from the invariant factors of `∂_{n+1}`
    /// and the rank of `∂_n`.
    pub fn homology(&mut self, degree: usize) -> Result<HomologyGroup, HomologyError> {
        if degree == 0 {
            return Err(HomologyError::DegreeZero);
        }
        let d_n = self.boundary_matrix(degree)?;
        let d_up = self.boundary_matrix(degree + 1)?;
        let dim = d_n.source.len();
        let rank_n = snf::rank(&d_n.matrix);
        let factors = snf::invariant_factors(&d_up.matrix);
        Ok(group_from(dim, rank_n, &factors))
    }

    /// Checks `∂_n ∘ ∂_{n+1} = 0` as a matrix product.
    pub fn boundary_squares_to_zero(&mut self, degree: usize) -> Result<bool, HomologyError> {
        let upper = self.boundary_matrix(degree + 1)?;
        let lower = self.boundary_matrix(degree)?;
        Ok(upper.matrix.mul(&lower.matrix).is_zero())
    }
}

fn group_from(dim: usize, rank_n: usize, factors: &[BigInt]) -> HomologyGroup {
    HomologyGroup {
        free_rank: dim - rank_n - factors.len(),
        torsion: factors.iter().filter(|d| !d.is_one()).cloned().collect(),
    }
}

pub fn boundary_matrix(
    q: &QuandleTable,
    complex: &Complex,
    degree: usize,
) -> Result<BoundaryMatrix, HomologyError> {
    let mut cc = ChainComplex::new(q, complex.clone())?;
    if let Complex::Identity { .. } = complex {
        // coordinates of the image live one degree down
        if degree >= 1 {
            cc.basis(degree - 1)?;
        }
    }
    cc.boundary_matrix(degree)
}

pub fn homology(q: &QuandleTable, complex: &Complex, degree: usize) -> Result<HomologyGroup, HomologyError> {
    ChainComplex::new(q, complex.clone())?.homology(degree)
}

/// Quandle homology computed in the rack basis: `C_n / (im ∂_{n+1} + C^D_n)`
/// presented by one stacked matrix, with the free part corrected by the rank
/// of `∂_n` followed by projection away from degenerate tuples.
pub fn quandle_homology_stacked(q: &QuandleTable, degree: usize) -> Result<HomologyGroup, HomologyError> {
    if !q.is_quandle() {
        return Err(HomologyError::NotAQuandle("quandle"));
    }
    if degree == 0 {
        return Err(HomologyError::DegreeZero);
    }
    let mut rack = ChainComplex::new(q, Complex::Rack)?;
    let up = rack.boundary_matrix(degree + 1)?;
    let down = rack.boundary_matrix(degree)?;
    let n = q.order();
    let dim = n.pow(degree as u32);

    let mut stacked = up.matrix.clone();
    for idx in 0..dim {
        if is_degenerate(&index_tuple(idx, n, degree)) {
            stacked.rows.push(vec![(idx, BigInt::one())]);
        }
    }
    let factors = snf::invariant_factors(&stacked);

    let mut projected = SparseMatrix::new(down.matrix.cols);
    if degree >= 2 {
        let Basis::Tuples(targets) = &down.target else { unreachable!() };
        for row in &down.matrix.rows {
            projected.push_row(
                row.iter()
                    .filter(|(j, _)| !is_degenerate(&targets[*j]))
                    .cloned()
                    .collect(),
            );
        }
    }
    let rank_down = snf::rank(&projected);
    Ok(group_from(dim, rank_down, &factors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::Mode;

    fn dihedral3() -> QuandleTable {
        QuandleTable::from_fn(3, Mode::Quandle, |x, y| (2 * y + 3 - x) % 3).unwrap()
    }

    #[test]
    fn group_display() {
        assert_eq!(HomologyGroup::trivial().to_string(), "0");
        assert_eq!(HomologyGroup::free(1).to_string(), "Z");
        let g = HomologyGroup {
            free_rank: 2,
            torsion: vec![BigInt::from(2), BigInt::from(6)],
        };
        assert_eq!(g.to_string(), "Z^2 ⊕ Z_2 ⊕ Z_6");
        let json = serde_json::to_string(&g).unwrap();
        assert_eq!(json, r#"{"free_rank":2,"torsion":[2,6],"text":"Z^2 ⊕ Z_2 ⊕ Z_6"}"#);
        assert_eq!(serde_json::from_str::<HomologyGroup>(&json).unwrap(), g);
    }

    #[test]
    fn rack_matrix_small() {
        let one = QuandleTable::from_fn(1, Mode::Quandle, |_, _| 0).unwrap();
        let m = boundary_matrix(&one, &Complex::Rack, 2).unwrap();
        assert_eq!((m.matrix.nrows(), m.matrix.cols), (1, 1));
        assert!(m.matrix.is_zero());

        let d = dihedral3();
        let m = boundary_matrix(&d, &Complex::Rack, 2).unwrap().dense();
        assert_eq!((m.rows(), m.cols()), (9, 3));
        for x in 0..3 {
            for y in 0..3 {
                let mut want = vec![BigInt::ZERO; 3];
                want[x] += 1;
                want[d.op(x, y)] -= 1;
                assert_eq!(m.row(3 * x + y), &want[..]);
            }
        }
    }

    #[test]
    fn small_homology() {
        let d = dihedral3();
        assert_eq!(homology(&d, &Complex::Rack, 1).unwrap(), HomologyGroup::free(1));
        assert!(homology(&d, &Complex::Quandle, 2).unwrap().is_trivial());
        assert_eq!(
            quandle_homology_stacked(&d, 2).unwrap(),
            homology(&d, &Complex::Quandle, 2).unwrap()
        );
        let one = QuandleTable::from_fn(1, Mode::Quandle, |_, _| 0).unwrap();
        for n in 1..=4 {
            assert_eq!(homology(&one, &Complex::Rack, n).unwrap(), HomologyGroup::free(1));
        }
    }

    #[test]
    fn identity_complex_closes() {
        let d = dihedral3();
        let complex = Complex::identity(Word::parse("aa").unwrap());
        let mut cc = ChainComplex::new(&d, complex).unwrap();
        for n in 2..=3 {
            assert!(cc.boundary_squares_to_zero(n).unwrap());
        }
        let m = cc.boundary_matrix(3).unwrap();
        assert_eq!(m.matrix.nrows(), m.source.len());
    }

    #[test]
    fn rack_needs_quandle_for_quotient() {
        let cyc = QuandleTable::from_rows(&[vec![1, 1], vec![0, 0]], Mode::Rack).unwrap();
        assert!(matches!(
            ChainComplex::new(&cyc, Complex::Quandle),
            Err(HomologyError::NotAQuandle(_))
        ));
        assert!(ChainComplex::new(&cyc, Complex::Rack).is_ok());
    }
}
