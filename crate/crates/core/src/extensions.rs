//! Abelian extensions `E(X, Z_d, φ)` with `(x, a) * (y, b) = (x*y, a + φ(x, y))`,
//! the cocycle criterion for inherited identities, and a type comparison
//! harness for extensions and inner representations.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chains::cycle_ls_unchecked;
use crate::homology::cocycle::{evaluate_cocycle, CocycleTable};
use crate::identities::{satisfies, Assignment, Word};
use crate::par;
use crate::table::{Mode, QuandleTable, ValidationError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExtensionError {
    #[error("invalid cocycle: {0}")]
    InvalidCocycle(String),
    #[error("base does not satisfy x{word} = x (witness {witness:?})")]
    BaseDoesNotSatisfy { word: Word, witness: Assignment },
    #[error("extension failed validation: {0}")]
    Validation(#[from] ValidationError),
}

/// A base rack, a modulus `d ≥ 2` and a cocycle with values in `Z_d`.
#[derive(Clone, Debug)]
pub struct ExtensionSpec {
    base: QuandleTable,
    cocycle: CocycleTable,
}

impl ExtensionSpec {
    pub fn new(base: QuandleTable, cocycle: CocycleTable) -> Result<Self, ExtensionError> {
        if cocycle.modulus < 2 {
            return Err(ExtensionError::InvalidCocycle(format!(
                "modulus {} (need at least 2)",
                cocycle.modulus
            )));
        }
        if cocycle.order != base.order() || cocycle.values.len() != base.order().pow(2) {
            return Err(ExtensionError::InvalidCocycle(format!(
                "cocycle is for order {}, base has order {}",
                cocycle.order,
                base.order()
            )));
        }
        if cocycle.values.iter().any(|&v| v < 0 || v as u64 >= cocycle.modulus) {
            return Err(ExtensionError::InvalidCocycle("values not reduced mod d".into()));
        }
        if let Some((x, y, z)) = cocycle.violation(&base) {
            return Err(ExtensionError::InvalidCocycle(format!(
                "condition fails at ({}, {}, {})",
                x + 1,
                y + 1,
                z + 1
            )));
        }
        Ok(Self { base, cocycle })
    }

    /// The zero cocycle: `E` is `X × T_d` with `T_d` trivial.
    pub fn trivial(base: QuandleTable, modulus: u64) -> Result<Self, ExtensionError> {
        let mode = if base.is_quandle() { Mode::Quandle } else { Mode::Rack };
        let phi = CocycleTable::zero(base.order(), modulus, mode);
        Self::new(base, phi)
    }

    pub fn base(&self) -> &QuandleTable {
        &self.base
    }

    pub fn cocycle(&self) -> &CocycleTable {
        &self.cocycle
    }

    pub fn modulus(&self) -> u64 {
        self.cocycle.modulus
    }
}

/// Index of `(x, a)` in the extension.
pub fn pair_index(x: usize, a: usize, d: usize) -> usize {
    x * d + a
}

pub fn extend(spec: &ExtensionSpec) -> Result<QuandleTable, ExtensionError> {
    let n = spec.base.order();
    let d = spec.modulus() as usize;
    let phi = &spec.cocycle;
    QuandleTable::from_fn(n * d, Mode::Rack, |i, j| {
        let (x, a) = (i / d, i % d);
        let y = j / d;
        pair_index(spec.base.op(x, y), (a + phi.get(x, y) as usize) % d, d)
    })
    .map_err(ExtensionError::from)
}

/// Both sides of the criterion "E satisfies `x w = x` iff `φ(L_S) = 0` for
/// every assignment".
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub word: Word,
    pub extension_satisfies: bool,
    /// First assignment of the extension violating the identity, in pair indices.
    pub extension_witness: Option<Assignment>,
    pub cocycle_vanishes: bool,
    /// First base assignment with `φ(L_S) ≠ 0`, and that value.
    pub cocycle_witness: Option<(Assignment, i64)>,
    pub agree: bool,
}

pub fn verify_theorem_ii(spec: &ExtensionSpec, w: &Word) -> Result<TheoremReport, ExtensionError> {
    let base = &spec.base;
    let r = satisfies(base, w);
    if let Some(witness) = r.witness {
        return Err(ExtensionError::BaseDoesNotSatisfy {
            word: w.clone(),
            witness,
        });
    }
    let e = extend(spec)?;
    let lhs = satisfies(&e, w);

    let n = base.order();
    let total = Assignment::count(n, w.alphabet_size()) as usize;
    let hit = par::find_first(0..total, |i| {
        let a = Assignment::from_index(i as u64, n, w.alphabet_size());
        let c = cycle_ls_unchecked(base, w, &a);
        let v = evaluate_cocycle(&spec.cocycle, &c).expect("degree-2 chain");
        (v != 0).then_some((a, v))
    });
    let cocycle_vanishes = hit.is_none();
    Ok(TheoremReport {
        word: w.clone(),
        extension_satisfies: lhs.satisfied,
        extension_witness: lhs.witness,
        cocycle_vanishes,
        cocycle_witness: hit.map(|(_, av)| av),
        agree: lhs.satisfied == cocycle_vanishes,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum Comparison {
    Match { left: u64, right: u64 },
    Mismatch { left: u64, right: u64 },
    /// The hypothesis (connectedness) fails; compared values are still shown.
    Skipped { left: u64, right: u64, reason: String },
}

impl Comparison {
    fn of(left: u64, right: u64) -> Self {
        if left == right {
            Comparison::Match { left, right }
        } else {
            Comparison::Mismatch { left, right }
        }
    }

    pub fn is_mismatch(&self) -> bool {
        matches!(self, Comparison::Mismatch { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub base_type: u64,
    pub base_connected: bool,
    pub base_faithful: bool,
    /// `type(X)` against the type of the image of `a ↦ R_a`.
    pub inner: Comparison,
    /// `type(E)` against `type(X)`, one per extension.
    pub extensions: Vec<Comparison>,
    pub matches: usize,
    pub mismatches: usize,
    pub skipped: usize,
}

/// Compares types without asserting anything; all outcomes are reported.
pub fn conjecture_harness(x: &QuandleTable, specs: &[ExtensionSpec]) -> Result<ConjectureReport, ExtensionError> {
    let base_type = x.type_of();
    let base_connected = x.is_connected();
    let (image, _) = x.inner_representation()?;
    let image_type = image.type_of();
    let inner = if base_connected {
        Comparison::of(base_type, image_type)
    } else {
        Comparison::Skipped {
            left: base_type,
            right: image_type,
            reason: "base not connected".into(),
        }
    };
    let extensions = specs
        .iter()
        .map(|s| {
            let e = extend(s)?;
            let t = e.type_of();
            Ok(if e.is_connected() {
                Comparison::of(t, base_type)
            } else {
                Comparison::Skipped {
                    left: t,
                    right: base_type,
                    reason: "extension not connected".into(),
                }
            })
        })
        .collect::<Result<Vec<_>, ExtensionError>>()?;
    let all = std::iter::once(&inner).chain(&extensions);
    let (mut matches, mut mismatches, mut skipped) = (0, 0, 0);
    for c in all {
        match c {
            Comparison::Match { .. } => matches += 1,
            Comparison::Mismatch { .. } => mismatches += 1,
            Comparison::Skipped { .. } => skipped += 1,
        }
    }
    Ok(ConjectureReport {
        base_type,
        base_connected,
        base_faithful: x.is_faithful(),
        inner,
        extensions,
        matches,
        mismatches,
        skipped,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::homology::cocycle_space;

    fn dihedral3() -> QuandleTable {
        QuandleTable::from_fn(3, Mode::Quandle, |x, y| (2 * y + 3 - x) % 3).unwrap()
    }

    #[test]
    fn zero_cocycle_is_product() {
        let x = dihedral3();
        let spec = ExtensionSpec::trivial(x.clone(), 4).unwrap();
        let e = extend(&spec).unwrap();
        assert_eq!(e.order(), 12);
        assert!(e.is_quandle());
        assert_eq!(e.type_of(), x.type_of());
        for i in 0..12 {
            for j in 0..12 {
                assert_eq!(e.op(i, j), pair_index(x.op(i / 4, j / 4), i % 4, 4));
            }
        }
    }

    #[test]
    fn rack_cocycle_breaks_idempotency() {
        let x = QuandleTable::from_fn(2, Mode::Quandle, |a, _| a).unwrap();
        let phi = CocycleTable::from_fn(2, 2, Mode::Rack, |_, _| 1);
        let e = extend(&ExtensionSpec::new(x, phi).unwrap()).unwrap();
        assert!(!e.is_quandle());
        assert_eq!(e.op(0, 0), 1);
    }

    #[test]
    fn invalid_cocycles_rejected() {
        let x = dihedral3();
        let bad = CocycleTable::from_fn(3, 3, Mode::Rack, |a, b| (a == 0 && b == 1) as i64);
        assert!(matches!(ExtensionSpec::new(x.clone(), bad), Err(ExtensionError::InvalidCocycle(_))));
        let short = CocycleTable::zero(2, 3, Mode::Quandle);
        assert!(ExtensionSpec::new(x, short).is_err());
    }

    #[test]
    fn projection_is_homomorphism_and_theorem_agrees() {
        let x = dihedral3();
        let w = Word::parse("aa").unwrap();
        let space = cocycle_space(&x, 3, Mode::Quandle).unwrap();
        for phi in space.members(1000).unwrap() {
            let spec = ExtensionSpec::new(x.clone(), phi).unwrap();
            let e = extend(&spec).unwrap();
            assert!(e.is_quandle());
            for i in 0..9 {
                for j in 0..9 {
                    assert_eq!(e.op(i, j) / 3, x.op(i / 3, j / 3));
                }
            }
            let r = verify_theorem_ii(&spec, &w).unwrap();
            assert!(r.agree, "{r:?}");
        }
    }

    #[test]
    fn base_must_satisfy() {
        let x = dihedral3();
        let spec = ExtensionSpec::trivial(x, 2).unwrap();
        let err = verify_theorem_ii(&spec, &Word::parse("aaa").unwrap()).unwrap_err();
        assert!(matches!(err, ExtensionError::BaseDoesNotSatisfy { .. }));
    }

    #[test]
    fn harness_reports() {
        let x = dihedral3();
        let r = conjecture_harness(&x, &[ExtensionSpec::trivial(x.clone(), 2).unwrap()]).unwrap();
        assert_eq!(r.inner, Comparison::Match { left: 2, right: 2 });
        // X × T_2 is never connected
        assert!(matches!(r.extensions[0], Comparison::Skipped { .. }));
        assert_eq!((r.matches, r.mismatches, r.skipped), (1, 0, 1));
    }
}
