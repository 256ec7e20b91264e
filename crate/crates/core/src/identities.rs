//! Words over a finite alphabet and inner identities `x w = x`.
//!
//! A word of length `k` on `m` letters is stored as its letter sequence
//! `tau[0..k]` with letters numbered by first occurrence, so `"ba"` and
//! `"ab"` are the same word. The identity `x y_tau(1) ... y_tau(k) = x`
//! holds in a rack iff `R_{y_tau(k)} ... R_{y_tau(1)} = id` for every choice
//! of the `y`s.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::par;
use crate::perm::Permutation;
use crate::table::QuandleTable;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("empty word")]
    EmptyWord,
    #[error("character {0:?} at position {1} is not a letter a-z")]
    NonLetterCharacter(char, usize),
}

/// A canonical word: letters numbered `0..m` in order of first occurrence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    tau: Vec<u8>,
    alphabet: usize,
}

impl Word {
    /// Canonicalizes an arbitrary letter sequence.
    pub fn new(letters: &[usize]) -> Result<Self, WordError> {
        if letters.is_empty() {
            return Err(WordError::EmptyWord);
        }
        let mut rename: Vec<(usize, u8)> = Vec::new();
        let mut tau = Vec::with_capacity(letters.len());
        for &l in letters {
            let c = match rename.iter().find(|(from, _)| *from == l) {
                Some(&(_, to)) => to,
                None => {
                    let to = rename.len() as u8;
                    rename.push((l, to));
                    to
                }
            };
            tau.push(c);
        }
        Ok(Self {
            tau,
            alphabet: rename.len(),
        })
    }

    pub fn parse(text: &str) -> Result<Self, WordError> {
        let mut letters = Vec::with_capacity(text.len());
        for (i, ch) in text.chars().enumerate() {
            if !ch.is_ascii_lowercase() {
                return Err(WordError::NonLetterCharacter(ch, i));
            }
            letters.push((ch as u8 - b'a') as usize);
        }
        Self::new(&letters)
    }

    /// `a^k`, the identity defining racks of type dividing `k`.
    pub fn power_of_letter(k: usize) -> Self {
        assert!(k >= 1);
        Self {
            tau: vec![0; k],
            alphabet: 1,
        }
    }

    /// `(y_1 ... y_m)^n`.
    pub fn cyclic_repetition(m: usize, n: usize) -> Self {
        assert!(m >= 1 && n >= 1);
        Self {
            tau: (0..n).flat_map(|_| 0..m as u8).collect(),
            alphabet: m,
        }
    }

    /// This word repeated `times` times with no parenthesization.
    pub fn repeat(&self, times: usize) -> Self {
        Self {
            tau: self.tau.repeat(times),
            alphabet: self.alphabet,
        }
    }

    /// Letter indices `0..m`, first-occurrence numbered.
    pub fn letters(&self) -> impl DoubleEndedIterator<Item = usize> + ExactSizeIterator + '_ {
        self.tau.iter().map(|&c| c as usize)
    }

    pub fn letter(&self, i: usize) -> usize {
        self.tau[i] as usize
    }

    pub fn len(&self) -> usize {
        self.tau.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tau.is_empty()
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet
    }

    pub fn occurrences(&self) -> Vec<usize> {
        let mut counts = vec![0; self.alphabet];
        for l in self.letters() {
            counts[l] += 1;
        }
        counts
    }

    /// Values of `y_tau(1), ..., y_tau(k)` under an assignment of the letters.
    pub fn substitute(&self, ys: &[usize]) -> Vec<usize> {
        self.letters().map(|l| ys[l]).collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in self.letters() {
            write!(f, "{}", (b'a' + l as u8) as char)?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Word::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// Values for `x` and for each letter `y_1 .. y_m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assignment {
    pub x: usize,
    pub ys: Vec<usize>,
}

impl Assignment {
    /// The assignment with index `idx` in the enumeration order used by
    /// [`satisfies`]: `x` fastest, then `y_1`, then `y_2`, ...
    pub fn from_index(mut idx: u64, order: usize, alphabet: usize) -> Self {
        let n = order as u64;
        let x = (idx % n) as usize;
        idx /= n;
        let ys = (0..alphabet)
            .map(|_| {
                let y = (idx % n) as usize;
                idx /= n;
                y
            })
            .collect();
        Self { x, ys }
    }

    pub fn count(order: usize, alphabet: usize) -> u64 {
        (order as u64).pow(alphabet as u32 + 1)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SatisfactionReport {
    pub satisfied: bool,
    pub witness: Option<Assignment>,
    pub tuples_checked: u64,
}

fn decode_ys(mut idx: usize, n: usize, m: usize, out: &mut [usize]) {
    for slot in out.iter_mut().take(m) {
        *slot = idx % n;
        idx /= n;
    }
}

/// Exhaustive check of `x w = x` over all `n^(m+1)` assignments, stopping at
/// the first violation in enumeration order.
pub fn satisfies(q: &QuandleTable, w: &Word) -> SatisfactionReport {
    let n = q.order();
    let m = w.alphabet_size();
    let outer = n.pow(m as u32);
    let hit = par::find_first(0..outer, |yi| {
        let mut ys = vec![0usize; m];
        decode_ys(yi, n, m, &mut ys);
        let word: Vec<usize> = w.substitute(&ys);
        (0..n).find(|&x| q.product(x, &word) != x)
    });
    match hit {
        Some((yi, x)) => {
            let mut ys = vec![0usize; m];
            decode_ys(yi, n, m, &mut ys);
            SatisfactionReport {
                satisfied: false,
                witness: Some(Assignment { x, ys }),
                tuples_checked: (yi * n + x + 1) as u64,
            }
        }
        None => SatisfactionReport {
            satisfied: true,
            witness: None,
            tuples_checked: Assignment::count(n, m),
        },
    }
}

/// Same question through the permutation form: every product
/// `R_{y_tau(k)} ∘ ... ∘ R_{y_tau(1)}` must be the identity.
pub fn satisfies_via_permutations(q: &QuandleTable, w: &Word) -> bool {
    let n = q.order();
    let m = w.alphabet_size();
    let cols = q.translations();
    par::all(0..n.pow(m as u32), |yi| {
        let mut ys = vec![0usize; m];
        decode_ys(yi, n, m, &mut ys);
        w.letters()
            .fold(Permutation::identity(n), |acc, l| acc.then(&cols[ys[l]]))
            .is_identity()
    })
}

/// Some letter occurs exactly once; only trivial quandles satisfy `x w = x`.
pub fn lemma_trivial(w: &Word) -> bool {
    w.occurrences().contains(&1)
}

/// For a two-letter word of the shape `a^h b^k a^(|w|-h-k)` returns
/// `gcd(k, |w| - k)`, an upper bound for (indeed a multiple of) the type of
/// any quandle satisfying `x w = x`.
pub fn lemma_type_bound(w: &Word) -> Option<u64> {
    if w.alphabet_size() != 2 {
        return None;
    }
    // canonical words start with `a`, so the consecutive block is the b's
    let first = w.letters().position(|l| l == 1)?;
    let last = w.len() - 1 - w.letters().rev().position(|l| l == 1)?;
    if (first..=last).any(|i| w.letter(i) != 1) {
        return None;
    }
    let k = (last - first + 1) as u64;
    Some(k.gcd(&(w.len() as u64 - k)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WordFilter {
    /// Every canonical word.
    All,
    /// Drops words in which some letter occurs once.
    NoSingleLetter,
    /// Drops single-occurrence words and words whose type bound is 1.
    NontrivialCandidates,
}

impl WordFilter {
    pub fn keeps(self, w: &Word) -> bool {
        match self {
            WordFilter::All => true,
            WordFilter::NoSingleLetter => !lemma_trivial(w),
            WordFilter::NontrivialCandidates => {
                !lemma_trivial(w) && lemma_type_bound(w) != Some(1)
            }
        }
    }
}

/// All canonical words of length `k` on exactly `m` letters, in
/// lexicographic order, that pass `filter`.
pub fn enumerate_words(k: usize, m: usize, filter: WordFilter) -> Vec<Word> {
    assert!(k >= 1 && m >= 1 && m <= k, "need 1 <= m <= k");
    fn rec(k: usize, m: usize, prefix: &mut Vec<u8>, used: usize, out: &mut Vec<Vec<u8>>) {
        if prefix.len() == k {
            if used == m {
                out.push(prefix.clone());
            }
            return;
        }
        let remaining = k - prefix.len();
        for c in 0..=used.min(m - 1) {
            let used2 = used.max(c + 1);
            if m - used2 > remaining - 1 {
                continue;
            }
            prefix.push(c as u8);
            rec(k, m, prefix, used2, out);
            prefix.pop();
        }
    }
    let mut raw = Vec::new();
    rec(k, m, &mut Vec::with_capacity(k), 0, &mut raw);
    raw.into_iter()
        .map(|tau| Word { tau, alphabet: m })
        .filter(|w| filter.keeps(w))
        .collect()
}

/// Satisfaction of every word by every quandle.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScanReport {
    pub words: Vec<Word>,
    /// `satisfied[i][j]`: quandle `i` satisfies word `j`.
    pub satisfied: Vec<Vec<bool>>,
    /// Number of quandles satisfying each word.
    pub counts: Vec<usize>,
}

impl ScanReport {
    pub fn satisfying(&self, word: usize) -> Vec<usize> {
        (0..self.satisfied.len())
            .filter(|&i| self.satisfied[i][word])
            .collect()
    }
}

pub fn scan(corpus: &[QuandleTable], words: &[Word]) -> ScanReport {
    let nw = words.len();
    let flat = par::map(0..corpus.len() * nw, |i| {
        satisfies(&corpus[i / nw.max(1)], &words[i % nw.max(1)]).satisfied
    });
    let satisfied: Vec<Vec<bool>> = if nw == 0 {
        vec![Vec::new(); corpus.len()]
    } else {
        flat.chunks(nw).map(|c| c.to_vec()).collect()
    };
    let counts = (0..nw)
        .map(|j| satisfied.iter().filter(|row| row[j]).count())
        .collect();
    ScanReport {
        words: words.to_vec(),
        satisfied,
        counts,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::table::Mode;

    fn dihedral3() -> QuandleTable {
        QuandleTable::from_fn(3, Mode::Quandle, |x, y| (2 * y + 3 - x) % 3).unwrap()
    }

    fn alexander5(t: usize) -> QuandleTable {
        QuandleTable::from_fn(5, Mode::Quandle, |x, y| (t * x + (6 - t) * y) % 5).unwrap()
    }

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn parse_canonicalizes() {
        let aa = w("aa");
        assert_eq!((aa.letters().collect::<Vec<_>>(), aa.len(), aa.alphabet_size()), (vec![0, 0], 2, 1));
        let abab = w("abab");
        assert_eq!(abab.letters().collect::<Vec<_>>(), vec![0, 1, 0, 1]);
        assert_eq!(abab.alphabet_size(), 2);
        assert_eq!(w("ba"), w("ab"));
        assert_eq!(w("zzxz").to_string(), "aaba");
        assert_eq!(Word::parse(""), Err(WordError::EmptyWord));
        assert_eq!(Word::parse("aB"), Err(WordError::NonLetterCharacter('B', 1)));
    }

    #[test]
    fn satisfaction_examples() {
        assert!(satisfies(&dihedral3(), &w("aa")).satisfied);
        assert!(satisfies(&alexander5(2), &w("abab")).satisfied);
        let r = satisfies(&dihedral3(), &w("abab"));
        assert!(!r.satisfied);
        let wit = r.witness.unwrap();
        let d = dihedral3();
        let vals = w("abab").substitute(&wit.ys);
        assert_ne!(d.product(wit.x, &vals), wit.x);
        // x a b a b = x + (b - a) mod 3: first violation has a = 0, b = 1
        assert_eq!(wit, Assignment { x: 0, ys: vec![1, 0] });
        assert_eq!(r.tuples_checked, 4);
    }

    #[test]
    fn assignment_index_roundtrip() {
        assert_eq!(Assignment::from_index(3, 3, 2), Assignment { x: 0, ys: vec![1, 0] });
        assert_eq!(Assignment::count(3, 2), 27);
    }

    #[test]
    fn lemmas() {
        assert!(lemma_trivial(&w("ab")));
        assert!(!lemma_trivial(&w("aa")));
        assert!(!lemma_trivial(&w("aabab")));
        assert_eq!(lemma_type_bound(&w("aabb")), Some(2));
        assert_eq!(lemma_type_bound(&w("abba")), Some(2));
        assert_eq!(lemma_type_bound(&w("aaabb")), Some(1));
        assert_eq!(lemma_type_bound(&w("abab")), None);
        assert_eq!(lemma_type_bound(&w("aaa")), None);
        assert_eq!(lemma_type_bound(&w("aabaab")), None);
        assert_eq!(lemma_type_bound(&w("abbbab")), None);
        assert_eq!(lemma_type_bound(&w("aaabbb")), Some(3));
    }

    #[test]
    fn enumeration() {
        let names = |v: Vec<Word>| v.iter().map(|w| w.to_string()).collect::<Vec<_>>();
        assert_eq!(names(enumerate_words(2, 1, WordFilter::All)), ["aa"]);
        assert_eq!(enumerate_words(5, 2, WordFilter::All).len(), 15);
        let mut ten = names(enumerate_words(5, 2, WordFilter::NoSingleLetter));
        let mut listed: Vec<String> = [
            "aaabb", "aabab", "aabba", "abaab", "ababa", "abbaa", "aabbb", "ababb", "abbab",
            "abbba",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        ten.sort();
        listed.sort();
        assert_eq!(ten, listed);
        assert_eq!(
            names(enumerate_words(4, 2, WordFilter::NontrivialCandidates)),
            ["aabb", "abab", "abba"]
        );
        // Bell-number style counts: S(5,3) = 25
        assert_eq!(enumerate_words(5, 3, WordFilter::All).len(), 25);
        let all = enumerate_words(6, 2, WordFilter::All);
        assert!(all.windows(2).all(|p| p[0] < p[1]));
    }

    #[test]
    fn scan_examples() {
        let triv = QuandleTable::from_fn(2, Mode::Quandle, |x, _| x).unwrap();
        let r = scan(&[triv, dihedral3()], &[w("ab"), w("aa")]);
        assert_eq!(r.satisfied, vec![vec![true, true], vec![false, true]]);
        assert_eq!(r.counts, vec![1, 2]);
        assert_eq!(r.satisfying(1), vec![0, 1]);
    }

    #[test]
    fn permutation_form_agrees() {
        let corpus = [dihedral3(), alexander5(2), alexander5(3)];
        for q in &corpus {
            for k in 1..=5 {
                for m in 1..=2.min(k) {
                    for word in enumerate_words(k, m, WordFilter::All) {
                        assert_eq!(
                            satisfies(q, &word).satisfied,
                            satisfies_via_permutations(q, &word),
                            "{word}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn repetition_words() {
        assert_eq!(Word::cyclic_repetition(2, 3).to_string(), "ababab");
        assert_eq!(Word::power_of_letter(3).to_string(), "aaa");
        assert_eq!(w("ab").repeat(2), w("abab"));
    }
}
