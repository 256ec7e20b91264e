//! Reproduction suites behind `quandle reproduce`.

use std::collections::BTreeSet;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::census::{self, format_census};
use super::dataset::DatasetEntry;
use super::report::Check;
use crate::chains::{boundary, cycle_ls, medial_ls, subcomplex_generators, GeneratorKind, Strictness};
use crate::constructions::{self, builtin_corpus, enumerate_connected, is_kei, NamedQuandle};
use crate::extensions::{extend, verify_theorem_ii, ExtensionSpec};
use crate::homology::cocycle::{cocycle_space, evaluate_cocycle, CocycleTable};
use crate::homology::lattice::Lattice;
use crate::identities::{enumerate_words, satisfies, Assignment, Word, WordFilter};
use crate::par;
use crate::table::{Mode, QuandleTable};

fn words(list: &[&str]) -> Vec<Word> {
    list.iter().map(|w| Word::parse(w).expect("reference words parse")).collect()
}

fn word_set(ws: &[Word]) -> BTreeSet<String> {
    ws.iter().map(Word::to_string).collect()
}

/// Words of length `k` on two letters that survive both lemmas.
pub fn two_letter_candidates(k: usize) -> Vec<Word> {
    enumerate_words(k, 2, WordFilter::NontrivialCandidates)
}

fn satisfied_by(q: &QuandleTable, ws: &[Word]) -> Vec<Word> {
    ws.iter().filter(|w| satisfies(q, w).satisfied).cloned().collect()
}

pub fn census_checks(entries: &[DatasetEntry], inn_cap: usize) -> Vec<Check> {
    let tables: Vec<&QuandleTable> = entries.iter().map(|e| &e.table).collect();
    let mut out = vec![Check::new(
        "catalogue size",
        tables.len() == census::CATALOGUE_SIZE,
        format!("{} matrices (expected {})", tables.len(), census::CATALOGUE_SIZE),
    )];
    let types = census::type_census(tables.iter().copied());
    out.push(Check::new(
        "type census",
        types == census::TYPE_CENSUS,
        format_census(&types),
    ));
    out.push(match census::exponent_census(&tables, inn_cap) {
        Ok(exps) => Check::new("Inn exponent census", exps == census::EXPONENT_CENSUS, format_census(&exps)),
        Err(e) => Check::new("Inn exponent census", false, format!("{e} (raise --inn-cap)")),
    });
    out
}

/// Word scans that need only the built-in constructions.
pub fn corpus_word_checks() -> Vec<Check> {
    let mut out = Vec::new();
    let cands7 = two_letter_candidates(7);
    let published = [word_set(&words(census::Q82_WORDS)), word_set(&words(census::Q83_WORDS))];
    let which = |got: &BTreeSet<String>| match published.iter().position(|p| p == got) {
        Some(0) => "the t^3+t^2+1 list",
        Some(_) => "the t^3+t+1 list",
        None => "neither published list",
    };
    let mut realised = Vec::new();
    for (name, q, want) in [
        ("Z2[t]/(t^3+t^2+1)", constructions::z2_t3_t2_1(), &published[0]),
        ("Z2[t]/(t^3+t+1)", constructions::z2_t3_t_1(), &published[1]),
    ] {
        let q = q.expect("built-in construction");
        let got = word_set(&satisfied_by(&q, &cands7));
        out.push(Check::new(
            format!("length-7 words of {name}"),
            &got == want,
            format!(
                "{} of {} candidates satisfied, matching {}: {}",
                got.len(),
                cands7.len(),
                which(&got),
                got.iter().cloned().collect::<Vec<_>>().join(" ")
            ),
        ));
        realised.push(got);
    }
    // With multiplier t⁻¹ each ring is the other's quandle with multiplier t.
    let inverse = constructions::PolyRing::new(2, vec![1, 0, 1, 1])
        .and_then(|r| constructions::alexander_poly(&r, &[0, 1, 1]))
        .expect("t^2 + t is the inverse of t");
    let inv = word_set(&satisfied_by(&inverse, &cands7));
    let mut pair = realised.clone();
    pair.sort();
    let mut want_pair = published.to_vec();
    want_pair.sort();
    out.push(Check::new(
        "length-7 word lists of the two type-7 Alexander quandles of order 8",
        pair == want_pair,
        format!("Z2[t]/(t^3+t^2+1) with multiplier t^-1 satisfies {}", which(&inv)),
    ));

    let abab = Word::parse("abab").unwrap();
    let five = enumerate_connected(5).expect("order 5 is within the cap");
    let non_kei: Vec<&QuandleTable> = five.iter().filter(|q| !is_kei(q)).collect();
    let all_sat = non_kei.iter().all(|q| satisfies(q, &abab).satisfied);
    out.push(Check::new(
        "xabab=x on connected order-5 non-keis",
        non_kei.len() == 2 && all_sat,
        format!("{} connected quandles of order 5, {} non-kei, all satisfy: {all_sat}", five.len(), non_kei.len()),
    ));
    let corpus = builtin_corpus();
    let kei_hits: Vec<&str> = corpus
        .iter()
        .filter(|n| is_kei(&n.table) && satisfies(&n.table, &abab).satisfied)
        .map(|n| n.name.as_str())
        .collect();
    out.push(Check::new(
        "no corpus kei satisfies xabab=x",
        kei_hits.is_empty(),
        format!("keis satisfying: {kei_hits:?}"),
    ));

    let rest5 = words(census::LENGTH5_UNSATISFIED);
    let hits: Vec<String> = corpus
        .iter()
        .filter(|n| !n.table.is_trivial())
        .flat_map(|n| satisfied_by(&n.table, &rest5).into_iter().map(move |w| format!("{}:{w}", n.name)))
        .collect();
    out.push(Check::new(
        "remaining length-5 words unsatisfied in corpus",
        hits.is_empty(),
        format!("hits: {hits:?}"),
    ));
    out
}

/// Word scans over the catalogue.
pub fn dataset_word_checks(entries: &[DatasetEntry]) -> Vec<Check> {
    let mut out = Vec::new();
    let names = |idx: &[usize]| -> BTreeSet<(usize, usize)> {
        idx.iter().map(|&i| (entries[i].order, entries[i].index)).collect()
    };
    let hits = |w: &Word| -> Vec<usize> {
        let flags = par::map_slice(entries, |e| satisfies(&e.table, w).satisfied);
        flags.iter().enumerate().filter(|(_, &f)| f).map(|(i, _)| i).collect()
    };
    let keis_among = |idx: &[usize]| idx.iter().filter(|&&i| is_kei(&entries[i].table)).count();

    let abab = hits(&Word::parse("abab").unwrap());
    let want: BTreeSet<(usize, usize)> = census::ABAB_QUANDLES.iter().copied().collect();
    let got = names(&abab);
    let fmt = |s: &BTreeSet<(usize, usize)>| s.iter().map(|(n, i)| format!("Q({n},{i})")).collect::<Vec<_>>().join(" ");
    out.push(Check::new(
        "xabab=x over catalogue",
        got == want && keis_among(&abab) == 0,
        format!(
            "{} satisfy, {} keis; missing [{}], unexpected [{}]",
            got.len(),
            keis_among(&abab),
            fmt(&want.difference(&got).copied().collect()),
            fmt(&got.difference(&want).copied().collect())
        ),
    ));

    let none_of = |list: &[&str], label: &str| {
        let found: Vec<String> = words(list)
            .iter()
            .flat_map(|w| hits(w).into_iter().map(move |i| format!("{w}:Q({},{})", entries[i].order, entries[i].index)))
            .collect();
        Check::new(label.to_string(), found.is_empty(), format!("hits: {found:?}"))
    };
    out.push(none_of(census::LENGTH5_UNSATISFIED, "remaining length-5 words unsatisfied"));
    out.push(none_of(census::LENGTH6_UNSATISFIED, "listed length-6 words unsatisfied"));

    let total_keis = entries.iter().filter(|e| is_kei(&e.table)).count();
    let triple: Vec<Vec<usize>> = words(census::LENGTH6_KEI_WORDS).iter().map(&hits).collect();
    let same = triple.windows(2).all(|p| p[0] == p[1]);
    let t0 = &triple[0];
    out.push(Check::new(
        "aabaab/abaaba/abbabb",
        same && t0.len() == census::LENGTH6_KEI_WORDS_COUNT && keis_among(t0) == total_keis && total_keis == census::KEI_COUNT,
        format!(
            "counts {:?}, identical sets: {same}, keis {} of {total_keis}",
            triple.iter().map(Vec::len).collect::<Vec<_>>(),
            keis_among(t0)
        ),
    ));

    let ababab = hits(&Word::parse("ababab").unwrap());
    out.push(Check::new(
        "xababab=x over catalogue",
        ababab.len() == census::ABABAB_COUNT && keis_among(&ababab) == census::ABABAB_KEIS,
        format!("{} satisfy, {} keis", ababab.len(), keis_among(&ababab)),
    ));

    let cands7 = two_letter_candidates(7);
    let mut seven = Vec::new();
    for e in entries {
        let sat = satisfied_by(&e.table, &cands7);
        if !sat.is_empty() {
            seven.push((e.name(), word_set(&sat)));
        }
    }
    let expected = [
        ("Q(8,2)".to_string(), word_set(&words(census::Q82_WORDS))),
        ("Q(8,3)".to_string(), word_set(&words(census::Q83_WORDS))),
    ];
    out.push(Check::new(
        "length-7 words over catalogue",
        seven == expected,
        seven
            .iter()
            .map(|(n, ws)| format!("{n}: {}", ws.iter().cloned().collect::<Vec<_>>().join(" ")))
            .collect::<Vec<_>>()
            .join("; "),
    ));
    out
}

/// All canonical words with at most `max_letters` letters and length in `lengths`.
fn word_pool(lengths: std::ops::RangeInclusive<usize>, max_letters: usize) -> Vec<Word> {
    lengths
        .flat_map(|k| (1..=k.min(max_letters)).flat_map(move |m| enumerate_words(k, m, WordFilter::All)))
        .collect()
}

/// `∂ L_S = 0` for every satisfied word and every assignment.
pub fn cycle_check(corpus: &[NamedQuandle]) -> Check {
    let pool = word_pool(1..=7, 2);
    let mut chains = 0u64;
    let mut failures = Vec::new();
    for n in corpus {
        let q = &n.table;
        for w in satisfied_by(q, &pool) {
            let count = Assignment::count(q.order(), w.alphabet_size());
            let bad = par::find_first(0..count as usize, |i| {
                let a = Assignment::from_index(i as u64, q.order(), w.alphabet_size());
                let c = cycle_ls(q, &w, &a, Strictness::Permissive).expect("valid assignment");
                (!boundary(q, &c).is_zero()).then_some(a)
            });
            chains += count;
            if let Some((_, a)) = bad {
                failures.push(format!("{}:{w}:{a:?}", n.name));
            }
        }
    }
    Check::new(
        "L_S is a 2-cycle",
        failures.is_empty(),
        format!("{chains} chains checked; failures {failures:?}"),
    )
}

/// The boundary of every identity generator lies in the span of the
/// generators one degree down.
pub fn closure_check(corpus: &[NamedQuandle], max_order: usize, max_len: usize, degrees: std::ops::RangeInclusive<usize>) -> Check {
    let pool = word_pool(2..=max_len, max_len);
    let mut checked = 0usize;
    let mut failures = Vec::new();
    for n in corpus.iter().filter(|n| n.table.order() <= max_order) {
        let q = &n.table;
        for w in satisfied_by(q, &pool) {
            let kind = GeneratorKind::identity(w.clone());
            let dim = |d: usize| q.order().pow(d as u32);
            let mut lower = Lattice::new(dim(degrees.start() - 1));
            if *degrees.start() > 2 {
                lower = subcomplex_generators(q, &kind, degrees.start() - 1).expect("within guard").span();
            }
            for d in degrees.clone() {
                let gens = subcomplex_generators(q, &kind, d).expect("within guard");
                let bad = par::find_first(0..gens.len(), |i| {
                    let img = boundary(q, &gens.chains[i]).to_sparse_row(q.order());
                    (!lower.contains(&img)).then_some(())
                });
                checked += gens.len();
                if let Some((i, _)) = bad {
                    failures.push(format!("{}:{w}:degree {d}: {}", n.name, gens.chains[i]));
                }
                lower = gens.span();
            }
        }
    }
    Check::new(
        "identity subcomplex is closed under the boundary",
        failures.is_empty(),
        format!("{checked} generators checked; failures {failures:?}"),
    )
}

/// The cocycle criterion on the full quandle cocycle space of `dihedral(3)`
/// over `Z_3`, with the space found both by linear algebra and by brute force.
pub fn extension_check_dihedral() -> Check {
    let x = constructions::dihedral(3).unwrap();
    let aa = Word::parse("aa").unwrap();
    let space = cocycle_space(&x, 3, Mode::Quandle).expect("d = 3");
    let solved = space.members(1 << 20).expect("small space");
    let brute = brute_force_cocycles(&x, 3);
    let mut agree = 0;
    let mut satisfying = 0;
    let mut bad = Vec::new();
    for phi in &solved {
        let spec = ExtensionSpec::new(x.clone(), phi.clone()).expect("solved cocycle is valid");
        let r = verify_theorem_ii(&spec, &aa).expect("dihedral(3) is a kei");
        if r.agree {
            agree += 1;
        } else {
            bad.push(format!("{:?}", phi.values));
        }
        satisfying += r.extension_satisfies as usize;
    }
    Check::new(
        "extension criterion on dihedral(3) over Z_3",
        solved == brute && bad.is_empty(),
        format!(
            "space size {} (brute force {}), rank {}, agreement {agree}/{}, extensions satisfying xaa=x: {satisfying}",
            solved.len(),
            brute.len(),
            space.rank(),
            solved.len()
        ),
    )
}

/// Every quandle cocycle by exhaustive search over `d^(n²−n)` tables.
pub fn brute_force_cocycles(q: &QuandleTable, d: u64) -> Vec<CocycleTable> {
    let n = q.order();
    let off: Vec<(usize, usize)> = (0..n).flat_map(|x| (0..n).filter(move |&y| y != x).map(move |y| (x, y))).collect();
    let total = (d as usize).pow(off.len() as u32);
    let mut out: Vec<CocycleTable> = par::map(0..total, |mut code| {
        let mut phi = CocycleTable::zero(n, d, Mode::Quandle);
        for &(x, y) in &off {
            phi.values[x * n + y] = (code % d as usize) as i64;
            code /= d as usize;
        }
        phi.check(q).then_some(phi)
    })
    .into_iter()
    .flatten()
    .collect();
    out.sort_by(|a, b| a.values.cmp(&b.values));
    out
}

/// Random members of cocycle spaces across the corpus, checked against the
/// criterion for every satisfied short word.
pub fn extension_check_sampled(corpus: &[NamedQuandle], seed: u64, samples: usize) -> Check {
    let mut rng = StdRng::seed_from_u64(seed);
    let pool = word_pool(2..=4, 2);
    let mut checked = 0;
    let mut bad = Vec::new();
    for n in corpus.iter().filter(|n| n.table.order() <= 5) {
        let x = &n.table;
        let ws = satisfied_by(x, &pool);
        for d in [2u64, 3, 4] {
            let space = cocycle_space(x, d, Mode::Quandle).expect("d ≥ 2");
            for _ in 0..samples {
                let mut phi = CocycleTable::zero(x.order(), d, Mode::Quandle);
                for (g, &k) in space.generators.iter().zip(&space.orders) {
                    phi = phi.add(&g.scale(rng.gen_range(0..k as i64)));
                }
                let spec = ExtensionSpec::new(x.clone(), phi).expect("member of the space");
                for w in &ws {
                    let r = verify_theorem_ii(&spec, w).expect("word is satisfied");
                    checked += 1;
                    if !r.agree {
                        bad.push(format!("{}:{w}:d={d}", n.name));
                    }
                }
            }
        }
    }
    Check::new(
        "extension criterion on sampled cocycles",
        bad.is_empty(),
        format!("{checked} (cocycle, word) pairs, seed {seed}; disagreements {bad:?}"),
    )
}

/// Medial corpus members: `∂(medial_LS) = 0`; extensions of `dihedral(3)` by
/// cocycles vanishing on every `medial_LS` are medial.
pub fn medial_check(corpus: &[NamedQuandle]) -> Check {
    let mut quads = 0usize;
    let mut failures = Vec::new();
    for n in corpus.iter().filter(|n| n.table.is_medial()) {
        let q = &n.table;
        let k = q.order();
        let bad = par::find_first(0..k.pow(4), |i| {
            let v = [i % k, i / k % k, i / (k * k) % k, i / (k * k * k)];
            let c = medial_ls(q, v, Strictness::Strict).expect("medial");
            (!boundary(q, &c).is_zero()).then_some(v)
        });
        quads += k.pow(4);
        if let Some((_, v)) = bad {
            failures.push(format!("{}:{v:?}", n.name));
        }
    }
    let x = constructions::dihedral(3).unwrap();
    let space = cocycle_space(&x, 3, Mode::Quandle).unwrap();
    let mut vanishing = 0;
    for phi in space.members(1 << 20).unwrap() {
        let vanishes = (0..81).all(|i| {
            let v = [i % 3, i / 3 % 3, i / 9 % 3, i / 27];
            evaluate_cocycle(&phi, &medial_ls(&x, v, Strictness::Strict).unwrap()).unwrap() == 0
        });
        if vanishes {
            vanishing += 1;
            let e = extend(&ExtensionSpec::new(x.clone(), phi.clone()).unwrap()).unwrap();
            if !e.is_medial() {
                failures.push(format!("extension by {:?} not medial", phi.values));
            }
        }
    }
    Check::new(
        "medial chains and medial extensions",
        failures.is_empty(),
        format!("{quads} quadruples; {vanishing} cocycles vanish on medial chains; failures {failures:?}"),
    )
}

pub fn theorem_checks(seed: u64) -> Vec<Check> {
    let corpus = builtin_corpus();
    vec![
        cycle_check(&corpus),
        closure_check(&corpus, 5, 4, 2..=4),
        extension_check_dihedral(),
        extension_check_sampled(&corpus, seed, 4),
        medial_check(&corpus),
    ]
}

/// Picks `count` distinct indices below `n`, deterministically from `seed`.
pub fn sample_indices(n: usize, count: usize, seed: u64) -> Vec<usize> {
    let mut rng = StdRng::seed_from_u64(seed);
    rand::seq::index::sample(&mut rng, n, count.min(n)).into_vec()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brute_force_matches_trivial_count() {
        let t = constructions::trivial(2).unwrap();
        assert_eq!(brute_force_cocycles(&t, 3).len(), 9);
    }

    #[test]
    fn corpus_words() {
        use super::super::report::Status;
        for c in corpus_word_checks() {
            if c.name.starts_with("length-7 words of ") {
                // The ring labels of the two published lists are swapped.
                assert_eq!(c.status, Status::Fail, "{c}");
                let other = if c.name.contains("t^2") { "the t^3+t+1 list" } else { "the t^3+t^2+1 list" };
                assert!(c.detail.contains(other), "{c}");
            } else {
                assert_eq!(c.status, Status::Pass, "{c}");
            }
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        assert_eq!(sample_indices(100, 5, 7), sample_indices(100, 5, 7));
    }
}
