//! Published reference values for the catalogue of the 790 connected
//! quandles of order below 48, and the helpers that recompute them.

use std::collections::BTreeMap;

use crate::perm::{order_and_exponent, GroupError};
use crate::table::QuandleTable;

/// `(type, count)` pairs.
pub const TYPE_CENSUS: &[(u64, usize)] = &[
    (2, 117), (3, 38), (4, 90), (5, 16), (6, 117), (7, 15), (8, 38), (9, 13),
    (10, 31), (11, 10), (12, 52), (13, 4), (14, 19), (15, 14), (16, 9), (18, 27),
    (20, 19), (21, 14), (22, 11), (23, 22), (24, 9), (26, 5), (28, 17), (30, 15),
    (31, 6), (36, 12), (40, 16), (42, 12), (46, 22),
];

/// `(exponent of Inn, count)` pairs.
pub const EXPONENT_CENSUS: &[(u64, usize)] = &[
    (6, 11), (10, 4), (12, 59), (14, 3), (15, 1), (18, 47), (20, 15),
    (21, 2), (22, 1), (24, 38), (26, 1), (30, 22), (34, 1), (36, 31),
    (38, 1), (39, 6), (40, 6), (42, 22), (46, 1), (48, 4), (50, 5),
    (52, 2), (54, 9), (55, 4), (57, 2), (58, 1), (60, 44), (62, 7),
    (66, 4), (68, 2), (70, 3), (72, 13), (74, 1), (78, 13), (82, 1),
    (84, 24), (86, 1), (90, 9), (93, 2), (94, 1), (100, 10), (110, 4),
    (111, 2), (114, 2), (116, 2), (120, 27), (129, 2), (136, 4), (140, 6),
    (148, 2), (155, 4), (156, 10), (164, 2), (168, 4), (171, 6), (180, 12),
    (186, 2), (203, 6), (205, 4), (210, 4), (222, 2), (240, 3), (253, 10),
    (258, 2), (272, 8), (301, 6), (310, 4), (328, 4), (330, 16), (333, 6),
    (342, 6), (360, 1), (406, 6), (410, 4), (420, 10), (444, 4), (465, 8),
    (506, 10), (602, 6), (666, 6), (812, 12), (820, 8), (840, 3), (903, 12),
    (930, 8), (1081, 22), (1332, 12), (1640, 16), (1806, 12), (2162, 22), (2520, 2),
];

/// Catalogue entries satisfying `x abab = x`, as `(order, index)`.
pub const ABAB_QUANDLES: &[(usize, usize)] = &[
    (5, 2), (5, 3), (9, 3), (13, 4), (13, 7), (17, 3), (17, 12),
    (25, 4), (25, 5), (25, 6), (25, 7), (25, 8), (29, 11), (29, 16),
    (37, 45), (37, 5), (41, 2), (41, 3), (45, 36), (45, 37),
];

pub const CATALOGUE_SIZE: usize = 790;
pub const KEI_COUNT: usize = 117;

/// Length-5 two-letter words not excluded by the lemmas; satisfied by no
/// catalogue entry.
pub const LENGTH5_UNSATISFIED: &[&str] = &["aabab", "abaab", "ababa", "ababb", "abbab"];

/// Length-6 words satisfied by no catalogue entry.
pub const LENGTH6_UNSATISFIED: &[&str] = &[
    "aaabab", "aababa", "aabbab", "aababb", "abaaab", "abaabb",
    "ababbb", "abbaba", "abbaab", "ababaa", "ababba", "abbbab",
];

/// Length-6 words satisfied by the same 202 entries, all 117 keis among them.
pub const LENGTH6_KEI_WORDS: &[&str] = &["aabaab", "abaaba", "abbabb"];
pub const LENGTH6_KEI_WORDS_COUNT: usize = 202;

pub const ABABAB_COUNT: usize = 55;
pub const ABABAB_KEIS: usize = 4;

/// Words satisfied by `Z_2[t]/(t³ + t² + 1)`.
pub const Q82_WORDS: &[&str] = &["aababba", "abbbaba", "ababbaa", "aabbbab", "aaababb", "abaabbb", "abbaaab"];
/// Words satisfied by `Z_2[t]/(t³ + t + 1)`.
pub const Q83_WORDS: &[&str] = &["aabbaba", "abbabaa", "ababbba", "aababbb", "aaabbab", "abaaabb", "abbbaab"];

/// Occurrence counts of a key, sorted by key.
pub fn tally<K: Ord + Copy>(keys: impl IntoIterator<Item = K>) -> Vec<(K, usize)> {
    let mut m = BTreeMap::new();
    for k in keys {
        *m.entry(k).or_insert(0) += 1;
    }
    m.into_iter().collect()
}

pub fn type_census<'a>(tables: impl IntoIterator<Item = &'a QuandleTable>) -> Vec<(u64, usize)> {
    tally(tables.into_iter().map(QuandleTable::type_of))
}

pub fn exponent_census(tables: &[&QuandleTable], cap: usize) -> Result<Vec<(u64, usize)>, GroupError> {
    let exps = crate::par::map_slice(tables, |q| {
        order_and_exponent(q.order(), &q.translations(), cap).map(|(_, e)| e)
    });
    Ok(tally(exps.into_iter().collect::<Result<Vec<_>, _>>()?))
}

/// `[k, m] [k, m] ...` as printed in the published tables.
pub fn format_census(c: &[(u64, usize)]) -> String {
    c.iter().map(|(k, m)| format!("[{k}, {m}]")).collect::<Vec<_>>().join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_tables_are_consistent() {
        assert_eq!(TYPE_CENSUS.iter().map(|p| p.1).sum::<usize>(), CATALOGUE_SIZE);
        assert_eq!(EXPONENT_CENSUS.iter().map(|p| p.1).sum::<usize>(), CATALOGUE_SIZE);
        assert!(TYPE_CENSUS.windows(2).all(|w| w[0].0 < w[1].0));
        assert!(EXPONENT_CENSUS.windows(2).all(|w| w[0].0 < w[1].0));
        assert_eq!(TYPE_CENSUS[0], (2, KEI_COUNT));
        assert_eq!(ABAB_QUANDLES.len(), 20);
    }

    #[test]
    fn tally_sorts() {
        assert_eq!(tally([3, 1, 3, 2]), vec![(1, 1), (2, 1), (3, 2)]);
        assert_eq!(format_census(&[(2, 117), (3, 38)]), "[2, 117] [3, 38]");
    }
}
