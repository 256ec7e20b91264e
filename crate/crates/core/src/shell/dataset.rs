//! Loading a directory of catalogue matrices.
//!
//! A file holding a single matrix is named after the last two integers in
//! its stem (`Q_8_2.txt`, `SmallQuandle(8,2)` → `Q(8,2)`). Files holding
//! several matrices, or without two integers in the name, number their
//! matrices by order of appearance within each order.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use super::io::{load_all, Convention, LoadError};
use crate::table::QuandleTable;

#[derive(Clone, Debug)]
pub struct DatasetEntry {
    pub order: usize,
    pub index: usize,
    pub path: PathBuf,
    pub table: QuandleTable,
}

impl DatasetEntry {
    pub fn name(&self) -> String {
        format!("Q({},{})", self.order, self.index)
    }
}

fn stem_numbers(path: &Path) -> Vec<usize> {
    let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("");
    stem.split(|c: char| !c.is_ascii_digit())
        .filter(|s| !s.is_empty())
        .filter_map(|s| s.parse().ok())
        .collect()
}

/// Regular files directly inside `dir`, sorted by name; hidden files skipped.
pub fn dataset_files(dir: &Path) -> Result<Vec<PathBuf>, LoadError> {
    let io = |source| LoadError::Io {
        path: dir.to_path_buf(),
        source,
    };
    let mut files = Vec::new();
    for entry in fs::read_dir(dir).map_err(io)? {
        let entry = entry.map_err(io)?;
        let path = entry.path();
        let hidden = path.file_name().and_then(|n| n.to_str()).is_some_and(|n| n.starts_with('.'));
        if path.is_file() && !hidden {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}

/// All matrices in `dir`, sorted by `(order, index)`.
pub fn load_dataset(dir: &Path, convention: Convention) -> Result<Vec<DatasetEntry>, LoadError> {
    let files = dataset_files(dir)?;
    let loaded = crate::par::map_slice(&files, |p| load_all(p, convention).map(|t| (p.clone(), t)));
    let mut named = Vec::new();
    let mut unnamed = Vec::new();
    for r in loaded {
        let (path, tables) = r?;
        let nums = stem_numbers(&path);
        match (tables.len(), nums.as_slice()) {
            (1, [.., a, b]) if *a == tables[0].order() => named.push(DatasetEntry {
                order: *a,
                index: *b,
                path,
                table: tables.into_iter().next().unwrap(),
            }),
            _ => unnamed.extend(tables.into_iter().map(|t| (path.clone(), t))),
        }
    }
    let mut next: BTreeMap<usize, usize> = BTreeMap::new();
    for e in &named {
        let slot = next.entry(e.order).or_insert(0);
        *slot = (*slot).max(e.index);
    }
    for (path, table) in unnamed {
        let slot = next.entry(table.order()).or_insert(0);
        *slot += 1;
        named.push(DatasetEntry {
            order: table.order(),
            index: *slot,
            path,
            table,
        });
    }
    named.sort_by(|a, b| (a.order, a.index, &a.path).cmp(&(b.order, b.index, &b.path)));
    Ok(named)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_from_files() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("Q_3_1.txt"), "3\n1 3 2\n3 2 1\n2 1 3\n").unwrap();
        fs::write(dir.path().join("SmallQuandle(1,1)"), "1\n1\n").unwrap();
        fs::write(dir.path().join("more.txt"), "1\n1\n\n3\n1 3 2\n3 2 1\n2 1 3\n").unwrap();
        fs::write(dir.path().join(".hidden"), "garbage").unwrap();
        let all = load_dataset(dir.path(), Convention::Right).unwrap();
        let names: Vec<String> = all.iter().map(DatasetEntry::name).collect();
        assert_eq!(names, vec!["Q(1,1)", "Q(1,2)", "Q(3,1)", "Q(3,2)"]);
    }

    #[test]
    fn order_mismatch_falls_back_to_numbering() {
        let dir = tempfile::tempdir().unwrap();
        fs::write(dir.path().join("Q_5_2.txt"), "1\n1\n").unwrap();
        let all = load_dataset(dir.path(), Convention::Right).unwrap();
        assert_eq!(all[0].name(), "Q(1,1)");
    }
}
