//! Text matrix format: a line with the order `n`, then `n` rows of `n`
//! whitespace-separated 1-based entries. Several matrices may follow each
//! other in one file.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::table::{Mode, QuandleTable, ValidationError};

/// How the stored matrix relates to `x * y`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// Entry `(x, y)` is `x * y`.
    #[default]
    Right,
    /// Entry `(x, y)` is `y * x`; transposed on load.
    Left,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Parse {
        path: PathBuf,
        #[source]
        source: ParseError,
    },
    #[error("{}: matrix {index}: {source}", path.display())]
    Validation {
        path: PathBuf,
        index: usize,
        #[source]
        source: ValidationError,
    },
}

impl LoadError {
    pub fn is_validation(&self) -> bool {
        matches!(self, LoadError::Validation { .. })
    }
}

/// Raw 0-based matrices, unvalidated and in file orientation.
pub fn parse_matrices(text: &str) -> Result<Vec<Vec<Vec<i64>>>, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| !l.trim().is_empty());
    let mut out = Vec::new();
    while let Some((ln, header)) = lines.next() {
        let head = tokens(header);
        let n = match head.as_slice() {
            [(col, tok)] => tok.parse::<usize>().map_err(|_| ParseError {
                line: ln,
                column: *col,
                message: format!("expected the order, found {tok:?}"),
            })?,
            [] => unreachable!("blank lines are skipped"),
            [_, (col, _), ..] => {
                return Err(ParseError {
                    line: ln,
                    column: *col,
                    message: "order line must hold a single integer".into(),
                })
            }
        };
        if n == 0 {
            return Err(ParseError {
                line: ln,
                column: 1,
                message: "order must be positive".into(),
            });
        }
        let mut rows = Vec::with_capacity(n);
        for r in 0..n {
            let Some((ln, line)) = lines.next() else {
                return Err(ParseError {
                    line: ln + r + 1,
                    column: 1,
                    message: format!("expected {n} rows, found {r}"),
                });
            };
            let toks = tokens(line);
            if toks.len() != n {
                let column = toks.get(n).map_or(line.len() + 1, |(c, _)| *c);
                return Err(ParseError {
                    line: ln,
                    column,
                    message: format!("row has {} entries, expected {n}", toks.len()),
                });
            }
            let row = toks
                .iter()
                .map(|(col, tok)| match tok.parse::<i64>() {
                    Ok(v) if v >= 1 && v as usize <= n => Ok(v - 1),
                    Ok(v) => Err(ParseError {
                        line: ln,
                        column: *col,
                        message: format!("entry {v} outside 1..={n}"),
                    }),
                    Err(_) => Err(ParseError {
                        line: ln,
                        column: *col,
                        message: format!("not an integer: {tok:?}"),
                    }),
                })
                .collect::<Result<Vec<_>, _>>()?;
            rows.push(row);
        }
        out.push(rows);
    }
    if out.is_empty() {
        return Err(ParseError {
            line: 1,
            column: 1,
            message: "no matrix found".into(),
        });
    }
    Ok(out)
}

/// Whitespace-separated tokens with 1-based starting columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..i]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

/// Parses and validates every matrix in `text` as a rack.
pub fn load_str(text: &str, convention: Convention, path: &Path) -> Result<Vec<QuandleTable>, LoadError> {
    let raw = parse_matrices(text).map_err(|source| LoadError::Parse {
        path: path.to_path_buf(),
        source,
    })?;
    raw.into_iter()
        .enumerate()
        .map(|(index, rows)| {
            let rows = match convention {
                Convention::Right => rows,
                Convention::Left => QuandleTable::transpose_rows(&rows),
            };
            QuandleTable::from_rows(&rows, Mode::Rack).map_err(|source| LoadError::Validation {
                path: path.to_path_buf(),
                index,
                source,
            })
        })
        .collect()
}

pub fn read_file(path: &Path) -> Result<String, LoadError> {
    fs::read_to_string(path).map_err(|source| LoadError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Loads a file holding exactly one matrix.
pub fn load(path: &Path, convention: Convention) -> Result<QuandleTable, LoadError> {
    let mut all = load_all(path, convention)?;
    if all.len() != 1 {
        return Err(LoadError::Parse {
            path: path.to_path_buf(),
            source: ParseError {
                line: 1,
                column: 1,
                message: format!("expected one matrix, found {}", all.len()),
            },
        });
    }
    Ok(all.remove(0))
}

pub fn load_all(path: &Path, convention: Convention) -> Result<Vec<QuandleTable>, LoadError> {
    load_str(&read_file(path)?, convention, path)
}

/// Canonical text for a table; `load` of this text gives back the table.
pub fn emit(q: &QuandleTable, convention: Convention) -> String {
    let n = q.order();
    let mut s = String::new();
    writeln!(s, "{n}").unwrap();
    for x in 0..n {
        let row: Vec<String> = (0..n)
            .map(|y| {
                let v = match convention {
                    Convention::Right => q.op(x, y),
                    Convention::Left => q.op(y, x),
                };
                (v + 1).to_string()
            })
            .collect();
        writeln!(s, "{}", row.join(" ")).unwrap();
    }
    s
}
