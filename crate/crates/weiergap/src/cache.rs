//! CSV persistence for genus-count tables.
//!
//! The format is deliberately rigid: a `genus,count` header, one decimal
//! row per genus, every line newline-terminated, UTF-8. Loads are strict
//! and name the offending line (the header counts as line 1), so a
//! corrupted cache is reported rather than silently reinterpreted.

use std::fmt;
use std::fs;
use std::io;
use std::path::Path;

use crate::enumerate::GenusCount;

pub const COUNTS_HEADER: &str = "genus,count";

#[derive(Debug)]
pub enum CacheError {
    Io(io::Error),
    /// A line that is not the header or a `genus,count` decimal row.
    Malformed {
        line: usize,
        content: String,
    },
}

impl fmt::Display for CacheError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CacheError::Io(err) => write!(f, "count cache I/O failure: {err}"),
            CacheError::Malformed { line, content } => {
                write!(f, "count cache malformed at line {line}: {content:?}")
            }
        }
    }
}

impl std::error::Error for CacheError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            CacheError::Io(err) => Some(err),
            CacheError::Malformed { .. } => None,
        }
    }
}

impl From<io::Error> for CacheError {
    fn from(err: io::Error) -> Self {
        CacheError::Io(err)
    }
}

/// Write the whole table, header first, one row per entry.
pub fn save_counts(path: &Path, rows: &[GenusCount]) -> Result<(), CacheError> {
    let mut text = String::with_capacity(COUNTS_HEADER.len() + 1 + rows.len() * 8);
    text.push_str(COUNTS_HEADER);
    text.push('\n');
    for row in rows {
        text.push_str(&row.genus.to_string());
        text.push(',');
        text.push_str(&row.count.to_string());
        text.push('\n');
    }
    fs::write(path, text)?;
    Ok(())
}

/// Read a table back. A header-only file yields an empty table; anything
/// that is not the exact header or a decimal `genus,count` row fails with
/// the 1-based line number.
pub fn load_counts(path: &Path) -> Result<Vec<GenusCount>, CacheError> {
    let text = fs::read_to_string(path)?;
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header == COUNTS_HEADER => {}
        Some((_, other)) => {
            return Err(CacheError::Malformed {
                line: 1,
                content: other.to_string(),
            })
        }
        None => {
            return Err(CacheError::Malformed {
                line: 1,
                content: String::new(),
            })
        }
    }
    let mut rows = Vec::new();
    for (idx, line) in lines {
        let parsed = line.split_once(',').and_then(|(genus, count)| {
            Some(GenusCount {
                genus: genus.parse().ok()?,
                count: count.parse().ok()?,
            })
        });
        match parsed {
            Some(row) => rows.push(row),
            None => {
                return Err(CacheError::Malformed {
                    line: idx + 1,
                    content: line.to_string(),
                })
            }
        }
    }
    Ok(rows)
}
