//! OEIS b-files: `#` comment lines and `index value` data lines.

use std::fmt::Write as _;

use super::generate::{generate, SequenceId, Terms};
use crate::{Error, Int, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    pub start: u64,
    pub values: Vec<Int>,
}

impl BFile {
    /// Parses b-file text. Comment and blank lines are skipped; data indices
    /// must be consecutive.
    pub fn parse(text: &str) -> Result<BFile> {
        let mut start = None;
        let mut values = Vec::new();
        for (number, raw) in text.lines().enumerate() {
            let line_no = number + 1;
            let line = raw.strip_suffix('\r').unwrap_or(raw);
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            let (index, value) = line
                .split_once(' ')
                .ok_or_else(|| err(format!("expected 'index value', found '{line}'")))?;
            let index: u64 = decimal(index)
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| err(format!("bad index '{index}'")))?;
            let value: Int = signed_decimal(value)
                .and_then(|s| s.parse().ok())
                .ok_or_else(|| err(format!("bad value '{value}'")))?;
            let expected = *start.get_or_insert(index) + values.len() as u64;
            if index != expected {
                return Err(err(format!("index {index} where {expected} was expected")));
            }
            values.push(value);
        }
        match start {
            Some(start) => Ok(BFile { start, values }),
            None => Err(Error::Parse {
                line: text.lines().count(),
                message: "no data lines".into(),
            }),
        }
    }

    pub fn emit(&self) -> String {
        let mut out = String::new();
        for (i, v) in self.indexed() {
            let _ = writeln!(out, "{i} {v}");
        }
        out
    }

    pub fn indexed(&self) -> impl Iterator<Item = (u64, &Int)> {
        (self.start..).zip(&self.values)
    }
}

impl From<Terms> for BFile {
    fn from(terms: Terms) -> Self {
        BFile {
            start: terms.start,
            values: terms.values,
        }
    }
}

fn decimal(s: &str) -> Option<&str> {
    (!s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())).then_some(s)
}

fn signed_decimal(s: &str) -> Option<&str> {
    decimal(s.strip_prefix('-').unwrap_or(s)).map(|_| s)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub index: u64,
    pub expected: Int,
    pub found: Int,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffReport {
    pub compared: u64,
    pub mismatch: Option<Mismatch>,
}

/// Regenerates every indexed term of `file` and reports the first mismatch.
pub fn bfile_diff(id: SequenceId, file: &BFile, limit_bits: u64) -> Result<DiffReport> {
    let terms = generate(id, file.start, file.values.len() as u64, limit_bits)?;
    let mismatch = terms
        .indexed()
        .zip(&file.values)
        .find(|((_, expected), found)| expected != found)
        .map(|((index, expected), found)| Mismatch {
            index,
            expected: expected.clone(),
            found: found.clone(),
        });
    Ok(DiffReport {
        compared: file.values.len() as u64,
        mismatch,
    })
}
