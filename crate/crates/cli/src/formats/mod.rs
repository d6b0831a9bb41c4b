//! Line-oriented text formats: algebras, modules, complexes, torsion pairs
//! and witness sequences. UTF-8, `#` starts a comment, blank lines ignored.
//! Parsers report line and column positions; serializers emit a canonical
//! form that round-trips.

pub mod algebra;
pub mod complex;
pub mod module;
pub mod pair;
pub mod witness;

use std::fmt;

use tilt_core::field::{Field, Scalar};

#[derive(Debug, Clone)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl ParseError {
    pub fn new(line: usize, col: usize, msg: impl Into<String>) -> ParseError {
        ParseError { line, col, msg: msg.into() }
    }

    pub fn at_line(line: usize, msg: impl Into<String>) -> ParseError {
        ParseError::new(line, 1, msg)
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.col, self.msg)
    }
}

impl std::error::Error for ParseError {}

/// Logical lines with comments stripped, 1-based line numbers preserved.
pub(crate) fn logical_lines(text: &str) -> Vec<(usize, String)> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let stripped = match raw.find('#') {
                Some(p) => &raw[..p],
                None => raw,
            };
            let trimmed = stripped.trim();
            if trimmed.is_empty() {
                None
            } else {
                Some((i + 1, trimmed.to_string()))
            }
        })
        .collect()
}

/// Parses a rational literal (`3`, `-1/2`) into the given field.
pub(crate) fn parse_scalar(field: Field, tok: &str, line: usize) -> Result<Scalar, ParseError> {
    let bad = || ParseError::at_line(line, format!("invalid field literal `{tok}`"));
    if let Some((n, d)) = tok.split_once('/') {
        let n: i64 = n.parse().map_err(|_| bad())?;
        let d: i64 = d.parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(ParseError::at_line(line, "zero denominator"));
        }
        field
            .from_ratio(n, d)
            .map_err(|e| ParseError::at_line(line, format!("{e}")))
    } else {
        let n: i64 = tok.parse().map_err(|_| bad())?;
        Ok(field.from_i64(n))
    }
}

pub(crate) fn looks_like_scalar(tok: &str) -> bool {
    tok.chars().next().is_some_and(|c| c.is_ascii_digit() || c == '-')
}

/// Splits a bracketed matrix literal `[[a, b],[c, d]]` into row strings.
pub(crate) fn matrix_rows(text: &str, line: usize) -> Result<Vec<Vec<String>>, ParseError> {
    let t = text.trim();
    if !t.starts_with("[[") || !t.ends_with("]]") {
        return Err(ParseError::at_line(line, "matrix must look like [[..],[..]]"));
    }
    let inner = &t[2..t.len() - 2];
    let rows: Vec<&str> = inner.split("],[").collect();
    Ok(rows
        .iter()
        .map(|r| r.split(',').map(|c| c.trim().to_string()).collect())
        .collect())
}
