//! Torsion pair files: whitespace-separated indecomposable labels.
//!
//! ```text
//! torsion [1] [1,2] [4]
//! free [2] [6]
//! ```

use tilt_core::indec::IndecomposableList;
use tilt_core::torsion::TorsionPair;

use super::{logical_lines, ParseError};

pub fn parse_pair(
    inds: &IndecomposableList,
    text: &str,
) -> Result<TorsionPair, ParseError> {
    let mut torsion: Vec<String> = Vec::new();
    let mut free: Vec<String> = Vec::new();
    for (ln, line) in logical_lines(text) {
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line.as_str(), ""));
        match keyword {
            "torsion" => torsion.extend(rest.split_whitespace().map(String::from)),
            "free" => free.extend(rest.split_whitespace().map(String::from)),
            _ => {
                return Err(ParseError::at_line(
                    ln,
                    format!("unknown directive `{keyword}` in torsion pair file"),
                ))
            }
        }
    }
    let t: Vec<&str> = torsion.iter().map(String::as_str).collect();
    let f: Vec<&str> = free.iter().map(String::as_str).collect();
    TorsionPair::from_labels(inds, &t, &f)
        .map_err(|e| ParseError::at_line(1, format!("{e}")))
}

pub fn serialize_pair(inds: &IndecomposableList, tp: &TorsionPair) -> String {
    format!(
        "torsion {}\nfree {}\n",
        tp.torsion_labels(inds).join(" "),
        tp.free_labels(inds).join(" ")
    )
}
