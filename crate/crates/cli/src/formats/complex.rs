//! Complex files: bounded complexes of vertex projectives.
//!
//! ```text
//! complex C2
//! term -1 = P2
//! term 0 = P1
//! d -1 = [[a]]
//! ```
//!
//! Differential entries are algebra-element expressions in the relation
//! term syntax plus `e<vertex>` for trivial paths and `0`, e.g.
//! `[[b*a, 0],[2 a, e1]]`.

use std::collections::BTreeMap;

use tilt_core::algebra::{AlgebraElement, BoundQuiverAlgebra};
use tilt_core::complex::{AlgMatrix, ProjComplex};

use super::{logical_lines, looks_like_scalar, matrix_rows, parse_scalar, ParseError};

/// a named complex under construction: differentials are collected as raw
/// cell strings until all terms are known
type PendingComplex = (String, ProjComplex, Vec<(usize, i32, Vec<Vec<String>>)>);

pub fn parse_complexes(
    alg: &BoundQuiverAlgebra,
    text: &str,
) -> Result<Vec<(String, ProjComplex)>, ParseError> {
    let lines = logical_lines(text);
    let mut out: Vec<(String, ProjComplex)> = Vec::new();
    let mut current: Option<PendingComplex> = None;
    let finish = |cur: Option<PendingComplex>,
                  out: &mut Vec<(String, ProjComplex)>|
     -> Result<(), ParseError> {
        let Some((name, mut cx, pending)) = cur else { return Ok(()) };
        for (ln, degree, rows) in pending {
            let n_rows = cx.summands(degree + 1).len();
            let n_cols = cx.summands(degree).len();
            if rows.len() != n_rows || rows.iter().any(|r| r.len() != n_cols) {
                return Err(ParseError::at_line(
                    ln,
                    format!(
                        "d {degree} must be {n_rows}x{n_cols} for the declared terms"
                    ),
                ));
            }
            let mut m = AlgMatrix::zero(n_rows, n_cols);
            for (r, row) in rows.iter().enumerate() {
                for (c, cell) in row.iter().enumerate() {
                    m.set(r, c, parse_element(alg, cell, ln)?);
                }
            }
            cx.diffs.insert(degree, m);
        }
        cx.validate(alg)
            .map_err(|e| ParseError::at_line(1, format!("complex {name}: {e}")))?;
        out.push((name, cx));
        Ok(())
    };
    for (ln, line) in &lines {
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line.as_str(), ""));
        match keyword {
            "complex" => {
                finish(current.take(), &mut out)?;
                let name = rest.trim();
                if name.is_empty() {
                    return Err(ParseError::at_line(*ln, "complex needs a name"));
                }
                current = Some((name.to_string(), ProjComplex::empty(), Vec::new()));
            }
            "term" => {
                let cur = current.as_mut().ok_or_else(|| {
                    ParseError::at_line(*ln, "term outside a complex block")
                })?;
                let (deg, body) = rest.split_once('=').ok_or_else(|| {
                    ParseError::at_line(*ln, "expected `term <degree> = P<v> + ...`")
                })?;
                let degree: i32 = deg.trim().parse().map_err(|_| {
                    ParseError::at_line(*ln, format!("invalid degree `{}`", deg.trim()))
                })?;
                let mut summands = Vec::new();
                for tok in body.split('+') {
                    let tok = tok.trim();
                    let name = tok.strip_prefix('P').ok_or_else(|| {
                        ParseError::at_line(*ln, format!("expected P<vertex>, got `{tok}`"))
                    })?;
                    let v = alg.quiver().vertex_index(name).ok_or_else(|| {
                        ParseError::at_line(*ln, format!("unknown vertex `{name}`"))
                    })?;
                    summands.push(v);
                }
                cur.1.terms.insert(degree, summands);
            }
            "d" => {
                let cur = current.as_mut().ok_or_else(|| {
                    ParseError::at_line(*ln, "d outside a complex block")
                })?;
                let (deg, body) = rest.split_once('=').ok_or_else(|| {
                    ParseError::at_line(*ln, "expected `d <degree> = [[..]]`")
                })?;
                let degree: i32 = deg.trim().parse().map_err(|_| {
                    ParseError::at_line(*ln, format!("invalid degree `{}`", deg.trim()))
                })?;
                cur.2.push((*ln, degree, matrix_rows(body, *ln)?));
            }
            _ => {
                return Err(ParseError::at_line(
                    *ln,
                    format!("unknown directive `{keyword}` in complex file"),
                ))
            }
        }
    }
    finish(current, &mut out)?;
    Ok(out)
}

/// Parses an algebra-element expression: `0`, or terms `[coef] path` joined
/// by `+`, where path is `e<vertex>` or arrow names joined by `*` in
/// composition order.
pub fn parse_element(
    alg: &BoundQuiverAlgebra,
    text: &str,
    line: usize,
) -> Result<AlgebraElement, ParseError> {
    let t = text.trim();
    if t == "0" {
        return Ok(AlgebraElement::zero());
    }
    let q = alg.quiver();
    let mut acc = AlgebraElement::zero();
    for part in t.split('+') {
        let toks: Vec<&str> = part.split_whitespace().collect();
        let (coeff, path_tok) = match toks.as_slice() {
            [p] => (alg.field().one(), *p),
            [c, p] if looks_like_scalar(c) => (parse_scalar(alg.field(), c, line)?, *p),
            _ => {
                return Err(ParseError::at_line(
                    line,
                    format!("invalid element term `{}`", part.trim()),
                ))
            }
        };
        let elt = if path_tok.contains('*') || q.arrow_index(path_tok).is_some() {
            let mut word = Vec::new();
            for name in path_tok.split('*').rev() {
                let a = q.arrow_index(name).ok_or_else(|| {
                    ParseError::at_line(line, format!("unknown arrow `{name}`"))
                })?;
                word.push(a);
            }
            for pair in word.windows(2) {
                if q.target(pair[0]) != q.source(pair[1]) {
                    return Err(ParseError::at_line(
                        line,
                        format!("arrows in `{path_tok}` do not compose"),
                    ));
                }
            }
            let src = q.source(word[0]);
            alg.reduce_word(src, &word)
        } else if let Some(vname) = path_tok.strip_prefix('e') {
            let v = q.vertex_index(vname).ok_or_else(|| {
                ParseError::at_line(line, format!("unknown trivial path `{path_tok}`"))
            })?;
            AlgebraElement::basis_element(alg, alg.trivial_path(v))
        } else {
            return Err(ParseError::at_line(
                line,
                format!("unknown path token `{path_tok}`"),
            ));
        };
        acc = acc.add(&elt.scale(&coeff));
    }
    Ok(acc)
}

pub fn serialize_complexes(
    alg: &BoundQuiverAlgebra,
    complexes: &[(String, ProjComplex)],
) -> String {
    let q = alg.quiver();
    let mut out = String::new();
    for (name, cx) in complexes {
        out.push_str(&format!("complex {name}\n"));
        let degrees: Vec<i32> = cx.terms.keys().copied().collect();
        for k in &degrees {
            let names: Vec<String> = cx
                .summands(*k)
                .iter()
                .map(|&v| format!("P{}", q.vertex_name(v)))
                .collect();
            if !names.is_empty() {
                out.push_str(&format!("term {} = {}\n", k, names.join(" + ")));
            }
        }
        let diff_degrees: BTreeMap<i32, &AlgMatrix> =
            cx.diffs.iter().map(|(&k, m)| (k, m)).collect();
        for (k, m) in diff_degrees {
            let rows: Vec<String> = (0..m.rows)
                .map(|r| {
                    let cells: Vec<String> =
                        (0..m.cols).map(|c| m.get(r, c).display(alg)).collect();
                    format!("[{}]", cells.join(", "))
                })
                .collect();
            out.push_str(&format!("d {} = [{}]\n", k, rows.join(",")));
        }
    }
    out
}
