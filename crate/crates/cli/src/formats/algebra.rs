//! The algebra file grammar:
//!
//! ```text
//! field Q            # or: field Fp 7
//! vertices 1 2 3
//! arrow a: 1 -> 2
//! relation b*a                 # terms: [rational] name(*name)+
//! relation 2 b*a + -1 d*c
//! ```

use tilt_core::algebra::{BoundQuiverAlgebra, Quiver, Relation};
use tilt_core::field::Field;

use super::{logical_lines, looks_like_scalar, parse_scalar, ParseError};

/// Parses and validates an algebra file; `field_override` replaces the
/// file's field declaration when given.
pub fn parse_algebra(
    text: &str,
    field_override: Option<Field>,
) -> Result<BoundQuiverAlgebra, ParseError> {
    let lines = logical_lines(text);
    let mut field: Option<Field> = None;
    let mut vertices: Vec<String> = Vec::new();
    let mut arrows: Vec<(String, String, String)> = Vec::new();
    let mut relation_lines: Vec<(usize, String)> = Vec::new();
    for (ln, line) in &lines {
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line.as_str(), ""));
        match keyword {
            "field" => {
                let toks: Vec<&str> = rest.split_whitespace().collect();
                field = Some(match toks.as_slice() {
                    ["Q"] => Field::Rationals,
                    ["Fp", p] => {
                        let p: u64 = p.parse().map_err(|_| {
                            ParseError::at_line(*ln, format!("invalid prime `{p}`"))
                        })?;
                        Field::prime(p)
                            .map_err(|e| ParseError::at_line(*ln, format!("{e}")))?
                    }
                    _ => {
                        return Err(ParseError::at_line(
                            *ln,
                            "expected `field Q` or `field Fp <prime>`",
                        ))
                    }
                });
            }
            "vertices" => {
                vertices.extend(rest.split_whitespace().map(String::from));
            }
            "arrow" => {
                // arrow <name>: <src> -> <tgt>
                let (name, ends) = rest.split_once(':').ok_or_else(|| {
                    ParseError::at_line(*ln, "expected `arrow <name>: <src> -> <tgt>`")
                })?;
                let (src, tgt) = ends.split_once("->").ok_or_else(|| {
                    ParseError::at_line(*ln, "expected `-> <target>` in arrow declaration")
                })?;
                arrows.push((
                    name.trim().to_string(),
                    src.trim().to_string(),
                    tgt.trim().to_string(),
                ));
            }
            "relation" => relation_lines.push((*ln, rest.to_string())),
            _ => {
                return Err(ParseError::at_line(
                    *ln,
                    format!("unknown directive `{keyword}`"),
                ))
            }
        }
    }
    let field = field_override
        .or(field)
        .ok_or_else(|| ParseError::at_line(1, "missing `field` declaration"))?;
    if vertices.is_empty() {
        return Err(ParseError::at_line(1, "missing `vertices` declaration"));
    }
    let quiver = Quiver::new(vertices, arrows)
        .map_err(|e| ParseError::at_line(1, format!("{e}")))?;
    let mut relations = Vec::new();
    for (ln, body) in relation_lines {
        relations.push(parse_relation(&quiver, field, &body, ln)?);
    }
    BoundQuiverAlgebra::new(quiver, relations, field)
        .map_err(|e| ParseError::at_line(1, format!("{e}")))
}

fn parse_relation(
    quiver: &Quiver,
    field: Field,
    body: &str,
    line: usize,
) -> Result<Relation, ParseError> {
    let mut terms = Vec::new();
    for part in body.split('+') {
        let toks: Vec<&str> = part.split_whitespace().collect();
        let (coeff, path_tok) = match toks.as_slice() {
            [p] => (field.one(), *p),
            [c, p] if looks_like_scalar(c) => (parse_scalar(field, c, line)?, *p),
            _ => {
                return Err(ParseError::at_line(
                    line,
                    format!("invalid relation term `{}`", part.trim()),
                ))
            }
        };
        // composition order in the file; reverse to application order
        let mut word = Vec::new();
        for name in path_tok.split('*').rev() {
            let a = quiver.arrow_index(name).ok_or_else(|| {
                ParseError::at_line(line, format!("unknown arrow `{name}`"))
            })?;
            word.push(a);
        }
        terms.push((coeff, word));
    }
    Ok(Relation { terms })
}

/// Canonical serialization back to the grammar.
pub fn serialize_algebra(alg: &BoundQuiverAlgebra) -> String {
    let q = alg.quiver();
    let mut out = String::new();
    match alg.field() {
        Field::Rationals => out.push_str("field Q\n"),
        Field::Fp(p) => out.push_str(&format!("field Fp {p}\n")),
    }
    let names: Vec<&str> = (0..q.vertex_count()).map(|v| q.vertex_name(v)).collect();
    out.push_str(&format!("vertices {}\n", names.join(" ")));
    for a in 0..q.arrow_count() {
        out.push_str(&format!(
            "arrow {}: {} -> {}\n",
            q.arrow_name(a),
            q.vertex_name(q.source(a)),
            q.vertex_name(q.target(a))
        ));
    }
    for rel in alg.relations() {
        let parts: Vec<String> = rel
            .terms
            .iter()
            .map(|(c, word)| {
                let path: Vec<&str> =
                    word.iter().rev().map(|&a| q.arrow_name(a)).collect();
                if c.is_one() {
                    path.join("*")
                } else {
                    format!("{} {}", c.literal(), path.join("*"))
                }
            })
            .collect();
        out.push_str(&format!("relation {}\n", parts.join(" + ")));
    }
    out
}
