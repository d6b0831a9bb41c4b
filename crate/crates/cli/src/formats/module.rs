//! Module files: named representations with per-vertex dimensions and arrow
//! matrices.
//!
//! ```text
//! module X
//! dim 1=1 2=1
//! map a = [[1]]
//! ```
//!
//! Omitted dimensions are zero and omitted maps are zero matrices.

use tilt_core::algebra::BoundQuiverAlgebra;
use tilt_core::matrix::Matrix;
use tilt_core::rep::Representation;

use super::{logical_lines, matrix_rows, parse_scalar, ParseError};

pub fn parse_modules(
    alg: &BoundQuiverAlgebra,
    text: &str,
) -> Result<Vec<(String, Representation)>, ParseError> {
    parse_module_lines(alg, &logical_lines(text))
}

/// a named module under construction: dims plus optional (line, matrix)
/// per arrow
type PendingModule = (String, Vec<usize>, Vec<Option<(usize, Matrix)>>);

pub(crate) fn parse_module_lines(
    alg: &BoundQuiverAlgebra,
    lines: &[(usize, String)],
) -> Result<Vec<(String, Representation)>, ParseError> {
    let q = alg.quiver();
    let mut out: Vec<(String, Representation)> = Vec::new();
    let mut current: Option<PendingModule> = None;
    let finish = |cur: Option<PendingModule>,
                  out: &mut Vec<(String, Representation)>|
     -> Result<(), ParseError> {
        if let Some((name, dims, maps)) = cur {
            let mut matrices = Vec::with_capacity(q.arrow_count());
            for a in 0..q.arrow_count() {
                let want = (dims[q.target(a)], dims[q.source(a)]);
                match &maps[a] {
                    Some((ln, m)) => {
                        if (m.rows, m.cols) != want {
                            return Err(ParseError::at_line(
                                *ln,
                                format!(
                                    "map {} must be {}x{}, got {}x{}",
                                    q.arrow_name(a),
                                    want.0,
                                    want.1,
                                    m.rows,
                                    m.cols
                                ),
                            ));
                        }
                        matrices.push(m.clone());
                    }
                    None => matrices.push(Matrix::zero(alg.field(), want.0, want.1)),
                }
            }
            let rep = Representation::new(alg, dims, matrices)
                .map_err(|e| ParseError::at_line(1, format!("module {name}: {e}")))?;
            out.push((name, rep));
        }
        Ok(())
    };
    for (ln, line) in lines {
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line.as_str(), ""));
        match keyword {
            "module" => {
                finish(current.take(), &mut out)?;
                let name = rest.trim();
                if name.is_empty() {
                    return Err(ParseError::at_line(*ln, "module needs a name"));
                }
                current = Some((
                    name.to_string(),
                    vec![0; q.vertex_count()],
                    vec![None; q.arrow_count()],
                ));
            }
            "dim" => {
                let cur = current.as_mut().ok_or_else(|| {
                    ParseError::at_line(*ln, "dim outside a module block")
                })?;
                for assign in rest.split_whitespace() {
                    let (v, d) = assign.split_once('=').ok_or_else(|| {
                        ParseError::at_line(*ln, format!("expected vertex=dim, got `{assign}`"))
                    })?;
                    let vi = q.vertex_index(v).ok_or_else(|| {
                        ParseError::at_line(*ln, format!("unknown vertex `{v}`"))
                    })?;
                    cur.1[vi] = d.parse().map_err(|_| {
                        ParseError::at_line(*ln, format!("invalid dimension `{d}`"))
                    })?;
                }
            }
            "map" => {
                let cur = current.as_mut().ok_or_else(|| {
                    ParseError::at_line(*ln, "map outside a module block")
                })?;
                let (name, body) = rest.split_once('=').ok_or_else(|| {
                    ParseError::at_line(*ln, "expected `map <arrow> = [[..]]`")
                })?;
                let a = q.arrow_index(name.trim()).ok_or_else(|| {
                    ParseError::at_line(*ln, format!("unknown arrow `{}`", name.trim()))
                })?;
                let rows = matrix_rows(body, *ln)?;
                let parsed: Result<Vec<Vec<_>>, ParseError> = rows
                    .iter()
                    .map(|r| {
                        r.iter().map(|cell| parse_scalar(alg.field(), cell, *ln)).collect()
                    })
                    .collect();
                let m = Matrix::from_rows(alg.field(), parsed?);
                cur.2[a] = Some((*ln, m));
            }
            _ => {
                return Err(ParseError::at_line(
                    *ln,
                    format!("unknown directive `{keyword}` in module file"),
                ))
            }
        }
    }
    finish(current, &mut out)?;
    Ok(out)
}

pub fn serialize_module(
    alg: &BoundQuiverAlgebra,
    name: &str,
    rep: &Representation,
) -> String {
    let q = alg.quiver();
    let mut out = format!("module {name}\n");
    let dims: Vec<String> = (0..q.vertex_count())
        .filter(|&v| rep.dims[v] > 0)
        .map(|v| format!("{}={}", q.vertex_name(v), rep.dims[v]))
        .collect();
    if !dims.is_empty() {
        out.push_str(&format!("dim {}\n", dims.join(" ")));
    }
    for a in 0..q.arrow_count() {
        let m = &rep.maps[a];
        if m.rows == 0 || m.cols == 0 || m.is_zero() {
            continue;
        }
        let rows: Vec<String> = (0..m.rows)
            .map(|r| {
                let cells: Vec<String> =
                    (0..m.cols).map(|c| m.get(r, c).literal()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        out.push_str(&format!("map {} = [{}]\n", q.arrow_name(a), rows.join(",")));
    }
    out
}
