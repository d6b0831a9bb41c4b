//! Witness files: a six-term sequence as five module blocks, a `sequence`
//! line naming the roles, and four morphism blocks in order.
//!
//! ```text
//! module F0
//! dim 5=1 6=1
//! map e = [[1]]
//! ...
//! sequence F0 F1 A T0 T1
//! morphism u: F0 -> F1
//! block 5 = [[1]]
//! block 6 = [[1]]
//! morphism v: F1 -> A
//! ...
//! ```
//!
//! Omitted blocks are zero. The four morphisms must chain along the
//! sequence.

use tilt_core::algebra::BoundQuiverAlgebra;
use tilt_core::ext::Witness;
use tilt_core::matrix::Matrix;
use tilt_core::rep::{ModMorphism, Representation};

use super::module::parse_module_lines;
use super::{logical_lines, matrix_rows, parse_scalar, ParseError};

pub fn serialize_witness(alg: &BoundQuiverAlgebra, w: &Witness) -> String {
    let q = alg.quiver();
    let mut out = String::new();
    let roles: [(&str, &Representation); 5] = [
        ("F0", w.f0()),
        ("F1", w.f1()),
        ("A", w.middle()),
        ("T0", w.t0()),
        ("T1", w.t1()),
    ];
    for (name, rep) in &roles {
        out.push_str(&super::module::serialize_module(alg, name, rep));
    }
    out.push_str("sequence F0 F1 A T0 T1\n");
    let maps: [(&str, &str, &str, &ModMorphism); 4] = [
        ("u", "F0", "F1", &w.u),
        ("v", "F1", "A", &w.v),
        ("w", "A", "T0", &w.w),
        ("z", "T0", "T1", &w.z),
    ];
    for (name, from, to, m) in maps {
        out.push_str(&format!("morphism {name}: {from} -> {to}\n"));
        for v in 0..q.vertex_count() {
            let b = &m.blocks[v];
            if b.rows == 0 || b.cols == 0 || b.is_zero() {
                continue;
            }
            let rows: Vec<String> = (0..b.rows)
                .map(|r| {
                    let cells: Vec<String> =
                        (0..b.cols).map(|c| b.get(r, c).literal()).collect();
                    format!("[{}]", cells.join(", "))
                })
                .collect();
            out.push_str(&format!(
                "block {} = [{}]\n",
                q.vertex_name(v),
                rows.join(",")
            ));
        }
    }
    out
}

pub fn parse_witness(alg: &BoundQuiverAlgebra, text: &str) -> Result<Witness, ParseError> {
    let lines = logical_lines(text);
    // split at the `sequence` line: modules before, morphisms after
    let seq_at = lines
        .iter()
        .position(|(_, l)| l.starts_with("sequence"))
        .ok_or_else(|| ParseError::at_line(1, "missing `sequence` line"))?;
    let modules = parse_module_lines(alg, &lines[..seq_at])?;
    let find = |name: &str, ln: usize| -> Result<Representation, ParseError> {
        modules
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, r)| r.clone())
            .ok_or_else(|| ParseError::at_line(ln, format!("unknown module `{name}`")))
    };
    let (seq_ln, seq_line) = &lines[seq_at];
    let roles: Vec<&str> = seq_line.split_whitespace().skip(1).collect();
    if roles.len() != 5 {
        return Err(ParseError::at_line(
            *seq_ln,
            "sequence needs five module names: F0 F1 A T0 T1",
        ));
    }
    let chain: Vec<Representation> = roles
        .iter()
        .map(|n| find(n, *seq_ln))
        .collect::<Result<_, _>>()?;
    // morphism blocks
    let q = alg.quiver();
    let mut morphisms: Vec<ModMorphism> = Vec::new();
    let mut current: Option<(usize, usize, Vec<Matrix>)> = None; // (from, to, blocks)
    let finish = |cur: Option<(usize, usize, Vec<Matrix>)>,
                  morphisms: &mut Vec<ModMorphism>,
                  chain: &[Representation]|
     -> Result<(), ParseError> {
        if let Some((from, to, blocks)) = cur {
            morphisms.push(ModMorphism {
                source: chain[from].clone(),
                target: chain[to].clone(),
                blocks,
            });
        }
        Ok(())
    };
    for (ln, line) in &lines[seq_at + 1..] {
        let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line.as_str(), ""));
        match keyword {
            "morphism" => {
                finish(current.take(), &mut morphisms, &chain)?;
                // morphism <name>: <src> -> <tgt>
                let (_, ends) = rest.split_once(':').ok_or_else(|| {
                    ParseError::at_line(*ln, "expected `morphism <name>: <src> -> <tgt>`")
                })?;
                let (src, tgt) = ends.split_once("->").ok_or_else(|| {
                    ParseError::at_line(*ln, "expected `-> <target>`")
                })?;
                let from = roles
                    .iter()
                    .position(|r| *r == src.trim())
                    .ok_or_else(|| {
                        ParseError::at_line(*ln, format!("unknown role `{}`", src.trim()))
                    })?;
                let to = roles
                    .iter()
                    .position(|r| *r == tgt.trim())
                    .ok_or_else(|| {
                        ParseError::at_line(*ln, format!("unknown role `{}`", tgt.trim()))
                    })?;
                let blocks: Vec<Matrix> = (0..alg.vertex_count())
                    .map(|v| {
                        Matrix::zero(alg.field(), chain[to].dims[v], chain[from].dims[v])
                    })
                    .collect();
                current = Some((from, to, blocks));
            }
            "block" => {
                let cur = current.as_mut().ok_or_else(|| {
                    ParseError::at_line(*ln, "block outside a morphism")
                })?;
                let (v, body) = rest.split_once('=').ok_or_else(|| {
                    ParseError::at_line(*ln, "expected `block <vertex> = [[..]]`")
                })?;
                let vi = q.vertex_index(v.trim()).ok_or_else(|| {
                    ParseError::at_line(*ln, format!("unknown vertex `{}`", v.trim()))
                })?;
                let rows = matrix_rows(body, *ln)?;
                let parsed: Result<Vec<Vec<_>>, ParseError> = rows
                    .iter()
                    .map(|r| {
                        r.iter().map(|cell| parse_scalar(alg.field(), cell, *ln)).collect()
                    })
                    .collect();
                let m = Matrix::from_rows(alg.field(), parsed?);
                if (m.rows, m.cols) != (cur.2[vi].rows, cur.2[vi].cols) {
                    return Err(ParseError::at_line(
                        *ln,
                        format!(
                            "block at vertex {} must be {}x{}",
                            v.trim(),
                            cur.2[vi].rows,
                            cur.2[vi].cols
                        ),
                    ));
                }
                cur.2[vi] = m;
            }
            _ => {
                return Err(ParseError::at_line(
                    *ln,
                    format!("unknown directive `{keyword}` in witness file"),
                ))
            }
        }
    }
    finish(current, &mut morphisms, &chain)?;
    if morphisms.len() != 4 {
        return Err(ParseError::at_line(
            *seq_ln,
            format!("expected four morphisms, got {}", morphisms.len()),
        ));
    }
    // morphisms must chain along the declared sequence
    for (i, m) in morphisms.iter().enumerate() {
        if m.source.dims != chain[i].dims || m.target.dims != chain[i + 1].dims {
            return Err(ParseError::at_line(
                *seq_ln,
                format!("morphism {} does not go from role {} to role {}", i, i, i + 1),
            ));
        }
        m.validate(alg).map_err(|e| {
            ParseError::at_line(*seq_ln, format!("morphism {i} is not a module map: {e}"))
        })?;
    }
    let mut it = morphisms.into_iter();
    Ok(Witness {
        u: it.next().unwrap(),
        v: it.next().unwrap(),
        w: it.next().unwrap(),
        z: it.next().unwrap(),
    })
}
