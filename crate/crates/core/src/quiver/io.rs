//! Quiver text format.
//!
//! ```text
//! quiver 3 F5
//! dims 1 2 1
//! arrow 1 fwd
//! arrow 2 bwd
//! mat 1
//! 1 1 1
//! mat 2
//! 2 1 3
//! ```
//!
//! Matrix entries are 1-based `i j value` lines; the shape follows from the
//! dims and the arrow direction.

use std::fmt::Write;

use super::{edge_shape, Arrow, TypeAQuiverRep};
use crate::error::{parse_err, Error, Result};
use crate::field::Field;
use crate::sparse::{collect_entries, parse_header_dims, strip};

pub fn parse_quiver(text: &str) -> Result<TypeAQuiverRep> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .filter_map(|(k, l)| strip(l).map(|s| (k + 1, s)))
        .collect();
    let end = lines.last().map_or(1, |l| l.0);
    let mut it = lines.into_iter().peekable();
    let (lineno, head) = it.next().ok_or_else(|| parse_err(1, "empty quiver file"))?;
    let toks: Vec<&str> = head.split_whitespace().collect();
    if toks.len() != 3 || toks[0] != "quiver" {
        return Err(parse_err(lineno, "expected `quiver <n> <field>`"));
    }
    let (n, _) = parse_header_dims(&[toks[1], "0"], lineno)?;
    if n == 0 {
        return Err(parse_err(lineno, "a quiver needs at least one node"));
    }
    let field: Field = toks[2].parse().map_err(|e: Error| parse_err(lineno, e.to_string()))?;

    let (lineno, line) = it.next().ok_or_else(|| parse_err(lineno + 1, "missing `dims` line"))?;
    let toks: Vec<&str> = line.split_whitespace().collect();
    if toks[0] != "dims" || toks.len() != n + 1 {
        return Err(parse_err(lineno, format!("expected `dims` with {n} entries")));
    }
    let dims = toks[1..]
        .iter()
        .map(|t| t.parse::<usize>().map_err(|_| parse_err(lineno, format!("bad dimension {t:?}"))))
        .collect::<Result<Vec<_>>>()?;

    let mut arrows: Vec<Option<Arrow>> = vec![None; n - 1];
    let mut mats = vec![None; n - 1];
    let edge_index = |t: &str, lineno: usize| -> Result<usize> {
        match t.parse::<usize>() {
            Ok(i) if (1..n).contains(&i) => Ok(i - 1),
            _ => Err(parse_err(lineno, format!("edge index {t:?} outside 1..{n}"))),
        }
    };
    while let Some((lineno, line)) = it.next() {
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[..] {
            ["arrow", i, dir] => {
                let i = edge_index(i, lineno)?;
                let a = match dir {
                    "fwd" => Arrow::Forward,
                    "bwd" => Arrow::Backward,
                    _ => return Err(parse_err(lineno, format!("arrow direction {dir:?} is not fwd or bwd"))),
                };
                if arrows[i].replace(a).is_some() {
                    return Err(parse_err(lineno, format!("arrow {} given twice", i + 1)));
                }
            }
            ["mat", i] => {
                let i = edge_index(i, lineno)?;
                let a = arrows[i].ok_or_else(|| parse_err(lineno, format!("matrix {} before its arrow", i + 1)))?;
                if mats[i].is_some() {
                    return Err(parse_err(lineno, format!("matrix {} given twice", i + 1)));
                }
                let mut body = Vec::new();
                while let Some(&(l, s)) = it.peek() {
                    if s.starts_with(|c: char| c.is_ascii_digit() || c == '-') {
                        body.push((l, s));
                        it.next();
                    } else {
                        break;
                    }
                }
                let (r, c) = edge_shape(&dims, a, i);
                mats[i] = Some(collect_entries(body.into_iter(), field, r, c)?);
            }
            _ => return Err(parse_err(lineno, format!("unexpected line {line:?}"))),
        }
    }
    let arrows = arrows
        .into_iter()
        .enumerate()
        .map(|(i, a)| a.ok_or_else(|| parse_err(end, format!("arrow {} missing", i + 1))))
        .collect::<Result<Vec<_>>>()?;
    let mats = mats
        .into_iter()
        .enumerate()
        .map(|(i, m)| {
            let (r, c) = edge_shape(&dims, arrows[i], i);
            m.unwrap_or_else(|| crate::sparse::SparseMatrix::zeros(field, r, c))
        })
        .collect();
    TypeAQuiverRep::new(field, dims, arrows, mats)
}

pub fn write_quiver(q: &TypeAQuiverRep) -> String {
    let mut out = String::new();
    writeln!(out, "quiver {} {}", q.len(), q.field()).unwrap();
    let dims: Vec<String> = q.dims().iter().map(|d| d.to_string()).collect();
    writeln!(out, "dims {}", dims.join(" ")).unwrap();
    for (i, a) in q.arrows().iter().enumerate() {
        writeln!(out, "arrow {} {a}", i + 1).unwrap();
    }
    for (i, m) in q.mats().iter().enumerate() {
        writeln!(out, "mat {}", i + 1).unwrap();
        let mut t: Vec<_> = m.triplets().collect();
        t.sort_by_key(|&(r, c, _)| (r, c));
        for (r, c, v) in t {
            writeln!(out, "{} {} {v}", r + 1, c + 1).unwrap();
        }
    }
    out
}
