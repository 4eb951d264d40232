//! Text formats for complexes and vertex maps.
//!
//! ```text
//! field Q
//! simplex 0.0 0
//! simplex 1.5 1 0     # vertices in any order
//! ```
//!
//! A vertex map is one `src dst` pair per line.

use std::collections::BTreeMap;

use super::{build_simplicial, FilteredComplex, SimplicialComplex};
use crate::error::{parse_err, Result};
use crate::field::Field;
use crate::sparse::strip;

/// The field and the `(value, simplex)` lines of a complex file. A field
/// given in `field_override` replaces the header.
pub fn parse_simplex_list(text: &str, field_override: Option<Field>) -> Result<(Field, Vec<(f64, Vec<usize>)>)> {
    let mut field = None;
    let mut out = Vec::new();
    for (k, line) in text.lines().enumerate() {
        let lineno = k + 1;
        let Some(s) = strip(line) else { continue };
        let toks: Vec<&str> = s.split_whitespace().collect();
        match toks[0] {
            "field" => {
                if field.is_some() || !out.is_empty() {
                    return Err(parse_err(lineno, "`field` must be the first line"));
                }
                let [_, tag] = toks[..] else {
                    return Err(parse_err(lineno, "expected `field <tag>`"));
                };
                field = Some(tag.parse::<Field>().map_err(|e| parse_err(lineno, e.to_string()))?);
            }
            "simplex" => {
                if field.is_none() {
                    return Err(parse_err(lineno, "missing `field` header"));
                }
                if toks.len() < 3 {
                    return Err(parse_err(lineno, "expected `simplex <value> v0 ...`"));
                }
                let value: f64 = toks[1]
                    .parse()
                    .map_err(|_| parse_err(lineno, format!("bad filtration value {:?}", toks[1])))?;
                if value.is_nan() {
                    return Err(parse_err(lineno, "filtration value is NaN"));
                }
                let verts = toks[2..]
                    .iter()
                    .map(|t| t.parse::<usize>().map_err(|_| parse_err(lineno, format!("bad vertex {t:?}"))))
                    .collect::<Result<Vec<_>>>()?;
                out.push((value, verts));
            }
            other => return Err(parse_err(lineno, format!("unknown directive {other:?}"))),
        }
    }
    let field = field_override
        .or(field)
        .ok_or_else(|| parse_err(1, "missing `field` header"))?;
    Ok((field, out))
}

/// Parse a filtration file.
pub fn parse_filtration(text: &str, field_override: Option<Field>) -> Result<FilteredComplex> {
    let (field, entries) = parse_simplex_list(text, field_override)?;
    FilteredComplex::from_simplices(field, &entries)
}

/// Parse a complex file, ignoring values and completing faces.
pub fn parse_simplicial(text: &str, field_override: Option<Field>) -> Result<SimplicialComplex> {
    let (field, entries) = parse_simplex_list(text, field_override)?;
    let simplices: Vec<Vec<usize>> = entries.into_iter().map(|(_, s)| s).collect();
    build_simplicial(field, &simplices)
}

/// Parse `src dst` lines. A source vertex may appear only once.
pub fn parse_vertex_map(text: &str) -> Result<BTreeMap<usize, usize>> {
    let mut map = BTreeMap::new();
    for (k, line) in text.lines().enumerate() {
        let lineno = k + 1;
        let Some(s) = strip(line) else { continue };
        let toks: Vec<&str> = s.split_whitespace().collect();
        let [a, b] = toks[..] else {
            return Err(parse_err(lineno, "expected `src dst`"));
        };
        let num = |t: &str| t.parse::<usize>().map_err(|_| parse_err(lineno, format!("bad vertex {t:?}")));
        if map.insert(num(a)?, num(b)?).is_some() {
            return Err(parse_err(lineno, format!("vertex {a} mapped twice")));
        }
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn triangle_file() {
        let text = "# triangle\nfield F2\nsimplex 0 0\nsimplex 0 1\nsimplex 0 2\nsimplex 1 0 1\nsimplex 1 1 2\nsimplex 1 2 0\nsimplex 2 2 1 0\n";
        let fc = parse_filtration(text, None).unwrap();
        assert_eq!(fc.len(), 7);
        let fc = parse_filtration(text, Some(Field::Fp(3))).unwrap();
        assert_eq!(fc.field(), Field::Fp(3));
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert!(matches!(parse_filtration("field F2\nsimplex x 0\n", None), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_filtration("simplex 0 0\n", None), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_vertex_map("0 1\n0 2\n"), Err(Error::Parse { line: 2, .. })));
        assert_eq!(parse_vertex_map("0 1 # c\n\n1 1").unwrap(), BTreeMap::from([(0, 1), (1, 1)]));
    }
}
