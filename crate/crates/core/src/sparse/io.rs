//! Coordinate text format:
//!
//! ```text
//! matrix <nrows> <ncols> <field>
//! <i> <j> <value>     # 1-based, any order
//! ```

use std::collections::HashSet;
use std::fmt::Write;

use super::SparseMatrix;
use crate::error::{parse_err, Error, Result};
use crate::field::{Field, Scalar};

/// Content of a line with any `#` comment removed, or `None` if blank.
pub(crate) fn strip(line: &str) -> Option<&str> {
    let s = line.split('#').next().unwrap_or("").trim();
    (!s.is_empty()).then_some(s)
}

/// Parse `i j value` into 0-based indices, checking bounds.
pub(crate) fn parse_entry(
    s: &str,
    lineno: usize,
    field: Field,
    nrows: usize,
    ncols: usize,
) -> Result<(usize, usize, Scalar)> {
    let toks: Vec<&str> = s.split_whitespace().collect();
    let [i, j, v] = toks[..] else {
        return Err(parse_err(lineno, "expected `i j value`"));
    };
    let idx = |t: &str, bound: usize, what: &str| -> Result<usize> {
        let k: usize = t
            .parse()
            .map_err(|_| parse_err(lineno, format!("bad {what} index {t:?}")))?;
        if k == 0 || k > bound {
            return Err(parse_err(lineno, format!("{what} index {k} outside 1..={bound}")));
        }
        Ok(k - 1)
    };
    let i = idx(i, nrows, "row")?;
    let j = idx(j, ncols, "column")?;
    let v = field.parse_scalar(v).map_err(|e| parse_err(lineno, e.to_string()))?;
    Ok((i, j, v))
}

/// Read entries for an `nrows x ncols` block from `lines`, rejecting
/// duplicate coordinates.
pub(crate) fn collect_entries<'a>(
    lines: impl Iterator<Item = (usize, &'a str)>,
    field: Field,
    nrows: usize,
    ncols: usize,
) -> Result<SparseMatrix> {
    let mut seen = HashSet::new();
    let mut trip = Vec::new();
    for (lineno, s) in lines {
        let (i, j, v) = parse_entry(s, lineno, field, nrows, ncols)?;
        if !seen.insert((i, j)) {
            return Err(parse_err(lineno, format!("duplicate entry ({}, {})", i + 1, j + 1)));
        }
        trip.push((i, j, v));
    }
    SparseMatrix::from_triplets(field, nrows, ncols, trip)
}

pub(crate) fn parse_header_dims(toks: &[&str], lineno: usize) -> Result<(usize, usize)> {
    let num = |t: &str| {
        t.parse::<usize>()
            .map_err(|_| parse_err(lineno, format!("bad dimension {t:?}")))
    };
    Ok((num(toks[0])?, num(toks[1])?))
}

/// Parse a matrix in the coordinate text format.
pub fn parse_matrix(text: &str) -> Result<SparseMatrix> {
    let mut lines = text.lines().enumerate().filter_map(|(k, l)| strip(l).map(|s| (k + 1, s)));
    let (lineno, head) = lines.next().ok_or_else(|| parse_err(1, "empty matrix file"))?;
    let toks: Vec<&str> = head.split_whitespace().collect();
    if toks.len() != 4 || toks[0] != "matrix" {
        return Err(parse_err(lineno, "expected `matrix <nrows> <ncols> <field>`"));
    }
    let (m, n) = parse_header_dims(&toks[1..3], lineno)?;
    let field: Field = toks[3].parse().map_err(|e: Error| parse_err(lineno, e.to_string()))?;
    collect_entries(lines, field, m, n)
}

/// Serialize in the coordinate format, entries sorted by row then column.
pub fn write_matrix(a: &SparseMatrix) -> String {
    let mut out = String::new();
    writeln!(out, "matrix {} {} {}", a.nrows(), a.ncols(), a.field()).unwrap();
    let mut t: Vec<_> = a.triplets().collect();
    t.sort_by_key(|&(i, j, _)| (i, j));
    for (i, j, v) in t {
        writeln!(out, "{} {} {}", i + 1, j + 1, v).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let a = SparseMatrix::from_dense(Field::Fp(5), &[vec![1, 0, 4], vec![0, 2, 0]]);
        assert_eq!(parse_matrix(&write_matrix(&a)).unwrap(), a);
        let q = parse_matrix("matrix 2 2 Q\n# comment\n1 1 1/2\n2 2 -3 # trailing\n").unwrap();
        assert_eq!(q.at(0, 0), Field::Q.parse_scalar("1/2").unwrap());
        assert_eq!(write_matrix(&q), "matrix 2 2 Q\n1 1 1/2\n2 2 -3\n");
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_matrix("matrix 2 2 F2\n1 1 1\n\n1 1 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 4, .. }), "{e}");
        assert!(matches!(parse_matrix("matrix 2 2 F2\n3 1 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_matrix("matrix 2 x F2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_matrix("matrix 2 2 F4\n"), Err(Error::Parse { line: 1, .. })));
        assert!(parse_matrix("").is_err());
    }
}
