//! Triangular and general linear solves.

use super::{reduce_columns, SparseMatrix, SparseVec};
use crate::error::{Error, Result};

/// Which side of the matrix the unknown sits on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `T x = b`
    Left,
    /// `x T = b`, with `x` and `b` row vectors
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriKind {
    Lower,
    Upper,
}

impl TriKind {
    fn flip(self) -> TriKind {
        match self {
            TriKind::Lower => TriKind::Upper,
            TriKind::Upper => TriKind::Lower,
        }
    }

    fn holds(self, t: &SparseMatrix) -> bool {
        match self {
            TriKind::Lower => t.is_lower(),
            TriKind::Upper => t.is_upper(),
        }
    }

    fn name(self) -> &'static str {
        match self {
            TriKind::Lower => "lower",
            TriKind::Upper => "upper",
        }
    }
}

/// Solve a triangular system exactly.
///
/// With a nonzero diagonal this is plain substitution. Otherwise the system
/// is solved through a column reduction of `T`, so any consistent right-hand
/// side is accepted, not only those substitution happens to reach.
pub fn solve_triangular(t: &SparseMatrix, b: &SparseVec, side: Side, kind: TriKind) -> Result<SparseVec> {
    if !kind.holds(t) {
        return Err(Error::NotTriangular(kind.name()));
    }
    match side {
        Side::Left => left_solve(t, b, kind),
        Side::Right => left_solve(&t.transpose(), b, kind.flip()),
    }
}

fn left_solve(t: &SparseMatrix, b: &SparseVec, kind: TriKind) -> Result<SparseVec> {
    let (m, n) = t.shape();
    if b.pivot().is_some_and(|p| p >= m) {
        return Err(Error::DimensionMismatch(format!("right-hand side longer than {m}")));
    }
    let k = m.min(n);
    if (0..k).any(|i| t.get(i, i).is_none()) {
        return solve(t, b);
    }
    let mut rest: Vec<Option<crate::field::Scalar>> = vec![None; m];
    for (i, v) in b.iter() {
        rest[i] = Some(v.clone());
    }
    let mut x = Vec::new();
    let order: Box<dyn Iterator<Item = usize>> = match kind {
        TriKind::Lower => Box::new(0..k),
        TriKind::Upper => Box::new((0..k).rev()),
    };
    for j in order {
        let Some(r) = rest[j].take() else { continue };
        let xj = r.try_div(t.get(j, j).unwrap())?;
        for (i, v) in t.col(j).iter() {
            if i == j {
                continue;
            }
            let d = &xj * v;
            rest[i] = match rest[i].take() {
                Some(s) => Some(&s - &d),
                None => Some(-d),
            }
            .filter(|s| !s.is_zero());
        }
        x.push((j, xj));
    }
    if rest.iter().any(|r| r.is_some()) {
        return Err(Error::Inconsistent);
    }
    Ok(SparseVec::from_entries(x))
}

/// Solve `A x = b` for any matrix `A`.
pub fn solve(a: &SparseMatrix, b: &SparseVec) -> Result<SparseVec> {
    if b.pivot().is_some_and(|p| p >= a.nrows()) {
        return Err(Error::DimensionMismatch(format!("right-hand side longer than {}", a.nrows())));
    }
    reduce_columns(a).solve(b).ok_or(Error::Inconsistent)
}

/// Inverse of a square triangular matrix with nonzero diagonal.
pub fn triangular_inverse(t: &SparseMatrix, kind: TriKind) -> Result<SparseMatrix> {
    if !kind.holds(t) {
        return Err(Error::NotTriangular(kind.name()));
    }
    let n = t.nrows();
    if !t.is_square() || (0..n).any(|i| t.get(i, i).is_none()) {
        return Err(Error::NotInvertible);
    }
    let cols = (0..n)
        .map(|j| left_solve(t, &SparseVec::unit(t.field(), j), kind))
        .collect::<Result<Vec<_>>>()?;
    SparseMatrix::from_columns(t.field(), n, cols)
}
