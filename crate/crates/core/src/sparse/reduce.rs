//! Left-to-right column reduction: `A V = R` with distinct column pivots.

use super::{SparseMatrix, SparseVec};
use crate::field::Scalar;

/// Result of reducing the columns of a matrix.
#[derive(Clone, Debug)]
pub struct ColumnReduction {
    /// Reduced columns; nonzero ones have distinct pivots.
    pub r: Vec<SparseVec>,
    /// `A * v[j] = r[j]`; `v[j]` is `e_j` plus earlier columns.
    pub v: Vec<SparseVec>,
    /// Row index -> the column whose pivot it is.
    pub pivot_col: Vec<Option<usize>>,
}

/// Reduce `a` column by column, adding multiples of earlier columns until
/// each pivot (last nonzero) is new or the column vanishes.
pub fn reduce_columns(a: &SparseMatrix) -> ColumnReduction {
    let field = a.field();
    let mut out = ColumnReduction {
        r: Vec::with_capacity(a.ncols()),
        v: Vec::with_capacity(a.ncols()),
        pivot_col: vec![None; a.nrows()],
    };
    for j in 0..a.ncols() {
        let mut col = a.col(j).clone();
        let mut v = SparseVec::unit(field, j);
        while let Some((p, x)) = col.last() {
            let Some(k) = out.pivot_col[p] else { break };
            let alpha = -&x.try_div(out.r[k].last().unwrap().1).expect("pivot is nonzero");
            col.axpy(&alpha, &out.r[k]);
            v.axpy(&alpha, &out.v[k]);
        }
        if let Some(p) = col.pivot() {
            out.pivot_col[p] = Some(j);
        }
        out.r.push(col);
        out.v.push(v);
    }
    out
}

impl ColumnReduction {
    /// Write `b` as a combination of reduced columns: returns `x` with
    /// `A x = b`, or `None` when `b` is outside the column space.
    pub fn solve(&self, b: &SparseVec) -> Option<SparseVec> {
        let mut rest = b.clone();
        let mut x = SparseVec::new();
        while let Some((p, val)) = rest.last() {
            let k = self.pivot_col.get(p).copied().flatten()?;
            let c: Scalar = val.try_div(self.r[k].last().unwrap().1).expect("pivot is nonzero");
            rest.axpy(&-&c, &self.r[k]);
            x.axpy(&c, &self.v[k]);
        }
        Some(x)
    }

    pub fn rank(&self) -> usize {
        self.r.iter().filter(|c| !c.is_empty()).count()
    }
}
