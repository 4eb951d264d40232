//! Commuting a trailing-block permutation past a block upper-triangular
//! matrix whose trailing diagonal block is the identity:
//!
//! ```text
//! [I 0] [T11 T12]   [T11 T12 P^T] [I 0]
//! [0 P] [ 0   I ] = [ 0     I   ] [0 P]
//! ```

use crate::error::{Error, Result};
use crate::sparse::{Permutation, SparseMatrix};

/// Given `P` acting on the trailing block and `T`, return `(T', diag(I, P))`
/// with `diag(I, P) T = T' diag(I, P)`.
pub fn commute_perm_blocktri(p: &Permutation, t: &SparseMatrix) -> Result<(SparseMatrix, SparseMatrix)> {
    let n = t.nrows();
    if !t.is_square() || p.len() > n {
        return Err(Error::BlockStructureViolation(format!(
            "{}x{} matrix cannot carry a trailing block of size {}",
            t.nrows(),
            t.ncols(),
            p.len()
        )));
    }
    let n1 = n - p.len();
    for (i, j, v) in t.triplets() {
        let bad = if j >= n1 { i >= n1 && (i != j || !v.is_one()) } else { i >= n1 };
        if bad {
            return Err(Error::BlockStructureViolation(format!(
                "entry ({}, {}) breaks the block layout",
                i + 1,
                j + 1
            )));
        }
    }
    if (n1..n).any(|k| t.get(k, k).is_none()) {
        return Err(Error::BlockStructureViolation("trailing block is not the identity".into()));
    }
    let full: Vec<usize> = (0..n1).chain(p.map().iter().map(|&k| k + n1)).collect();
    let full = Permutation::from_map(full).expect("bijection");
    // Column j of T' is column full^{-1}(j) of T for trailing j, i.e. T12 P^T.
    let inv = full.inverse();
    let cols = (0..n)
        .map(|j| {
            if j < n1 {
                t.col(j).clone()
            } else {
                let src = t.col(inv.image(j));
                let mut c = crate::sparse::SparseVec::new();
                for (i, v) in src.iter().filter(|e| e.0 < n1) {
                    c.push(i, v.clone());
                }
                c.push(j, t.field().one());
                c
            }
        })
        .collect();
    let t_new = SparseMatrix::from_columns(t.field(), n, cols)?;
    Ok((t_new, full.to_matrix(t.field())))
}
