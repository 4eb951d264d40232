//! `A = L Q U` with `Q` a pivot matrix.

use crate::field::Scalar;
use crate::sparse::SparseMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LquFactorization {
    /// Unit lower triangular, `m x m`.
    pub l: SparseMatrix,
    /// Pivot matrix carrying the pivot values.
    pub q: SparseMatrix,
    /// Unit upper triangular, `n x n`.
    pub u: SparseMatrix,
}

impl LquFactorization {
    pub fn product(&self) -> SparseMatrix {
        &(&self.l * &self.q) * &self.u
    }
}

/// Factor `A = L Q U`.
///
/// Columns are processed left to right. Entries of column `j` lying in rows
/// that already hold a pivot are cleared by adding a multiple of that
/// pivot's column, which by then has no other nonzero. The topmost remaining
/// nonzero becomes the pivot of column `j`, and the nonzeros below it are
/// eliminated with row operations. Row operations only ever push downward
/// and column operations only rightward.
pub fn lqu(a: &SparseMatrix) -> LquFactorization {
    let (m, n) = a.shape();
    let field = a.field();
    let mut rows = a.rows();
    // pivot_of_row[i] = (column, value)
    let mut pivot_of_row: Vec<Option<(usize, Scalar)>> = vec![None; m];
    let mut l_entries = Vec::new();
    let mut u_entries = Vec::new();
    let mut q_entries = Vec::new();
    for j in 0..n {
        let mut top: Option<usize> = None;
        for i in 0..m {
            let Some(x) = rows[i].get(j).cloned() else { continue };
            match &pivot_of_row[i] {
                Some((c, pv)) => {
                    u_entries.push((*c, j, x.try_div(pv).expect("pivot is nonzero")));
                    rows[i].remove(j);
                }
                None if top.is_none() => top = Some(i),
                None => {}
            }
        }
        let Some(i) = top else { continue };
        let pivot = rows[i].get(j).unwrap().clone();
        let (head, tail) = rows.split_at_mut(i + 1);
        let row_i = &head[i];
        for (r, row) in tail.iter_mut().enumerate() {
            if pivot_of_row[i + 1 + r].is_some() {
                continue;
            }
            if let Some(x) = row.get(j) {
                let f = x.try_div(&pivot).expect("pivot is nonzero");
                row.axpy(&-&f, row_i);
                l_entries.push((i + 1 + r, i, f));
            }
        }
        q_entries.push((i, j, pivot.clone()));
        pivot_of_row[i] = Some((j, pivot));
    }
    let unit = |k: usize| (0..k).map(move |d| (d, d, field.one()));
    LquFactorization {
        l: SparseMatrix::from_triplets(field, m, m, l_entries.into_iter().chain(unit(m))).expect("in range"),
        q: SparseMatrix::from_triplets(field, m, n, q_entries).expect("in range"),
        u: SparseMatrix::from_triplets(field, n, n, u_entries.into_iter().chain(unit(n))).expect("in range"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn check(a: &SparseMatrix) -> LquFactorization {
        let f = lqu(a);
        assert_eq!(f.product(), *a);
        assert!(f.q.is_pivot());
        assert!(f.l.is_unit_lower());
        assert!(f.u.is_unit_upper());
        f
    }

    #[test]
    fn examples() {
        let id = SparseMatrix::identity(Field::Fp(5), 3);
        let f = check(&id);
        assert_eq!((f.l.clone(), f.q.clone(), f.u.clone()), (id.clone(), id.clone(), id));
        let ones = SparseMatrix::from_dense(Field::F2, &[vec![1, 1], vec![1, 1]]);
        assert_eq!(check(&ones).q.nnz(), 1);
        check(&SparseMatrix::from_dense(Field::Q, &[vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 9]]));
        check(&SparseMatrix::from_dense(Field::Fp(3), &[vec![0, 1], vec![1, 1], vec![1, 0]]));
        check(&SparseMatrix::zeros(Field::Q, 0, 2));
    }

    #[test]
    fn pivot_above_existing_pivot_row() {
        // Column 1's pivot row sits above column 0's.
        let a = SparseMatrix::from_dense(Field::Fp(7), &[vec![0, 2, 1], vec![3, 1, 0], vec![1, 5, 4]]);
        let f = check(&a);
        assert_eq!(f.q.nnz(), 3);
    }
}
