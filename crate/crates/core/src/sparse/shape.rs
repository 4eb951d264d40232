//! Shape predicates on the nonzero pattern of a matrix.
//!
//! Echelon pivot matrices may carry arbitrary nonzero values; only the
//! position of the nonzeros matters. The hatted shapes are named after the
//! side of the diagonal they live on: `EUhat` is the reversal `J E_L J` and
//! `ELhat` is `J E_U J`.

use std::collections::BTreeSet;

use super::SparseMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ShapeKind {
    Generic,
    Lower,
    Upper,
    Perm,
    Pivot,
    EL,
    EU,
    ELhat,
    EUhat,
    AntiDiagJ,
}

impl SparseMatrix {
    /// Nonzeros only on or below the diagonal.
    pub fn is_lower(&self) -> bool {
        self.triplets().all(|(i, j, _)| i >= j)
    }

    /// Nonzeros only on or above the diagonal.
    pub fn is_upper(&self) -> bool {
        self.triplets().all(|(i, j, _)| i <= j)
    }

    /// Square lower triangular with ones on the diagonal.
    pub fn is_unit_lower(&self) -> bool {
        self.is_square() && self.is_lower() && (0..self.nrows()).all(|i| self.get(i, i).is_some_and(|v| v.is_one()))
    }

    /// Square upper triangular with ones on the diagonal.
    pub fn is_unit_upper(&self) -> bool {
        self.is_square() && self.is_upper() && (0..self.nrows()).all(|i| self.get(i, i).is_some_and(|v| v.is_one()))
    }

    /// At most one nonzero in every row and every column.
    pub fn is_pivot(&self) -> bool {
        let mut seen = vec![false; self.nrows()];
        for c in self.cols() {
            if c.nnz() > 1 {
                return false;
            }
            if let Some(i) = c.pivot() {
                if std::mem::replace(&mut seen[i], true) {
                    return false;
                }
            }
        }
        true
    }

    /// A square pivot matrix whose nonzeros are all ones, one per column.
    pub fn is_permutation(&self) -> bool {
        self.is_square()
            && self.is_pivot()
            && self.cols().iter().all(|c| c.nnz() == 1 && c.entries()[0].1.is_one())
    }

    /// A pivot matrix whose pivot rows increase with the column and whose
    /// zero columns all come after the nonzero ones.
    pub fn is_el(&self) -> bool {
        let mut last: Option<usize> = None;
        let mut zero_seen = false;
        for c in self.cols() {
            match c.nnz() {
                0 => zero_seen = true,
                1 => {
                    let i = c.entries()[0].0;
                    if zero_seen || last.is_some_and(|l| l >= i) {
                        return false;
                    }
                    last = Some(i);
                }
                _ => return false,
            }
        }
        true
    }

    /// Transpose is `E_L`.
    pub fn is_eu(&self) -> bool {
        self.transpose().is_el()
    }

    /// `J E_L J`: upper-triangular echelon reversal.
    pub fn is_euhat(&self) -> bool {
        self.reverse_both().is_el()
    }

    /// `J E_U J`: lower-triangular echelon reversal.
    pub fn is_elhat(&self) -> bool {
        self.reverse_both().is_eu()
    }

    /// Exactly the exchange matrix `J`.
    pub fn is_exchange(&self) -> bool {
        let n = self.nrows();
        self.is_square()
            && self
                .cols()
                .iter()
                .enumerate()
                .all(|(j, c)| c.nnz() == 1 && c.entries()[0].0 == n - 1 - j && c.entries()[0].1.is_one())
    }

    pub fn has_shape(&self, kind: ShapeKind) -> bool {
        match kind {
            ShapeKind::Generic => true,
            ShapeKind::Lower => self.is_lower(),
            ShapeKind::Upper => self.is_upper(),
            ShapeKind::Perm => self.is_permutation(),
            ShapeKind::Pivot => self.is_pivot(),
            ShapeKind::EL => self.is_el(),
            ShapeKind::EU => self.is_eu(),
            ShapeKind::ELhat => self.is_elhat(),
            ShapeKind::EUhat => self.is_euhat(),
            ShapeKind::AntiDiagJ => self.is_exchange(),
        }
    }

    /// Every shape the matrix satisfies; `Generic` only when none of the others hold.
    pub fn classify_shape(&self) -> BTreeSet<ShapeKind> {
        use ShapeKind::*;
        let mut out: BTreeSet<ShapeKind> = [Lower, Upper, Perm, Pivot, EL, EU, ELhat, EUhat, AntiDiagJ]
            .into_iter()
            .filter(|k| self.has_shape(*k))
            .collect();
        if out.is_empty() {
            out.insert(Generic);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::ShapeKind::*;
    use super::*;
    use crate::field::Field;

    fn m(rows: &[Vec<i64>]) -> SparseMatrix {
        SparseMatrix::from_dense(Field::F2, rows)
    }

    #[test]
    fn identity_shapes() {
        let s = SparseMatrix::identity(Field::Fp(3), 3).classify_shape();
        let want: BTreeSet<_> = [Lower, Upper, Perm, Pivot, EL, EU, ELhat, EUhat].into_iter().collect();
        assert_eq!(s, want);
    }

    #[test]
    fn small_echelon_examples() {
        assert!(m(&[vec![1, 0], vec![0, 0]]).is_el());
        assert!(m(&[vec![0, 0], vec![1, 0]]).is_el());
        assert!(!m(&[vec![0, 1], vec![0, 0]]).is_el());
        assert!(m(&[vec![0, 1], vec![0, 0]]).is_euhat());
        assert!(m(&[vec![0, 0], vec![1, 0]]).is_elhat());
        assert!(SparseMatrix::exchange(Field::F2, 3).classify_shape().contains(&AntiDiagJ));
        assert_eq!(m(&[vec![1, 1], vec![1, 1]]).classify_shape(), [Generic].into_iter().collect());
    }

    /// Brute force over all 2x2 0/1 matrices against a direct reading of the
    /// definition: a pivot matrix equal to a sum of `e_i e_j^T` with the
    /// column indices forming a prefix and row indices strictly increasing.
    #[test]
    fn el_matches_definition_on_2x2() {
        for bits in 0u32..16 {
            let rows: Vec<Vec<i64>> = (0..2)
                .map(|i| (0..2).map(|j| ((bits >> (2 * i + j)) & 1) as i64).collect())
                .collect();
            let a = m(&rows);
            let pts: Vec<(usize, usize)> = a.triplets().map(|(i, j, _)| (i, j)).collect();
            let mut by_col = pts.clone();
            by_col.sort_by_key(|p| p.1);
            let prefix = by_col.iter().enumerate().all(|(k, p)| p.1 == k);
            let rows_inc = by_col.windows(2).all(|w| w[0].0 < w[1].0);
            let want = a.is_pivot() && prefix && rows_inc;
            assert_eq!(a.is_el(), want, "{rows:?}");
        }
    }
}
