//! `A = L E U P` and the three variants obtained from it by transposition
//! and reversal.

use super::{FactorKind, TriangularFactorization};
use crate::field::Scalar;
use crate::sparse::{Permutation, SparseMatrix};

/// Factor `A = L E U P` with `L` unit lower, `E` of shape `E_L` carrying the
/// pivot values, `U` unit upper and `P` a permutation.
///
/// Rows are visited top to bottom. Row `i` takes as pivot the nonzero whose
/// column currently sits at the smallest logical position; that column is
/// swapped into position `j`, rows below are eliminated against it and the
/// rest of row `i` is cleared with column operations. A row with no nonzero
/// left advances `i` but not `j`.
pub fn leup(a: &SparseMatrix) -> TriangularFactorization {
    let (m, n) = a.shape();
    let field = a.field();
    // Rows keyed by original column id.
    let mut rows = a.rows();
    let mut pos_of: Vec<usize> = (0..n).collect();
    let mut col_at: Vec<usize> = (0..n).collect();
    let mut l_entries: Vec<(usize, usize, Scalar)> = Vec::new();
    // U rows in logical position space, entries keyed by original column id.
    let mut u_rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n];
    let mut e_entries = Vec::new();
    let mut j = 0;
    for i in 0..m {
        if j == n {
            break;
        }
        let Some(cp) = rows[i].iter().map(|(c, _)| c).min_by_key(|&c| pos_of[c]) else {
            continue;
        };
        let pivot = rows[i].get(cp).unwrap().clone();
        let pinv = pivot.inv().expect("stored entries are nonzero");

        let (pj, other) = (pos_of[cp], col_at[j]);
        col_at.swap(j, pj);
        pos_of[cp] = j;
        pos_of[other] = pj;

        let (head, tail) = rows.split_at_mut(i + 1);
        let row_i = &head[i];
        for (r, row) in tail.iter_mut().enumerate() {
            if let Some(x) = row.get(cp) {
                let f = x * &pinv;
                row.axpy(&-&f, row_i);
                l_entries.push((i + 1 + r, i, f));
            }
        }
        for (c, x) in row_i.iter() {
            if c != cp {
                u_rows[j].push((c, x * &pinv));
            }
        }
        e_entries.push((i, j, pivot));
        j += 1;
    }

    let lower = SparseMatrix::from_triplets(
        field,
        m,
        m,
        l_entries.into_iter().chain((0..m).map(|k| (k, k, field.one()))),
    )
    .expect("in range");
    let echelon = SparseMatrix::from_triplets(field, m, n, e_entries).expect("in range");
    let u_trip = u_rows
        .into_iter()
        .enumerate()
        .flat_map(|(r, es)| es.into_iter().map(move |(c, v)| (r, c, v)))
        .map(|(r, c, v)| (r, pos_of[c], v))
        .chain((0..n).map(|k| (k, k, field.one())));
    let upper = SparseMatrix::from_triplets(field, n, n, u_trip).expect("in range");
    TriangularFactorization {
        kind: FactorKind::Leup,
        lower,
        echelon,
        upper,
        perm: Permutation::from_map(pos_of).expect("bijection"),
    }
}

/// `J P J` for a permutation.
fn reverse_perm(p: &Permutation) -> Permutation {
    let n = p.len();
    Permutation::from_map((0..n).map(|i| n - 1 - p.image(n - 1 - i)).collect()).expect("bijection")
}

/// `A = P L E U`, read off the LEUP factorization of `A^T`.
pub fn pleu(a: &SparseMatrix) -> TriangularFactorization {
    let f = leup(&a.transpose());
    TriangularFactorization {
        kind: FactorKind::Pleu,
        lower: f.upper.transpose(),
        echelon: f.echelon.transpose(),
        upper: f.lower.transpose(),
        perm: f.perm.inverse(),
    }
}

/// `A = U E L P` with `E` of shape `EUhat`, from the LEUP factorization of
/// the reversal `J A J`.
pub fn uelp(a: &SparseMatrix) -> TriangularFactorization {
    let f = leup(&a.reverse_both());
    TriangularFactorization {
        kind: FactorKind::Uelp,
        lower: f.upper.reverse_both(),
        echelon: f.echelon.reverse_both(),
        upper: f.lower.reverse_both(),
        perm: reverse_perm(&f.perm),
    }
}

/// `A = P U E L` with `E` of shape `ELhat`, from the PLEU factorization of
/// the reversal `J A J`.
pub fn puel(a: &SparseMatrix) -> TriangularFactorization {
    let f = pleu(&a.reverse_both());
    TriangularFactorization {
        kind: FactorKind::Puel,
        lower: f.upper.reverse_both(),
        echelon: f.echelon.reverse_both(),
        upper: f.lower.reverse_both(),
        perm: reverse_perm(&f.perm),
    }
}
