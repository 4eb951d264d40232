//! Moving a triangular matrix past an echelon pivot matrix.
//!
//! For `E` of shape `E_L` with pivot `e_k` at `(k, j(k))`, and `L` lower,
//! `E L = L' E` where `L'[k, k'] = e_k L[j(k), j(k')] / e_k'` on pivot rows
//! and `L'` is the identity elsewhere. The other three relations reduce to
//! this one by transposition and reversal. `E` itself never changes.

use crate::error::{Error, Result};
use crate::sparse::SparseMatrix;

/// Which identity to apply. Each returns `T'` with the stated product kept.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `E_L L = L' E_L`
    ElL,
    /// `L ELhat = ELhat L'`
    LElhat,
    /// `U E_U = E_U U'`
    UEu,
    /// `EUhat U = U' EUhat`
    EuhatU,
}

impl Relation {
    pub const ALL: [Relation; 4] = [Relation::ElL, Relation::LElhat, Relation::UEu, Relation::EuhatU];
}

fn violation(msg: &str) -> Error {
    Error::ShapeViolation(msg.to_string())
}

/// `L'` with `E L = L' E`, for `E` of shape `E_L` (`m x n`) and `L` lower (`n x n`).
fn el_l(e: &SparseMatrix, l: &SparseMatrix) -> Result<SparseMatrix> {
    let (m, n) = e.shape();
    if !e.is_el() {
        return Err(violation("expected an E_L echelon matrix"));
    }
    if !l.is_square() || l.nrows() != n {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} triangular factor against {m}x{n} echelon matrix",
            l.nrows(),
            l.ncols()
        )));
    }
    if !l.is_lower() {
        return Err(violation("expected a lower triangular factor"));
    }
    // Pivot row and value of each column.
    let piv: Vec<Option<(usize, &crate::field::Scalar)>> = e.cols().iter().map(|c| c.last()).collect();
    let mut trip = Vec::new();
    let mut pivot_row = vec![false; m];
    for (jc, p) in piv.iter().enumerate() {
        let Some((kc, ec)) = p else { continue };
        pivot_row[*kc] = true;
        let ec_inv = ec.inv()?;
        for (r, v) in l.col(jc).iter() {
            if let Some((kr, er)) = piv[r] {
                trip.push((kr, *kc, &(er * v) * &ec_inv));
            }
        }
    }
    let field = e.field();
    trip.extend((0..m).filter(|&k| !pivot_row[k]).map(|k| (k, k, field.one())));
    SparseMatrix::from_triplets(field, m, m, trip)
}

/// Apply `relation` to the pair `(E, T)`, returning `(T', E)`.
pub fn commute_shape(e: &SparseMatrix, t: &SparseMatrix, relation: Relation) -> Result<(SparseMatrix, SparseMatrix)> {
    let t_new = match relation {
        Relation::ElL => el_l(e, t)?,
        Relation::UEu => {
            if !e.is_eu() || !t.is_upper() {
                return Err(violation("expected E_U with an upper factor"));
            }
            el_l(&e.transpose(), &t.transpose())?.transpose()
        }
        Relation::EuhatU => {
            if !e.is_euhat() || !t.is_upper() {
                return Err(violation("expected EUhat with an upper factor"));
            }
            el_l(&e.reverse_both(), &t.reverse_both())?.reverse_both()
        }
        Relation::LElhat => {
            if !e.is_elhat() || !t.is_lower() {
                return Err(violation("expected ELhat with a lower factor"));
            }
            // Transpose: EUhat' U' = U'' EUhat'.
            let et = e.transpose();
            el_l(&et.reverse_both(), &t.transpose().reverse_both())?
                .reverse_both()
                .transpose()
        }
    };
    Ok((t_new, e.clone()))
}
