//! Splitting a pivot matrix into an echelon pivot matrix and a permutation.
//!
//! Factoring a pivot matrix never performs an elimination step, so the
//! triangular factors of any of the four factorizations are identities.

use super::{factorize, FactorKind};
use crate::error::{Error, Result};
use crate::sparse::{Permutation, SparseMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EchelonTarget {
    /// `Q = E_L P`
    ElP,
    /// `Q = P E_U`
    PEu,
    /// `Q = EUhat P`
    EuhatP,
    /// `Q = P ELhat`
    PElhat,
}

impl EchelonTarget {
    pub const ALL: [EchelonTarget; 4] = [
        EchelonTarget::ElP,
        EchelonTarget::PEu,
        EchelonTarget::EuhatP,
        EchelonTarget::PElhat,
    ];

    fn kind(self) -> FactorKind {
        match self {
            EchelonTarget::ElP => FactorKind::Leup,
            EchelonTarget::PEu => FactorKind::Pleu,
            EchelonTarget::EuhatP => FactorKind::Uelp,
            EchelonTarget::PElhat => FactorKind::Puel,
        }
    }

    /// Whether the permutation multiplies on the left.
    pub fn perm_on_left(self) -> bool {
        matches!(self, EchelonTarget::PEu | EchelonTarget::PElhat)
    }
}

/// Split a pivot matrix into `(E, P)`; multiply in the target's order.
pub fn pivot_factor(q: &SparseMatrix, target: EchelonTarget) -> Result<(SparseMatrix, Permutation)> {
    if !q.is_pivot() {
        return Err(Error::ShapeViolation("expected a pivot matrix".into()));
    }
    let f = factorize(q, target.kind());
    debug_assert!(f.lower.is_unit_lower() && f.lower.nnz() == f.lower.nrows());
    debug_assert!(f.upper.is_unit_upper() && f.upper.nnz() == f.upper.nrows());
    Ok((f.echelon, f.perm))
}

/// The two factors of `Q` as matrices, in multiplication order.
pub fn pivot_to_echelon(q: &SparseMatrix, target: EchelonTarget) -> Result<(SparseMatrix, SparseMatrix)> {
    let (e, p) = pivot_factor(q, target)?;
    let p = p.to_matrix(q.field());
    Ok(if target.perm_on_left() { (p, e) } else { (e, p) })
}
