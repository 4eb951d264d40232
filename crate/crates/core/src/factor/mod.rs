//! Triangular factorizations and the identities used to move triangular and
//! permutation factors past echelon pivot matrices.

mod blocktri;
mod commute;
mod echelon;
mod leup;
mod lqu;

pub use blocktri::commute_perm_blocktri;
pub use commute::{commute_shape, Relation};
pub use echelon::{pivot_factor, pivot_to_echelon, EchelonTarget};
pub use leup::{leup, pleu, puel, uelp};
pub use lqu::{lqu, LquFactorization};

use crate::error::{Error, Result};
use crate::sparse::{triangular_inverse, Permutation, SparseMatrix, TriKind};

/// Order of the factors in a [`TriangularFactorization`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FactorKind {
    /// `L E_L U P`
    Leup,
    /// `P L E_U U`
    Pleu,
    /// `U EUhat L P`
    Uelp,
    /// `P U ELhat L`
    Puel,
}

impl FactorKind {
    pub const ALL: [FactorKind; 4] = [FactorKind::Leup, FactorKind::Pleu, FactorKind::Uelp, FactorKind::Puel];

    pub fn name(self) -> &'static str {
        match self {
            FactorKind::Leup => "leup",
            FactorKind::Pleu => "pleu",
            FactorKind::Uelp => "uelp",
            FactorKind::Puel => "puel",
        }
    }

    /// Factor labels in multiplication order.
    pub fn labels(self) -> [&'static str; 4] {
        match self {
            FactorKind::Leup => ["L", "E", "U", "P"],
            FactorKind::Pleu => ["P", "L", "E", "U"],
            FactorKind::Uelp => ["U", "E", "L", "P"],
            FactorKind::Puel => ["P", "U", "E", "L"],
        }
    }
}

/// One of the four triangular factorizations, stored by role.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularFactorization {
    pub kind: FactorKind,
    /// Unit lower-triangular factor.
    pub lower: SparseMatrix,
    /// Echelon pivot factor holding the pivot values.
    pub echelon: SparseMatrix,
    /// Unit upper-triangular factor.
    pub upper: SparseMatrix,
    pub perm: Permutation,
}

/// Factor `a` in the given order.
pub fn factorize(a: &SparseMatrix, kind: FactorKind) -> TriangularFactorization {
    match kind {
        FactorKind::Leup => leup(a),
        FactorKind::Pleu => pleu(a),
        FactorKind::Uelp => uelp(a),
        FactorKind::Puel => puel(a),
    }
}

/// The PLEU, UELP or PUEL factorization of `a`.
pub fn variant_factorization(a: &SparseMatrix, kind: FactorKind) -> TriangularFactorization {
    factorize(a, kind)
}

impl TriangularFactorization {
    /// The four factors as matrices, in multiplication order.
    pub fn factors(&self) -> [SparseMatrix; 4] {
        let p = self.perm.to_matrix(self.echelon.field());
        let (l, e, u) = (self.lower.clone(), self.echelon.clone(), self.upper.clone());
        match self.kind {
            FactorKind::Leup => [l, e, u, p],
            FactorKind::Pleu => [p, l, e, u],
            FactorKind::Uelp => [u, e, l, p],
            FactorKind::Puel => [p, u, e, l],
        }
    }

    pub fn product(&self) -> SparseMatrix {
        let [a, b, c, d] = self.factors();
        &(&(&a * &b) * &c) * &d
    }

    pub fn rank(&self) -> usize {
        self.echelon.nnz()
    }

    /// Whether each factor has its declared shape.
    pub fn shapes_ok(&self) -> bool {
        let e_ok = match self.kind {
            FactorKind::Leup => self.echelon.is_el(),
            FactorKind::Pleu => self.echelon.is_eu(),
            FactorKind::Uelp => self.echelon.is_euhat(),
            FactorKind::Puel => self.echelon.is_elhat(),
        };
        e_ok && self.lower.is_unit_lower() && self.upper.is_unit_upper()
    }
}

/// Rank of `a`.
pub fn rank(a: &SparseMatrix) -> usize {
    leup(a).rank()
}

/// Inverse of a square matrix, via `A^{-1} = P^T U^{-1} E^{-1} L^{-1}`.
pub fn inverse(a: &SparseMatrix) -> Result<SparseMatrix> {
    if !a.is_square() {
        return Err(Error::NotInvertible);
    }
    let f = leup(a);
    if f.rank() != a.nrows() {
        return Err(Error::NotInvertible);
    }
    let field = a.field();
    let e_inv = SparseMatrix::from_triplets(
        field,
        a.nrows(),
        a.nrows(),
        f.echelon.triplets().map(|(i, j, v)| (j, i, v.inv().expect("pivot"))),
    )?;
    let l_inv = triangular_inverse(&f.lower, TriKind::Lower)?;
    let u_inv = triangular_inverse(&f.upper, TriKind::Upper)?;
    let left = f.perm.inverse().apply_rows(&u_inv);
    Ok(&(&left * &e_inv) * &l_inv)
}
