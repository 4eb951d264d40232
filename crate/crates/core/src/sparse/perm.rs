//! Permutations stored as index arrays.

use super::{SparseMatrix, SparseVec};
use crate::error::{Error, Result};
use crate::field::Field;

/// The permutation matrix `P` with `P e_i = e_{map[i]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    map: Vec<usize>,
}

/// Which index set a permutation acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    /// `P * A`
    Rows,
    /// `A * P`
    Cols,
}

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation { map: (0..n).collect() }
    }

    /// The index reversal, whose matrix is `J`.
    pub fn reversal(n: usize) -> Permutation {
        Permutation {
            map: (0..n).rev().collect(),
        }
    }

    pub fn from_map(map: Vec<usize>) -> Result<Permutation> {
        let mut seen = vec![false; map.len()];
        for &i in &map {
            if i >= map.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Validation(format!("{map:?} is not a bijection")));
            }
        }
        Ok(Permutation { map })
    }

    /// Read a permutation off a permutation matrix.
    pub fn from_matrix(p: &SparseMatrix) -> Result<Permutation> {
        if !p.is_permutation() {
            return Err(Error::ShapeViolation("not a permutation matrix".into()));
        }
        Ok(Permutation {
            map: p.cols().iter().map(|c| c.entries()[0].0).collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn image(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.map.len()];
        for (i, &j) in self.map.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { map: inv }
    }

    /// The product `self * other` as matrices.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            map: other.map.iter().map(|&j| self.map[j]).collect(),
        }
    }

    pub fn to_matrix(&self, field: Field) -> SparseMatrix {
        let cols = self.map.iter().map(|&i| SparseVec::unit(field, i)).collect();
        SparseMatrix::from_columns(field, self.map.len(), cols).expect("valid permutation")
    }

    /// `P * A`: row `i` of `A` becomes row `map[i]`.
    pub fn apply_rows(&self, a: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.len(), a.nrows(), "permutation size");
        let cols = a.cols().iter().map(|c| c.reindex(&self.map)).collect();
        SparseMatrix::from_columns(a.field(), a.nrows(), cols).expect("same shape")
    }

    /// `A * P`: column `j` of the result is column `map[j]` of `A`.
    pub fn apply_cols(&self, a: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.len(), a.ncols(), "permutation size");
        let cols = self.map.iter().map(|&j| a.col(j).clone()).collect();
        SparseMatrix::from_columns(a.field(), a.nrows(), cols).expect("same shape")
    }
}

/// Permute the rows (`P * A`) or columns (`A * P`) of `a`.
pub fn apply_permutation(p: &Permutation, a: &SparseMatrix, axis: Axis) -> Result<SparseMatrix> {
    let n = match axis {
        Axis::Rows => a.nrows(),
        Axis::Cols => a.ncols(),
    };
    if p.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "permutation of size {} acting on dimension {n}",
            p.len()
        )));
    }
    Ok(match axis {
        Axis::Rows => p.apply_rows(a),
        Axis::Cols => p.apply_cols(a),
    })
}
