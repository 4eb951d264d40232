//! Chain complexes given by boundary matrices, simplicial complexes, chain
//! maps, filtrations, and mapping cylinders and telescopes.

mod cylinder;
mod filtration;
mod io;
mod map;
mod simplicial;

pub use cylinder::{mapping_cylinder, mapping_telescope};
pub use filtration::FilteredComplex;
pub use io::{parse_filtration, parse_simplex_list, parse_simplicial, parse_vertex_map};
pub use map::{chain_map, CellularMap};
pub use simplicial::{build_simplicial, SimplicialComplex};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::sparse::SparseMatrix;

/// A finite chain complex: cell counts per dimension and boundary matrices
/// `d_k : C_k -> C_{k-1}`, with `d_0` the `0 x n_0` matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CellComplex {
    field: Field,
    boundaries: Vec<SparseMatrix>,
}

impl CellComplex {
    /// Validate shapes and `d_{k-1} d_k = 0`.
    pub fn new(field: Field, boundaries: Vec<SparseMatrix>) -> Result<CellComplex> {
        for (k, d) in boundaries.iter().enumerate() {
            if d.field() != field {
                return Err(Error::FieldMismatch(field, d.field()));
            }
            let want_rows = if k == 0 { 0 } else { boundaries[k - 1].ncols() };
            if d.nrows() != want_rows {
                return Err(Error::DimensionMismatch(format!(
                    "boundary {k} has {} rows, expected {want_rows}",
                    d.nrows()
                )));
            }
            if k > 0 && !(&boundaries[k - 1] * d).is_zero() {
                return Err(Error::Validation(format!("boundary of boundary is nonzero in dimension {k}")));
            }
        }
        let mut c = CellComplex { field, boundaries };
        while c.boundaries.last().is_some_and(|d| d.ncols() == 0) {
            c.boundaries.pop();
        }
        Ok(c)
    }

    pub fn empty(field: Field) -> CellComplex {
        CellComplex {
            field,
            boundaries: Vec::new(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Number of dimensions that hold cells (top dimension + 1).
    pub fn num_dims(&self) -> usize {
        self.boundaries.len()
    }

    pub fn num_cells(&self, k: usize) -> usize {
        self.boundaries.get(k).map_or(0, |d| d.ncols())
    }

    pub fn counts(&self) -> Vec<usize> {
        self.boundaries.iter().map(|d| d.ncols()).collect()
    }

    pub fn total_cells(&self) -> usize {
        self.counts().iter().sum()
    }

    /// `d_k`, padded with an empty matrix past the top dimension.
    pub fn boundary(&self, k: usize) -> SparseMatrix {
        match self.boundaries.get(k) {
            Some(d) => d.clone(),
            None => {
                let rows = if k == 0 { 0 } else { self.num_cells(k - 1) };
                SparseMatrix::zeros(self.field, rows, 0)
            }
        }
    }

    pub fn boundaries(&self) -> &[SparseMatrix] {
        &self.boundaries
    }

    /// Check `d_{k-1} d_k = 0` in every dimension.
    pub fn boundary_squared_vanishes(&self) -> bool {
        self.boundaries.windows(2).all(|w| (&w[0] * &w[1]).is_zero())
    }

    /// The subcomplex spanned by the first `counts[k]` cells of each
    /// dimension. Caller guarantees it is closed under faces.
    pub fn truncate(&self, counts: &[usize]) -> CellComplex {
        let b = (0..counts.len())
            .map(|k| {
                let rows = if k == 0 { 0 } else { counts[k - 1] };
                self.boundary(k).submatrix(0..rows, 0..counts[k])
            })
            .collect();
        let mut c = CellComplex {
            field: self.field,
            boundaries: b,
        };
        while c.boundaries.last().is_some_and(|d| d.ncols() == 0) {
            c.boundaries.pop();
        }
        c
    }
}
