//! Boundary reduction, homology-revealing bases, induced maps on homology,
//! and persistence barcodes of filtrations.

mod barcode;

pub use barcode::{Bar, Barcode};

use std::sync::OnceLock;

use crate::complex::{CellComplex, CellularMap, FilteredComplex};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::sparse::{reduce_columns, solve_triangular, Side, SparseMatrix, SparseVec, TriKind};

/// `D U = R` with `U` unit upper triangular and the nonzero columns of `R`
/// having distinct pivots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedBoundary {
    pub r: SparseMatrix,
    pub u: SparseMatrix,
    /// Row index -> the column of `R` whose pivot it is.
    pub pivot_lookup: Vec<Option<usize>>,
}

/// Reduce the columns of `d` left to right.
pub fn reduce(d: &SparseMatrix) -> ReducedBoundary {
    let field = d.field();
    let red = reduce_columns(d);
    ReducedBoundary {
        r: SparseMatrix::from_columns(field, d.nrows(), red.r).expect("same height"),
        u: SparseMatrix::from_columns(field, d.ncols(), red.v).expect("square"),
        pivot_lookup: red.pivot_col,
    }
}

impl ReducedBoundary {
    pub fn is_zero_col(&self, j: usize) -> bool {
        self.r.col(j).is_empty()
    }

    pub fn rank(&self) -> usize {
        self.pivot_lookup.iter().filter(|p| p.is_some()).count()
    }
}

/// Per-dimension bases `U_k` with index sets `I_k` of the columns that
/// represent homology classes.
#[derive(Debug)]
pub struct HomologyBasis {
    field: Field,
    max_dim: usize,
    /// Reductions of `d_k` for `k = 0..=max_dim + 1`.
    reductions: Vec<ReducedBoundary>,
    index: Vec<Vec<usize>>,
    /// `U_k^{-1} R_{k+1}`, built on first use.
    boundary_coords: Vec<OnceLock<Vec<SparseVec>>>,
}

/// Reduce every boundary up to `max_dim + 1` and pick the columns of `U_k`
/// that are cycles but not boundaries.
pub fn homology_basis(c: &CellComplex, max_dim: usize) -> HomologyBasis {
    let reductions: Vec<ReducedBoundary> = (0..=max_dim + 1).map(|k| reduce(&c.boundary(k))).collect();
    let index = (0..=max_dim)
        .map(|k| {
            (0..c.num_cells(k))
                .filter(|&j| reductions[k].is_zero_col(j) && reductions[k + 1].pivot_lookup[j].is_none())
                .collect()
        })
        .collect();
    HomologyBasis {
        field: c.field(),
        max_dim,
        reductions,
        index,
        boundary_coords: (0..=max_dim).map(|_| OnceLock::new()).collect(),
    }
}

impl HomologyBasis {
    pub fn field(&self) -> Field {
        self.field
    }

    pub fn max_dim(&self) -> usize {
        self.max_dim
    }

    pub fn betti(&self, k: usize) -> usize {
        self.index.get(k).map_or(0, |i| i.len())
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        self.index.iter().map(|i| i.len()).collect()
    }

    /// `I_k`: columns of `U_k` that are preferred representatives.
    pub fn index_set(&self, k: usize) -> &[usize] {
        &self.index[k]
    }

    /// The reduction of `d_k`.
    pub fn reduction(&self, k: usize) -> &ReducedBoundary {
        &self.reductions[k]
    }

    pub fn num_cells(&self, k: usize) -> usize {
        self.reductions[k].u.ncols()
    }

    /// Representative cycles, one column per class.
    pub fn representatives(&self, k: usize) -> SparseMatrix {
        let u = &self.reductions[k].u;
        let cols = self.index[k].iter().map(|&j| u.col(j).clone()).collect();
        SparseMatrix::from_columns(self.field, u.nrows(), cols).expect("same height")
    }

    fn boundary_coords(&self, k: usize) -> &[SparseVec] {
        self.boundary_coords[k].get_or_init(|| {
            let u = &self.reductions[k].u;
            self.reductions[k + 1]
                .r
                .cols()
                .iter()
                .map(|r| solve_triangular(u, r, Side::Left, TriKind::Upper).expect("unit triangular"))
                .collect()
        })
    }

    /// Coordinates in the basis `I_k` of the class of the cycle `z`.
    pub fn class_of(&self, k: usize, z: &SparseVec) -> Result<SparseVec> {
        let red = &self.reductions[k];
        let mut y = solve_triangular(&red.u, z, Side::Left, TriKind::Upper)?;
        let lookup = &self.reductions[k + 1].pivot_lookup;
        let coords = self.boundary_coords(k);
        loop {
            let Some((p, c)) = y.iter().rev().find_map(|(i, _)| lookup[i].map(|c| (i, c))) else {
                break;
            };
            let col = &coords[c];
            let alpha = y.get(p).unwrap().try_div(col.get(p).expect("pivot entry"))?;
            y.axpy(&-&alpha, col);
        }
        let idx = &self.index[k];
        let mut out = Vec::new();
        for (i, v) in y.iter() {
            match idx.binary_search(&i) {
                Ok(pos) => out.push((pos, v.clone())),
                Err(_) => return Err(Error::ChainMapViolation(k)),
            }
        }
        Ok(SparseVec::from_entries(out))
    }
}

/// The matrix of `H_k(f)` in the bases of `src` and `dst`.
pub fn induced_map(f: &CellularMap, k: usize, src: &HomologyBasis, dst: &HomologyBasis) -> Result<SparseMatrix> {
    if k > src.max_dim || k > dst.max_dim {
        return Err(Error::DimensionMismatch(format!("dimension {k} beyond the computed bases")));
    }
    let fk = f.chain(k);
    if fk.ncols() != src.num_cells(k) || fk.nrows() != dst.num_cells(k) {
        return Err(Error::DimensionMismatch(format!("map and bases disagree in dimension {k}")));
    }
    let reps = src.representatives(k);
    let cols = reps
        .cols()
        .iter()
        .map(|x| dst.class_of(k, &fk.mul_vec(x)))
        .collect::<Result<Vec<_>>>()?;
    SparseMatrix::from_columns(src.field, dst.betti(k), cols)
}

/// Pair creators with destroyers in one reduction of the filtration-ordered
/// boundary. Indices are 1-based positions in the filtration order.
pub fn persistence_barcode(fc: &FilteredComplex, max_dim: usize) -> Barcode {
    let red = reduce_columns(&fc.total_boundary());
    let mut bars = Vec::new();
    for (j, &(dim, _)) in fc.order().iter().enumerate() {
        if dim > max_dim || !red.r[j].is_empty() {
            continue;
        }
        bars.push(Bar {
            dim,
            birth: j + 1,
            death: red.pivot_col[j].map(|c| c + 1),
        });
    }
    Barcode::new(bars)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::build_simplicial;
    use std::collections::BTreeMap;

    #[test]
    fn single_edge_already_reduced() {
        let f = Field::Q;
        let d = SparseMatrix::from_dense(f, &[vec![-1], vec![1]]);
        let r = reduce(&d);
        assert_eq!(r.r, d);
        assert_eq!(r.u, SparseMatrix::identity(f, 1));
        let z = reduce(&SparseMatrix::zeros(f, 3, 2));
        assert_eq!(z.u, SparseMatrix::identity(f, 2));
    }

    #[test]
    fn triangle_betti() {
        let f = Field::F2;
        let hollow = build_simplicial(f, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        assert_eq!(homology_basis(hollow.complex(), 1).betti_numbers(), vec![1, 1]);
        let filled = build_simplicial(f, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(homology_basis(filled.complex(), 2).betti_numbers(), vec![1, 0, 0]);
    }

    #[test]
    fn edge_swap_induces_identity_on_h0() {
        let f = Field::Q;
        let x = build_simplicial(f, &[vec![0, 1]]).unwrap();
        let m = CellularMap::from_vertex_map(&x, &x, &BTreeMap::from([(0, 1), (1, 0)])).unwrap();
        let b = homology_basis(x.complex(), 1);
        assert_eq!(induced_map(&m, 0, &b, &b).unwrap(), SparseMatrix::identity(f, 1));
    }

    #[test]
    fn rotation_of_hollow_triangle() {
        let f = Field::Fp(7);
        let x = build_simplicial(f, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        let m = CellularMap::from_vertex_map(&x, &x, &BTreeMap::from([(0, 1), (1, 2), (2, 0)])).unwrap();
        let b = homology_basis(x.complex(), 1);
        assert_eq!(induced_map(&m, 1, &b, &b).unwrap(), SparseMatrix::identity(f, 1));
    }

    #[test]
    fn filled_triangle_persistence() {
        let fc = FilteredComplex::from_simplices(
            Field::F2,
            &[
                (0.0, vec![0]),
                (0.0, vec![1]),
                (0.0, vec![2]),
                (1.0, vec![0, 1]),
                (1.0, vec![0, 2]),
                (1.0, vec![1, 2]),
                (2.0, vec![0, 1, 2]),
            ],
        )
        .unwrap();
        let bc = persistence_barcode(&fc, 1);
        let want = vec![
            Bar { dim: 0, birth: 1, death: None },
            Bar { dim: 0, birth: 2, death: Some(4) },
            Bar { dim: 0, birth: 3, death: Some(5) },
            Bar { dim: 1, birth: 6, death: Some(7) },
        ];
        assert_eq!(bc.bars(), want.as_slice());
    }
}
