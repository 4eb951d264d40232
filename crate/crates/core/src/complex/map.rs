//! Chain maps between cell complexes.

use std::collections::BTreeMap;
use std::sync::Arc;

use super::{CellComplex, SimplicialComplex};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::sparse::SparseMatrix;

/// A chain map `F : C -> D`, one matrix `F_k` (`|D_k| x |C_k|`) per
/// dimension of `C`.
#[derive(Clone, Debug)]
pub struct CellularMap {
    source: Arc<CellComplex>,
    target: Arc<CellComplex>,
    chain: Vec<SparseMatrix>,
}

impl CellularMap {
    /// Check sizes and `F_{k-1} d_k = d_k F_k` in every dimension.
    pub fn from_chain_matrices(
        source: Arc<CellComplex>,
        target: Arc<CellComplex>,
        mut chain: Vec<SparseMatrix>,
    ) -> Result<CellularMap> {
        let field = source.field();
        if target.field() != field {
            return Err(Error::FieldMismatch(field, target.field()));
        }
        while chain.len() < source.num_dims() {
            let k = chain.len();
            chain.push(SparseMatrix::zeros(field, target.num_cells(k), 0));
        }
        for (k, f) in chain.iter().enumerate() {
            if f.shape() != (target.num_cells(k), source.num_cells(k)) {
                return Err(Error::DimensionMismatch(format!(
                    "chain matrix {k} is {}x{}, expected {}x{}",
                    f.nrows(),
                    f.ncols(),
                    target.num_cells(k),
                    source.num_cells(k)
                )));
            }
        }
        let map = CellularMap { source, target, chain };
        for k in 1..map.chain.len() {
            let lhs = &map.chain(k - 1) * &map.source.boundary(k);
            let rhs = &map.target.boundary(k) * &map.chain(k);
            if lhs != rhs {
                return Err(Error::ChainMapViolation(k));
            }
        }
        Ok(map)
    }

    /// The chain map of a simplicial map given on vertices. A simplex whose
    /// image has a repeated vertex maps to zero; otherwise it maps to the
    /// sorted image with the sign of the sorting permutation.
    pub fn from_vertex_map(
        source: &SimplicialComplex,
        target: &SimplicialComplex,
        vmap: &BTreeMap<usize, usize>,
    ) -> Result<CellularMap> {
        let field = source.field();
        let mut chain = Vec::with_capacity(source.num_dims());
        for k in 0..source.num_dims() {
            let mut trip = Vec::new();
            for (j, s) in source.simplices(k).iter().enumerate() {
                let mut img = Vec::with_capacity(s.len());
                for v in s {
                    let w = vmap
                        .get(v)
                        .ok_or_else(|| Error::Validation(format!("vertex {v} has no image")))?;
                    img.push(*w);
                }
                let odd = inversions(&img) % 2 == 1;
                img.sort_unstable();
                if img.windows(2).any(|w| w[0] == w[1]) {
                    continue;
                }
                let i = target.index_of(&img).ok_or(Error::ImageSimplexMissing(img))?;
                trip.push((i, j, Scalar::sign(field, odd)));
            }
            chain.push(SparseMatrix::from_triplets(
                field,
                target.simplices(k).len(),
                source.simplices(k).len(),
                trip,
            )?);
        }
        CellularMap::from_chain_matrices(source.complex_arc(), target.complex_arc(), chain)
    }

    pub fn identity(c: Arc<CellComplex>) -> CellularMap {
        let chain = c
            .counts()
            .iter()
            .map(|&n| SparseMatrix::identity(c.field(), n))
            .collect();
        CellularMap {
            source: Arc::clone(&c),
            target: c,
            chain,
        }
    }

    pub fn source(&self) -> &Arc<CellComplex> {
        &self.source
    }

    pub fn target(&self) -> &Arc<CellComplex> {
        &self.target
    }

    /// `F_k`, zero past the top dimension of the source.
    pub fn chain(&self, k: usize) -> SparseMatrix {
        match self.chain.get(k) {
            Some(f) => f.clone(),
            None => SparseMatrix::zeros(self.source.field(), self.target.num_cells(k), 0),
        }
    }

    pub fn chains(&self) -> &[SparseMatrix] {
        &self.chain
    }

    /// `g . self`.
    pub fn then(&self, g: &CellularMap) -> Result<CellularMap> {
        if *g.source != *self.target {
            return Err(Error::DimensionMismatch("maps are not composable".into()));
        }
        let chain = (0..self.chain.len()).map(|k| &g.chain(k) * &self.chain[k]).collect();
        Ok(CellularMap {
            source: Arc::clone(&self.source),
            target: Arc::clone(&g.target),
            chain,
        })
    }
}

/// The matrix of `f` in dimension `k`.
pub fn chain_map(f: &CellularMap, k: usize) -> SparseMatrix {
    f.chain(k)
}

fn inversions(s: &[usize]) -> usize {
    let mut n = 0;
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if s[i] > s[j] {
                n += 1;
            }
        }
    }
    n
}
