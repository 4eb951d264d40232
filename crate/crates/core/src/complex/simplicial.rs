//! Simplicial complexes with the alternating-sign boundary.

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use super::CellComplex;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::sparse::SparseMatrix;

/// A simplicial complex: simplices stored as sorted vertex tuples, listed in
/// lexicographic order within each dimension.
#[derive(Clone, Debug)]
pub struct SimplicialComplex {
    complex: Arc<CellComplex>,
    simplices: Vec<Vec<Vec<usize>>>,
    index: Vec<HashMap<Vec<usize>, usize>>,
}

/// Close `simplices` under faces and build the boundary matrices.
///
/// Vertex order within a tuple does not matter. Listing the same simplex
/// twice is an error; listing a face of another listed simplex is not.
pub fn build_simplicial(field: Field, simplices: &[Vec<usize>]) -> Result<SimplicialComplex> {
    let mut listed = BTreeSet::new();
    let mut all: Vec<BTreeSet<Vec<usize>>> = Vec::new();
    for s in simplices {
        let mut s = s.clone();
        s.sort_unstable();
        if s.is_empty() || s.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Validation(format!("{s:?} is not a simplex on distinct vertices")));
        }
        if !listed.insert(s.clone()) {
            return Err(Error::DuplicateSimplex(s));
        }
        add_closure(&mut all, s);
    }
    Ok(SimplicialComplex::from_sorted_sets(field, all))
}

fn add_closure(all: &mut Vec<BTreeSet<Vec<usize>>>, s: Vec<usize>) {
    let k = s.len() - 1;
    while all.len() <= k {
        all.push(BTreeSet::new());
    }
    if all[k].contains(&s) {
        return;
    }
    if k > 0 {
        for i in 0..=k {
            let mut face = s.clone();
            face.remove(i);
            add_closure(all, face);
        }
    }
    all[k].insert(s);
}

/// Sign `(-1)^i` as a field element.
fn sign(field: Field, i: usize) -> Scalar {
    Scalar::sign(field, i % 2 == 1)
}

impl SimplicialComplex {
    fn from_sorted_sets(field: Field, all: Vec<BTreeSet<Vec<usize>>>) -> SimplicialComplex {
        let simplices: Vec<Vec<Vec<usize>>> = all.into_iter().map(|s| s.into_iter().collect()).collect();
        let index: Vec<HashMap<Vec<usize>, usize>> = simplices
            .iter()
            .map(|l| l.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
            .collect();
        let mut boundaries = Vec::with_capacity(simplices.len());
        for (k, list) in simplices.iter().enumerate() {
            if k == 0 {
                boundaries.push(SparseMatrix::zeros(field, 0, list.len()));
                continue;
            }
            let trip = list.iter().enumerate().flat_map(|(j, s)| {
                let index = &index;
                (0..=k).map(move |i| {
                    let mut face = s.clone();
                    face.remove(i);
                    (index[k - 1][&face], j, sign(field, i))
                })
            });
            boundaries.push(SparseMatrix::from_triplets(field, simplices[k - 1].len(), list.len(), trip).expect("faces indexed"));
        }
        let complex = CellComplex::new(field, boundaries).expect("simplicial boundary squares to zero");
        SimplicialComplex {
            complex: Arc::new(complex),
            simplices,
            index,
        }
    }

    pub fn complex(&self) -> &CellComplex {
        &self.complex
    }

    pub fn complex_arc(&self) -> Arc<CellComplex> {
        Arc::clone(&self.complex)
    }

    pub fn field(&self) -> Field {
        self.complex.field()
    }

    /// The `k`-simplices in lexicographic order.
    pub fn simplices(&self, k: usize) -> &[Vec<usize>] {
        self.simplices.get(k).map_or(&[], |v| v.as_slice())
    }

    pub fn num_dims(&self) -> usize {
        self.simplices.len()
    }

    /// Position of a sorted simplex within its dimension.
    pub fn index_of(&self, s: &[usize]) -> Option<usize> {
        let k = s.len().checked_sub(1)?;
        self.index.get(k)?.get(s).copied()
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.simplices(0).iter().map(|s| s[0]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge() {
        let f = Field::Q;
        let x = build_simplicial(f, &[vec![0], vec![1], vec![0, 1]]).unwrap();
        assert_eq!(x.complex().boundary(1), SparseMatrix::from_dense(f, &[vec![-1], vec![1]]));
    }

    #[test]
    fn triangle_closure() {
        let f = Field::Fp(3);
        let x = build_simplicial(f, &[vec![2, 0, 1]]).unwrap();
        assert_eq!(x.complex().counts(), vec![3, 3, 1]);
        assert!(x.complex().boundary_squared_vanishes());
        assert_eq!(x.simplices(1), &[vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(x.index_of(&[0, 2]), Some(1));
    }

    #[test]
    fn empty_and_duplicates() {
        let x = build_simplicial(Field::F2, &[]).unwrap();
        assert_eq!(x.complex().num_dims(), 0);
        assert_eq!(x.complex().boundary(0).shape(), (0, 0));
        assert_eq!(
            build_simplicial(Field::F2, &[vec![0, 1], vec![1, 0]]).unwrap_err(),
            Error::DuplicateSimplex(vec![0, 1])
        );
        assert!(build_simplicial(Field::F2, &[vec![1, 1]]).is_err());
    }
}
