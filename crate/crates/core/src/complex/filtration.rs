//! Filtered complexes: every cell carries a real value, and the cells are
//! added in order of (value, dimension, index).

use std::collections::BTreeMap;

use super::{build_simplicial, CellComplex};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::sparse::{Permutation, SparseMatrix};

#[derive(Clone, Debug)]
pub struct FilteredComplex {
    complex: CellComplex,
    values: Vec<Vec<f64>>,
    labels: Vec<Vec<String>>,
    /// Cells as `(dim, index)` in filtration order.
    order: Vec<(usize, usize)>,
    position: Vec<Vec<usize>>,
}

impl FilteredComplex {
    /// Filter `complex` by per-cell `values`. Within a dimension, cells are
    /// stably re-sorted by value, so equal values keep their given order.
    /// A cell whose face carries a larger value is rejected.
    pub fn from_cells(
        complex: CellComplex,
        values: Vec<Vec<f64>>,
        labels: Option<Vec<Vec<String>>>,
    ) -> Result<FilteredComplex> {
        let counts = complex.counts();
        if values.len() != counts.len() || values.iter().zip(&counts).any(|(v, n)| v.len() != *n) {
            return Err(Error::DimensionMismatch("one value per cell required".into()));
        }
        if values.iter().flatten().any(|v| v.is_nan()) {
            return Err(Error::Validation("filtration value is NaN".into()));
        }
        let labels = match labels {
            Some(l) => {
                if l.len() != counts.len() || l.iter().zip(&counts).any(|(v, n)| v.len() != *n) {
                    return Err(Error::DimensionMismatch("one label per cell required".into()));
                }
                l
            }
            None => counts
                .iter()
                .enumerate()
                .map(|(k, &n)| (0..n).map(|i| format!("cell {k}:{}", i + 1)).collect())
                .collect(),
        };

        // perm[k][new] = old
        let perms: Vec<Vec<usize>> = values
            .iter()
            .map(|v| {
                let mut idx: Vec<usize> = (0..v.len()).collect();
                idx.sort_by(|&a, &b| v[a].total_cmp(&v[b]));
                idx
            })
            .collect();
        let new_of_old: Vec<Permutation> = perms
            .iter()
            .map(|p| {
                let mut inv = vec![0; p.len()];
                for (new, &old) in p.iter().enumerate() {
                    inv[old] = new;
                }
                Permutation::from_map(inv).expect("sorting yields a permutation")
            })
            .collect();
        let mut boundaries = Vec::with_capacity(counts.len());
        for k in 0..counts.len() {
            // P e_old = e_new: rows via P, columns via P^{-1} on the right.
            let d = complex.boundary(k);
            let d = if k > 0 { new_of_old[k - 1].apply_rows(&d) } else { d };
            boundaries.push(new_of_old[k].inverse().apply_cols(&d));
        }
        let complex = CellComplex::new(complex.field(), boundaries)?;
        let values: Vec<Vec<f64>> = values.iter().zip(&perms).map(|(v, p)| p.iter().map(|&o| v[o]).collect()).collect();
        let labels: Vec<Vec<String>> = labels
            .into_iter()
            .zip(&perms)
            .map(|(l, p)| p.iter().map(|&o| l[o].clone()).collect())
            .collect();

        for k in 1..counts.len() {
            let d = complex.boundary(k);
            for (j, col) in d.cols().iter().enumerate() {
                for (i, _) in col.iter() {
                    if values[k - 1][i] > values[k][j] {
                        return Err(Error::Validation(format!(
                            "{} appears at {} before its face {} at {}",
                            labels[k][j],
                            values[k][j],
                            labels[k - 1][i],
                            values[k - 1][i]
                        )));
                    }
                }
            }
        }

        let mut order: Vec<(usize, usize)> = (0..counts.len()).flat_map(|k| (0..counts[k]).map(move |i| (k, i))).collect();
        order.sort_by(|&(ka, ia), &(kb, ib)| values[ka][ia].total_cmp(&values[kb][ib]).then(ka.cmp(&kb)).then(ia.cmp(&ib)));
        let mut position: Vec<Vec<usize>> = counts.iter().map(|&n| vec![0; n]).collect();
        for (t, &(k, i)) in order.iter().enumerate() {
            position[k][i] = t;
        }
        Ok(FilteredComplex {
            complex,
            values,
            labels,
            order,
            position,
        })
    }

    /// A filtered simplicial complex from `(value, simplex)` pairs. Every
    /// face of a listed simplex must itself be listed, with a value no
    /// larger. Simplices with equal value and dimension are ordered
    /// lexicographically.
    pub fn from_simplices(field: Field, entries: &[(f64, Vec<usize>)]) -> Result<FilteredComplex> {
        let mut value_of: BTreeMap<Vec<usize>, f64> = BTreeMap::new();
        let mut sorted = Vec::with_capacity(entries.len());
        for (v, s) in entries {
            let mut s = s.clone();
            s.sort_unstable();
            if value_of.insert(s.clone(), *v).is_some() {
                return Err(Error::DuplicateSimplex(s));
            }
            sorted.push(s);
        }
        for s in &sorted {
            if s.len() < 2 {
                continue;
            }
            for i in 0..s.len() {
                let mut face = s.clone();
                face.remove(i);
                if !value_of.contains_key(&face) {
                    return Err(Error::Validation(format!(
                        "face {} of simplex {} is not in the filtration",
                        fmt_simplex(&face),
                        fmt_simplex(s)
                    )));
                }
            }
        }
        let x = build_simplicial(field, &sorted)?;
        let values: Vec<Vec<f64>> = (0..x.num_dims()).map(|k| x.simplices(k).iter().map(|s| value_of[s]).collect()).collect();
        let labels = (0..x.num_dims()).map(|k| x.simplices(k).iter().map(|s| fmt_simplex(s)).collect()).collect();
        FilteredComplex::from_cells(x.complex().clone(), values, Some(labels))
    }

    pub fn complex(&self) -> &CellComplex {
        &self.complex
    }

    pub fn field(&self) -> Field {
        self.complex.field()
    }

    /// Total number of cells.
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    pub fn value(&self, dim: usize, idx: usize) -> f64 {
        self.values[dim][idx]
    }

    pub fn label(&self, dim: usize, idx: usize) -> &str {
        &self.labels[dim][idx]
    }

    /// Cells as `(dim, index)` in filtration order.
    pub fn order(&self) -> &[(usize, usize)] {
        &self.order
    }

    /// Position of a cell in the filtration order (0-based).
    pub fn position(&self, dim: usize, idx: usize) -> usize {
        self.position[dim][idx]
    }

    /// Value of the `t`-th cell in filtration order (0-based).
    pub fn value_at(&self, t: usize) -> f64 {
        let (k, i) = self.order[t];
        self.values[k][i]
    }

    /// Per-dimension cell counts after the first `t` cells have been added.
    /// Within a dimension cells enter in index order, so each prefix is an
    /// initial segment.
    pub fn prefix_counts(&self, t: usize) -> Vec<usize> {
        let mut counts = vec![0; self.complex.num_dims()];
        for &(k, _) in &self.order[..t] {
            counts[k] += 1;
        }
        counts
    }

    /// The subcomplex formed by the first `t` cells.
    pub fn prefix(&self, t: usize) -> CellComplex {
        self.complex.truncate(&self.prefix_counts(t))
    }

    /// The full boundary matrix with rows and columns in filtration order.
    pub fn total_boundary(&self) -> SparseMatrix {
        let n = self.len();
        let mut trip = Vec::new();
        for k in 1..self.complex.num_dims() {
            let d = self.complex.boundary(k);
            for (i, j, v) in d.triplets() {
                trip.push((self.position[k - 1][i], self.position[k][j], v.clone()));
            }
        }
        SparseMatrix::from_triplets(self.field(), n, n, trip).expect("positions in range")
    }
}

fn fmt_simplex(s: &[usize]) -> String {
    let parts: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("[{}]", parts.join(","))
}
