//! Column-major sparse matrices over a [`Field`], with shape predicates,
//! permutations and triangular solves.
//!
//! Indices are 0-based in the Rust API. Text formats and reported bars are
//! 1-based.

mod io;
mod perm;
mod reduce;
mod shape;
mod solve;

pub use io::{parse_matrix, write_matrix};
pub(crate) use io::{collect_entries, parse_header_dims, strip};
pub use perm::{apply_permutation, Axis, Permutation};
pub use reduce::{reduce_columns, ColumnReduction};
pub use shape::ShapeKind;
pub use solve::{solve, solve_triangular, triangular_inverse, Side, TriKind};

use std::ops::Mul;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

/// A sparse vector: strictly increasing indices, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVec {
    entries: Vec<(usize, Scalar)>,
}

impl SparseVec {
    pub fn new() -> SparseVec {
        SparseVec::default()
    }

    /// `e_i` scaled by one.
    pub fn unit(field: Field, i: usize) -> SparseVec {
        SparseVec {
            entries: vec![(i, field.one())],
        }
    }

    /// Build from arbitrary entries; duplicates are summed and zeros dropped.
    pub fn from_entries(mut entries: Vec<(usize, Scalar)>) -> SparseVec {
        entries.sort_by_key(|e| e.0);
        let mut out: Vec<(usize, Scalar)> = Vec::with_capacity(entries.len());
        for (i, v) in entries {
            match out.last_mut() {
                Some((j, w)) if *j == i => *w = &*w + &v,
                _ => out.push((i, v)),
            }
        }
        out.retain(|e| !e.1.is_zero());
        SparseVec { entries: out }
    }

    pub fn from_dense(values: &[Scalar]) -> SparseVec {
        SparseVec {
            entries: values
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(i, v)| (i, v.clone()))
                .collect(),
        }
    }

    /// Append an entry past the current last index. Zeros are ignored.
    pub fn push(&mut self, i: usize, v: Scalar) {
        debug_assert!(self.entries.last().is_none_or(|e| e.0 < i));
        if !v.is_zero() {
            self.entries.push((i, v));
        }
    }

    pub fn entries(&self) -> &[(usize, Scalar)] {
        &self.entries
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (usize, &Scalar)> + '_ {
        self.entries.iter().map(|(i, v)| (*i, v))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&Scalar> {
        self.entries
            .binary_search_by_key(&i, |e| e.0)
            .ok()
            .map(|k| &self.entries[k].1)
    }

    /// Remove and return entry `i`.
    pub fn remove(&mut self, i: usize) -> Option<Scalar> {
        let k = self.entries.binary_search_by_key(&i, |e| e.0).ok()?;
        Some(self.entries.remove(k).1)
    }

    /// Largest index with a nonzero entry.
    pub fn pivot(&self) -> Option<usize> {
        self.entries.last().map(|e| e.0)
    }

    pub fn last(&self) -> Option<(usize, &Scalar)> {
        self.entries.last().map(|(i, v)| (*i, v))
    }

    /// Largest stored index strictly below `bound`.
    pub fn last_below(&self, bound: usize) -> Option<usize> {
        let k = self.entries.partition_point(|e| e.0 < bound);
        k.checked_sub(1).map(|k| self.entries[k].0)
    }

    /// `self += alpha * x`.
    pub fn axpy(&mut self, alpha: &Scalar, x: &SparseVec) {
        if alpha.is_zero() || x.is_empty() {
            return;
        }
        let mut out = Vec::with_capacity(self.entries.len() + x.entries.len());
        let mut a = std::mem::take(&mut self.entries).into_iter().peekable();
        let mut b = x.entries.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (Some(&(i, _)), Some(&&(j, _))) if i == j => {
                    let (_, u) = a.next().unwrap();
                    let (_, w) = b.next().unwrap();
                    let s = &u + &(alpha * w);
                    if !s.is_zero() {
                        out.push((i, s));
                    }
                }
                (Some(&(i, _)), Some(&&(j, _))) if i < j => out.push(a.next().unwrap()),
                (Some(_), None) => out.push(a.next().unwrap()),
                (_, Some(_)) => {
                    let (j, w) = b.next().unwrap();
                    out.push((*j, alpha * w));
                }
                (None, None) => break,
            }
        }
        self.entries = out;
    }

    pub fn scale(&self, alpha: &Scalar) -> SparseVec {
        if alpha.is_zero() {
            return SparseVec::new();
        }
        SparseVec {
            entries: self.entries.iter().map(|(i, v)| (*i, v * alpha)).collect(),
        }
    }

    /// Dot product with another sparse vector.
    pub fn dot(&self, other: &SparseVec, field: Field) -> Scalar {
        let mut acc = field.zero();
        let (mut p, mut q) = (0, 0);
        while p < self.entries.len() && q < other.entries.len() {
            let (i, j) = (self.entries[p].0, other.entries[q].0);
            if i == j {
                acc = &acc + &(&self.entries[p].1 * &other.entries[q].1);
                p += 1;
                q += 1;
            } else if i < j {
                p += 1;
            } else {
                q += 1;
            }
        }
        acc
    }

    /// Reindex through `map` (entry `i` moves to `map[i]`).
    pub fn reindex(&self, map: &[usize]) -> SparseVec {
        let mut entries: Vec<_> = self.entries.iter().map(|(i, v)| (map[*i], v.clone())).collect();
        entries.sort_by_key(|e| e.0);
        SparseVec { entries }
    }

    pub fn to_dense(&self, len: usize, field: Field) -> Vec<Scalar> {
        let mut out = vec![field.zero(); len];
        for (i, v) in &self.entries {
            out[*i] = v.clone();
        }
        out
    }
}

/// A column-major sparse matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparseMatrix {
    nrows: usize,
    ncols: usize,
    field: Field,
    cols: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn zeros(field: Field, nrows: usize, ncols: usize) -> SparseMatrix {
        SparseMatrix {
            nrows,
            ncols,
            field,
            cols: vec![SparseVec::new(); ncols],
        }
    }

    pub fn identity(field: Field, n: usize) -> SparseMatrix {
        SparseMatrix {
            nrows: n,
            ncols: n,
            field,
            cols: (0..n).map(|i| SparseVec::unit(field, i)).collect(),
        }
    }

    /// The exchange matrix: ones on the anti-diagonal.
    pub fn exchange(field: Field, n: usize) -> SparseMatrix {
        SparseMatrix {
            nrows: n,
            ncols: n,
            field,
            cols: (0..n).map(|j| SparseVec::unit(field, n - 1 - j)).collect(),
        }
    }

    pub fn from_columns(field: Field, nrows: usize, cols: Vec<SparseVec>) -> Result<SparseMatrix> {
        for c in &cols {
            if c.pivot().is_some_and(|p| p >= nrows) {
                return Err(Error::DimensionMismatch(format!(
                    "row index out of range for {nrows} rows"
                )));
            }
            if let Some((_, v)) = c.entries.iter().find(|(_, v)| v.field() != field) {
                return Err(Error::FieldMismatch(field, v.field()));
            }
        }
        Ok(SparseMatrix {
            nrows,
            ncols: cols.len(),
            field,
            cols,
        })
    }

    /// Assemble from `(row, col, value)` triplets; duplicates are summed.
    pub fn from_triplets(
        field: Field,
        nrows: usize,
        ncols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<SparseMatrix> {
        let mut buckets: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); ncols];
        for (i, j, v) in triplets {
            if i >= nrows || j >= ncols {
                return Err(Error::DimensionMismatch(format!(
                    "entry ({i}, {j}) outside {nrows}x{ncols}"
                )));
            }
            if v.field() != field {
                return Err(Error::FieldMismatch(field, v.field()));
            }
            buckets[j].push((i, v));
        }
        Ok(SparseMatrix {
            nrows,
            ncols,
            field,
            cols: buckets.into_iter().map(SparseVec::from_entries).collect(),
        })
    }

    /// Dense integer rows mapped into `field`. Handy for small literals.
    pub fn from_dense(field: Field, rows: &[Vec<i64>]) -> SparseMatrix {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let triplets = rows.iter().enumerate().flat_map(|(i, r)| {
            assert_eq!(r.len(), ncols, "ragged rows");
            r.iter().enumerate().map(move |(j, v)| (i, j, field.from_i64(*v)))
        });
        SparseMatrix::from_triplets(field, nrows, ncols, triplets).expect("in range")
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.nrows, self.ncols)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn col(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn cols(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn into_cols(self) -> Vec<SparseVec> {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&Scalar> {
        self.cols[j].get(i)
    }

    /// Entry `(i, j)`, zero if absent.
    pub fn at(&self, i: usize, j: usize) -> Scalar {
        self.get(i, j).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(SparseVec::nnz).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(SparseVec::is_empty)
    }

    pub fn is_square(&self) -> bool {
        self.nrows == self.ncols
    }

    /// Column-major iterator over `(row, col, value)`.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(j, c)| c.iter().map(move |(i, v)| (i, j, v)))
    }

    /// The rows as sparse vectors indexed by column.
    pub fn rows(&self) -> Vec<SparseVec> {
        let mut rows = vec![SparseVec::new(); self.nrows];
        for (i, j, v) in self.triplets() {
            rows[i].entries.push((j, v.clone()));
        }
        rows
    }

    pub fn transpose(&self) -> SparseMatrix {
        SparseMatrix {
            nrows: self.ncols,
            ncols: self.nrows,
            field: self.field,
            cols: self.rows(),
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let mut out = vec![vec![self.field.zero(); self.ncols]; self.nrows];
        for (i, j, v) in self.triplets() {
            out[i][j] = v.clone();
        }
        out
    }

    fn same_field(&self, other: &SparseMatrix) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.field, other.field))
        }
    }

    pub fn matmul(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.same_field(other)?;
        if self.ncols != other.nrows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows, self.ncols, other.nrows, other.ncols
            )));
        }
        let mut acc: Vec<Option<Scalar>> = vec![None; self.nrows];
        let mut touched = Vec::new();
        let cols = other
            .cols
            .iter()
            .map(|bcol| {
                for (k, b) in bcol.iter() {
                    for (i, a) in self.cols[k].iter() {
                        let t = a * b;
                        match &mut acc[i] {
                            Some(s) => *s = &*s + &t,
                            slot @ None => {
                                *slot = Some(t);
                                touched.push(i);
                            }
                        }
                    }
                }
                touched.sort_unstable();
                let mut col = SparseVec::new();
                for i in touched.drain(..) {
                    let v = acc[i].take().unwrap();
                    col.push(i, v);
                }
                col
            })
            .collect();
        Ok(SparseMatrix {
            nrows: self.nrows,
            ncols: other.ncols,
            field: self.field,
            cols,
        })
    }

    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (k, b) in v.iter() {
            out.axpy(b, &self.cols[k]);
        }
        out
    }

    pub fn add(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.same_field(other)?;
        if self.shape() != other.shape() {
            return Err(Error::DimensionMismatch("cannot add matrices of different shapes".into()));
        }
        let one = self.field.one();
        let cols = self
            .cols
            .iter()
            .zip(&other.cols)
            .map(|(a, b)| {
                let mut c = a.clone();
                c.axpy(&one, b);
                c
            })
            .collect();
        Ok(SparseMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            field: self.field,
            cols,
        })
    }

    pub fn sub(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.add(&other.scale(&-&self.field.one()))
    }

    pub fn scale(&self, alpha: &Scalar) -> SparseMatrix {
        SparseMatrix {
            cols: self.cols.iter().map(|c| c.scale(alpha)).collect(),
            nrows: self.nrows,
            ncols: self.ncols,
            field: self.field,
        }
    }

    fn map_entries(&self, nrows: usize, ncols: usize, f: impl Fn(usize, usize) -> (usize, usize)) -> SparseMatrix {
        let t = self.triplets().map(|(i, j, v)| {
            let (a, b) = f(i, j);
            (a, b, v.clone())
        });
        SparseMatrix::from_triplets(self.field, nrows, ncols, t).expect("in range")
    }

    /// `J A J` for square `A`.
    pub fn j_conjugate(&self) -> Result<SparseMatrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "J conjugation needs a square matrix, got {}x{}",
                self.nrows, self.ncols
            )));
        }
        Ok(self.reverse_both())
    }

    /// `J_m A J_n`: reverse both row and column order.
    pub fn reverse_both(&self) -> SparseMatrix {
        let (m, n) = self.shape();
        self.map_entries(m, n, |i, j| (m - 1 - i, n - 1 - j))
    }

    /// `J A`.
    pub fn reverse_rows(&self) -> SparseMatrix {
        let (m, n) = self.shape();
        self.map_entries(m, n, |i, j| (m - 1 - i, j))
    }

    /// `A J`.
    pub fn reverse_cols(&self) -> SparseMatrix {
        let (m, n) = self.shape();
        self.map_entries(m, n, |i, j| (i, n - 1 - j))
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &SparseMatrix) -> Result<SparseMatrix> {
        self.same_field(other)?;
        let (m, n) = self.shape();
        let t = self
            .triplets()
            .map(|(i, j, v)| (i, j, v.clone()))
            .chain(other.triplets().map(|(i, j, v)| (i + m, j + n, v.clone())));
        SparseMatrix::from_triplets(self.field, m + other.nrows, n + other.ncols, t)
    }

    /// The matrix with entries `(i, j)` in `[r0, r1) x [c0, c1)`, shifted to the origin.
    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> SparseMatrix {
        let c = cols
            .clone()
            .map(|j| {
                let mut v = SparseVec::new();
                for (i, x) in self.cols[j].iter() {
                    if rows.contains(&i) {
                        v.push(i - rows.start, x.clone());
                    }
                }
                v
            })
            .collect();
        SparseMatrix {
            nrows: rows.len(),
            ncols: cols.len(),
            field: self.field,
            cols: c,
        }
    }
}

impl Mul<&SparseMatrix> for &SparseMatrix {
    type Output = SparseMatrix;

    /// Panics on a dimension or field mismatch; use [`SparseMatrix::matmul`]
    /// for a checked product.
    fn mul(self, rhs: &SparseMatrix) -> SparseMatrix {
        self.matmul(rhs).expect("incompatible matrix product")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_exchange_products() {
        let f = Field::Fp(5);
        let a = SparseMatrix::from_dense(f, &[vec![1, 2, 0], vec![0, 3, 4], vec![0, 0, 0]]);
        assert_eq!(&SparseMatrix::identity(f, 3) * &a, a);
        let j = SparseMatrix::exchange(f, 3);
        assert_eq!(&j * &j, SparseMatrix::identity(f, 3));
        assert_eq!(&(&j * &a) * &j, a.j_conjugate().unwrap());
        assert_eq!(&j * &a, a.reverse_rows());
        assert_eq!(&a * &j, a.reverse_cols());
    }

    #[test]
    fn pivot_product_example() {
        let f = Field::F2;
        let q2 = SparseMatrix::from_dense(f, &[vec![0, 0], vec![1, 0]]);
        let q1 = SparseMatrix::from_dense(f, &[vec![0, 1], vec![0, 0]]);
        let p = &q2 * &q1;
        assert_eq!(p, SparseMatrix::from_dense(f, &[vec![0, 0], vec![0, 1]]));
        assert!(p.is_pivot());
    }

    #[test]
    fn mismatches() {
        let a = SparseMatrix::zeros(Field::F2, 2, 3);
        assert!(matches!(a.matmul(&a), Err(Error::DimensionMismatch(_))));
        let b = SparseMatrix::zeros(Field::Q, 3, 2);
        assert!(matches!(a.matmul(&b), Err(Error::FieldMismatch(..))));
        assert!(a.j_conjugate().is_err());
    }

    #[test]
    fn axpy_cancels() {
        let f = Field::Fp(3);
        let mut v = SparseVec::from_entries(vec![(0, f.one()), (2, f.from_i64(2))]);
        let w = SparseVec::from_entries(vec![(2, f.one()), (3, f.one())]);
        v.axpy(&f.one(), &w);
        assert_eq!(v.entries(), &[(0, f.one()), (3, f.one())]);
        assert_eq!(v.last_below(3), Some(0));
        assert_eq!(v.last_below(0), None);
    }

    #[test]
    fn zero_sized() {
        let f = Field::Q;
        let a = SparseMatrix::zeros(f, 0, 3);
        let b = SparseMatrix::zeros(f, 3, 0);
        assert_eq!(&b * &a, SparseMatrix::zeros(f, 3, 3));
        assert_eq!(&a * &b, SparseMatrix::zeros(f, 0, 0));
    }
}
