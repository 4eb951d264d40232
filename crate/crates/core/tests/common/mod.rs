//! Dense brute-force oracles shared by the integration tests.
//!
//! Nothing here calls the sparse kernels or the factorizations: matrices
//! are copied out entry by entry and handled as row-major `Vec`s with plain
//! Gaussian elimination.

#![allow(dead_code)]

use std::collections::BTreeMap;

use quiverbar::complex::{CellComplex, CellularMap, FilteredComplex};
use quiverbar::{Arrow, Field, Scalar, SparseMatrix, TypeAQuiverRep};

/// Row-major dense matrix with an explicit column count (rows may be empty).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dense {
    pub field: Field,
    pub ncols: usize,
    pub rows: Vec<Vec<Scalar>>,
}

impl Dense {
    pub fn zeros(field: Field, m: usize, n: usize) -> Dense {
        Dense { field, ncols: n, rows: vec![vec![field.zero(); n]; m] }
    }

    pub fn identity(field: Field, n: usize) -> Dense {
        let mut d = Dense::zeros(field, n, n);
        for i in 0..n {
            d.rows[i][i] = field.one();
        }
        d
    }

    pub fn of(a: &SparseMatrix) -> Dense {
        let mut d = Dense::zeros(a.field(), a.nrows(), a.ncols());
        for j in 0..a.ncols() {
            for i in 0..a.nrows() {
                if let Some(v) = a.get(i, j) {
                    d.rows[i][j] = v.clone();
                }
            }
        }
        d
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn mul(&self, other: &Dense) -> Dense {
        assert_eq!(self.ncols, other.nrows(), "dense product shapes");
        let mut out = Dense::zeros(self.field, self.nrows(), other.ncols);
        for i in 0..self.nrows() {
            for k in 0..self.ncols {
                let a = &self.rows[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.ncols {
                    let b = &other.rows[k][j];
                    if !b.is_zero() {
                        out.rows[i][j] = &out.rows[i][j] + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        self.rows.iter().map(|r| r[j].clone()).collect()
    }

    pub fn cols(&self) -> Vec<Vec<Scalar>> {
        (0..self.ncols).map(|j| self.col(j)).collect()
    }

    /// The matrix with the given columns, each of height `m`.
    pub fn from_cols(field: Field, m: usize, cols: &[Vec<Scalar>]) -> Dense {
        let mut d = Dense::zeros(field, m, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), m);
            for i in 0..m {
                d.rows[i][j] = c[i].clone();
            }
        }
        d
    }

    pub fn select_cols(&self, idx: &[usize]) -> Dense {
        let cols: Vec<_> = idx.iter().map(|&j| self.col(j)).collect();
        Dense::from_cols(self.field, self.nrows(), &cols)
    }

    /// Reduced row echelon form; returns the pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.ncols {
            let Some(p) = (r..self.nrows()).find(|&i| !self.rows[i][c].is_zero()) else { continue };
            self.rows.swap(r, p);
            let inv = self.rows[r][c].inv().unwrap();
            for x in self.rows[r].iter_mut() {
                *x = &*x * &inv;
            }
            for i in 0..self.nrows() {
                if i != r && !self.rows[i][c].is_zero() {
                    let f = self.rows[i][c].clone();
                    for j in 0..self.ncols {
                        let t = &f * &self.rows[r][j];
                        self.rows[i][j] = &self.rows[i][j] - &t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// A basis of the kernel, as column vectors.
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.ncols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![self.field.zero(); self.ncols];
                v[f] = self.field.one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -&m.rows[r][f];
                }
                v
            })
            .collect()
    }
}

/// Rank of the columns `cols`, each of height `m`.
pub fn span_rank(field: Field, m: usize, cols: &[Vec<Scalar>]) -> usize {
    Dense::from_cols(field, m, cols).rank()
}

pub fn dense_rank(a: &SparseMatrix) -> usize {
    Dense::of(a).rank()
}

/// The dense product of the factors, left to right.
pub fn dense_product(factors: &[&SparseMatrix]) -> Dense {
    let mut it = factors.iter();
    let mut acc = Dense::of(it.next().unwrap());
    for f in it {
        acc = acc.mul(&Dense::of(f));
    }
    acc
}

/// Betti numbers `dim ker d_k - rank d_{k+1}` for `k < num_dims`.
pub fn betti_oracle(c: &CellComplex) -> Vec<usize> {
    (0..c.num_dims())
        .map(|k| {
            let dk = Dense::of(&c.boundary(k));
            let kernel = dk.ncols - dk.rank();
            kernel - dense_rank(&c.boundary(k + 1))
        })
        .collect()
}

/// Rank of the map induced on `H_k` by `f`: the dimension of
/// `F_k(Z_k X) + B_k Y` minus that of `B_k Y`.
pub fn induced_rank_oracle(f: &CellularMap, k: usize) -> usize {
    let field = f.source().field();
    let zx = Dense::of(&f.source().boundary(k)).nullspace();
    let fk = Dense::of(&f.chain(k));
    let m = fk.nrows();
    let images: Vec<Vec<Scalar>> = zx.iter().map(|z| fk.mul(&Dense::from_cols(field, z.len(), std::slice::from_ref(z))).col(0)).collect();
    let by = Dense::of(&f.target().boundary(k + 1)).cols();
    let both: Vec<_> = images.into_iter().chain(by.iter().cloned()).collect();
    span_rank(field, m, &both) - span_rank(field, m, &by)
}

/// Whether the column `z` lies in `B_k` of `c`.
pub fn is_boundary(c: &CellComplex, k: usize, z: &[Scalar]) -> bool {
    let field = c.field();
    let b = Dense::of(&c.boundary(k + 1)).cols();
    let mut with = b.clone();
    with.push(z.to_vec());
    span_rank(field, z.len(), &with) == span_rank(field, z.len(), &b)
}

/// Bars `(dim, birth, death)` of a filtration from the ranks of the maps
/// between prefixes, by inclusion-exclusion. Cells are 1-based positions in
/// the filtration order; a bar `[b, d)` is alive on prefixes `b..d`.
pub fn filtration_barcode_oracle(fc: &FilteredComplex, max_dim: usize) -> Vec<(usize, usize, Option<usize>)> {
    let field = fc.field();
    let n = fc.len();
    let d = Dense::of(&fc.total_boundary());
    let dims: Vec<usize> = fc.order().iter().map(|&(k, _)| k).collect();
    let mut out = Vec::new();
    for k in 0..=max_dim {
        // Cycles of the prefix of length i, and boundaries of length j.
        let cycles: Vec<Vec<Vec<Scalar>>> = (0..=n)
            .map(|i| {
                let cells: Vec<usize> = (0..i).filter(|&c| dims[c] == k).collect();
                let sub = d.select_cols(&cells);
                sub.nullspace()
                    .into_iter()
                    .map(|v| {
                        let mut full = vec![field.zero(); n];
                        for (x, &c) in v.into_iter().zip(&cells) {
                            full[c] = x;
                        }
                        full
                    })
                    .collect()
            })
            .collect();
        let bounds: Vec<Vec<Vec<Scalar>>> = (0..=n)
            .map(|j| (0..j).filter(|&c| dims[c] == k + 1).map(|c| d.col(c)).collect())
            .collect();
        let mut beta = vec![vec![0usize; n + 1]; n + 1];
        for i in 1..=n {
            for j in i..=n {
                let z = &cycles[i];
                let b = &bounds[j];
                let both: Vec<_> = z.iter().chain(b).cloned().collect();
                beta[i][j] = span_rank(field, n, &both) - span_rank(field, n, b);
            }
        }
        let at = |i: usize, j: usize| if i == 0 || j > n { 0 } else { beta[i][j] as i64 };
        for b in 1..=n {
            for dd in b + 1..=n {
                let mult = at(b, dd - 1) - at(b - 1, dd - 1) - at(b, dd) + at(b - 1, dd);
                assert!(mult >= 0, "negative multiplicity");
                out.extend(std::iter::repeat_n((k, b, Some(dd)), mult as usize));
            }
            let mult = at(b, n) - at(b - 1, n);
            assert!(mult >= 0, "negative multiplicity");
            out.extend(std::iter::repeat_n((k, b, None), mult as usize));
        }
    }
    out.sort_by_key(|&(k, b, d)| (k, b, d.is_none(), d));
    out
}

/// Rank of the canonical map from the limit to the colimit of the
/// restriction of `q` to nodes `i..=j` (0-based). It counts the interval
/// summands whose support contains `i..=j`.
fn lim_colim_rank(q: &TypeAQuiverRep, i: usize, j: usize) -> usize {
    let field = q.field();
    let dims = q.dims();
    let mut off = vec![0; j - i + 2];
    for v in i..=j {
        off[v - i + 1] = off[v - i] + dims[v];
    }
    let total = off[j - i + 1];
    if total == 0 {
        return 0;
    }
    // `(src, dst, A)` with `A: V_src -> V_dst`.
    let edges: Vec<(usize, usize, Dense)> = (i..j)
        .map(|e| {
            let a = Dense::of(q.mat(e));
            match q.arrows()[e] {
                Arrow::Forward => (e, e + 1, a),
                Arrow::Backward => (e + 1, e, a),
            }
        })
        .collect();
    // Limit: tuples with `A x_src = x_dst` on every edge.
    let mut cons = Dense::zeros(field, 0, total);
    for (s, t, a) in &edges {
        for r in 0..dims[*t] {
            let mut row = vec![field.zero(); total];
            for c in 0..dims[*s] {
                row[off[s - i] + c] = a.rows[r][c].clone();
            }
            row[off[t - i] + r] = &row[off[t - i] + r] - &field.one();
            cons.rows.push(row);
        }
    }
    let lim = cons.nullspace();
    // Colimit relations: `x_src ~ A x_src` for each basis vector of the source.
    let mut rel = Vec::new();
    for (s, t, a) in &edges {
        for c in 0..dims[*s] {
            let mut v = vec![field.zero(); total];
            v[off[s - i] + c] = field.one();
            for r in 0..dims[*t] {
                v[off[t - i] + r] = &v[off[t - i] + r] - &a.rows[r][c];
            }
            rel.push(v);
        }
    }
    // A limit element goes to the class of its component at node `i`.
    let image: Vec<Vec<Scalar>> = lim
        .iter()
        .map(|t| {
            let mut v = vec![field.zero(); total];
            v[..dims[i]].clone_from_slice(&t[..dims[i]]);
            v
        })
        .collect();
    let both: Vec<_> = image.into_iter().chain(rel.iter().cloned()).collect();
    span_rank(field, total, &both) - span_rank(field, total, &rel)
}

/// Interval multiplicities of any type-A quiver as 1-based closed
/// `(birth, death)` pairs, sorted.
pub fn zigzag_oracle(q: &TypeAQuiverRep) -> Vec<(usize, usize)> {
    let n = q.len();
    let mut rk = BTreeMap::new();
    for i in 0..n {
        for j in i..n {
            rk.insert((i, j), lim_colim_rank(q, i, j) as i64);
        }
    }
    let at = |i: isize, j: usize| -> i64 {
        if i < 0 || j >= n {
            0
        } else {
            rk[&(i as usize, j)]
        }
    };
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            let m = at(i as isize, j) - at(i as isize - 1, j) - at(i as isize, j + 1) + at(i as isize - 1, j + 1);
            assert!(m >= 0, "negative multiplicity");
            out.extend(std::iter::repeat_n((i + 1, j + 1), m as usize));
        }
    }
    out
}

/// Random simplicial maps `X -> Y -> Z`, each target holding every image
/// simplex plus some extra simplices of its own.
pub fn composable_maps(
    g: &mut quiverbar::random::TestRng,
    field: Field,
) -> (CellularMap, CellularMap) {
    use quiverbar::random;
    use rand::Rng;
    let nx = g.gen_range(1..7);
    let count = g.gen_range(0..8);
    let x = random::simplicial(g, field, nx, count, 2);
    let ny = g.gen_range(1..7);
    let vf = random::vertex_map(g, &x, ny);
    let count = g.gen_range(0..8);
    let extra = random::simplicial(g, field, ny, count, 2);
    let y = random::image_complex(field, &x, &vf, &extra);
    let nz = g.gen_range(1..7);
    let vg = random::vertex_map(g, &y, nz);
    let count = g.gen_range(0..8);
    let extra = random::simplicial(g, field, nz, count, 2);
    let z = random::image_complex(field, &y, &vg, &extra);
    let f = CellularMap::from_vertex_map(&x, &y, &vf).expect("images present");
    let h = CellularMap::from_vertex_map(&y, &z, &vg).expect("images present");
    (f, h)
}
