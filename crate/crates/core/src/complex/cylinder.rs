//! Mapping cylinders and telescopes as explicit cell complexes.
//!
//! For `f : X -> Y`, the `k`-cells of the cylinder are `X_k`, `Y_k` and
//! `X_{k-1} x I`, in that order, with
//!
//! ```text
//!         | dX_k    0     -I         |
//!   d_k = | 0       dY_k  F_{k-1}    |
//!         | 0       0     -dX_{k-1}  |
//! ```
//!
//! A telescope strings cylinders together: the ends `X_0, ..., X_r` come
//! first, then the cylinder cells `X_i x I` for each map.

use super::{CellComplex, CellularMap, FilteredComplex};
use crate::error::{Error, Result};
use crate::sparse::SparseMatrix;

/// The cylinder of `f`, with `X` at value 0 and everything else at 1.
pub fn mapping_cylinder(f: &CellularMap) -> Result<FilteredComplex> {
    mapping_telescope(std::slice::from_ref(f))
}

/// The telescope of `X_0 -> X_1 -> ... -> X_r`. `X_0` enters at value 0;
/// `X_{i+1}` and the cylinder of the `i`-th map enter at `i + 1`.
pub fn mapping_telescope(maps: &[CellularMap]) -> Result<FilteredComplex> {
    let Some(first) = maps.first() else {
        return Err(Error::Validation("telescope needs at least one map".into()));
    };
    for (i, w) in maps.windows(2).enumerate() {
        if *w[0].target() != *w[1].source() {
            return Err(Error::NotComposable(i, i + 1));
        }
    }
    let field = first.source().field();
    let mut spaces: Vec<&CellComplex> = maps.iter().map(|m| m.source().as_ref()).collect();
    spaces.push(maps.last().unwrap().target().as_ref());
    let top = spaces.iter().map(|x| x.num_dims()).max().unwrap_or(0);
    let ndims = if maps.iter().any(|m| m.source().num_dims() > 0) { top + 1 } else { top };

    // offsets[k][block] for blocks: ends 0..=r, then cylinders 0..r.
    let r = maps.len();
    let mut offsets = vec![Vec::new(); ndims];
    let mut counts = vec![0; ndims];
    for k in 0..ndims {
        for x in &spaces {
            offsets[k].push(counts[k]);
            counts[k] += x.num_cells(k);
        }
        for m in maps {
            offsets[k].push(counts[k]);
            counts[k] += if k == 0 { 0 } else { m.source().num_cells(k - 1) };
        }
    }

    let one = field.one();
    let neg = -&one;
    let mut boundaries = Vec::with_capacity(ndims);
    let mut values = Vec::with_capacity(ndims);
    let mut labels = Vec::with_capacity(ndims);
    for k in 0..ndims {
        let rows = if k == 0 { 0 } else { counts[k - 1] };
        let mut trip = Vec::new();
        let mut vals = Vec::with_capacity(counts[k]);
        let mut labs = Vec::with_capacity(counts[k]);
        for (i, x) in spaces.iter().enumerate() {
            if k > 0 {
                let (ro, co) = (offsets[k - 1][i], offsets[k][i]);
                trip.extend(x.boundary(k).triplets().map(|(a, b, v)| (ro + a, co + b, v.clone())));
            }
            vals.extend(std::iter::repeat_n(i as f64, x.num_cells(k)));
            labs.extend((0..x.num_cells(k)).map(|c| format!("X{i}:{k}:{}", c + 1)));
        }
        if k > 0 {
            for (i, m) in maps.iter().enumerate() {
                let co = offsets[k][r + 1 + i];
                let n = m.source().num_cells(k - 1);
                // -x on the source end
                let src = offsets[k - 1][i];
                trip.extend((0..n).map(|c| (src + c, co + c, neg.clone())));
                // F(x) on the target end
                let dst = offsets[k - 1][i + 1];
                trip.extend(m.chain(k - 1).triplets().map(|(a, b, v)| (dst + a, co + b, v.clone())));
                // -(dx) x I
                if k > 1 {
                    let cyl = offsets[k - 1][r + 1 + i];
                    trip.extend(m.source().boundary(k - 1).triplets().map(|(a, b, v)| (cyl + a, co + b, -v)));
                }
                vals.extend(std::iter::repeat_n((i + 1) as f64, n));
                labs.extend((0..n).map(|c| format!("X{i}xI:{}:{}", k - 1, c + 1)));
            }
        }
        boundaries.push(SparseMatrix::from_triplets(field, rows, counts[k], trip)?);
        values.push(vals);
        labels.push(labs);
    }
    while boundaries.last().is_some_and(|d| d.ncols() == 0) {
        boundaries.pop();
        values.pop();
        labels.pop();
    }
    let complex = CellComplex::new(field, boundaries)?;
    FilteredComplex::from_cells(complex, values, Some(labels))
}
