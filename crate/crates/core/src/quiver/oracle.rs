//! Barcode of a one-directional quiver from ranks of composite maps.

use super::{Arrow, Interval, TypeAQuiverRep};
use crate::error::{Error, Result};
use crate::field::Scalar;

/// Rank of a dense matrix by Gaussian elimination.
fn dense_rank(mut a: Vec<Vec<Scalar>>) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else { continue };
        a.swap(rank, p);
        let inv = a[rank][c].inv().expect("nonzero");
        for r in rank + 1..rows {
            if a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] * &inv;
            for k in c..cols {
                let d = &f * &a[rank][k];
                a[r][k] = &a[r][k] - &d;
            }
        }
        rank += 1;
    }
    rank
}

fn dense_mul(a: &[Vec<Scalar>], b: &[Vec<Scalar>], zero: &Scalar) -> Vec<Vec<Scalar>> {
    let inner = b.len();
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).fold(zero.clone(), |acc, k| &acc + &(&row[k] * &b[k][j])))
                .collect()
        })
        .collect()
}

/// Bars of a quiver whose arrows all point the same way. The multiplicity
/// of `[i, j]` is `r(i,j) - r(i-1,j) - r(i,j+1) + r(i-1,j+1)` where `r(i,j)`
/// is the rank of the composite from node `i` to node `j` and terms outside
/// the quiver vanish.
pub fn persistence_rank_oracle(q: &TypeAQuiverRep) -> Result<Vec<Interval>> {
    let n = q.len();
    let backward = q.arrows().iter().all(|a| *a == Arrow::Backward) && n > 1;
    if !backward && q.arrows().contains(&Arrow::Backward) {
        return Err(Error::NotPersistenceType);
    }
    let fq = if backward { q.reversed() } else { q.clone() };
    let zero = q.field().zero();
    // r[i][j] for i <= j, 0-based
    let mut r = vec![vec![0usize; n]; n];
    for i in 0..n {
        r[i][i] = fq.dims()[i];
        let d = fq.dims()[i];
        let mut comp: Vec<Vec<Scalar>> = (0..d)
            .map(|a| (0..d).map(|b| if a == b { q.field().one() } else { zero.clone() }).collect())
            .collect();
        for j in i + 1..n {
            comp = dense_mul(&fq.mat(j - 1).to_dense(), &comp, &zero);
            r[i][j] = if comp.is_empty() || comp[0].is_empty() { 0 } else { dense_rank(comp.clone()) };
        }
    }
    let rank = |i: isize, j: usize| -> isize {
        if i < 0 || j >= n {
            0
        } else {
            r[i as usize][j] as isize
        }
    };
    let mut out = Vec::new();
    for i in 0..n {
        for j in i..n {
            let ii = i as isize;
            let mult = rank(ii, j) - rank(ii - 1, j) - rank(ii, j + 1) + rank(ii - 1, j + 1);
            debug_assert!(mult >= 0);
            for _ in 0..mult {
                let (b, d) = if backward { (n - j, n - i) } else { (i + 1, j + 1) };
                out.push(Interval {
                    birth: b,
                    death: d,
                    indices: Vec::new(),
                });
            }
        }
    }
    out.sort();
    Ok(out)
}
