//! Seeded generators for tests and benchmarks.

use std::collections::BTreeMap;

use rand::seq::{index, SliceRandom};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::complex::{build_simplicial, FilteredComplex, SimplicialComplex};
use crate::field::{Field, Scalar};
use crate::quiver::{Arrow, TypeAQuiverRep};
use crate::sparse::{Permutation, ShapeKind, SparseMatrix};

pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly chosen element for finite fields; a small fraction for `Q`.
pub fn scalar(rng: &mut impl Rng, field: Field) -> Scalar {
    match field {
        Field::Q => {
            let num = rng.gen_range(-4i64..=4);
            let den = rng.gen_range(1i64..=3);
            field.from_ratio(&num.into(), &den.into()).expect("nonzero denominator")
        }
        _ => field.from_i64(rng.gen_range(0..field.characteristic() as i64)),
    }
}

pub fn nonzero_scalar(rng: &mut impl Rng, field: Field) -> Scalar {
    loop {
        let s = scalar(rng, field);
        if !s.is_zero() {
            return s;
        }
    }
}

/// Each entry nonzero with probability `density`.
pub fn matrix(rng: &mut impl Rng, field: Field, m: usize, n: usize, density: f64) -> SparseMatrix {
    let mut trip = Vec::new();
    for j in 0..n {
        for i in 0..m {
            if rng.gen_bool(density) {
                trip.push((i, j, nonzero_scalar(rng, field)));
            }
        }
    }
    SparseMatrix::from_triplets(field, m, n, trip).expect("in range")
}

/// A product of rank-`r` factors, so the rank is at most `r`.
pub fn low_rank(rng: &mut impl Rng, field: Field, m: usize, n: usize, r: usize) -> SparseMatrix {
    let a = matrix(rng, field, m, r, 0.7);
    let b = matrix(rng, field, r, n, 0.7);
    &a * &b
}

pub fn permutation(rng: &mut impl Rng, n: usize) -> Permutation {
    let mut map: Vec<usize> = (0..n).collect();
    map.shuffle(rng);
    Permutation::from_map(map).expect("shuffle is a permutation")
}

fn unit_triangular(rng: &mut impl Rng, field: Field, n: usize, lower: bool) -> SparseMatrix {
    let mut trip: Vec<_> = (0..n).map(|i| (i, i, field.one())).collect();
    for i in 0..n {
        for j in 0..i {
            if rng.gen_bool(0.5) {
                let (r, c) = if lower { (i, j) } else { (j, i) };
                trip.push((r, c, nonzero_scalar(rng, field)));
            }
        }
    }
    SparseMatrix::from_triplets(field, n, n, trip).expect("in range")
}

/// `L D U P` with random unit triangular `L`, `U`, nonzero diagonal `D`
/// and permutation `P`.
pub fn invertible(rng: &mut impl Rng, field: Field, n: usize) -> SparseMatrix {
    let l = unit_triangular(rng, field, n, true);
    let u = unit_triangular(rng, field, n, false);
    let d = SparseMatrix::from_triplets(field, n, n, (0..n).map(|i| (i, i, nonzero_scalar(rng, field)))).expect("in range");
    let p = permutation(rng, n);
    p.apply_cols(&(&(&l * &d) * &u))
}

/// A random `m x n` pivot matrix of rank `r` with nonzero pivot values.
pub fn pivot_matrix(rng: &mut impl Rng, field: Field, m: usize, n: usize, r: usize) -> SparseMatrix {
    let r = r.min(m).min(n);
    let rows = index::sample(rng, m, r).into_vec();
    let cols = index::sample(rng, n, r).into_vec();
    let trip = rows.into_iter().zip(cols).map(|(i, j)| (i, j, nonzero_scalar(rng, field)));
    SparseMatrix::from_triplets(field, m, n, trip).expect("in range")
}

/// A random rank-`r` matrix of the given echelon shape (`EL`, `EU`,
/// `ELhat` or `EUhat`).
pub fn echelon(rng: &mut impl Rng, field: Field, m: usize, n: usize, r: usize, shape: ShapeKind) -> SparseMatrix {
    let r = r.min(m).min(n);
    match shape {
        ShapeKind::EL => random_el(rng, field, m, n, r),
        ShapeKind::EU => random_el(rng, field, n, m, r).transpose(),
        ShapeKind::EUhat => random_el(rng, field, m, n, r).reverse_both(),
        ShapeKind::ELhat => random_el(rng, field, n, m, r).transpose().reverse_both(),
        other => panic!("{other:?} is not an echelon shape"),
    }
}

/// `E_L`: increasing pivot rows in the first `r` columns.
fn random_el(rng: &mut impl Rng, field: Field, m: usize, n: usize, r: usize) -> SparseMatrix {
    let mut rows = index::sample(rng, m, r).into_vec();
    rows.sort_unstable();
    let trip: Vec<_> = rows.into_iter().enumerate().map(|(j, i)| (i, j, nonzero_scalar(rng, field))).collect();
    SparseMatrix::from_triplets(field, m, n, trip).expect("in range")
}

/// A random quiver. Arrow directions are drawn with `p_forward`.
pub fn quiver(rng: &mut impl Rng, field: Field, n: usize, max_dim: usize, p_forward: f64) -> TypeAQuiverRep {
    let arrows: Vec<Arrow> = (1..n)
        .map(|_| if rng.gen_bool(p_forward) { Arrow::Forward } else { Arrow::Backward })
        .collect();
    quiver_with_arrows(rng, field, &arrows, max_dim)
}

/// A random quiver with the given arrows. Matrices mix full random entries
/// with low-rank products so that bars of every length occur.
pub fn quiver_with_arrows(rng: &mut impl Rng, field: Field, arrows: &[Arrow], max_dim: usize) -> TypeAQuiverRep {
    let n = arrows.len() + 1;
    let dims: Vec<usize> = (0..n).map(|_| rng.gen_range(0..=max_dim)).collect();
    let mats = arrows
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let (r, c) = match a {
                Arrow::Forward => (dims[i + 1], dims[i]),
                Arrow::Backward => (dims[i], dims[i + 1]),
            };
            match rng.gen_range(0..3) {
                0 => matrix(rng, field, r, c, 0.5),
                1 => {
                    let k = rng.gen_range(0..=r.min(c));
                    low_rank(rng, field, r, c, k)
                }
                _ => pivot_matrix(rng, field, r, c, r.min(c)),
            }
        })
        .collect();
    TypeAQuiverRep::new(field, dims, arrows.to_vec(), mats).expect("shapes match")
}

/// A random basis change at every node.
pub fn conjugate(rng: &mut impl Rng, q: &TypeAQuiverRep) -> TypeAQuiverRep {
    let mut out = q.clone();
    for (v, &d) in q.dims().iter().enumerate() {
        let m = invertible(rng, q.field(), d);
        out = out.pass_through_node(v, &m).expect("invertible");
    }
    out
}

/// A random simplicial complex on `vertices` vertices: random simplices of
/// dimension up to `max_dim`, closed under faces.
pub fn simplicial(rng: &mut impl Rng, field: Field, vertices: usize, count: usize, max_dim: usize) -> SimplicialComplex {
    let mut chosen = std::collections::BTreeSet::new();
    for v in 0..vertices {
        chosen.insert(vec![v]);
    }
    for _ in 0..count {
        let k = rng.gen_range(1..=max_dim.min(vertices.saturating_sub(1)).max(1));
        if k + 1 > vertices {
            continue;
        }
        let mut s = index::sample(rng, vertices, k + 1).into_vec();
        s.sort_unstable();
        chosen.insert(s);
    }
    let list: Vec<Vec<usize>> = chosen.into_iter().collect();
    build_simplicial(field, &list).expect("distinct simplices")
}

/// A random map from the vertices of `src` to `0..dst_vertices`. Pair with
/// [`image_complex`] to get a target containing every image simplex.
pub fn vertex_map(
    rng: &mut impl Rng,
    src: &SimplicialComplex,
    dst_vertices: usize,
) -> BTreeMap<usize, usize> {
    src.vertices().into_iter().map(|v| (v, rng.gen_range(0..dst_vertices))).collect()
}

/// The image closure of `src` under `vmap` together with the simplices of `extra`.
pub fn image_complex(
    field: Field,
    src: &SimplicialComplex,
    vmap: &BTreeMap<usize, usize>,
    extra: &SimplicialComplex,
) -> SimplicialComplex {
    let mut all = std::collections::BTreeSet::new();
    for k in 0..src.num_dims() {
        for s in src.simplices(k) {
            let mut img: Vec<usize> = s.iter().map(|v| vmap[v]).collect();
            img.sort_unstable();
            img.dedup();
            all.insert(img);
        }
    }
    for k in 0..extra.num_dims() {
        all.extend(extra.simplices(k).iter().cloned());
    }
    let list: Vec<Vec<usize>> = all.into_iter().collect();
    build_simplicial(field, &list).expect("distinct simplices")
}

/// A random filtration: a random complex with values assigned so that
/// faces never come after cofaces.
pub fn filtration(rng: &mut impl Rng, field: Field, vertices: usize, count: usize, max_dim: usize) -> FilteredComplex {
    let x = simplicial(rng, field, vertices, count, max_dim);
    let mut value: BTreeMap<Vec<usize>, f64> = BTreeMap::new();
    for k in 0..x.num_dims() {
        for s in x.simplices(k) {
            let floor = if k == 0 {
                0.0
            } else {
                (0..s.len())
                    .map(|i| {
                        let mut f = s.clone();
                        f.remove(i);
                        value[&f]
                    })
                    .fold(0.0, f64::max)
            };
            value.insert(s.clone(), floor + rng.gen_range(0..3) as f64);
        }
    }
    let entries: Vec<(f64, Vec<usize>)> = value.into_iter().map(|(s, v)| (v, s)).collect();
    FilteredComplex::from_simplices(field, &entries).expect("monotone values")
}
