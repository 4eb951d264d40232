mod common;

use common::{dense_product, dense_rank, Dense};
use proptest::prelude::*;
use quiverbar::factor::{
    commute_perm_blocktri, commute_shape, factorize, lqu, pivot_to_echelon, EchelonTarget, FactorKind, Relation,
};
use quiverbar::random::{self, TestRng};
use quiverbar::{Field, Permutation, ShapeKind, SparseMatrix};
use rand::Rng;

const FIELDS: [Field; 3] = [Field::F2, Field::Fp(5), Field::Q];

fn any_matrix(g: &mut TestRng, field: Field, max: usize) -> SparseMatrix {
    let m = g.gen_range(0..=max);
    let n = g.gen_range(0..=max);
    if g.gen_bool(0.5) {
        let d = g.gen_range(0.05..0.6);
        random::matrix(g, field, m, n, d)
    } else {
        let r = g.gen_range(0..=m.min(n));
        random::low_rank(g, field, m, n, r)
    }
}

/// Lower (or upper) triangular with a nonzero diagonal.
fn triangular(g: &mut TestRng, field: Field, n: usize, lower: bool) -> SparseMatrix {
    let mut trip = Vec::new();
    for i in 0..n {
        trip.push((i, i, random::nonzero_scalar(g, field)));
        for j in 0..i {
            if g.gen_bool(0.4) {
                let (r, c) = if lower { (i, j) } else { (j, i) };
                trip.push((r, c, random::nonzero_scalar(g, field)));
            }
        }
    }
    SparseMatrix::from_triplets(field, n, n, trip).unwrap()
}

#[test]
fn factorizations_reconstruct_and_count_rank() {
    let mut g = random::rng(11);
    for case in 0..120 {
        let field = FIELDS[case % 3];
        let a = any_matrix(&mut g, field, 14);
        let rank = dense_rank(&a);
        for kind in FactorKind::ALL {
            let f = factorize(&a, kind);
            let [w, x, y, z] = f.factors();
            assert_eq!(dense_product(&[&w, &x, &y, &z]), Dense::of(&a), "{kind:?} case {case}");
            assert!(f.shapes_ok(), "{kind:?} case {case}");
            assert!(f.perm.to_matrix(field).is_permutation());
            assert_eq!(f.echelon.nnz(), rank, "{kind:?} case {case}");
        }
        let q = lqu(&a);
        assert_eq!(dense_product(&[&q.l, &q.q, &q.u]), Dense::of(&a), "lqu case {case}");
        assert!(q.l.is_unit_lower() && q.u.is_unit_upper() && q.q.is_pivot());
        assert_eq!(q.q.nnz(), rank);
    }
}

#[test]
fn degenerate_shapes() {
    for (m, n) in [(0, 0), (0, 3), (4, 0), (3, 3)] {
        let a = SparseMatrix::zeros(Field::Fp(7), m, n);
        for kind in FactorKind::ALL {
            let f = factorize(&a, kind);
            assert_eq!(f.product(), a);
            assert_eq!(f.lower, SparseMatrix::identity(Field::Fp(7), f.lower.nrows()));
            assert_eq!(f.upper, SparseMatrix::identity(Field::Fp(7), f.upper.nrows()));
            assert!(f.perm.is_identity());
        }
    }
}

#[test]
fn lqu_of_invertible_is_a_permutation_pattern() {
    let mut g = random::rng(12);
    for case in 0..60 {
        let field = FIELDS[case % 3];
        let n = g.gen_range(1..9);
        let a = random::invertible(&mut g, field, n);
        let q = lqu(&a).q;
        assert_eq!(q.nnz(), n);
        assert!(q.is_pivot());
        assert!(q.cols().iter().all(|c| c.nnz() == 1));
    }
}

#[test]
fn shape_commutations_keep_products() {
    let mut g = random::rng(13);
    for relation in Relation::ALL {
        for case in 0..60 {
            let field = FIELDS[case % 3];
            let (m, n) = (g.gen_range(0..8), g.gen_range(0..8));
            let r = g.gen_range(0..=m.min(n));
            let (shape, t_dim, lower) = match relation {
                Relation::ElL => (ShapeKind::EL, n, true),
                Relation::LElhat => (ShapeKind::ELhat, m, true),
                Relation::UEu => (ShapeKind::EU, m, false),
                Relation::EuhatU => (ShapeKind::EUhat, n, false),
            };
            let e = random::echelon(&mut g, field, m, n, r, shape);
            let t = triangular(&mut g, field, t_dim, lower);
            let (t2, e2) = commute_shape(&e, &t, relation).unwrap();
            assert_eq!(e2, e);
            let (before, after) = match relation {
                Relation::ElL | Relation::EuhatU => (dense_product(&[&e, &t]), dense_product(&[&t2, &e])),
                Relation::LElhat | Relation::UEu => (dense_product(&[&t, &e]), dense_product(&[&e, &t2])),
            };
            assert_eq!(before, after, "{relation:?} case {case}");
            assert!(if lower { t2.is_lower() } else { t2.is_upper() });
            assert_eq!(dense_rank(&t2), t2.nrows(), "{relation:?} produced a singular factor");
        }
    }
}

#[test]
fn shape_commutation_rejects_wrong_echelon() {
    let f = Field::F2;
    let not_el = SparseMatrix::from_dense(f, &[vec![0, 1], vec![0, 0]]);
    assert!(commute_shape(&not_el, &SparseMatrix::identity(f, 2), Relation::ElL).is_err());
}

#[test]
fn pivot_splittings_reconstruct() {
    let mut g = random::rng(14);
    for case in 0..80 {
        let field = FIELDS[case % 3];
        let (m, n) = (g.gen_range(0..9), g.gen_range(0..9));
        let r = g.gen_range(0..=m.min(n));
        let q = random::pivot_matrix(&mut g, field, m, n, r);
        for target in EchelonTarget::ALL {
            let (x, y) = pivot_to_echelon(&q, target).unwrap();
            assert_eq!(dense_product(&[&x, &y]), Dense::of(&q), "{target:?}");
            let (p, e) = if target.perm_on_left() { (&x, &y) } else { (&y, &x) };
            assert!(p.is_permutation());
            let shape = match target {
                EchelonTarget::ElP => ShapeKind::EL,
                EchelonTarget::PEu => ShapeKind::EU,
                EchelonTarget::EuhatP => ShapeKind::EUhat,
                EchelonTarget::PElhat => ShapeKind::ELhat,
            };
            assert!(e.has_shape(shape), "{target:?}");
        }
    }
}

#[test]
fn block_triangular_permutation_swap() {
    let mut g = random::rng(15);
    for case in 0..40 {
        let field = FIELDS[case % 3];
        let (a, b) = (g.gen_range(0..4), g.gen_range(0..4));
        let u12 = random::matrix(&mut g, field, a, b, 0.6);
        let t = SparseMatrix::identity(field, a)
            .direct_sum(&SparseMatrix::identity(field, b))
            .unwrap()
            .add(&SparseMatrix::from_triplets(field, a + b, a + b, u12.triplets().map(|(i, j, v)| (i, a + j, v.clone()))).unwrap())
            .unwrap();
        let p = random::permutation(&mut g, b);
        let full = Permutation::from_map((0..a).chain(p.map().iter().map(|&i| a + i)).collect()).unwrap();
        let pm = full.to_matrix(field);
        let (x, y) = commute_perm_blocktri(&p, &t).unwrap();
        assert_eq!(y, pm);
        assert_eq!(dense_product(&[&pm, &t]), dense_product(&[&x, &y]), "case {case}");
        // Only the off-diagonal block moves.
        assert_eq!(x.submatrix(0..a, 0..a), t.submatrix(0..a, 0..a));
        assert_eq!(x.submatrix(a..a + b, 0..a + b), t.submatrix(a..a + b, 0..a + b));
    }
}

fn small_matrix(field: Field) -> impl Strategy<Value = SparseMatrix> {
    (0usize..6, 0usize..6, any::<u64>()).prop_map(move |(m, n, seed)| {
        let mut g = random::rng(seed);
        random::matrix(&mut g, field, m, n, 0.5)
    })
}

proptest! {
    #[test]
    fn sparse_product_matches_dense(a in small_matrix(Field::Fp(3)), seed in any::<u64>()) {
        let mut g = random::rng(seed);
        let n = g.gen_range(0..6);
        let b = random::matrix(&mut g, Field::Fp(3), a.ncols(), n, 0.5);
        prop_assert_eq!(Dense::of(&(&a * &b)), Dense::of(&a).mul(&Dense::of(&b)));
    }

    #[test]
    fn rank_nullity(a in small_matrix(Field::Q)) {
        let kernel = Dense::of(&a).nullspace().len();
        prop_assert_eq!(quiverbar::factor::rank(&a) + kernel, a.ncols());
    }

    #[test]
    fn exchange_conjugation_flips_triangles(seed in any::<u64>(), n in 0usize..8) {
        let mut g = random::rng(seed);
        let l = triangular(&mut g, Field::F2, n, true);
        let j = SparseMatrix::exchange(Field::F2, n);
        prop_assert!((&(&j * &l) * &j).is_upper());
        prop_assert_eq!(l.j_conjugate().unwrap(), &(&j * &l) * &j);
        let r = g.gen_range(0..=n);
        let e = random::echelon(&mut g, Field::F2, n, n, r, ShapeKind::EL);
        prop_assert!((&(&j * &e) * &j).is_euhat());
    }
}
