mod common;

use std::collections::BTreeMap;

use common::{composable_maps, dense_product, induced_rank_oracle, Dense};
use quiverbar::complex::{build_simplicial, mapping_cylinder, mapping_telescope, CellularMap, FilteredComplex};
use quiverbar::homology::persistence_barcode;
use quiverbar::random;
use quiverbar::Field;

const FIELDS: [Field; 3] = [Field::F2, Field::Fp(5), Field::Q];

/// Bars of the cylinder born among the cells at value 0 that never die.
fn spanning(fc: &FilteredComplex, k: usize) -> usize {
    persistence_barcode(fc, k)
        .in_dim(k)
        .filter(|b| fc.value_at(b.birth - 1) == 0.0 && b.death.is_none())
        .count()
}

#[test]
fn cylinders_and_telescopes_are_complexes() {
    let mut g = random::rng(41);
    for case in 0..40 {
        let field = FIELDS[case % 3];
        let (f, h) = composable_maps(&mut g, field);
        let cyl = mapping_cylinder(&f).unwrap();
        assert!(cyl.complex().boundary_squared_vanishes(), "case {case}");
        let tel = mapping_telescope(&[f, h]).unwrap();
        assert!(tel.complex().boundary_squared_vanishes(), "case {case}");
    }
}

#[test]
fn spanning_cylinder_bars_count_the_induced_rank() {
    let mut g = random::rng(42);
    for case in 0..40 {
        let field = FIELDS[case % 3];
        let (f, _) = composable_maps(&mut g, field);
        let cyl = mapping_cylinder(&f).unwrap();
        for k in 0..=2 {
            assert_eq!(spanning(&cyl, k), induced_rank_oracle(&f, k), "case {case} k {k}");
        }
    }
}

#[test]
fn chain_maps_compose() {
    let mut g = random::rng(43);
    for case in 0..40 {
        let field = FIELDS[case % 3];
        let (f, h) = composable_maps(&mut g, field);
        let hf = f.then(&h).unwrap();
        for k in 0..f.chains().len() {
            assert_eq!(Dense::of(&hf.chain(k)), dense_product(&[&h.chain(k), &f.chain(k)]));
            // The commuting square, checked densely.
            if k > 0 {
                let lhs = dense_product(&[&f.chain(k - 1), &f.source().boundary(k)]);
                let rhs = dense_product(&[&f.target().boundary(k), &f.chain(k)]);
                assert_eq!(lhs, rhs, "case {case} k {k}");
            }
        }
    }
}

#[test]
fn composite_vertex_map_gives_the_composite_chain_map() {
    let mut g = random::rng(44);
    for _ in 0..30 {
        let field = Field::Fp(3);
        let x = random::simplicial(&mut g, field, 5, 6, 2);
        let vf = random::vertex_map(&mut g, &x, 4);
        let y = random::image_complex(field, &x, &vf, &random::simplicial(&mut g, field, 4, 3, 2));
        let vh = random::vertex_map(&mut g, &y, 4);
        let z = random::image_complex(field, &y, &vh, &random::simplicial(&mut g, field, 4, 3, 2));
        let direct: BTreeMap<usize, usize> = vf.iter().map(|(&a, b)| (a, vh[b])).collect();
        let f = CellularMap::from_vertex_map(&x, &y, &vf).unwrap();
        let h = CellularMap::from_vertex_map(&y, &z, &vh).unwrap();
        let d = CellularMap::from_vertex_map(&x, &z, &direct).unwrap();
        assert_eq!(f.then(&h).unwrap().chains(), d.chains());
    }
}

#[test]
fn filtration_order_extends_the_face_order() {
    let mut g = random::rng(45);
    for case in 0..30 {
        let fc = random::filtration(&mut g, FIELDS[case % 3], 6, 10, 3);
        let d = fc.total_boundary();
        for (j, col) in d.cols().iter().enumerate() {
            for (i, _) in col.iter() {
                assert!(i < j, "face after coface in case {case}");
            }
        }
    }
}

#[test]
fn telescope_of_identities_on_a_circle() {
    let field = Field::Q;
    let circle = build_simplicial(field, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
    let id = CellularMap::identity(circle.complex_arc());
    let tel = mapping_telescope(&[id.clone(), id]).unwrap();
    // Ends enter at values 0, 1, 2 and cylinders at 1, 2; bars born and
    // killed at one value carry no persistence.
    let h1: Vec<_> = persistence_barcode(&tel, 1)
        .in_dim(1)
        .filter(|b| b.death.is_none_or(|d| tel.value_at(d - 1) > tel.value_at(b.birth - 1)))
        .copied()
        .collect();
    assert_eq!(h1.len(), 1);
    assert_eq!(tel.value_at(h1[0].birth - 1), 0.0);
    assert!(h1[0].death.is_none());
}

#[test]
fn doubled_edge_swap_keeps_one_component() {
    let field = Field::Fp(5);
    let edge = build_simplicial(field, &[vec![0, 1]]).unwrap();
    let swap: BTreeMap<usize, usize> = [(0, 1), (1, 0)].into();
    let f = CellularMap::from_vertex_map(&edge, &edge, &swap).unwrap();
    let tel = mapping_telescope(&[f.clone(), f]).unwrap();
    let h0: Vec<_> = persistence_barcode(&tel, 0).in_dim(0).copied().collect();
    let full: Vec<_> = h0.iter().filter(|b| b.death.is_none()).collect();
    assert_eq!(full.len(), 1);
    assert_eq!(tel.value_at(full[0].birth - 1), 0.0);
}
