mod common;

use std::collections::BTreeMap;

use common::{betti_oracle, filtration_barcode_oracle, induced_rank_oracle, zigzag_oracle};
use quiverbar::complex::{build_simplicial, CellularMap, SimplicialComplex};
use quiverbar::pipeline::{persistence, zigzag_barcode, Strategy, Via};
use quiverbar::quiver::{diagram_to_quiver, Diagram};
use quiverbar::random::{self, TestRng};
use quiverbar::{Field, Initial};
use rand::seq::SliceRandom;
use rand::Rng;

const FIELDS: [Field; 3] = [Field::F2, Field::Fp(5), Field::Q];

const STRATEGIES: [Strategy; 4] = [
    Strategy::Sequential(Initial::Rightward),
    Strategy::Sequential(Initial::Leftward),
    Strategy::Parallel { leaf_size: 1 },
    Strategy::Parallel { leaf_size: 2 },
];

#[test]
fn filtration_routes_agree_with_the_rank_oracle() {
    let mut g = random::rng(51);
    for case in 0..24 {
        let field = FIELDS[case % 3];
        let count = g.gen_range(0..7);
        let fc = random::filtration(&mut g, field, 4, count, 2);
        let want = filtration_barcode_oracle(&fc, 1);
        for via in [Via::Reduction, Via::Quiver, Via::Telescope] {
            let strategy = STRATEGIES[case % 4];
            let got: Vec<_> = persistence(&fc, 1, via, strategy)
                .unwrap()
                .iter()
                .map(|b| (b.dim, b.birth, b.death))
                .collect();
            assert_eq!(got, want, "case {case} {via:?} {strategy:?}");
        }
    }
}

/// A random subcomplex: some simplices of `x` closed under faces.
fn subcomplex(g: &mut TestRng, x: &SimplicialComplex) -> SimplicialComplex {
    let mut all: Vec<Vec<usize>> = (0..x.num_dims()).flat_map(|k| x.simplices(k).to_vec()).collect();
    all.shuffle(g);
    let keep = g.gen_range(0..=all.len());
    let mut chosen: Vec<Vec<usize>> = all.into_iter().take(keep).collect();
    if chosen.is_empty() {
        chosen.push(vec![x.vertices()[0]]);
    }
    chosen.sort();
    build_simplicial(x.field(), &chosen).unwrap()
}

/// Complexes `X_1 .. X_n` with random arrow directions; a backward arrow is
/// the inclusion of a subcomplex, a forward one a random simplicial map.
fn random_zigzag(g: &mut TestRng, field: Field, n: usize) -> Diagram {
    let mut nodes = vec![random::simplicial(g, field, 5, 6, 2)];
    let mut edges = Vec::new();
    for i in 1..n {
        let prev = nodes[i - 1].clone();
        if g.gen_bool(0.5) {
            let vmap = random::vertex_map(g, &prev, 5);
            let extra = random::simplicial(g, field, 5, 3, 2);
            nodes.push(random::image_complex(field, &prev, &vmap, &extra));
            edges.push((i, i + 1, vmap));
        } else {
            let sub = subcomplex(g, &prev);
            let inc: BTreeMap<usize, usize> = sub.vertices().into_iter().map(|v| (v, v)).collect();
            nodes.push(sub);
            edges.push((i + 1, i, inc));
        }
    }
    let nodes: Vec<_> = nodes.into_iter().enumerate().map(|(i, x)| (i + 1, x)).collect();
    Diagram::from_simplicial(field, &nodes, &edges).unwrap()
}

#[test]
fn zigzag_diagrams_match_dense_homology_and_the_interval_oracle() {
    let mut g = random::rng(52);
    for case in 0..24 {
        let field = FIELDS[case % 3];
        let n = g.gen_range(1..7);
        let d = random_zigzag(&mut g, field, n);
        for k in 0..=1 {
            let q = diagram_to_quiver(&d, k).unwrap().to_type_a().unwrap();
            // Node dimensions and edge ranks against dense homology.
            for (v, x) in d.nodes().values().enumerate() {
                let quiverbar::quiver::NodePayload::Complex(c) = x else { panic!("complex node") };
                assert_eq!(q.dims()[v], betti_oracle(c).get(k).copied().unwrap_or(0));
            }
            for (e, (_, _, payload)) in d.edges().iter().enumerate() {
                let quiverbar::quiver::EdgePayload::Map(f) = payload else { panic!("map edge") };
                let want = induced_rank_oracle(f, k);
                assert_eq!(common::dense_rank(q.mat(e)), want, "case {case} edge {e}");
            }
            let want = zigzag_oracle(&q);
            for strategy in STRATEGIES {
                let mut got: Vec<_> = zigzag_barcode(&d, k, strategy)
                    .unwrap()
                    .into_iter()
                    .filter(|(dim, _)| *dim == k)
                    .map(|(_, i)| (i.birth, i.death))
                    .collect();
                got.sort();
                assert_eq!(got, want, "case {case} k {k} {strategy:?}");
            }
        }
    }
}

#[test]
fn edge_swap_zigzag_is_one_bar() {
    let field = Field::Fp(5);
    let edge = build_simplicial(field, &[vec![0, 1]]).unwrap();
    let swap: BTreeMap<usize, usize> = [(0, 1), (1, 0)].into();
    let f = CellularMap::from_vertex_map(&edge, &edge, &swap).unwrap();
    assert_eq!(f.chain(1).at(0, 0), field.from_i64(-1));
    let d = Diagram::from_simplicial(field, &[(1, edge.clone()), (2, edge)], &[(1, 2, swap)]).unwrap();
    let bars = zigzag_barcode(&d, 0, Strategy::default()).unwrap();
    assert_eq!(bars.len(), 1);
    assert_eq!((bars[0].1.birth, bars[0].1.death), (1, 2));
}
