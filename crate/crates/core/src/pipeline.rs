//! End-to-end barcode computations: filtrations by reduction, by the
//! prefix-inclusion quiver, or by the mapping telescope, and zigzag
//! diagrams of complexes.

use std::sync::Arc;

use crate::complex::{mapping_telescope, CellularMap, FilteredComplex};
use crate::error::Result;
use crate::homology::{persistence_barcode, Bar, Barcode};
use crate::quiver::{
    barcode_form_parallel, barcode_form_sequential, diagram_to_quiver, extract_barcode, Diagram, Initial, Interval,
    TypeAQuiverRep,
};
use crate::sparse::SparseMatrix;

/// How to bring a quiver to barcode form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Sequential(Initial),
    Parallel { leaf_size: usize },
}

impl Default for Strategy {
    fn default() -> Self {
        Strategy::Sequential(Initial::Rightward)
    }
}

/// Route for filtration persistence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Via {
    Reduction,
    Quiver,
    Telescope,
}

/// The bars of a quiver.
pub fn quiver_intervals(q: &TypeAQuiverRep, strategy: Strategy) -> Vec<Interval> {
    let form = match strategy {
        Strategy::Sequential(init) => barcode_form_sequential(q, init, false),
        Strategy::Parallel { leaf_size } => barcode_form_parallel(q, leaf_size),
    };
    extract_barcode(&form).expect("sweeps produce pivot blocks")
}

pub fn persistence(fc: &FilteredComplex, max_dim: usize, via: Via, strategy: Strategy) -> Result<Barcode> {
    match via {
        Via::Reduction => Ok(persistence_barcode(fc, max_dim)),
        Via::Quiver => persistence_via_quiver(fc, max_dim, strategy),
        Via::Telescope => persistence_via_telescope(fc, max_dim),
    }
}

/// Homology of every prefix, joined by the maps induced by inclusion. A bar
/// covering nodes `b..=d` is born with cell `b` and dies with cell `d + 1`.
pub fn persistence_via_quiver(fc: &FilteredComplex, max_dim: usize, strategy: Strategy) -> Result<Barcode> {
    let n = fc.len();
    if n == 0 {
        return Ok(Barcode::default());
    }
    let d = Diagram::prefix_inclusions(fc)?;
    let mut bars = Vec::new();
    for k in 0..=max_dim {
        let q = diagram_to_quiver(&d, k)?.to_type_a()?;
        bars.extend(quiver_intervals(&q, strategy).into_iter().map(|i| Bar {
            dim: k,
            birth: i.birth,
            death: (i.death < n).then_some(i.death + 1),
        }));
    }
    Ok(Barcode::new(bars))
}

/// Persistence of the telescope of the prefix inclusions. The prefix after
/// `t` cells enters the telescope at value `t - 1`, so a telescope bar on
/// values `[s, e)` is the filtration bar `[s + 1, e + 1)`. Bars born and
/// killed at one value are artifacts of the cell order and are dropped.
pub fn persistence_via_telescope(fc: &FilteredComplex, max_dim: usize) -> Result<Barcode> {
    let n = fc.len();
    if n == 0 {
        return Ok(Barcode::default());
    }
    let field = fc.field();
    let prefixes: Vec<_> = (1..=n).map(|t| Arc::new(fc.prefix(t))).collect();
    // A one-cell filtration becomes the cylinder of its identity.
    let maps = if n == 1 {
        vec![CellularMap::identity(Arc::clone(&prefixes[0]))]
    } else {
        prefixes
            .windows(2)
            .map(|w| {
                let chain = (0..w[0].num_dims())
                    .map(|k| {
                        let (r, c) = (w[1].num_cells(k), w[0].num_cells(k));
                        SparseMatrix::from_triplets(field, r, c, (0..c).map(|i| (i, i, field.one()))).expect("prefix fits")
                    })
                    .collect();
                CellularMap::from_chain_matrices(Arc::clone(&w[0]), Arc::clone(&w[1]), chain)
            })
            .collect::<Result<Vec<_>>>()?
    };
    let tel = mapping_telescope(&maps)?;
    let at = |i: usize| tel.value_at(i - 1) as usize + 1;
    let bars = persistence_barcode(&tel, max_dim)
        .iter()
        .map(|b| Bar {
            dim: b.dim,
            birth: at(b.birth),
            death: b.death.map(at),
        })
        .filter(|b| b.death != Some(b.birth))
        .collect();
    Ok(Barcode::new(bars))
}

/// Zigzag barcode of a diagram of complexes on consecutive nodes, as
/// `(dimension, bar)` pairs. Bars are in node positions `1..=n` whatever the
/// node ids.
pub fn zigzag_barcode(d: &Diagram, max_dim: usize, strategy: Strategy) -> Result<Vec<(usize, Interval)>> {
    let mut out = Vec::new();
    for k in 0..=max_dim {
        let q = diagram_to_quiver(d, k)?.to_type_a()?;
        out.extend(quiver_intervals(&q, strategy).into_iter().map(|i| (k, i)));
    }
    Ok(out)
}
