//! Type-A quiver representations and their reduction to barcode form.
//!
//! Nodes are `0..n` and edge `i` joins nodes `i` and `i + 1`. A change of
//! basis `M` at a node (new basis vectors are the columns of `M` in the old
//! coordinates) turns an outgoing matrix `A` into `A M` and an incoming one
//! into `M^{-1} A`.

mod diagram;
mod extract;
mod io;
mod oracle;
mod sweep;

pub use diagram::{diagram_to_quiver, parse_diagram, Diagram, DiagramSpec, EdgePayload, NodePayload};
pub use extract::{extract_barcode, interval_permutation, Interval};
pub use io::{parse_quiver, write_quiver};
pub use oracle::persistence_rank_oracle;
pub use sweep::{barcode_form_parallel, barcode_form_sequential, Initial};

use std::fmt;

use crate::error::{Error, Result};
use crate::factor::inverse;
use crate::field::Field;
use crate::sparse::SparseMatrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Arrow {
    /// `V_i -> V_{i+1}`
    Forward,
    /// `V_i <- V_{i+1}`
    Backward,
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Arrow::Forward => "fwd",
            Arrow::Backward => "bwd",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeAQuiverRep {
    field: Field,
    dims: Vec<usize>,
    arrows: Vec<Arrow>,
    mats: Vec<SparseMatrix>,
}

impl TypeAQuiverRep {
    pub fn new(field: Field, dims: Vec<usize>, arrows: Vec<Arrow>, mats: Vec<SparseMatrix>) -> Result<TypeAQuiverRep> {
        if dims.is_empty() {
            return Err(Error::Validation("a quiver needs at least one node".into()));
        }
        if arrows.len() + 1 != dims.len() || mats.len() != arrows.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} nodes need {} arrows and matrices, got {} and {}",
                dims.len(),
                dims.len() - 1,
                arrows.len(),
                mats.len()
            )));
        }
        for (i, (a, m)) in arrows.iter().zip(&mats).enumerate() {
            if m.field() != field {
                return Err(Error::FieldMismatch(field, m.field()));
            }
            let want = edge_shape(&dims, *a, i);
            if m.shape() != want {
                return Err(Error::DimensionMismatch(format!(
                    "edge {} matrix is {}x{}, expected {}x{}",
                    i + 1,
                    m.nrows(),
                    m.ncols(),
                    want.0,
                    want.1
                )));
            }
        }
        Ok(TypeAQuiverRep {
            field,
            dims,
            arrows,
            mats,
        })
    }

    /// A quiver with every arrow pointing right.
    pub fn persistence(field: Field, dims: Vec<usize>, mats: Vec<SparseMatrix>) -> Result<TypeAQuiverRep> {
        let arrows = vec![Arrow::Forward; mats.len()];
        TypeAQuiverRep::new(field, dims, arrows, mats)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// Number of nodes.
    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn mats(&self) -> &[SparseMatrix] {
        &self.mats
    }

    pub fn mat(&self, i: usize) -> &SparseMatrix {
        &self.mats[i]
    }

    pub fn into_parts(self) -> (Field, Vec<usize>, Vec<Arrow>, Vec<SparseMatrix>) {
        (self.field, self.dims, self.arrows, self.mats)
    }

    /// Change basis at `node` by the invertible `m`.
    pub fn pass_through_node(&self, node: usize, m: &SparseMatrix) -> Result<TypeAQuiverRep> {
        if node >= self.len() || m.shape() != (self.dims[node], self.dims[node]) {
            return Err(Error::DimensionMismatch(format!("basis change does not fit node {}", node + 1)));
        }
        let minv = inverse(m)?;
        Ok(self.change_basis(node, m, &minv))
    }

    /// As [`TypeAQuiverRep::pass_through_node`] with the inverse supplied.
    pub(crate) fn change_basis(&self, node: usize, m: &SparseMatrix, minv: &SparseMatrix) -> TypeAQuiverRep {
        let mut out = self.clone();
        if node > 0 {
            let e = node - 1;
            out.mats[e] = match self.arrows[e] {
                Arrow::Forward => minv * &self.mats[e],
                Arrow::Backward => &self.mats[e] * m,
            };
        }
        if node + 1 < self.len() {
            let e = node;
            out.mats[e] = match self.arrows[e] {
                Arrow::Forward => &self.mats[e] * m,
                Arrow::Backward => minv * &self.mats[e],
            };
        }
        out
    }

    /// The quiver read right to left.
    pub fn reversed(&self) -> TypeAQuiverRep {
        let flip = |a: &Arrow| match a {
            Arrow::Forward => Arrow::Backward,
            Arrow::Backward => Arrow::Forward,
        };
        TypeAQuiverRep {
            field: self.field,
            dims: self.dims.iter().rev().copied().collect(),
            arrows: self.arrows.iter().rev().map(flip).collect(),
            mats: self.mats.iter().rev().cloned().collect(),
        }
    }
}

pub(crate) fn edge_shape(dims: &[usize], arrow: Arrow, i: usize) -> (usize, usize) {
    match arrow {
        Arrow::Forward => (dims[i + 1], dims[i]),
        Arrow::Backward => (dims[i], dims[i + 1]),
    }
}

/// Basis of one node: `b` maps current coordinates to the original ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NodeBasis {
    pub b: SparseMatrix,
    pub b_inv: SparseMatrix,
}

/// A quiver whose blocks are all pivot matrices, optionally with the node
/// bases relating it to the quiver it came from.
#[derive(Clone, Debug)]
pub struct BarcodeForm {
    pub quiver: TypeAQuiverRep,
    pub bases: Option<Vec<NodeBasis>>,
}

impl BarcodeForm {
    /// Whether `B_target^{-1} A B_source` equals each block, for `original`
    /// the quiver this form was computed from. `false` without bases.
    pub fn witnesses(&self, original: &TypeAQuiverRep) -> bool {
        let Some(bases) = &self.bases else { return false };
        if original.dims != self.quiver.dims || original.arrows != self.quiver.arrows {
            return false;
        }
        let field = original.field;
        let inverse_ok = bases.iter().zip(&original.dims).all(|(nb, &d)| {
            let id = SparseMatrix::identity(field, d);
            &nb.b * &nb.b_inv == id && &nb.b_inv * &nb.b == id
        });
        inverse_ok
            && (0..original.arrows.len()).all(|i| {
                let (s, t) = match original.arrows[i] {
                    Arrow::Forward => (i, i + 1),
                    Arrow::Backward => (i + 1, i),
                };
                &(&bases[t].b_inv * &original.mats[i]) * &bases[s].b == self.quiver.mats[i]
            })
    }
}
