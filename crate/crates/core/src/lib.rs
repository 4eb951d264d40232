//! Persistent and zigzag homology barcodes by exact sparse factorization of
//! type-A quiver representations.
//!
//! The pipeline runs in two stages. Homology of each complex in a diagram and
//! the maps induced between them turn the diagram into a quiver
//! representation ([`homology`], [`quiver::diagram_to_quiver`]). That
//! representation is then brought into barcode form by triangular
//! factorizations ([`factor`]), sequentially or by divide and conquer
//! ([`quiver`]).

pub mod complex;
pub mod error;
pub mod factor;
pub mod field;
pub mod homology;
pub mod pipeline;
pub mod quiver;
pub mod random;
pub mod sparse;

pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use sparse::{Permutation, ShapeKind, SparseMatrix, SparseVec};
pub use homology::{Bar, Barcode};
pub use quiver::{Arrow, Initial, Interval, TypeAQuiverRep};
