//! Sequential and divide-and-conquer reduction to barcode form.
//!
//! A rightward solve factors edges left to right, leaving each block as a
//! lower triangular factor at its left node times an echelon block of shape
//! `E_L` (backward arrows) or `ELhat` (forward arrows), and pushing the
//! invertible remainder into the next node. A second pass right to left
//! removes the triangular factors, commuting each through the block to its
//! left. A leftward solve mirrors this with upper triangular factors and
//! blocks of shape `E_U` or `EUhat`.

use super::{Arrow, BarcodeForm, NodeBasis, TypeAQuiverRep};
use crate::factor::{commute_shape, leup, lqu, pivot_factor, pleu, puel, uelp, EchelonTarget, Relation};
use crate::field::Field;
use crate::sparse::{triangular_inverse, Permutation, SparseMatrix, TriKind};

/// Which end the first sweep starts from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Initial {
    Rightward,
    Leftward,
}

/// Bring `q` to barcode form with one sweep in each direction. Without
/// `keep_basis` the second sweep is skipped: it never changes the echelon
/// blocks, only the triangular factors beside them.
pub fn barcode_form_sequential(q: &TypeAQuiverRep, initial: Initial, keep_basis: bool) -> BarcodeForm {
    let mut seg = Segment::new(q, keep_basis);
    seg.first_sweep(initial);
    if keep_basis {
        seg.second_sweep(initial, None);
    }
    seg.into_form(q.field())
}

/// Divide and conquer: split at the middle node, solve the left half
/// rightward and the right half leftward in parallel, then reconcile the
/// two bases of the shared node. Segments with at most `leaf_size` edges are
/// solved sequentially. Node bases are always returned.
pub fn barcode_form_parallel(q: &TypeAQuiverRep, leaf_size: usize) -> BarcodeForm {
    let seg = solve(Segment::new(q, true), Initial::Rightward, leaf_size.max(1));
    seg.into_form(q.field())
}

fn solve(seg: Segment, orient: Initial, leaf: usize) -> Segment {
    let edges = seg.arrows.len();
    if edges <= leaf || edges < 2 {
        let mut seg = seg;
        seg.first_sweep(orient);
        seg.second_sweep(orient, None);
        return seg;
    }
    let mid = seg.dims.len() / 2;
    let (left, right) = seg.split(mid);
    let (left, right) = rayon::join(
        || solve(left, Initial::Rightward, leaf),
        || solve(right, Initial::Leftward, leaf),
    );
    merge(left, right, orient)
}

type Carry = (SparseMatrix, SparseMatrix);

/// A run of consecutive nodes being reduced.
struct Segment {
    field: Field,
    dims: Vec<usize>,
    arrows: Vec<Arrow>,
    blocks: Vec<SparseMatrix>,
    /// Triangular factor left beside each block by the first sweep.
    tri: Vec<Option<SparseMatrix>>,
    bases: Option<Vec<NodeBasis>>,
}

impl Segment {
    fn new(q: &TypeAQuiverRep, keep_basis: bool) -> Segment {
        let field = q.field();
        let bases = keep_basis.then(|| {
            q.dims()
                .iter()
                .map(|&d| NodeBasis {
                    b: SparseMatrix::identity(field, d),
                    b_inv: SparseMatrix::identity(field, d),
                })
                .collect()
        });
        Segment {
            field,
            dims: q.dims().to_vec(),
            arrows: q.arrows().to_vec(),
            blocks: q.mats().to_vec(),
            tri: vec![None; q.mats().len()],
            bases,
        }
    }

    fn into_form(self, field: Field) -> BarcodeForm {
        let quiver = TypeAQuiverRep::new(field, self.dims, self.arrows, self.blocks).expect("shapes preserved");
        BarcodeForm {
            quiver,
            bases: self.bases,
        }
    }

    /// Record a basis change at `v`.
    fn absorb(&mut self, v: usize, m: &SparseMatrix, minv: &SparseMatrix) {
        if let Some(bases) = &mut self.bases {
            let nb = &mut bases[v];
            nb.b = &nb.b * m;
            nb.b_inv = minv * &nb.b_inv;
        }
    }

    fn source_is_left(&self, e: usize) -> bool {
        self.arrows[e] == Arrow::Forward
    }

    /// Apply a basis change at node `v` to edge `e`, one of its ends.
    fn apply(&mut self, e: usize, v: usize, (m, minv): &Carry) {
        let source = if self.source_is_left(e) { e } else { e + 1 };
        self.blocks[e] = if v == source {
            &self.blocks[e] * m
        } else {
            minv * &self.blocks[e]
        };
    }

    fn first_sweep(&mut self, orient: Initial) {
        let n = self.arrows.len();
        let mut carry: Option<Carry> = None;
        let order: Vec<usize> = match orient {
            Initial::Rightward => (0..n).collect(),
            Initial::Leftward => (0..n).rev().collect(),
        };
        for e in order {
            let (v, w) = match orient {
                Initial::Rightward => (e, e + 1),
                Initial::Leftward => (e + 1, e),
            };
            if let Some(c) = carry.take() {
                self.apply(e, v, &c);
            }
            let a = &self.blocks[e];
            let next = match (orient, self.arrows[e]) {
                (Initial::Rightward, Arrow::Backward) => {
                    // A = L E U P; strip U P at the source.
                    let f = leup(a);
                    let uinv = triangular_inverse(&f.upper, TriKind::Upper).expect("unit triangular");
                    let m = f.perm.inverse().apply_rows(&uinv);
                    let minv = f.perm.apply_cols(&f.upper);
                    self.tri[e] = Some(f.lower);
                    self.blocks[e] = f.echelon;
                    (m, minv)
                }
                (Initial::Rightward, Arrow::Forward) => {
                    // A = P U ELhat L; strip P U at the target.
                    let f = puel(a);
                    let uinv = triangular_inverse(&f.upper, TriKind::Upper).expect("unit triangular");
                    let m = f.perm.apply_rows(&f.upper);
                    let minv = f.perm.inverse().apply_cols(&uinv);
                    self.tri[e] = Some(f.lower);
                    self.blocks[e] = f.echelon;
                    (m, minv)
                }
                (Initial::Leftward, Arrow::Backward) => {
                    // A = P L E_U U; strip P L at the target.
                    let f = pleu(a);
                    let linv = triangular_inverse(&f.lower, TriKind::Lower).expect("unit triangular");
                    let m = f.perm.apply_rows(&f.lower);
                    let minv = f.perm.inverse().apply_cols(&linv);
                    self.tri[e] = Some(f.upper);
                    self.blocks[e] = f.echelon;
                    (m, minv)
                }
                (Initial::Leftward, Arrow::Forward) => {
                    // A = U EUhat L P; strip L P at the source.
                    let f = uelp(a);
                    let linv = triangular_inverse(&f.lower, TriKind::Lower).expect("unit triangular");
                    let m = f.perm.inverse().apply_rows(&linv);
                    let minv = f.perm.apply_cols(&f.lower);
                    self.tri[e] = Some(f.upper);
                    self.blocks[e] = f.echelon;
                    (m, minv)
                }
            };
            self.absorb(w, &next.0, &next.1);
            carry = Some(next);
        }
    }

    /// Clear the triangular factors, starting from the far end with an
    /// optional pending basis change there (already recorded in the bases).
    fn second_sweep(&mut self, orient: Initial, mut carry: Option<Carry>) {
        let n = self.arrows.len();
        let (order, kind): (Vec<usize>, TriKind) = match orient {
            Initial::Rightward => ((0..n).rev().collect(), TriKind::Lower),
            Initial::Leftward => ((0..n).collect(), TriKind::Upper),
        };
        for e in order {
            let w = match orient {
                Initial::Rightward => e,
                Initial::Leftward => e + 1,
            };
            let w_is_target = (w == e) != self.source_is_left(e);
            let t_e = self.tri[e].take();
            let t_new = carry.as_ref().map(|(m, minv)| {
                let (t, rel) = match (orient, w_is_target) {
                    (Initial::Rightward, true) => (m, Relation::ElL),
                    (Initial::Rightward, false) => (minv, Relation::LElhat),
                    (Initial::Leftward, true) => (m, Relation::EuhatU),
                    (Initial::Leftward, false) => (minv, Relation::UEu),
                };
                commute_shape(&self.blocks[e], t, rel).expect("block keeps its echelon shape").0
            });
            let tot = match (t_e, t_new) {
                (None, None) => None,
                (Some(a), None) | (None, Some(a)) => Some(a),
                (Some(t_e), Some(t_new)) if w_is_target => Some(&t_e * &t_new),
                (Some(t_e), Some(t_new)) => Some(&t_new * &t_e),
            };
            carry = tot.map(|t| {
                let tinv = triangular_inverse(&t, kind).expect("unit triangular");
                if w_is_target {
                    (t, tinv)
                } else {
                    (tinv, t)
                }
            });
            if let Some((m, minv)) = &carry {
                self.absorb(w, m, minv);
            }
        }
    }

    /// Push a monomial basis change at one end through every block,
    /// refactoring each block as echelon times permutation.
    fn propagate_perm(&mut self, orient: Initial, mut carry: Carry) {
        let n = self.arrows.len();
        let order: Vec<usize> = match orient {
            Initial::Rightward => (0..n).collect(),
            Initial::Leftward => (0..n).rev().collect(),
        };
        for e in order {
            let (v, w) = match orient {
                Initial::Rightward => (e, e + 1),
                Initial::Leftward => (e + 1, e),
            };
            self.apply(e, v, &carry);
            let target = match (orient, self.arrows[e]) {
                (Initial::Rightward, Arrow::Backward) => EchelonTarget::ElP,
                (Initial::Rightward, Arrow::Forward) => EchelonTarget::PElhat,
                (Initial::Leftward, Arrow::Backward) => EchelonTarget::PEu,
                (Initial::Leftward, Arrow::Forward) => EchelonTarget::EuhatP,
            };
            let (echelon, p) = pivot_factor(&self.blocks[e], target).expect("block is a pivot matrix");
            self.blocks[e] = echelon;
            let (pm, pinv) = perm_pair(&p, self.field);
            carry = if target.perm_on_left() { (pm, pinv) } else { (pinv, pm) };
            self.absorb(w, &carry.0, &carry.1);
        }
    }

    /// Split at local node `m`; both halves keep a copy of node `m`.
    fn split(self, m: usize) -> (Segment, Segment) {
        let (lb, rb) = match self.bases {
            Some(b) => (Some(b[..=m].to_vec()), Some(b[m..].to_vec())),
            None => (None, None),
        };
        let left = Segment {
            field: self.field,
            dims: self.dims[..=m].to_vec(),
            arrows: self.arrows[..m].to_vec(),
            blocks: self.blocks[..m].to_vec(),
            tri: vec![None; m],
            bases: lb,
        };
        let right = Segment {
            field: self.field,
            dims: self.dims[m..].to_vec(),
            arrows: self.arrows[m..].to_vec(),
            blocks: self.blocks[m..].to_vec(),
            tri: vec![None; self.arrows.len() - m],
            bases: rb,
        };
        (left, right)
    }
}

fn perm_pair(p: &Permutation, field: Field) -> (SparseMatrix, SparseMatrix) {
    (p.to_matrix(field), p.inverse().to_matrix(field))
}

/// Inverse of a matrix with exactly one nonzero per row and column.
fn monomial_inverse(q: &SparseMatrix) -> SparseMatrix {
    let trip = q.triplets().map(|(i, j, v)| (j, i, v.inv().expect("nonzero entry")));
    SparseMatrix::from_triplets(q.field(), q.ncols(), q.nrows(), trip).expect("in range")
}

/// Join a rightward-form left segment and a leftward-form right segment
/// sharing a node, leaving the result in `orient` form.
fn merge(mut left: Segment, mut right: Segment, orient: Initial) -> Segment {
    let m = left.dims.len() - 1;
    let a = &left.bases.as_ref().expect("merge tracks bases")[m];
    let b = &right.bases.as_ref().expect("merge tracks bases")[0];
    // Coordinates on the right side of the shared node, seen from the left.
    let c = &a.b_inv * &b.b;
    let f = lqu(&c);
    debug_assert_eq!(f.q.nnz(), c.nrows(), "change of basis is invertible");

    let linv = triangular_inverse(&f.l, TriKind::Lower).expect("unit triangular");
    left.absorb(m, &f.l, &linv);
    left.second_sweep(Initial::Rightward, Some((f.l, linv)));

    let uinv = triangular_inverse(&f.u, TriKind::Upper).expect("unit triangular");
    right.absorb(0, &uinv, &f.u);
    right.second_sweep(Initial::Leftward, Some((uinv, f.u)));

    // Now the left coordinates equal Q times the right ones.
    let qinv = monomial_inverse(&f.q);
    match orient {
        Initial::Rightward => {
            right.absorb(0, &qinv, &f.q);
            right.propagate_perm(Initial::Rightward, (qinv, f.q));
        }
        Initial::Leftward => {
            left.absorb(m, &f.q, &qinv);
            left.propagate_perm(Initial::Leftward, (f.q, qinv));
        }
    }

    let mut bases = left.bases.take().unwrap();
    let right_bases = right.bases.take().unwrap();
    debug_assert_eq!(bases[m], right_bases[0]);
    bases.pop();
    bases.extend(right_bases);
    let mut dims = left.dims;
    dims.extend_from_slice(&right.dims[1..]);
    let mut arrows = left.arrows;
    arrows.extend(right.arrows);
    let mut blocks = left.blocks;
    blocks.extend(right.blocks);
    Segment {
        field: left.field,
        tri: vec![None; blocks.len()],
        dims,
        arrows,
        blocks,
        bases: Some(bases),
    }
}
