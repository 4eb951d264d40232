//! Reading bars off a quiver in barcode form.

use super::{Arrow, BarcodeForm};
use crate::error::{Error, Result};
use crate::sparse::Permutation;

/// A bar covering nodes `birth..=death` (1-based). `indices[t]` is the basis
/// index it occupies at node `birth + t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub birth: usize,
    pub death: usize,
    pub indices: Vec<usize>,
}

impl Interval {
    pub fn len(&self) -> usize {
        self.death + 1 - self.birth
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, node: usize) -> bool {
        self.birth <= node && node <= self.death
    }
}

/// Sweep left to right. A basis vector at node `i + 1` continues the bar of
/// the vector it is paired with by the pivot of block `i`, or starts a new
/// bar. Bars are sorted by `(birth, death, first index)`.
pub fn extract_barcode(bf: &BarcodeForm) -> Result<Vec<Interval>> {
    let q = &bf.quiver;
    for (i, m) in q.mats().iter().enumerate() {
        if !m.is_pivot() {
            return Err(Error::NotBarcodeForm(i));
        }
    }
    let mut done = Vec::new();
    // Open bars, by basis index at the current node.
    let mut open: Vec<Option<Interval>> = (0..q.dims()[0])
        .map(|j| {
            Some(Interval {
                birth: 1,
                death: 1,
                indices: vec![j],
            })
        })
        .collect();
    for (i, m) in q.mats().iter().enumerate() {
        let node = i + 2;
        // partner[b] = basis index at node i joined to b at node i + 1
        let mut partner = vec![None; q.dims()[i + 1]];
        match q.arrows()[i] {
            Arrow::Forward => {
                for (a, col) in m.cols().iter().enumerate() {
                    if let Some(b) = col.pivot() {
                        partner[b] = Some(a);
                    }
                }
            }
            Arrow::Backward => {
                for (b, col) in m.cols().iter().enumerate() {
                    partner[b] = col.pivot();
                }
            }
        }
        let mut next = Vec::with_capacity(partner.len());
        for (b, p) in partner.iter().enumerate() {
            let bar = match p {
                Some(a) => {
                    let mut bar = open[*a].take().expect("pivot matrices pair each index once");
                    bar.death = node;
                    bar.indices.push(b);
                    bar
                }
                None => Interval {
                    birth: node,
                    death: node,
                    indices: vec![b],
                },
            };
            next.push(Some(bar));
        }
        done.extend(open.into_iter().flatten());
        open = next;
    }
    done.extend(open.into_iter().flatten());
    done.sort();
    Ok(done)
}

/// The permutation taking the stacked node bases (node 1 first) to the
/// order in which the bars list them, so that conjugating the companion
/// matrix by it groups each bar into one block.
pub fn interval_permutation(intervals: &[Interval], dims: &[usize]) -> Permutation {
    let offsets: Vec<usize> = dims
        .iter()
        .scan(0, |acc, &d| {
            let o = *acc;
            *acc += d;
            Some(o)
        })
        .collect();
    let total: usize = dims.iter().sum();
    let mut map = vec![0; total];
    let mut pos = 0;
    for bar in intervals {
        for (t, &idx) in bar.indices.iter().enumerate() {
            map[offsets[bar.birth - 1 + t] + idx] = pos;
            pos += 1;
        }
    }
    Permutation::from_map(map).expect("every basis vector lies on exactly one bar")
}
