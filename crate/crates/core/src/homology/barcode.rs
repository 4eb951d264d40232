//! Persistence barcodes.

use std::cmp::Ordering;
use std::fmt;

/// A bar `[birth, death)` in homology dimension `dim`. Indices are 1-based
/// positions; `death = None` means the class never dies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Bar {
    pub dim: usize,
    pub birth: usize,
    pub death: Option<usize>,
}

impl Bar {
    pub fn is_infinite(&self) -> bool {
        self.death.is_none()
    }

    /// Whether the class is alive after `i` cells (or at node `i`).
    pub fn alive_at(&self, i: usize) -> bool {
        self.birth <= i && self.death.is_none_or(|d| i < d)
    }
}

impl Ord for Bar {
    fn cmp(&self, other: &Self) -> Ordering {
        let key = |b: &Bar| (b.dim, b.birth, b.death.is_none(), b.death);
        key(self).cmp(&key(other))
    }
}

impl PartialOrd for Bar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Bar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.death {
            Some(d) => write!(f, "{} {} {}", self.dim, self.birth, d),
            None => write!(f, "{} {} inf", self.dim, self.birth),
        }
    }
}

/// A multiset of bars kept in `(dim, birth, death)` order, infinite deaths last.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Barcode {
    bars: Vec<Bar>,
}

impl Barcode {
    pub fn new(mut bars: Vec<Bar>) -> Barcode {
        bars.sort();
        Barcode { bars }
    }

    pub fn bars(&self) -> &[Bar] {
        &self.bars
    }

    pub fn len(&self) -> usize {
        self.bars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bars.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Bar> + '_ {
        self.bars.iter()
    }

    /// Bars of one dimension.
    pub fn in_dim(&self, dim: usize) -> impl Iterator<Item = &Bar> + '_ {
        self.bars.iter().filter(move |b| b.dim == dim)
    }

    pub fn merge(mut self, other: Barcode) -> Barcode {
        self.bars.extend(other.bars);
        Barcode::new(self.bars)
    }

    /// Drop bars with `death == Some(birth)`; these arise only from
    /// reindexing several cells onto one parameter.
    pub fn without_empty(&self) -> Barcode {
        Barcode {
            bars: self.bars.iter().filter(|b| b.death != Some(b.birth)).copied().collect(),
        }
    }

    /// One `dim birth death` line per bar, `inf` for bars that never die.
    pub fn to_text(&self) -> String {
        self.bars.iter().map(|b| format!("{b}\n")).collect()
    }

    /// Like [`Barcode::to_text`] with indices replaced by `value(index)`.
    pub fn to_text_with(&self, value: impl Fn(usize) -> f64) -> String {
        self.bars
            .iter()
            .map(|b| match b.death {
                Some(d) => format!("{} {} {}\n", b.dim, value(b.birth), value(d)),
                None => format!("{} {} inf\n", b.dim, value(b.birth)),
            })
            .collect()
    }
}

impl FromIterator<Bar> for Barcode {
    fn from_iter<I: IntoIterator<Item = Bar>>(iter: I) -> Self {
        Barcode::new(iter.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infinite_sorts_last() {
        let bc = Barcode::new(vec![
            Bar { dim: 0, birth: 1, death: None },
            Bar { dim: 0, birth: 1, death: Some(9) },
            Bar { dim: 0, birth: 1, death: Some(3) },
        ]);
        assert_eq!(bc.to_text(), "0 1 3\n0 1 9\n0 1 inf\n");
    }
}
