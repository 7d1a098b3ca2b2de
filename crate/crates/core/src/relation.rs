//! Dense binary relations on `0..n`, used for the literal (quantifier-level)
//! evaluation of the dual orders before they are compressed into ranks.

use crate::bitset::BitSet;
use crate::preference::WeakOrder;

/// Binary relation on `0..n`; `rows[i]` is the set of `j` with `i R j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    rows: Vec<BitSet>,
}

impl Relation {
    pub fn empty(n: usize) -> Self {
        Relation {
            rows: vec![BitSet::EMPTY; n],
        }
    }

    pub fn from_fn(n: usize, mut holds: impl FnMut(usize, usize) -> bool) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).filter(|&j| holds(i, j)).collect())
            .collect();
        Relation { rows }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    #[inline]
    pub fn holds(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        if value {
            self.rows[i].insert(j);
        } else {
            self.rows[i].remove(j);
        }
    }

    pub fn row(&self, i: usize) -> BitSet {
        self.rows[i]
    }

    /// Complete (every pair comparable, which includes reflexivity) and
    /// transitive, restricted to `domain`.
    pub fn is_total_preorder_on(&self, domain: BitSet) -> bool {
        for i in domain {
            for j in domain {
                if !self.holds(i, j) && !self.holds(j, i) {
                    return false;
                }
            }
        }
        for i in domain {
            let row = self.rows[i].intersection(domain);
            for j in row {
                if !self.rows[j].intersection(domain).is_subset(row) {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_total_preorder(&self) -> bool {
        self.is_total_preorder_on(BitSet::full(self.len()))
    }

    /// Compresses a total preorder into a rank encoding (rank 0 = best).
    /// `None` when the relation is not a total preorder.
    pub fn to_weak_order(&self) -> Option<WeakOrder> {
        if !self.is_total_preorder() {
            return None;
        }
        // number of elements strictly above i
        let scores: Vec<u32> = (0..self.len())
            .map(|i| {
                (0..self.len())
                    .filter(|&j| self.holds(j, i) && !self.holds(i, j))
                    .count() as u32
            })
            .collect();
        Some(WeakOrder::new(scores).normalized())
    }
}
