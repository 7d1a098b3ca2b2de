//! Finite posets given by cover pairs, and the lattice of their down-sets.

use serde::Serialize;

use super::{Lattice, LatticeError, LatticeTables};
use crate::bitset::{BitSet, CAPACITY};

/// Down-set enumeration walks every subset, so posets are kept small.
pub const MAX_DOWNSET_POSET: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Poset {
    n: usize,
    covers: Vec<(usize, usize)>,
    #[serde(skip)]
    below: Vec<BitSet>,
}

impl Poset {
    /// Accepts `(lower, upper)` pairs. Pairs need not be a transitive
    /// reduction, but the relation they generate must be acyclic.
    pub fn new(n: usize, covers: Vec<(usize, usize)>) -> Result<Self, LatticeError> {
        if n > CAPACITY {
            return Err(LatticeError::TooLarge(n));
        }
        if let Some(&(lo, hi)) = covers.iter().find(|&&(lo, hi)| lo >= n || hi >= n) {
            return Err(LatticeError::Malformed(format!(
                "cover ({lo}, {hi}) references an element outside 0..{n}"
            )));
        }
        if let Some(&(lo, _)) = covers.iter().find(|&&(lo, hi)| lo == hi) {
            return Err(LatticeError::PosetCyclic(lo));
        }

        // Kahn's algorithm; leftovers sit on a cycle.
        let mut indegree = vec![0usize; n];
        for &(_, hi) in &covers {
            indegree[hi] += 1;
        }
        let mut queue: Vec<usize> = (0..n).filter(|&i| indegree[i] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(x) = queue.pop() {
            order.push(x);
            for &(lo, hi) in &covers {
                if lo == x {
                    indegree[hi] -= 1;
                    if indegree[hi] == 0 {
                        queue.push(hi);
                    }
                }
            }
        }
        if order.len() < n {
            let stuck = (0..n).find(|&i| indegree[i] > 0).unwrap_or(0);
            return Err(LatticeError::PosetCyclic(stuck));
        }

        let mut below: Vec<BitSet> = (0..n).map(BitSet::singleton).collect();
        for &x in &order {
            for &(lo, hi) in &covers {
                if hi == x {
                    below[x] = below[x].union(below[lo]);
                }
            }
        }
        Ok(Poset { n, covers, below })
    }

    /// Builds a poset from a strict order relation, keeping only cover pairs.
    pub fn from_order(n: usize, less: impl Fn(usize, usize) -> bool) -> Result<Self, LatticeError> {
        let mut covers = Vec::new();
        for lo in 0..n {
            for hi in 0..n {
                if less(lo, hi) && !(0..n).any(|m| less(lo, m) && less(m, hi)) {
                    covers.push((lo, hi));
                }
            }
        }
        Poset::new(n, covers)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// `x ≤ y` in the reflexive-transitive closure.
    pub fn le(&self, x: usize, y: usize) -> bool {
        self.below[y].contains(x)
    }

    /// `{ y : y ≤ x }`
    pub fn down_closure(&self, x: usize) -> BitSet {
        self.below[x]
    }

    /// `{ y : x ≤ y }`
    pub fn up_closure(&self, x: usize) -> BitSet {
        (0..self.n).filter(|&y| self.below[y].contains(x)).collect()
    }

    pub fn is_down_set(&self, set: BitSet) -> bool {
        set.iter().all(|x| self.below[x].is_subset(set))
    }

    /// All down-sets in increasing integer order of their bitsets, which is a
    /// linear extension of inclusion.
    pub fn down_sets(&self) -> Result<Vec<BitSet>, LatticeError> {
        if self.n > MAX_DOWNSET_POSET {
            return Err(LatticeError::TooLarge(self.n));
        }
        let mut sets = Vec::new();
        for bits in 0..(1u64 << self.n) {
            let set = BitSet::from_bits(bits);
            if self.is_down_set(set) {
                if sets.len() == CAPACITY {
                    return Err(LatticeError::TooLarge(CAPACITY + 1));
                }
                sets.push(set);
            }
        }
        Ok(sets)
    }
}

/// Lattice of down-closed subsets ordered by inclusion (meet = ∩, join = ∪).
/// Element `i` is the `i`-th down-set in bitset order, so the empty set is
/// the bottom and the whole poset the top.
pub fn downset_lattice(poset: &Poset) -> Result<Lattice, LatticeError> {
    let sets = poset.down_sets()?;
    let index = |s: BitSet| sets.binary_search(&s).expect("down-sets are closed under ∩ and ∪");
    let k = sets.len();
    let mut meet = vec![vec![0; k]; k];
    let mut join = vec![vec![0; k]; k];
    for (i, &x) in sets.iter().enumerate() {
        for (j, &y) in sets.iter().enumerate() {
            meet[i][j] = index(x.intersection(y));
            join[i][j] = index(x.union(y));
        }
    }
    let labels = sets.iter().map(|s| {
        let items: Vec<String> = s.iter().map(|x| x.to_string()).collect();
        format!("{{{}}}", items.join(","))
    });
    Lattice::new(LatticeTables::new(meet, join, 0, k - 1).with_labels(labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testkit::fixtures;

    fn same_tables(a: &Lattice, b: &Lattice) -> bool {
        let (ta, tb) = (a.tables(), b.tables());
        ta.meet == tb.meet && ta.join == tb.join && ta.bottom == tb.bottom && ta.top == tb.top
    }

    #[test]
    fn point_gives_chain2() {
        let l = downset_lattice(&Poset::new(1, vec![]).unwrap()).unwrap();
        assert!(same_tables(&l, &fixtures::chain2()));
    }

    #[test]
    fn two_chain_gives_chain3() {
        let l = downset_lattice(&Poset::new(2, vec![(0, 1)]).unwrap()).unwrap();
        assert!(same_tables(&l, &fixtures::chain3()));
        assert_eq!(l.labels().unwrap(), &["{}", "{0}", "{0,1}"]);
    }

    #[test]
    fn antichain_gives_b2() {
        let l = downset_lattice(&Poset::new(2, vec![]).unwrap()).unwrap();
        assert!(same_tables(&l, &fixtures::b2()));
    }

    #[test]
    fn empty_poset_gives_trivial_lattice() {
        let l = downset_lattice(&Poset::new(0, vec![]).unwrap()).unwrap();
        assert_eq!(l.len(), 1);
        assert_eq!(l.bottom(), l.top());
    }

    #[test]
    fn cycles_rejected() {
        assert_eq!(
            Poset::new(2, vec![(0, 1), (1, 0)]).unwrap_err(),
            LatticeError::PosetCyclic(0)
        );
        assert_eq!(Poset::new(2, vec![(1, 1)]).unwrap_err(), LatticeError::PosetCyclic(1));
        assert!(matches!(
            Poset::new(3, vec![(0, 1), (1, 2), (2, 0)]),
            Err(LatticeError::PosetCyclic(_))
        ));
    }

    #[test]
    fn closure_and_reduction() {
        let p = Poset::from_order(3, |a, b| a < b).unwrap();
        assert_eq!(p.covers(), &[(0, 1), (1, 2)]);
        assert!(p.le(0, 2));
        assert_eq!(p.up_closure(1).to_vec(), vec![1, 2]);
    }

    #[test]
    fn oversized_antichain_rejected() {
        let p = Poset::new(7, vec![]).unwrap();
        assert!(matches!(downset_lattice(&p), Err(LatticeError::TooLarge(_))));
    }
}
