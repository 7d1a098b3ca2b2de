//! Named lattices and orders used throughout the tests.

use crate::lattice::{downset_lattice, Lattice, LatticeTables, Poset};
use crate::preference::WeakOrder;

/// Chain `0 < 1 < .. < n-1`.
pub fn chain(n: usize) -> Lattice {
    let meet = (0..n).map(|a| (0..n).map(|b| a.min(b)).collect()).collect();
    let join = (0..n).map(|a| (0..n).map(|b| a.max(b)).collect()).collect();
    Lattice::new(LatticeTables::new(meet, join, 0, n - 1)).expect("chains are distributive")
}

/// The one-element lattice where `0 = 1`.
pub fn trivial() -> Lattice {
    chain(1)
}

pub fn chain2() -> Lattice {
    Lattice::new(chain(2).tables().with_labels(["0", "1"])).unwrap()
}

/// `{0, ½, 1}` with elements 0, 1, 2.
pub fn chain3() -> Lattice {
    Lattice::new(chain(3).tables().with_labels(["0", "½", "1"])).unwrap()
}

/// `{0, a, b, 1}` with `a ∧ b = 0`, `a ∨ b = 1`; elements 0, 1, 2, 3.
pub fn b2() -> Lattice {
    Lattice::new(boolean_algebra(2).tables().with_labels(["0", "a", "b", "1"])).unwrap()
}

/// Boolean algebra on `atoms` atoms, as down-sets of an antichain.
pub fn boolean_algebra(atoms: usize) -> Lattice {
    downset_lattice(&Poset::new(atoms, vec![]).unwrap()).unwrap()
}

/// The diamond: three atoms 1, 2, 3 between 0 and 4. Modular, not
/// distributive.
pub fn m3_tables() -> LatticeTables {
    LatticeTables::from_hasse(5, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
        .unwrap()
        .with_labels(["0", "a", "b", "c", "1"])
}

/// The pentagon `0 < a < c < 1`, `0 < b < 1`; elements 0, a=1, b=2, c=3, 1=4.
pub fn n5_tables() -> LatticeTables {
    LatticeTables::from_hasse(5, &[(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)])
        .unwrap()
        .with_labels(["0", "a", "b", "c", "1"])
}

/// Ranks `0 ↦ 0, ½ ↦ 1, 1 ↦ 2` on [`chain3`].
pub fn w3() -> WeakOrder {
    WeakOrder::new(vec![0, 1, 2])
}
