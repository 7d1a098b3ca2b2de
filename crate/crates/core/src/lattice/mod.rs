//! Finite bounded distributive lattices over dense element indices.
//!
//! A [`Lattice`] is only ever constructed from tables that pass every law in
//! [`validate_laws`], so the rest of the crate can rely on distributivity
//! without re-checking. Elements are `usize` indices `0..n`; labels are
//! display metadata and never affect any computation.
//!
//! The canonical order is `a ⊑ b` iff `a ∧ b = a`. Bitsets of elements
//! (`BitSet`) cap lattices at 64 elements.

mod hom;
mod laws;
mod poset;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::bitset::{BitSet, CAPACITY};

pub use hom::{check_hom, HomFailure, LatticeHom};
pub use laws::{validate_laws, Law, LawReport, LawViolation};
pub use poset::{downset_lattice, Poset};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("{law} fails at elements {witness:?}")]
    LawViolation { law: Law, witness: Vec<usize> },
    #[error("elements {a} and {b} have no {missing}")]
    NotALattice {
        a: usize,
        b: usize,
        missing: &'static str,
    },
    #[error("poset covers contain a cycle through element {0}")]
    PosetCyclic(usize),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("{0} elements exceed the supported maximum of {CAPACITY}")]
    TooLarge(usize),
}

/// Unvalidated meet/join tables, as read from a file or written by hand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeTables {
    pub meet: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
    pub bottom: usize,
    pub top: usize,
    pub labels: Option<Vec<String>>,
}

impl LatticeTables {
    pub fn new(meet: Vec<Vec<usize>>, join: Vec<Vec<usize>>, bottom: usize, top: usize) -> Self {
        LatticeTables {
            meet,
            join,
            bottom,
            top,
            labels: None,
        }
    }

    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Self {
        self.labels = Some(labels.into_iter().map(Into::into).collect());
        self
    }

    pub fn len(&self) -> usize {
        self.meet.len()
    }

    pub fn is_empty(&self) -> bool {
        self.meet.is_empty()
    }

    pub(crate) fn check_shape(&self) -> Result<(), LatticeError> {
        let n = self.meet.len();
        if n == 0 {
            return Err(LatticeError::Malformed("lattice has no elements".into()));
        }
        if n > CAPACITY {
            return Err(LatticeError::TooLarge(n));
        }
        if self.join.len() != n {
            return Err(LatticeError::Malformed(format!(
                "meet table has {n} rows but join table has {}",
                self.join.len()
            )));
        }
        for (name, table) in [("meet", &self.meet), ("join", &self.join)] {
            for (i, row) in table.iter().enumerate() {
                if row.len() != n {
                    return Err(LatticeError::Malformed(format!(
                        "{name} row {i} has {} entries, expected {n}",
                        row.len()
                    )));
                }
                if let Some(&bad) = row.iter().find(|&&x| x >= n) {
                    return Err(LatticeError::Malformed(format!(
                        "{name} row {i} references element {bad} outside 0..{n}"
                    )));
                }
            }
        }
        if self.bottom >= n || self.top >= n {
            return Err(LatticeError::Malformed(format!(
                "bottom {} / top {} outside 0..{n}",
                self.bottom, self.top
            )));
        }
        if let Some(labels) = &self.labels {
            if labels.len() != n {
                return Err(LatticeError::Malformed(format!(
                    "{} labels for {n} elements",
                    labels.len()
                )));
            }
        }
        Ok(())
    }

    /// Builds tables from a Hasse diagram given as `(lower, upper)` cover
    /// pairs, computing every meet and join from the induced order.
    pub fn from_hasse(n: usize, covers: &[(usize, usize)]) -> Result<Self, LatticeError> {
        let poset = Poset::new(n, covers.to_vec())?;
        let below: Vec<BitSet> = (0..n).map(|i| poset.down_closure(i)).collect();
        let above: Vec<BitSet> = (0..n).map(|i| poset.up_closure(i)).collect();

        let mut meet = vec![vec![0; n]; n];
        let mut join = vec![vec![0; n]; n];
        for a in 0..n {
            for b in 0..n {
                let lower = below[a].intersection(below[b]);
                meet[a][b] = lower
                    .iter()
                    .find(|&g| lower.is_subset(below[g]))
                    .ok_or(LatticeError::NotALattice {
                        a,
                        b,
                        missing: "greatest lower bound",
                    })?;
                let upper = above[a].intersection(above[b]);
                join[a][b] = upper
                    .iter()
                    .find(|&l| upper.is_subset(above[l]))
                    .ok_or(LatticeError::NotALattice {
                        a,
                        b,
                        missing: "least upper bound",
                    })?;
            }
        }
        let full = BitSet::full(n);
        let bottom = (0..n).find(|&i| above[i] == full);
        let top = (0..n).find(|&i| below[i] == full);
        match (bottom, top) {
            (Some(bottom), Some(top)) => Ok(LatticeTables::new(meet, join, bottom, top)),
            _ => Err(LatticeError::NotALattice {
                a: 0,
                b: 0,
                missing: "global bound",
            }),
        }
    }
}

/// A validated finite bounded distributive lattice.
#[derive(Clone, PartialEq, Eq)]
pub struct Lattice {
    n: usize,
    meet: Vec<usize>,
    join: Vec<usize>,
    bottom: usize,
    top: usize,
    labels: Option<Vec<String>>,
    up: Vec<BitSet>,
    down: Vec<BitSet>,
}

/// Relative complement of `a` with respect to `a′`: `c` with
/// `a ∨ c = a ∨ a′` and `a ∧ c = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RelativeComplement {
    /// The ⊑-least witness (lowest index if none is least).
    pub element: usize,
    pub multiplicity: usize,
}

/// Why a subset fails to be an ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IdealDefect {
    Empty,
    NotDownClosed { member: usize, below: usize },
    NotJoinClosed { left: usize, right: usize },
}

impl fmt::Display for IdealDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdealDefect::Empty => write!(f, "set is empty"),
            IdealDefect::NotDownClosed { member, below } => {
                write!(f, "{below} ⊑ {member} but {below} is missing")
            }
            IdealDefect::NotJoinClosed { left, right } => {
                write!(f, "join of {left} and {right} is missing")
            }
        }
    }
}

/// `build_lattice(meet_table, join_table, bottom, top)`.
pub fn build_lattice(
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
    bottom: usize,
    top: usize,
) -> Result<Lattice, LatticeError> {
    Lattice::new(LatticeTables::new(meet, join, bottom, top))
}

impl Lattice {
    pub fn new(tables: LatticeTables) -> Result<Self, LatticeError> {
        let report = validate_laws(&tables)?;
        if let Some(v) = report.violations.into_iter().next() {
            return Err(LatticeError::LawViolation {
                law: v.law,
                witness: v.witness,
            });
        }
        let n = tables.len();
        let meet: Vec<usize> = tables.meet.concat();
        let join: Vec<usize> = tables.join.concat();
        let up = (0..n)
            .map(|a| (0..n).filter(|&b| meet[a * n + b] == a).collect())
            .collect();
        let down = (0..n)
            .map(|a| (0..n).filter(|&b| meet[b * n + a] == b).collect())
            .collect();
        Ok(Lattice {
            n,
            meet,
            join,
            bottom: tables.bottom,
            top: tables.top,
            labels: tables.labels,
            up,
            down,
        })
    }

    pub fn from_hasse(n: usize, covers: &[(usize, usize)]) -> Result<Self, LatticeError> {
        Lattice::new(LatticeTables::from_hasse(n, covers)?)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    /// Always false; a lattice has at least one element. Present for clippy.
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn all(&self) -> BitSet {
        BitSet::full(self.n)
    }

    /// All elements except the bottom.
    pub fn nonzero(&self) -> BitSet {
        let mut s = self.all();
        s.remove(self.bottom);
        s
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.n + b]
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.n + b]
    }

    /// `a ⊑ b` iff `a ∧ b = a`.
    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.meet(a, b) == a
    }

    /// `{ b : a ⊑ b }`
    pub fn up_set(&self, a: usize) -> BitSet {
        self.up[a]
    }

    /// `{ b : b ⊑ a }`
    pub fn down_set(&self, a: usize) -> BitSet {
        self.down[a]
    }

    /// Join of a set; the bottom for the empty set.
    pub fn join_all(&self, set: BitSet) -> usize {
        set.iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// Meet of a set; the top for the empty set.
    pub fn meet_all(&self, set: BitSet) -> usize {
        set.iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, a: usize) -> String {
        match &self.labels {
            Some(labels) => labels[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn tables(&self) -> LatticeTables {
        let rows = |t: &[usize]| t.chunks(self.n).map(<[usize]>::to_vec).collect();
        LatticeTables {
            meet: rows(&self.meet),
            join: rows(&self.join),
            bottom: self.bottom,
            top: self.top,
            labels: self.labels.clone(),
        }
    }

    pub fn relative_complement(&self, a: usize, a_prime: usize) -> Option<RelativeComplement> {
        let target = self.join(a, a_prime);
        let witnesses: BitSet = self
            .elements()
            .filter(|&c| self.join(a, c) == target && self.meet(a, c) == self.bottom)
            .collect();
        let least = witnesses
            .iter()
            .find(|&c| witnesses.is_subset(self.up[c]))
            .or_else(|| witnesses.first())?;
        Some(RelativeComplement {
            element: least,
            multiplicity: witnesses.len(),
        })
    }

    /// Some `c` with `a ∧ c = 0` and `a ∨ c = 1`.
    pub fn complement(&self, a: usize) -> Option<usize> {
        self.elements()
            .find(|&c| self.meet(a, c) == self.bottom && self.join(a, c) == self.top)
    }

    pub fn is_boolean(&self) -> bool {
        self.elements().all(|a| self.complement(a).is_some())
    }

    /// True when every pair `(a, a′)` has a relative complement.
    pub fn has_relative_complements(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.relative_complement(a, b).is_some()))
    }

    /// First reason `set` is not an ideal (non-empty, down-closed,
    /// join-closed), or `None` if it is one.
    pub fn ideal_defect(&self, set: BitSet) -> Option<IdealDefect> {
        if set.is_empty() {
            return Some(IdealDefect::Empty);
        }
        for member in set {
            if let Some(below) = self.down[member].difference(set).first() {
                return Some(IdealDefect::NotDownClosed { member, below });
            }
        }
        for left in set {
            for right in set {
                if !set.contains(self.join(left, right)) {
                    return Some(IdealDefect::NotJoinClosed { left, right });
                }
            }
        }
        None
    }

    pub fn is_ideal(&self, set: BitSet) -> bool {
        self.ideal_defect(set).is_none()
    }

    /// The element indices of a lattice built from a single `BitSet`-valued
    /// map, used when a homomorphic image has to be materialized.
    pub(crate) fn from_set_family(family: &[BitSet]) -> Result<(Lattice, Vec<usize>), LatticeError> {
        let mut distinct: Vec<BitSet> = family.to_vec();
        distinct.sort();
        distinct.dedup();
        let index = |s: BitSet| {
            distinct.binary_search(&s).map_err(|_| {
                LatticeError::Malformed(format!("set family is not closed: {s:?} missing"))
            })
        };
        let k = distinct.len();
        let mut meet = vec![vec![0; k]; k];
        let mut join = vec![vec![0; k]; k];
        for (i, &x) in distinct.iter().enumerate() {
            for (j, &y) in distinct.iter().enumerate() {
                meet[i][j] = index(x.intersection(y))?;
                join[i][j] = index(x.union(y))?;
            }
        }
        let labels: Vec<String> = distinct
            .iter()
            .map(|s| {
                let items: Vec<String> = s.iter().map(|i| i.to_string()).collect();
                format!("{{{}}}", items.join(","))
            })
            .collect();
        // sorted by integer value, so the empty set is first and the largest set last
        let tables = LatticeTables::new(meet, join, 0, k - 1).with_labels(labels);
        let lattice = Lattice::new(tables)?;
        let positions = family
            .iter()
            .map(|&s| index(s))
            .collect::<Result<Vec<_>, _>>()?;
        Ok((lattice, positions))
    }
}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Lattice")
            .field("n", &self.n)
            .field("bottom", &self.bottom)
            .field("top", &self.top)
            .field("labels", &self.labels)
            .finish_non_exhaustive()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testkit::fixtures;

    #[test]
    fn chain3_order() {
        let l = fixtures::chain3();
        assert!(l.leq(0, 1) && l.leq(1, 2) && l.leq(0, 2));
        assert!(!l.leq(2, 1));
        assert!(l.leq(1, 2), "half below one");
        for a in l.elements() {
            assert!(l.leq(a, a));
        }
    }

    #[test]
    fn chain2_has_only_bounds() {
        let l = fixtures::chain2();
        assert_eq!(l.len(), 2);
        assert_eq!((l.bottom(), l.top()), (0, 1));
    }

    #[test]
    fn b2_atoms_incomparable() {
        let l = fixtures::b2();
        assert!(!l.leq(1, 2));
        assert!(!l.leq(2, 1));
    }

    #[test]
    fn m3_rejected_with_atom_witness() {
        match Lattice::new(fixtures::m3_tables()) {
            Err(LatticeError::LawViolation { law, witness }) => {
                assert_eq!(law, Law::Distributivity);
                assert_eq!(witness, vec![1, 2, 3]);
            }
            other => panic!("expected distributivity violation, got {other:?}"),
        }
    }

    #[test]
    fn n5_report_is_distributivity_only() {
        let tables = fixtures::n5_tables();
        let report = validate_laws(&tables).unwrap();
        assert_eq!(report.violations.len(), 1);
        let v = report.get(Law::Distributivity).unwrap();
        let (a, b, c) = (v.witness[0], v.witness[1], v.witness[2]);
        let (m, j) = (&tables.meet, &tables.join);
        assert!(m[a][j[b][c]] != j[m[a][b]][m[a][c]] || j[a][m[b][c]] != m[j[a][b]][j[a][c]]);
    }

    #[test]
    fn distributive_fixtures_pass() {
        for l in [fixtures::chain2(), fixtures::chain3(), fixtures::b2()] {
            assert!(validate_laws(&l.tables()).unwrap().is_empty());
        }
    }

    #[test]
    fn shape_errors() {
        let t = LatticeTables::new(vec![vec![0, 0], vec![0]], vec![vec![0, 1], vec![1, 1]], 0, 1);
        assert!(matches!(validate_laws(&t), Err(LatticeError::Malformed(_))));
        let t = LatticeTables::new(vec![vec![0, 5], vec![0, 1]], vec![vec![0, 1], vec![1, 1]], 0, 1);
        assert!(matches!(Lattice::new(t), Err(LatticeError::Malformed(_))));
        let t = LatticeTables::new(vec![], vec![], 0, 0);
        assert!(matches!(Lattice::new(t), Err(LatticeError::Malformed(_))));
    }

    #[test]
    fn wrong_bounds_rejected() {
        let mut t = fixtures::chain3().tables();
        t.top = 1;
        assert!(matches!(
            Lattice::new(t),
            Err(LatticeError::LawViolation { law: Law::Bounds, witness }) if witness == vec![2]
        ));
    }

    #[test]
    fn hasse_converter_detects_non_lattices() {
        // two maximal elements, no top
        let err = LatticeTables::from_hasse(3, &[(0, 1), (0, 2)]).unwrap_err();
        assert!(matches!(err, LatticeError::NotALattice { a: 1, b: 2, .. }));
        // bowtie: 0,1 below 2,3 has no least upper bound for 0 and 1
        let err = LatticeTables::from_hasse(4, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap_err();
        assert!(matches!(err, LatticeError::NotALattice { .. }));
    }

    #[test]
    fn relative_complements() {
        let b2 = fixtures::b2();
        assert_eq!(b2.relative_complement(1, 2).unwrap().element, 2);
        let c3 = fixtures::chain3();
        for a in c3.elements() {
            assert_eq!(c3.relative_complement(a, a).unwrap().element, c3.bottom());
        }
        assert_eq!(c3.relative_complement(1, 2), None);
        assert!(b2.has_relative_complements());
        assert!(!c3.has_relative_complements());
    }

    #[test]
    fn boolean_detection() {
        assert!(fixtures::b2().is_boolean());
        assert!(fixtures::chain2().is_boolean());
        assert!(!fixtures::chain3().is_boolean());
        assert!(fixtures::boolean_algebra(3).is_boolean());
    }

    #[test]
    fn ideal_defects() {
        let b2 = fixtures::b2();
        assert!(b2.is_ideal(BitSet::from_bits(0b0011)));
        assert_eq!(b2.ideal_defect(BitSet::EMPTY), Some(IdealDefect::Empty));
        assert_eq!(
            b2.ideal_defect(BitSet::from_bits(0b0010)),
            Some(IdealDefect::NotDownClosed { member: 1, below: 0 })
        );
        assert_eq!(
            b2.ideal_defect(BitSet::from_bits(0b0111)),
            Some(IdealDefect::NotJoinClosed { left: 1, right: 2 })
        );
    }

    #[test]
    fn set_family_lattice() {
        let family = [
            BitSet::EMPTY,
            BitSet::from_bits(0b01),
            BitSet::from_bits(0b11),
            BitSet::from_bits(0b01),
        ];
        let (l, pos) = Lattice::from_set_family(&family).unwrap();
        assert_eq!(l.len(), 3);
        assert_eq!(pos, vec![0, 1, 2, 1]);
        let open = [BitSet::from_bits(0b01), BitSet::from_bits(0b10)];
        assert!(Lattice::from_set_family(&open).is_err());
    }
}
