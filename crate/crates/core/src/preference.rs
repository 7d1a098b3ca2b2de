//! Weak orders over lattice elements and the three preference axioms.
//!
//! Orientation: a [`WeakOrder`] stores one rank per element and **lower rank
//! means more preferred**, so `a ≽ b` iff `rank(a) ≤ rank(b)`. Under the
//! monotonicity axiom (more specific descriptions are weakly preferred) the
//! bottom element `0` always carries the smallest rank.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bitset::BitSet;
use crate::lattice::{IdealDefect, Lattice};
use crate::relation::Relation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PreferenceError {
    #[error("weak order has {ranks} ranks but the lattice has {elements} elements")]
    LengthMismatch { ranks: usize, elements: usize },
    #[error("axioms 1-2 are violated ({} monotonicity, {} union witnesses)", .0.axiom1.len(), .0.axiom2.len())]
    AxiomsNotSatisfied(AxiomReport),
    #[error("zero class is not an ideal: {0}")]
    NotAnIdeal(IdealDefect),
}

/// Complete, transitive relation encoded by ranks (0 = most preferred).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeakOrder {
    ranks: Vec<u32>,
}

impl WeakOrder {
    pub fn new(ranks: Vec<u32>) -> Self {
        WeakOrder { ranks }
    }

    /// Total indifference.
    pub fn constant(n: usize) -> Self {
        WeakOrder { ranks: vec![0; n] }
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    pub fn rank(&self, a: usize) -> u32 {
        self.ranks[a]
    }

    /// `a ≽ b`
    #[inline]
    pub fn prefers(&self, a: usize, b: usize) -> bool {
        self.ranks[a] <= self.ranks[b]
    }

    /// `a ≻ b`
    #[inline]
    pub fn strictly_prefers(&self, a: usize, b: usize) -> bool {
        self.ranks[a] < self.ranks[b]
    }

    /// `a ∼ b`
    #[inline]
    pub fn indifferent(&self, a: usize, b: usize) -> bool {
        self.ranks[a] == self.ranks[b]
    }

    /// Same order with ranks relabelled densely to `0..k`.
    pub fn normalized(&self) -> WeakOrder {
        let mut levels = self.ranks.clone();
        levels.sort_unstable();
        levels.dedup();
        let ranks = self
            .ranks
            .iter()
            .map(|r| levels.binary_search(r).expect("rank is present") as u32)
            .collect();
        WeakOrder { ranks }
    }

    /// Same relation, ignoring rank relabelling.
    pub fn equivalent(&self, other: &WeakOrder) -> bool {
        self.len() == other.len() && self.normalized() == other.normalized()
    }

    pub fn to_relation(&self) -> Relation {
        Relation::from_fn(self.len(), |a, b| self.prefers(a, b))
    }

    pub fn check_len(&self, lattice: &Lattice) -> Result<(), PreferenceError> {
        if self.len() == lattice.len() {
            Ok(())
        } else {
            Err(PreferenceError::LengthMismatch {
                ranks: self.len(),
                elements: lattice.len(),
            })
        }
    }
}

fn require_len(lattice: &Lattice, order: &WeakOrder) {
    if let Err(e) = order.check_len(lattice) {
        panic!("{e}");
    }
}

/// Which elements the axioms quantify over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Scope {
    /// All of `A`.
    Full,
    /// `A ∖ {0}`, the domain of the spectral duality.
    NonZero,
}

impl Scope {
    fn domain(self, lattice: &Lattice) -> BitSet {
        match self {
            Scope::Full => lattice.all(),
            Scope::NonZero => lattice.nonzero(),
        }
    }
}

/// Monotonicity: `a ⊑ b` implies `a ≽ b`. Returns every offending `(a, b)`.
pub fn check_axiom1(lattice: &Lattice, order: &WeakOrder) -> Vec<(usize, usize)> {
    check_axiom1_in(lattice, order, Scope::Full)
}

pub fn check_axiom1_in(lattice: &Lattice, order: &WeakOrder, scope: Scope) -> Vec<(usize, usize)> {
    require_len(lattice, order);
    let domain = scope.domain(lattice);
    let mut out = Vec::new();
    for a in domain {
        for b in lattice.up_set(a).intersection(domain) {
            if !order.prefers(a, b) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Union: `a ≻ b` and `a′ ≻ b` imply `a ∨ a′ ≻ b`. Returns every offending
/// `(a, a′, b)`, both orders of `(a, a′)` included.
pub fn check_axiom2(lattice: &Lattice, order: &WeakOrder) -> Vec<(usize, usize, usize)> {
    check_axiom2_in(lattice, order, Scope::Full)
}

pub fn check_axiom2_in(
    lattice: &Lattice,
    order: &WeakOrder,
    scope: Scope,
) -> Vec<(usize, usize, usize)> {
    require_len(lattice, order);
    let domain = scope.domain(lattice);
    let mut out = Vec::new();
    for a in domain {
        for a2 in domain {
            let joined = lattice.join(a, a2);
            for b in domain {
                if order.strictly_prefers(a, b)
                    && order.strictly_prefers(a2, b)
                    && !order.strictly_prefers(joined, b)
                {
                    out.push((a, a2, b));
                }
            }
        }
    }
    out
}

/// `{ b : a ∧ b ∼ 0 }`
pub fn trivializers(lattice: &Lattice, order: &WeakOrder, a: usize) -> BitSet {
    let zero = lattice.bottom();
    lattice
        .elements()
        .filter(|&b| order.indifferent(lattice.meet(a, b), zero))
        .collect()
}

/// Congruence axiom: elements trivialized by the same further
/// specifications must be indifferent. Returns offending `(a, a′)`, `a < a′`.
pub fn check_axiom3(lattice: &Lattice, order: &WeakOrder) -> Vec<(usize, usize)> {
    require_len(lattice, order);
    let sets: Vec<BitSet> = lattice
        .elements()
        .map(|a| trivializers(lattice, order, a))
        .collect();
    let mut out = Vec::new();
    for a in lattice.elements() {
        for a2 in (a + 1)..lattice.len() {
            if sets[a] == sets[a2] && !order.indifferent(a, a2) {
                out.push((a, a2));
            }
        }
    }
    out
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub axiom1: Vec<(usize, usize)>,
    pub axiom2: Vec<(usize, usize, usize)>,
    pub axiom3: Vec<(usize, usize)>,
}

impl AxiomReport {
    pub fn representable(&self) -> bool {
        self.axiom1.is_empty() && self.axiom2.is_empty()
    }

    pub fn all_hold(&self) -> bool {
        self.representable() && self.axiom3.is_empty()
    }
}

pub fn check_axioms(lattice: &Lattice, order: &WeakOrder) -> AxiomReport {
    AxiomReport {
        axiom1: check_axiom1(lattice, order),
        axiom2: check_axiom2(lattice, order),
        axiom3: check_axiom3(lattice, order),
    }
}

/// Axioms 1 and 2 restricted to `A ∖ {0}`.
pub fn satisfies_axioms_off_bottom(lattice: &Lattice, order: &WeakOrder) -> bool {
    check_axiom1_in(lattice, order, Scope::NonZero).is_empty()
        && check_axiom2_in(lattice, order, Scope::NonZero).is_empty()
}

/// `{ c : c ≻ a } ∪ {0}` with its ideal diagnosis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct UpperContour {
    pub members: BitSet,
    pub is_proper_ideal: bool,
    pub defect: Option<IdealDefect>,
}

pub fn strict_upper_contour(lattice: &Lattice, order: &WeakOrder, a: usize) -> UpperContour {
    require_len(lattice, order);
    let mut members: BitSet = lattice
        .elements()
        .filter(|&c| order.strictly_prefers(c, a))
        .collect();
    members.insert(lattice.bottom());
    let defect = lattice.ideal_defect(members);
    UpperContour {
        members,
        is_proper_ideal: defect.is_none() && !members.contains(lattice.top()),
        defect,
    }
}

/// As [`strict_upper_contour`], but first confirms Axioms 1-2 by a full scan.
pub fn strict_upper_contour_checked(
    lattice: &Lattice,
    order: &WeakOrder,
    a: usize,
) -> Result<UpperContour, PreferenceError> {
    order.check_len(lattice)?;
    let report = AxiomReport {
        axiom1: check_axiom1(lattice, order),
        axiom2: check_axiom2(lattice, order),
        axiom3: Vec::new(),
    };
    if !report.representable() {
        return Err(PreferenceError::AxiomsNotSatisfied(report));
    }
    Ok(strict_upper_contour(lattice, order, a))
}

/// `I = { a : a ∼ 0 }`
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ZeroClass {
    pub members: BitSet,
    /// Greatest element of `I`.
    pub max: usize,
    /// False when `I = A` (total indifference to the impossible description).
    pub proper: bool,
}

pub fn zero_class(lattice: &Lattice, order: &WeakOrder) -> Result<ZeroClass, PreferenceError> {
    order.check_len(lattice)?;
    let zero = lattice.bottom();
    let members: BitSet = lattice
        .elements()
        .filter(|&a| order.indifferent(a, zero))
        .collect();
    if let Some(defect) = lattice.ideal_defect(members) {
        return Err(PreferenceError::NotAnIdeal(defect));
    }
    Ok(ZeroClass {
        members,
        max: lattice.join_all(members),
        proper: !members.contains(lattice.top()),
    })
}
