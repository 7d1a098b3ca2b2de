//! Lattice congruences, the two ideal-induced congruences used by the
//! representation pipeline, and quotient lattices.

use crate::bitset::BitSet;
use crate::lattice::{Lattice, LatticeHom, LatticeTables};

use super::RepresentationError;

/// A partition of `0..n` with classes numbered by their least member, so
/// class `k`'s representative is the smallest element mapped to `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Congruence {
    class_of: Vec<usize>,
}

impl Congruence {
    /// Canonicalizes arbitrary class labels.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut seen: Vec<usize> = Vec::new();
        let class_of = labels
            .iter()
            .map(|l| match seen.iter().position(|s| s == l) {
                Some(k) => k,
                None => {
                    seen.push(*l);
                    seen.len() - 1
                }
            })
            .collect();
        Congruence { class_of }
    }

    pub fn identity(n: usize) -> Self {
        Congruence {
            class_of: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    pub fn labels(&self) -> &[usize] {
        &self.class_of
    }

    pub fn class_count(&self) -> usize {
        self.class_of.iter().max().map_or(0, |m| m + 1)
    }

    pub fn related(&self, a: usize, b: usize) -> bool {
        self.class_of[a] == self.class_of[b]
    }

    /// `[a]`
    pub fn class(&self, a: usize) -> BitSet {
        let k = self.class_of[a];
        (0..self.len()).filter(|&x| self.class_of[x] == k).collect()
    }

    pub fn classes(&self) -> Vec<BitSet> {
        let mut out = vec![BitSet::EMPTY; self.class_count()];
        for (x, &k) in self.class_of.iter().enumerate() {
            out[k].insert(x);
        }
        out
    }

    pub fn representatives(&self) -> Vec<usize> {
        self.classes()
            .iter()
            .map(|c| c.first().expect("classes are non-empty"))
            .collect()
    }

    /// Every pair related here is related in `coarser`.
    pub fn refines(&self, coarser: &Congruence) -> bool {
        self.len() == coarser.len()
            && (0..self.len()).all(|a| {
                (0..self.len()).all(|b| !self.related(a, b) || coarser.related(a, b))
            })
    }

    /// `(a, b, c, c)` with `a ≈ b` but `a ∧ c ≉ b ∧ c` or `a ∨ c ≉ b ∨ c`.
    /// Single-sided substitution suffices for an equivalence relation.
    pub fn compatibility_defect(&self, lattice: &Lattice) -> Option<[usize; 4]> {
        for a in lattice.elements() {
            for b in lattice.elements() {
                if a == b || !self.related(a, b) {
                    continue;
                }
                for c in lattice.elements() {
                    if !self.related(lattice.meet(a, c), lattice.meet(b, c))
                        || !self.related(lattice.join(a, c), lattice.join(b, c))
                    {
                        return Some([a, b, c, c]);
                    }
                }
            }
        }
        None
    }

    pub fn is_compatible(&self, lattice: &Lattice) -> bool {
        self.compatibility_defect(lattice).is_none()
    }
}

fn require_ideal(lattice: &Lattice, ideal: BitSet) -> Result<(), RepresentationError> {
    match lattice.ideal_defect(ideal) {
        Some(defect) => Err(RepresentationError::NotAnIdeal(defect)),
        None => Ok(()),
    }
}

/// Partition of a relation known to be an equivalence.
fn partition_by(n: usize, related: impl Fn(usize, usize) -> bool) -> Congruence {
    let mut reps: Vec<usize> = Vec::new();
    let labels: Vec<usize> = (0..n)
        .map(|a| match reps.iter().position(|&r| related(a, r)) {
            Some(k) => k,
            None => {
                reps.push(a);
                reps.len() - 1
            }
        })
        .collect();
    Congruence { class_of: labels }
}

/// `a β′ b` iff `b ⊑ a ∨ c` and `a ⊑ b ∨ c′` for some `c, c′ ∈ I`.
pub fn congruence_beta_prime(
    lattice: &Lattice,
    ideal: BitSet,
) -> Result<Congruence, RepresentationError> {
    require_ideal(lattice, ideal)?;
    let covered = |x: usize, y: usize| ideal.iter().any(|c| lattice.leq(x, lattice.join(y, c)));
    let related = |a: usize, b: usize| covered(b, a) && covered(a, b);
    let congruence = partition_by(lattice.len(), related);
    debug_assert!(lattice.elements().all(|a| lattice
        .elements()
        .all(|b| related(a, b) == congruence.related(a, b))));
    Ok(congruence)
}

/// `a β″ b` iff `{ c : a ∧ c ∈ I } = { c : b ∧ c ∈ I }`.
pub fn congruence_beta_dprime(
    lattice: &Lattice,
    ideal: BitSet,
) -> Result<Congruence, RepresentationError> {
    require_ideal(lattice, ideal)?;
    let annihilators: Vec<BitSet> = lattice
        .elements()
        .map(|a| {
            lattice
                .elements()
                .filter(|&c| ideal.contains(lattice.meet(a, c)))
                .collect()
        })
        .collect();
    Ok(partition_by(lattice.len(), |a, b| annihilators[a] == annihilators[b]))
}

/// `A/≈` with the canonical map `a ↦ [a]`. Quotient element `k` is class
/// `k` of the congruence.
pub fn quotient(
    lattice: &Lattice,
    congruence: &Congruence,
) -> Result<(Lattice, LatticeHom), RepresentationError> {
    if congruence.len() != lattice.len() {
        return Err(RepresentationError::PartitionLength {
            partition: congruence.len(),
            elements: lattice.len(),
        });
    }
    if let Some(w) = congruence.compatibility_defect(lattice) {
        return Err(RepresentationError::IncompatiblePartition(w));
    }
    let reps = congruence.representatives();
    let k = reps.len();
    let cls = |x: usize| congruence.class_of(x);
    let meet = (0..k)
        .map(|i| (0..k).map(|j| cls(lattice.meet(reps[i], reps[j]))).collect())
        .collect();
    let join = (0..k)
        .map(|i| (0..k).map(|j| cls(lattice.join(reps[i], reps[j]))).collect())
        .collect();
    let labels = reps.iter().map(|&r| format!("[{}]", lattice.label(r)));
    let tables = LatticeTables::new(meet, join, cls(lattice.bottom()), cls(lattice.top()))
        .with_labels(labels);
    let q = Lattice::new(tables)?;
    let h = LatticeHom::new(lattice.clone(), q.clone(), congruence.labels().to_vec())?;
    Ok((q, h))
}
