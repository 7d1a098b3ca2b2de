//! Maximin representations `⟨X, σ, ≽*⟩` and the canonical minimal one.
//!
//! A representation assigns each description `a` the set `σ(a) ⊆ X` of
//! outcomes satisfying it, with `σ` a bounded-lattice homomorphism into the
//! powerset of `X`, and ranks outcomes by a weak order `≽*`. It represents a
//! preference `≽` on the lattice when
//!
//! ```text
//! a ≽ b  iff  ∀x ∈ σ(a) ∃y ∈ σ(b) : x ≽* y
//! ```
//!
//! On finite `X` this reduces to comparing the worst outcome of each side,
//! with `σ(a) = ∅` beating everything vacuously.
//!
//! [`synthesize`] builds the canonical representation: collapse the
//! elements indifferent to `0` with a congruence, take the prime filters of
//! the quotient as outcomes, and rank them with the forward dual order.

mod congruence;

use serde::Serialize;
use thiserror::Error;

pub use congruence::{congruence_beta_dprime, congruence_beta_prime, quotient, Congruence};

use crate::bitset::BitSet;
use crate::duality::dual_forward;
use crate::lattice::{IdealDefect, Lattice, LatticeError, LatticeHom};
use crate::preference::{check_axioms, zero_class, AxiomReport, PreferenceError, WeakOrder, ZeroClass};
use crate::relation::Relation;
use crate::spectrum::SpectralSpace;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RepresentationError {
    #[error("not an ideal: {0}")]
    NotAnIdeal(IdealDefect),
    #[error("partition is not a congruence: {0:?}")]
    IncompatiblePartition([usize; 4]),
    #[error("partition covers {partition} elements but the lattice has {elements}")]
    PartitionLength { partition: usize, elements: usize },
    #[error("preference violates the monotonicity or union axiom")]
    AxiomViolation(AxiomReport),
    #[error("{role} representation does not represent the preference (counterexample {counterexample:?})")]
    NotARepresentation {
        role: &'static str,
        counterexample: Option<(usize, usize)>,
    },
    #[error("congruence merges {0} and {1}, which are not indifferent")]
    SplitsIndifference(usize, usize),
    #[error("synthesized representation fails at ({0}, {1})")]
    VerificationFailed(usize, usize),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Preference(#[from] PreferenceError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Representation {
    pub outcome_count: usize,
    /// `σ(a)` for each lattice element, as outcome indices.
    pub sigma_map: Vec<BitSet>,
    /// `≽*` over outcomes.
    pub outcome_order: WeakOrder,
}

impl Representation {
    pub fn sigma(&self, a: usize) -> BitSet {
        self.sigma_map[a]
    }

    /// `σ` preserves `0 ↦ ∅`, `1 ↦ X`, `∧ ↦ ∩`, `∨ ↦ ∪`.
    pub fn is_homomorphic(&self, lattice: &Lattice) -> bool {
        let s = &self.sigma_map;
        if s.len() != lattice.len()
            || self.outcome_order.len() != self.outcome_count
            || s[lattice.bottom()] != BitSet::EMPTY
            || s[lattice.top()] != BitSet::full(self.outcome_count)
        {
            return false;
        }
        lattice.elements().all(|a| {
            lattice.elements().all(|b| {
                s[lattice.meet(a, b)] == s[a].intersection(s[b])
                    && s[lattice.join(a, b)] == s[a].union(s[b])
            })
        })
    }
}

/// `a ≽ b` evaluated from the quantifiers over outcomes.
pub fn derived_relation(rep: &Representation) -> Relation {
    let order = &rep.outcome_order;
    Relation::from_fn(rep.sigma_map.len(), |a, b| {
        rep.sigma(a)
            .iter()
            .all(|x| rep.sigma(b).iter().any(|y| order.prefers(x, y)))
    })
}

/// Worst outcome rank per element, `None` for `σ(a) = ∅`.
pub fn worst_scores(rep: &Representation) -> Vec<Option<u32>> {
    rep.sigma_map
        .iter()
        .map(|s| s.iter().map(|x| rep.outcome_order.rank(x)).max())
        .collect()
}

/// Fast path: rank by worst outcome, empty images strictly best.
pub fn derive_pref_fast(rep: &Representation) -> WeakOrder {
    let ranks = worst_scores(rep)
        .into_iter()
        .map(|s| s.map_or(0, |r| r + 1))
        .collect();
    WeakOrder::new(ranks).normalized()
}

/// `derive_pref_from_rep`: literal evaluation, compressed to ranks.
pub fn derive_pref_from_rep(rep: &Representation) -> WeakOrder {
    derived_relation(rep)
        .to_weak_order()
        .expect("maximin comparison of a weak order is a total preorder")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Verification {
    pub holds: bool,
    pub homomorphic: bool,
    pub counterexample: Option<(usize, usize)>,
}

/// True iff the representation is homomorphic and induces exactly `order`.
pub fn verify_representation(lattice: &Lattice, order: &WeakOrder, rep: &Representation) -> Verification {
    if !rep.is_homomorphic(lattice) || order.len() != lattice.len() {
        return Verification {
            holds: false,
            homomorphic: false,
            counterexample: None,
        };
    }
    let derived = derived_relation(rep);
    let counterexample = lattice
        .elements()
        .flat_map(|a| lattice.elements().map(move |b| (a, b)))
        .find(|&(a, b)| derived.holds(a, b) != order.prefers(a, b));
    Verification {
        holds: counterexample.is_none(),
        homomorphic: true,
        counterexample,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CongruenceKind {
    /// Ideal-covering congruence; always available, not necessarily minimal.
    BetaPrime,
    /// Annihilator congruence; needs the congruence axiom, yields the minimal one.
    BetaDoublePrime,
}

/// Every stage of the representation pipeline.
#[derive(Clone, Debug)]
pub struct Synthesis {
    pub representation: Representation,
    pub kind: CongruenceKind,
    pub zero_class: ZeroClass,
    pub congruence: Congruence,
    pub quotient: Lattice,
    pub projection: LatticeHom,
    pub quotient_space: SpectralSpace,
    pub axioms: AxiomReport,
}

impl Synthesis {
    pub fn is_minimal(&self) -> bool {
        self.kind == CongruenceKind::BetaDoublePrime
    }
}

/// Runs the pipeline with the annihilator congruence when the congruence
/// axiom holds and falls back to the ideal-covering congruence otherwise.
pub fn synthesize(lattice: &Lattice, order: &WeakOrder) -> Result<Synthesis, RepresentationError> {
    order.check_len(lattice)?;
    let axioms = check_axioms(lattice, order);
    if !axioms.representable() {
        return Err(RepresentationError::AxiomViolation(axioms));
    }
    let kind = if axioms.axiom3.is_empty() {
        CongruenceKind::BetaDoublePrime
    } else {
        CongruenceKind::BetaPrime
    };
    synthesize_with(lattice, order, kind, axioms)
}

/// Pipeline with an explicit congruence choice. Axioms 1-2 must hold;
/// `BetaDoublePrime` additionally needs the congruence axiom.
pub fn synthesize_using(
    lattice: &Lattice,
    order: &WeakOrder,
    kind: CongruenceKind,
) -> Result<Synthesis, RepresentationError> {
    order.check_len(lattice)?;
    let axioms = check_axioms(lattice, order);
    if !axioms.representable() || (kind == CongruenceKind::BetaDoublePrime && !axioms.axiom3.is_empty()) {
        return Err(RepresentationError::AxiomViolation(axioms));
    }
    synthesize_with(lattice, order, kind, axioms)
}

fn synthesize_with(
    lattice: &Lattice,
    order: &WeakOrder,
    kind: CongruenceKind,
    axioms: AxiomReport,
) -> Result<Synthesis, RepresentationError> {
    let zero = zero_class(lattice, order)?;
    let congruence = match kind {
        CongruenceKind::BetaPrime => congruence_beta_prime(lattice, zero.members)?,
        CongruenceKind::BetaDoublePrime => congruence_beta_dprime(lattice, zero.members)?,
    };
    for a in lattice.elements() {
        for b in lattice.elements() {
            if congruence.related(a, b) && !order.indifferent(a, b) {
                return Err(RepresentationError::SplitsIndifference(a, b));
            }
        }
    }
    let (q, projection) = quotient(lattice, &congruence)?;
    let reps = congruence.representatives();
    let induced = WeakOrder::new(reps.iter().map(|&r| order.rank(r)).collect());
    let space = SpectralSpace::new(&q);
    let outcome_order = dual_forward(&space, &induced).into_inner();
    let sigma_map = lattice
        .elements()
        .map(|a| space.sigma(projection.apply(a)))
        .collect();
    let representation = Representation {
        outcome_count: space.point_count(),
        sigma_map,
        outcome_order,
    };
    let check = verify_representation(lattice, order, &representation);
    if !check.holds {
        let (a, b) = check.counterexample.unwrap_or((0, 0));
        return Err(RepresentationError::VerificationFailed(a, b));
    }
    Ok(Synthesis {
        representation,
        kind,
        zero_class: zero,
        congruence,
        quotient: q,
        projection,
        quotient_space: space,
        axioms,
    })
}

/// `minimal_representation(L, W)`; see [`synthesize`] for the congruence choice.
pub fn minimal_representation(
    lattice: &Lattice,
    order: &WeakOrder,
) -> Result<Representation, RepresentationError> {
    synthesize(lattice, order).map(|s| s.representation)
}

/// Result of trying to factor one representation through another.
#[derive(Clone, Debug)]
pub enum FactorOutcome {
    /// `h : im(σ̂) → im(σ)` with `σ = h ∘ σ̂`.
    Factored { hom: Box<LatticeHom>, surjective: bool },
    /// `σ̂(a) = σ̂(b)` but `σ(a) ≠ σ(b)`, so no such `h` exists.
    Refuted { a: usize, b: usize },
}

impl FactorOutcome {
    pub fn is_surjective_hom(&self) -> bool {
        matches!(self, FactorOutcome::Factored { hom, surjective } if *surjective && hom.check())
    }
}

/// Builds `h` on the image lattice of `other`'s `σ̂` by `σ̂(a) ↦ σ(a)`.
pub fn factor_check(
    lattice: &Lattice,
    order: &WeakOrder,
    other: &Representation,
    minimal: &Representation,
) -> Result<FactorOutcome, RepresentationError> {
    for (role, rep) in [("alternative", other), ("minimal", minimal)] {
        let v = verify_representation(lattice, order, rep);
        if !v.holds {
            return Err(RepresentationError::NotARepresentation {
                role,
                counterexample: v.counterexample,
            });
        }
    }
    for a in lattice.elements() {
        for b in (a + 1)..lattice.len() {
            if other.sigma(a) == other.sigma(b) && minimal.sigma(a) != minimal.sigma(b) {
                return Ok(FactorOutcome::Refuted { a, b });
            }
        }
    }
    let (source, src_pos) = Lattice::from_set_family(&other.sigma_map)?;
    let (target, dst_pos) = Lattice::from_set_family(&minimal.sigma_map)?;
    let mut map = vec![usize::MAX; source.len()];
    for a in lattice.elements() {
        map[src_pos[a]] = dst_pos[a];
    }
    let hom = LatticeHom::new(source, target, map)?;
    let surjective = hom.is_surjective();
    Ok(FactorOutcome::Factored {
        hom: Box::new(hom),
        surjective,
    })
}
