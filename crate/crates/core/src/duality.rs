//! Dual orders between a lattice and its spectrum.
//!
//! Given a weak order `≽` on `A ∖ {0}`:
//!
//! * forward: `F ≽→ G` iff `∀b ∈ G ∃a ∈ F : a ≽ b`
//! * backward: `a ≽← b` iff `∀F ∈ σ(a) ∃G ∈ σ(b) : F ≽ G`
//!
//! The round trip `≽⇄` recovers `≽` exactly when the monotonicity and union
//! axioms hold on `A ∖ {0}`. Every order here is over the full carrier for
//! indexing convenience; the bottom element's rank is ignored.
//!
//! Both directions are evaluated literally from their quantifiers. The
//! forward order also has a closed form on finite spectra: `F ≽→ G` iff the
//! best-ranked member of `F` is at least as good as that of `G`.

use serde::Serialize;
use thiserror::Error;

use crate::bitset::BitSet;
use crate::lattice::Lattice;
use crate::preference::{satisfies_axioms_off_bottom, WeakOrder};
use crate::relation::Relation;
use crate::spectrum::{PrimeFilter, SpectralSpace};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DualityError {
    #[error("σ({0}) is empty for a non-bottom element")]
    EmptySigma(usize),
}

/// Weak order over spectrum points (rank 0 = most preferred).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct PointOrder(WeakOrder);

impl PointOrder {
    pub fn new(ranks: Vec<u32>) -> Self {
        PointOrder(WeakOrder::new(ranks))
    }

    pub fn order(&self) -> &WeakOrder {
        &self.0
    }

    pub fn ranks(&self) -> &[u32] {
        self.0.ranks()
    }

    pub fn prefers(&self, f: usize, g: usize) -> bool {
        self.0.prefers(f, g)
    }

    pub fn into_inner(self) -> WeakOrder {
        self.0
    }
}

/// `F ≽→ G` evaluated from its quantifiers.
pub fn dual_forward_relation(space: &SpectralSpace, order: &WeakOrder) -> Relation {
    let pts = space.points();
    Relation::from_fn(pts.len(), |f, g| {
        pts[g]
            .members
            .iter()
            .all(|b| pts[f].members.iter().any(|a| order.prefers(a, b)))
    })
}

/// Best (lowest) rank among each point's members.
pub fn forward_scores(space: &SpectralSpace, order: &WeakOrder) -> Vec<u32> {
    space
        .points()
        .iter()
        .map(|p| {
            p.members
                .iter()
                .map(|a| order.rank(a))
                .min()
                .expect("prime filters are non-empty")
        })
        .collect()
}

/// Fast path: forward order from best-member scores.
pub fn dual_forward_fast(space: &SpectralSpace, order: &WeakOrder) -> PointOrder {
    PointOrder(WeakOrder::new(forward_scores(space, order)).normalized())
}

/// `dual_forward`: literal evaluation, compressed to ranks.
pub fn dual_forward(space: &SpectralSpace, order: &WeakOrder) -> PointOrder {
    let relation = dual_forward_relation(space, order);
    let ranks = relation
        .to_weak_order()
        .expect("forward dual of a weak order on a finite spectrum is a total preorder");
    PointOrder(ranks)
}

/// `a ≽← b` over all elements. Rows and columns for the bottom follow the
/// vacuous reading (`σ(0) = ∅`) and are not part of the duality's domain.
pub fn dual_backward(space: &SpectralSpace, points: &PointOrder) -> Result<Relation, DualityError> {
    let l = space.lattice();
    if let Some(a) = l.nonzero().iter().find(|&a| space.sigma(a).is_empty()) {
        return Err(DualityError::EmptySigma(a));
    }
    Ok(Relation::from_fn(l.len(), |a, b| {
        space
            .sigma(a)
            .iter()
            .all(|f| space.sigma(b).iter().any(|g| points.prefers(f, g)))
    }))
}

/// Outcome of the round trip `≽ ↦ ≽→ ↦ ≽⇄`.
#[derive(Clone, Debug)]
pub struct DualityCertificate {
    pub lattice: Lattice,
    pub order: WeakOrder,
    pub forward: PointOrder,
    pub roundtrip: Relation,
    /// True iff `≽⇄` equals `≽` on `A ∖ {0}`.
    pub agreement: bool,
    /// First `(a, b)` in row-major order where the two relations differ.
    pub counterexample: Option<(usize, usize)>,
}

pub fn roundtrip_check(lattice: &Lattice, order: &WeakOrder) -> DualityCertificate {
    let space = SpectralSpace::new(lattice);
    roundtrip_in(&space, order)
}

pub fn roundtrip_in(space: &SpectralSpace, order: &WeakOrder) -> DualityCertificate {
    let lattice = space.lattice();
    let forward = dual_forward(space, order);
    let roundtrip =
        dual_backward(space, &forward).expect("σ(a) is non-empty for a ≠ 0 in a distributive lattice");
    let domain = lattice.nonzero();
    let counterexample = domain
        .iter()
        .flat_map(|a| domain.iter().map(move |b| (a, b)))
        .find(|&(a, b)| roundtrip.holds(a, b) != order.prefers(a, b));
    DualityCertificate {
        lattice: lattice.clone(),
        order: order.clone(),
        forward,
        roundtrip,
        agreement: counterexample.is_none(),
        counterexample,
    }
}

/// First `G ∈ σ(b)` with `a ≽ b′` for every `b′ ∈ G`.
pub fn filter_witness(
    space: &SpectralSpace,
    order: &WeakOrder,
    a: usize,
    b: usize,
) -> Option<PrimeFilter> {
    space
        .sigma(b)
        .iter()
        .map(|g| space.points()[g])
        .find(|g| g.members.iter().all(|b2| order.prefers(a, b2)))
}

/// The three conditions whose equivalence the duality asserts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DualityConditions {
    pub axioms: bool,
    pub roundtrip: bool,
    pub witnesses: bool,
}

impl DualityConditions {
    pub fn consistent(&self) -> bool {
        self.axioms == self.roundtrip && self.roundtrip == self.witnesses
    }
}

pub fn duality_conditions(space: &SpectralSpace, order: &WeakOrder) -> DualityConditions {
    let lattice = space.lattice();
    let domain: BitSet = lattice.nonzero();
    let witnesses = domain.iter().all(|a| {
        domain
            .iter()
            .all(|b| filter_witness(space, order, a, b).is_some() == order.prefers(a, b))
    });
    DualityConditions {
        axioms: satisfies_axioms_off_bottom(lattice, order),
        roundtrip: roundtrip_in(space, order).agreement,
        witnesses,
    }
}
