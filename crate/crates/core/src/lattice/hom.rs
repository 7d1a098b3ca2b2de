use serde::Serialize;

use super::{Lattice, LatticeError};
use crate::bitset::BitSet;
use crate::representation::Congruence;

/// An element map between two lattices. Construction only checks that the
/// map is total and in range; [`LatticeHom::check`] decides homomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeHom {
    source: Lattice,
    target: Lattice,
    map: Vec<usize>,
}

/// First failed preservation condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HomFailure {
    Bottom,
    Top,
    Meet(usize, usize),
    Join(usize, usize),
}

impl LatticeHom {
    pub fn new(source: Lattice, target: Lattice, map: Vec<usize>) -> Result<Self, LatticeError> {
        if map.len() != source.len() {
            return Err(LatticeError::Malformed(format!(
                "map has {} entries for a source of {} elements",
                map.len(),
                source.len()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&x| x >= target.len()) {
            return Err(LatticeError::Malformed(format!(
                "map sends an element to {bad}, outside the target"
            )));
        }
        Ok(LatticeHom {
            source,
            target,
            map,
        })
    }

    pub fn identity(lattice: &Lattice) -> Self {
        LatticeHom {
            source: lattice.clone(),
            target: lattice.clone(),
            map: lattice.elements().collect(),
        }
    }

    pub fn source(&self) -> &Lattice {
        &self.source
    }

    pub fn target(&self) -> &Lattice {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn failure(&self) -> Option<HomFailure> {
        let (s, t, h) = (&self.source, &self.target, &self.map);
        if h[s.bottom()] != t.bottom() {
            return Some(HomFailure::Bottom);
        }
        if h[s.top()] != t.top() {
            return Some(HomFailure::Top);
        }
        for a in s.elements() {
            for b in s.elements() {
                if h[s.meet(a, b)] != t.meet(h[a], h[b]) {
                    return Some(HomFailure::Meet(a, b));
                }
                if h[s.join(a, b)] != t.join(h[a], h[b]) {
                    return Some(HomFailure::Join(a, b));
                }
            }
        }
        None
    }

    /// `check_hom`: bounds, meets, and joins are all preserved.
    pub fn check(&self) -> bool {
        self.failure().is_none()
    }

    pub fn is_surjective(&self) -> bool {
        let image: BitSet = self.map.iter().copied().collect();
        image == self.target.all()
    }

    /// `other ∘ self`
    pub fn then(&self, other: &LatticeHom) -> Result<LatticeHom, LatticeError> {
        if self.target != other.source {
            return Err(LatticeError::Malformed(
                "composition requires matching target and source".into(),
            ));
        }
        let map = self.map.iter().map(|&a| other.map[a]).collect();
        LatticeHom::new(self.source.clone(), other.target.clone(), map)
    }

    /// `ker h = { (a, b) : h(a) = h(b) }` as a partition of the source.
    pub fn kernel(&self) -> Congruence {
        Congruence::from_labels(&self.map)
    }
}

/// `check_hom(h)`
pub fn check_hom(h: &LatticeHom) -> bool {
    h.check()
}
