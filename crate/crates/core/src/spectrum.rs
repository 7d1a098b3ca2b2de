//! Prime filters, the spectral space `X_A`, the map `σ_A`, and the finite
//! spectral topology.
//!
//! Points are stored in canonical order: ascending by the integer value of
//! their member bitset. For the three-element chain `{0, ½, 1}` that puts
//! `x = {1}` before `y = {½, 1}`.

use serde::Serialize;
use thiserror::Error;

use crate::bitset::BitSet;
use crate::lattice::Lattice;

/// Brute-force subset enumeration is limited to lattices of this size.
pub const MAX_BRUTE_FORCE: usize = 20;
/// Topologies are only materialized up to this many points.
pub const MAX_TOPOLOGY_POINTS: usize = 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectrumError {
    #[error("subset enumeration over {0} elements is beyond the limit of {MAX_BRUTE_FORCE}")]
    TooLarge(usize),
}

/// Filter and ideal properties of an arbitrary subset.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SubsetClass {
    pub filter: bool,
    pub proper_filter: bool,
    pub prime_filter: bool,
    pub ideal: bool,
    pub proper_ideal: bool,
    pub prime_ideal: bool,
}

pub fn classify_subset(lattice: &Lattice, set: BitSet) -> SubsetClass {
    let all = lattice.all();
    let filter = !set.is_empty()
        && set.iter().all(|a| lattice.up_set(a).is_subset(set))
        && set
            .iter()
            .all(|a| set.iter().all(|b| set.contains(lattice.meet(a, b))));
    let proper_filter = filter && set != all;
    let prime_filter = proper_filter && join_prime(lattice, set);

    let ideal = lattice.is_ideal(set);
    let proper_ideal = ideal && set != all;
    let prime_ideal = proper_ideal
        && lattice.elements().all(|a| {
            lattice.elements().all(|b| {
                !set.contains(lattice.meet(a, b)) || set.contains(a) || set.contains(b)
            })
        });

    SubsetClass {
        filter,
        proper_filter,
        prime_filter,
        ideal,
        proper_ideal,
        prime_ideal,
    }
}

fn join_prime(lattice: &Lattice, set: BitSet) -> bool {
    lattice.elements().all(|a| {
        lattice.elements().all(|b| {
            !set.contains(lattice.join(a, b)) || set.contains(a) || set.contains(b)
        })
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PrimeFilter {
    pub members: BitSet,
}

impl PrimeFilter {
    pub fn contains(&self, a: usize) -> bool {
        self.members.contains(a)
    }
}

/// Non-bottom elements `j` with `j = x ∨ y ⇒ j ∈ {x, y}`.
pub fn join_irreducibles(lattice: &Lattice) -> BitSet {
    lattice
        .elements()
        .filter(|&j| j != lattice.bottom())
        .filter(|&j| {
            lattice.elements().all(|x| {
                lattice
                    .elements()
                    .all(|y| lattice.join(x, y) != j || x == j || y == j)
            })
        })
        .collect()
}

/// Prime filters by checking every subset of the carrier. Independent of the
/// join-irreducible route used by [`enumerate_prime_filters`].
pub fn prime_filters_by_subsets(lattice: &Lattice) -> Result<Vec<PrimeFilter>, SpectrumError> {
    let n = lattice.len();
    if n > MAX_BRUTE_FORCE {
        return Err(SpectrumError::TooLarge(n));
    }
    Ok((0..(1u64 << n))
        .map(BitSet::from_bits)
        .filter(|&s| classify_subset(lattice, s).prime_filter)
        .map(|members| PrimeFilter { members })
        .collect())
}

/// The spectral space of a lattice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralSpace {
    lattice: Lattice,
    points: Vec<PrimeFilter>,
    sigma: Vec<BitSet>,
    basis: Vec<BitSet>,
}

/// Builds `X_A` from the principal filters `↑j` of the join-irreducibles.
pub fn enumerate_prime_filters(lattice: &Lattice) -> SpectralSpace {
    let mut points: Vec<PrimeFilter> = join_irreducibles(lattice)
        .iter()
        .map(|j| PrimeFilter {
            members: lattice.up_set(j),
        })
        .collect();
    points.sort();
    SpectralSpace::from_points(lattice.clone(), points)
}

impl SpectralSpace {
    pub fn new(lattice: &Lattice) -> Self {
        enumerate_prime_filters(lattice)
    }

    /// Assembles a space from an explicit point list (sorted canonically).
    pub fn from_points(lattice: Lattice, mut points: Vec<PrimeFilter>) -> Self {
        points.sort();
        let sigma: Vec<BitSet> = lattice
            .elements()
            .map(|a| (0..points.len()).filter(|&i| points[i].contains(a)).collect())
            .collect();
        let mut basis = sigma.clone();
        basis.sort();
        basis.dedup();
        SpectralSpace {
            lattice,
            points,
            sigma,
            basis,
        }
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn points(&self) -> &[PrimeFilter] {
        &self.points
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    pub fn all_points(&self) -> BitSet {
        BitSet::full(self.points.len())
    }

    /// `σ(a)`: indices of the points containing `a`.
    pub fn sigma(&self, a: usize) -> BitSet {
        self.sigma[a]
    }

    pub fn sigma_map(&self) -> &[BitSet] {
        &self.sigma
    }

    /// Distinct `σ`-images, ascending.
    pub fn basis(&self) -> &[BitSet] {
        &self.basis
    }
}

/// `sigma(S, a)`
pub fn sigma(space: &SpectralSpace, a: usize) -> BitSet {
    space.sigma(a)
}

/// `σ` is injective and sends bounds, meets, and joins to `∅`, `X`, `∩`, `∪`.
pub fn check_sigma_isomorphism(space: &SpectralSpace) -> bool {
    let l = &space.lattice;
    let s = &space.sigma;
    if s[l.bottom()] != BitSet::EMPTY || s[l.top()] != space.all_points() {
        return false;
    }
    for a in l.elements() {
        for b in l.elements() {
            if s[l.meet(a, b)] != s[a].intersection(s[b]) || s[l.join(a, b)] != s[a].union(s[b]) {
                return false;
            }
            if a != b && s[a] == s[b] {
                return false;
            }
        }
    }
    true
}

/// Whether each basis set is also closed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BasisClosure {
    pub set: BitSet,
    pub closed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TopologyReport {
    /// Every open set, ascending; `None` above [`MAX_TOPOLOGY_POINTS`].
    pub open_sets: Option<Vec<BitSet>>,
    pub hausdorff: bool,
    pub basis: Vec<BasisClosure>,
}

impl TopologyReport {
    pub fn is_clopen(&self, set: BitSet) -> Option<bool> {
        self.basis.iter().find(|b| b.set == set).map(|b| b.closed)
    }
}

/// Topology generated by the `σ`-image. Openness of a set is decided by
/// whether it equals the union of the basis sets it contains.
pub fn finite_topology_report(space: &SpectralSpace) -> TopologyReport {
    let basis = space.basis();
    let all = space.all_points();
    let is_open = |set: BitSet| {
        basis
            .iter()
            .filter(|b| b.is_subset(set))
            .fold(BitSet::EMPTY, |acc, &b| acc.union(b))
            == set
    };

    let open_sets = (space.point_count() <= MAX_TOPOLOGY_POINTS).then(|| {
        let mut opens = vec![BitSet::EMPTY];
        for &b in basis {
            let extended: Vec<BitSet> = opens.iter().map(|o| o.union(b)).collect();
            opens.extend(extended);
            opens.sort();
            opens.dedup();
        }
        opens
    });

    let p = space.point_count();
    let hausdorff = (0..p).all(|x| {
        (0..p).filter(|&y| y != x).all(|y| {
            basis.iter().any(|u| {
                u.contains(x)
                    && !u.contains(y)
                    && basis
                        .iter()
                        .any(|v| v.contains(y) && !v.contains(x) && u.is_disjoint(*v))
            })
        })
    });

    let basis = basis
        .iter()
        .map(|&set| BasisClosure {
            set,
            closed: is_open(all.difference(set)),
        })
        .collect();

    TopologyReport {
        open_sets,
        hausdorff,
        basis,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testkit::fixtures;

    fn set(items: &[usize]) -> BitSet {
        items.iter().copied().collect()
    }

    #[test]
    fn classify_examples() {
        let c3 = fixtures::chain3();
        let c = classify_subset(&c3, set(&[2]));
        assert!(c.prime_filter);
        let c = classify_subset(&c3, c3.all());
        assert!(c.filter && !c.proper_filter && !c.prime_filter);
        assert!(c.ideal && !c.proper_ideal);

        let b2 = fixtures::b2();
        let c = classify_subset(&b2, set(&[3]));
        assert!(c.proper_filter && !c.prime_filter);
        let c = classify_subset(&b2, set(&[0, 1]));
        assert!(c.prime_ideal && !c.filter);
        assert_eq!(classify_subset(&b2, BitSet::EMPTY), SubsetClass::default());
    }

    #[test]
    fn chain3_points() {
        let s = enumerate_prime_filters(&fixtures::chain3());
        let members: Vec<Vec<usize>> = s.points().iter().map(|p| p.members.to_vec()).collect();
        assert_eq!(members, vec![vec![2], vec![1, 2]]);
        assert_eq!(sigma(&s, 1).to_vec(), vec![1]);
        assert_eq!(sigma(&s, 2).to_vec(), vec![0, 1]);
        assert!(sigma(&s, 0).is_empty());
    }

    #[test]
    fn chain2_and_b2_points() {
        let s = enumerate_prime_filters(&fixtures::chain2());
        assert_eq!(s.points().len(), 1);
        assert_eq!(s.points()[0].members.to_vec(), vec![1]);

        let s = enumerate_prime_filters(&fixtures::b2());
        let members: Vec<Vec<usize>> = s.points().iter().map(|p| p.members.to_vec()).collect();
        assert_eq!(members, vec![vec![1, 3], vec![2, 3]]);
        assert_eq!(sigma(&s, 1).to_vec(), vec![0]);
    }

    #[test]
    fn brute_force_agrees_on_fixtures() {
        for l in [
            fixtures::chain2(),
            fixtures::chain3(),
            fixtures::b2(),
            fixtures::boolean_algebra(3),
            fixtures::chain(5),
        ] {
            let fast = enumerate_prime_filters(&l);
            assert_eq!(fast.points(), prime_filters_by_subsets(&l).unwrap().as_slice());
        }
    }

    #[test]
    fn join_irreducible_examples() {
        assert_eq!(join_irreducibles(&fixtures::chain3()).to_vec(), vec![1, 2]);
        assert_eq!(join_irreducibles(&fixtures::chain2()).to_vec(), vec![1]);
        assert_eq!(join_irreducibles(&fixtures::b2()).to_vec(), vec![1, 2]);
        assert!(join_irreducibles(&fixtures::trivial()).is_empty());
    }

    #[test]
    fn sigma_isomorphism_on_fixtures() {
        for l in [fixtures::chain2(), fixtures::chain3(), fixtures::b2(), fixtures::trivial()] {
            assert!(check_sigma_isomorphism(&SpectralSpace::new(&l)));
        }
        // dropping a point breaks injectivity on chain3: σ(½) = σ(1) = {y}
        let c3 = fixtures::chain3();
        let full = SpectralSpace::new(&c3);
        let partial = SpectralSpace::from_points(c3, vec![full.points()[1]]);
        assert!(!check_sigma_isomorphism(&partial));
    }

    #[test]
    fn chain3_topology_is_sierpinski() {
        let r = finite_topology_report(&SpectralSpace::new(&fixtures::chain3()));
        assert_eq!(
            r.open_sets.clone().unwrap(),
            vec![BitSet::EMPTY, set(&[1]), set(&[0, 1])]
        );
        assert!(!r.hausdorff);
        // σ(½) = {y} is open but its complement {x} is not
        assert_eq!(r.is_clopen(set(&[1])), Some(false));
    }

    #[test]
    fn boolean_topologies_are_discrete() {
        let r = finite_topology_report(&SpectralSpace::new(&fixtures::chain2()));
        assert_eq!(r.open_sets.unwrap(), vec![BitSet::EMPTY, set(&[0])]);
        assert!(r.hausdorff);

        let r = finite_topology_report(&SpectralSpace::new(&fixtures::b2()));
        assert_eq!(r.open_sets.unwrap().len(), 4);
        assert!(r.hausdorff);
        assert!(r.basis.iter().all(|b| b.closed));
    }

    #[test]
    fn large_spaces_skip_materialization() {
        let l = fixtures::chain(18);
        let r = finite_topology_report(&SpectralSpace::new(&l));
        assert!(r.open_sets.is_none());
        assert!(!r.hausdorff);
    }
}
