//! Seeded generators and exhaustive enumerators.
//!
//! Every generator is a pure function of its parameters and a `u64` seed
//! (ChaCha8), so a seed reproduces its output bit for bit on any platform.

pub mod fixtures;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::bitset::BitSet;
use crate::lattice::{downset_lattice, Lattice, Poset};
use crate::preference::WeakOrder;
use crate::representation::{congruence_beta_dprime, derive_pref_from_rep, quotient, Representation};
use crate::spectrum::SpectralSpace;

/// Edge probability for random posets.
pub const EDGE_PROBABILITY: f64 = 0.4;
/// Largest poset handed to the down-set construction (2^6 = 64 elements).
pub const MAX_POSET_SIZE: usize = 6;
/// Largest carrier for exhaustive weak-order enumeration.
pub const MAX_ENUMERATED: usize = 5;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TestkitError {
    #[error("enumerating weak orders on {0} elements exceeds the limit of {MAX_ENUMERATED}")]
    TooLarge(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Seed(pub u64);

impl Seed {
    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }

    /// Independent child seed (splitmix64 finalizer over master and index).
    pub fn derive(self, index: u64) -> Seed {
        let mut z = self
            .0
            .wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        Seed(z ^ (z >> 31))
    }
}

impl From<u64> for Seed {
    fn from(v: u64) -> Self {
        Seed(v)
    }
}

/// Upper-triangular edges with probability [`EDGE_PROBABILITY`], closed
/// transitively and reduced to covers.
pub fn random_poset(size: usize, seed: Seed) -> Poset {
    let mut rng = seed.rng();
    let mut less = vec![vec![false; size]; size];
    for (i, row) in less.iter_mut().enumerate() {
        for cell in &mut row[i + 1..] {
            *cell = rng.gen_bool(EDGE_PROBABILITY);
        }
    }
    for k in 0..size {
        for i in 0..size {
            for j in 0..size {
                if less[i][k] && less[k][j] {
                    less[i][j] = true;
                }
            }
        }
    }
    Poset::from_order(size, |i, j| less[i][j]).expect("upper-triangular relations are acyclic")
}

/// Down-set lattice of a random poset with `1..=max_poset_size` elements.
pub fn random_distributive_lattice(max_poset_size: usize, seed: Seed) -> Lattice {
    let max = max_poset_size.clamp(1, MAX_POSET_SIZE);
    let mut rng = seed.rng();
    let size = rng.gen_range(1..=max);
    let poset = random_poset(size, Seed(rng.gen()));
    downset_lattice(&poset).expect("posets of at most 6 elements have at most 64 down-sets")
}

/// Every labelled poset on `n` elements (strict orders on `0..n`).
pub fn all_posets(n: usize) -> Vec<Poset> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << pairs.len()) {
        let less = |i: usize, j: usize| {
            pairs
                .iter()
                .position(|&p| p == (i, j))
                .is_some_and(|k| mask & (1 << k) != 0)
        };
        let antisymmetric = pairs.iter().all(|&(i, j)| !(less(i, j) && less(j, i)));
        let transitive = pairs.iter().all(|&(i, j)| {
            !less(i, j) || (0..n).all(|k| !less(j, k) || less(i, k))
        });
        if antisymmetric && transitive {
            out.push(Poset::from_order(n, less).expect("strict orders are acyclic"));
        }
    }
    out
}

/// Iterator over all rank vectors of length `k` that use exactly the ranks
/// `0..r` for some `r`: one per weak order.
#[derive(Clone, Debug)]
pub struct WeakOrders {
    current: Option<Vec<u32>>,
}

impl Iterator for WeakOrders {
    type Item = Vec<u32>;

    fn next(&mut self) -> Option<Vec<u32>> {
        loop {
            let out = self.current.clone()?;
            self.advance();
            if is_dense(&out) {
                return Some(out);
            }
        }
    }
}

impl WeakOrders {
    fn advance(&mut self) {
        let Some(digits) = self.current.as_mut() else {
            return;
        };
        let k = digits.len() as u32;
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < k {
                return;
            }
            *d = 0;
        }
        self.current = None;
    }
}

fn is_dense(ranks: &[u32]) -> bool {
    let used: BitSet = ranks.iter().map(|&r| r as usize).collect();
    used == BitSet::full(used.len())
}

pub fn enumerate_weak_orders(k: usize) -> Result<WeakOrders, TestkitError> {
    if k > MAX_ENUMERATED {
        return Err(TestkitError::TooLarge(k));
    }
    Ok(WeakOrders {
        current: Some(vec![0; k]),
    })
}

/// Extends ranks given on `A ∖ {0}` (in element order) to all of `A`, with
/// the bottom placed at rank 0 and every other rank shifted up by one.
pub fn embed_off_bottom(lattice: &Lattice, nonzero_ranks: &[u32]) -> WeakOrder {
    let mut ranks = vec![0; lattice.len()];
    for (a, &r) in lattice.nonzero().iter().zip(nonzero_ranks) {
        ranks[a] = r + 1;
    }
    WeakOrder::new(ranks)
}

/// Independent uniform ranks in `0..n`.
pub fn random_weak_order(n: usize, seed: Seed) -> WeakOrder {
    let mut rng = seed.rng();
    WeakOrder::new((0..n).map(|_| rng.gen_range(0..n.max(1) as u32)).collect())
}

fn random_outcome_ranks(rng: &mut ChaCha8Rng, count: usize) -> WeakOrder {
    WeakOrder::new((0..count).map(|_| rng.gen_range(0..count as u32)).collect())
}

/// Outcomes: a random non-empty subset of the prime filters. `σ(a)` is the
/// spectral `σ(a)` restricted to those points, which keeps it a homomorphism.
pub fn random_representation(lattice: &Lattice, seed: Seed) -> Representation {
    let mut rng = seed.rng();
    let space = SpectralSpace::new(lattice);
    let p = space.point_count();
    let mut kept: Vec<usize> = (0..p).filter(|_| rng.gen_bool(0.5)).collect();
    if kept.is_empty() && p > 0 {
        kept.push(rng.gen_range(0..p));
    }
    let sigma_map = lattice
        .elements()
        .map(|a| {
            let s = space.sigma(a);
            kept.iter()
                .enumerate()
                .filter(|&(_, &pt)| s.contains(pt))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    Representation {
        outcome_count: kept.len(),
        sigma_map,
        outcome_order: random_outcome_ranks(&mut rng, kept.len()),
    }
}

/// An order satisfying the monotonicity and union axioms, induced by a
/// random representation.
pub fn random_axiomatic_order(lattice: &Lattice, seed: Seed) -> WeakOrder {
    derive_pref_from_rep(&random_representation(lattice, seed))
}

/// An order satisfying all three axioms: quotient by the annihilator
/// congruence of a random principal ideal, then rank the quotient's prime
/// filters at random. Its zero class is exactly that ideal.
pub fn random_minimal_instance(lattice: &Lattice, seed: Seed) -> WeakOrder {
    let mut rng = seed.rng();
    let m = rng.gen_range(0..lattice.len());
    let ideal = lattice.down_set(m);
    let congruence = congruence_beta_dprime(lattice, ideal).expect("principal ideals are ideals");
    let (q, h) = quotient(lattice, &congruence).expect("annihilator relations are congruences");
    let space = SpectralSpace::new(&q);
    let rep = Representation {
        outcome_count: space.point_count(),
        sigma_map: lattice.elements().map(|a| space.sigma(h.apply(a))).collect(),
        outcome_order: random_outcome_ranks(&mut rng, space.point_count()),
    };
    derive_pref_from_rep(&rep)
}

/// Appends a copy of each outcome in `which`, with the same rank and the
/// same membership in every `σ(a)`.
pub fn duplicate_outcomes(rep: &Representation, which: BitSet) -> Representation {
    let copies: Vec<usize> = which.iter().filter(|&x| x < rep.outcome_count).collect();
    let base = rep.outcome_count;
    let sigma_map = rep
        .sigma_map
        .iter()
        .map(|&s| {
            let mut out = s;
            for (i, &x) in copies.iter().enumerate() {
                if s.contains(x) {
                    out.insert(base + i);
                }
            }
            out
        })
        .collect();
    let mut ranks = rep.outcome_order.ranks().to_vec();
    ranks.extend(copies.iter().map(|&x| rep.outcome_order.rank(x)));
    Representation {
        outcome_count: base + copies.len(),
        sigma_map,
        outcome_order: WeakOrder::new(ranks),
    }
}

/// Duplicates a random non-empty subset of outcomes (when there are any),
/// then shuffles outcome labels.
pub fn random_duplication(rep: &Representation, seed: Seed) -> Representation {
    let mut rng = seed.rng();
    let n = rep.outcome_count;
    let room = crate::bitset::CAPACITY.saturating_sub(n).min(n);
    let mut which: BitSet = (0..room).filter(|_| rng.gen_bool(0.5)).collect();
    if which.is_empty() && room > 0 {
        which.insert(rng.gen_range(0..room));
    }
    let dup = duplicate_outcomes(rep, which);
    let mut perm: Vec<usize> = (0..dup.outcome_count).collect();
    perm.shuffle(&mut rng);
    let sigma_map = dup
        .sigma_map
        .iter()
        .map(|s| s.iter().map(|x| perm[x]).collect())
        .collect();
    let mut ranks = vec![0; dup.outcome_count];
    for (x, &r) in dup.outcome_order.ranks().iter().enumerate() {
        ranks[perm[x]] = r;
    }
    Representation {
        outcome_count: dup.outcome_count,
        sigma_map,
        outcome_order: WeakOrder::new(ranks),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::validate_laws;
    use crate::preference::{check_axiom1, check_axiom2, check_axioms};
    use crate::representation::verify_representation;

    /// Ordered Bell numbers from `a(n) = Σ_{k=1..n} C(n, k) a(n - k)`.
    fn ordered_bell(n: usize) -> u64 {
        let mut a = vec![1u64];
        for m in 1..=n {
            let mut binom = 1u64;
            let mut total = 0;
            for k in 1..=m {
                binom = binom * (m - k + 1) as u64 / k as u64;
                total += binom * a[m - k];
            }
            a.push(total);
        }
        a[n]
    }

    #[test]
    fn weak_order_counts() {
        assert_eq!(enumerate_weak_orders(1).unwrap().count(), 1);
        assert_eq!(enumerate_weak_orders(2).unwrap().count(), 3);
        assert_eq!(enumerate_weak_orders(3).unwrap().count(), 13);
        for k in 0..=MAX_ENUMERATED {
            assert_eq!(enumerate_weak_orders(k).unwrap().count() as u64, ordered_bell(k));
        }
        assert_eq!(
            enumerate_weak_orders(6).unwrap_err(),
            TestkitError::TooLarge(6)
        );
    }

    #[test]
    fn enumerated_orders_are_distinct_relations() {
        let orders: Vec<Vec<u32>> = enumerate_weak_orders(4).unwrap().collect();
        let mut relations: Vec<_> = orders
            .iter()
            .map(|r| WeakOrder::new(r.clone()).to_relation())
            .collect();
        let before = relations.len();
        relations.sort_by_key(|r| (0..4).map(|i| r.row(i).bits()).collect::<Vec<_>>());
        relations.dedup();
        assert_eq!(relations.len(), before);
    }

    #[test]
    fn small_lattices_come_from_small_posets() {
        assert_eq!(random_distributive_lattice(1, Seed(99)).len(), 2);
        let mut seen = [false; 3];
        for s in 0..200 {
            let l = random_distributive_lattice(2, Seed(s));
            let t = l.tables();
            if t.meet == fixtures::chain2().tables().meet {
                seen[0] = true;
            } else if t.meet == fixtures::chain3().tables().meet {
                seen[1] = true;
            } else if t.meet == fixtures::b2().tables().meet {
                seen[2] = true;
            } else {
                panic!("unexpected lattice from a 2-element poset: {l:?}");
            }
        }
        assert_eq!(seen, [true; 3]);
    }

    #[test]
    fn generators_are_deterministic() {
        for s in 0..20 {
            let a = random_distributive_lattice(5, Seed(s));
            let b = random_distributive_lattice(5, Seed(s));
            assert_eq!(a, b);
            assert_eq!(random_representation(&a, Seed(s)), random_representation(&b, Seed(s)));
        }
        assert_ne!(Seed(1).derive(0), Seed(1).derive(1));
    }

    #[test]
    fn generated_lattices_are_valid() {
        for s in 0..50 {
            let l = random_distributive_lattice(6, Seed(s));
            assert!(validate_laws(&l.tables()).unwrap().is_empty());
        }
    }

    #[test]
    fn representation_examples() {
        let r = random_representation(&fixtures::chain2(), Seed(3));
        assert_eq!(r.outcome_count, 1);
        let c3 = fixtures::chain3();
        for s in 0..64 {
            let r = random_representation(&c3, Seed(s));
            assert!(r.is_homomorphic(&c3));
            // only y = {½, 1} kept
            if r.outcome_count == 1 && !r.sigma(1).is_empty() {
                assert_eq!(r.sigma(1), r.sigma(2));
            }
        }
    }

    #[test]
    fn constructed_orders_satisfy_axioms() {
        for s in 0..40 {
            let l = random_distributive_lattice(4, Seed(s));
            let w = random_axiomatic_order(&l, Seed(s + 1000));
            assert!(check_axiom1(&l, &w).is_empty());
            assert!(check_axiom2(&l, &w).is_empty());
            let w = random_minimal_instance(&l, Seed(s + 2000));
            assert!(check_axioms(&l, &w).all_hold());
        }
    }

    #[test]
    fn duplication_preserves_represented_order() {
        let l = fixtures::b2();
        for s in 0..20 {
            let r = random_representation(&l, Seed(s));
            let w = derive_pref_from_rep(&r);
            let d = random_duplication(&r, Seed(s));
            assert!(d.outcome_count > r.outcome_count);
            assert!(verify_representation(&l, &w, &d).holds);
        }
    }

    #[test]
    fn labelled_poset_counts() {
        // labelled posets: 1, 1, 3, 19
        let counts: Vec<usize> = (0..4).map(|n| all_posets(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 19]);
    }

    #[test]
    fn embedding_puts_bottom_first() {
        let l = fixtures::chain3();
        assert_eq!(embed_off_bottom(&l, &[1, 0]).ranks(), &[0, 2, 1]);
    }
}
