//! Finite distributive lattices, their prime-filter spectra, and maximin
//! preferences over lattice elements.
//!
//! * [`lattice`]: tables, law validation, posets and down-set lattices,
//!   homomorphisms.
//! * [`spectrum`]: prime filters, the spectral map `σ`, finite topology.
//! * [`preference`]: weak orders and the representability axioms.
//! * [`duality`]: forward and backward transport of orders between a lattice
//!   and its spectrum.
//! * [`representation`]: congruences, quotients and minimal representations.
//! * [`testkit`]: seeded generators and named fixtures.
//! * [`io`]: JSON file formats.
//! * [`fuzz`]: the randomized property suite.

pub mod bitset;
pub mod duality;
pub mod fuzz;
pub mod io;
pub mod lattice;
pub mod preference;
pub mod relation;
pub mod representation;
pub mod spectrum;
pub mod testkit;

pub use bitset::BitSet;
pub use duality::{
    dual_backward, dual_forward, roundtrip_check, DualityCertificate, DualityError, PointOrder,
};
pub use lattice::{
    downset_lattice, validate_laws, Lattice, LatticeError, LatticeHom, LatticeTables, Law, Poset,
};
pub use preference::{
    check_axiom1, check_axiom2, check_axiom3, check_axioms, AxiomReport, PreferenceError, Scope,
    WeakOrder,
};
pub use relation::Relation;
pub use representation::{
    congruence_beta_dprime, congruence_beta_prime, derive_pref_from_rep, factor_check,
    minimal_representation, quotient, synthesize, verify_representation, Congruence,
    FactorOutcome, Representation, RepresentationError, Synthesis,
};
pub use spectrum::{enumerate_prime_filters, sigma, PrimeFilter, SpectralSpace};
