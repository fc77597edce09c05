//! Weighted simplicial complexes, mixed wreath products, polarization and
//! weighted monomial ideals.
//!
//! Complexes live on dense vertex ids `0..n` (`n ≤ 63`) with faces stored as
//! bitmasks; monomial ideals are kept as minimal generating sets. Homology,
//! Betti numbers and decompositions are exact.

pub mod betti;
pub mod checkers;
pub mod complex;
pub mod decomposition;
pub mod error;
pub mod homology;
pub mod linalg;
pub mod monomial;
pub mod verify;
pub mod weighted;
pub mod wreath;

pub use betti::{
    hilbert_series, invariants_from_table, lcm_lattice, multigraded_betti, ring_invariants, upper_koszul, BettiTable,
    HilbertSeries, RingInvariants,
};
pub use checkers::{
    is_cohen_macaulay_reisner, is_constructible_bounded, is_shellable, is_vertex_decomposable,
    property_transport_report, CheckerBounds, ShellResult, TransportReport, VdResult, Verdict,
};
pub use complex::{FVector, Face, SimplicialComplex, MAX_VERTICES};
pub use decomposition::{
    associated_primes, height, minimal_and_embedded, normally_torsion_free_upto, primary_decomposition,
    symbolic_power, Decomposition, NtfReport, PrimaryComponent, PrimeIdeal,
};
pub use error::{Error, Result};
pub use homology::{reduced_homology_dims, FieldSpec};
pub use monomial::{Graph, Monomial, MonomialIdeal};
pub use verify::{verify, VerifyConfig, VerifyReport};
pub use weighted::{polarize, sr_ideal, sr_ideal_weighted, WeightFunction, WeightedComplex};
pub use wreath::{mixed_wreath, one_point_suspension, reduced_join, wreath_f_formula, WreathVertexMap};
