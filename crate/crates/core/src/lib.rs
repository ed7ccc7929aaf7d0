//! Exact computations on numerical semigroups.
//!
//! - [`semigroup`]: gaps, Apéry sets, Frobenius number, genus, symmetry
//! - [`identity`]: the Apéry-set identity, genus and Hilbert series from it
//! - [`smooth`]: smooth and compound sequences, digit representations
//! - [`sylvester`]: closed-form power and alternating power sums over the gaps
//! - [`verify`]: seeded randomized property runs

pub mod error;
pub mod identity;
pub mod poly;
pub mod random;
pub mod semigroup;
mod serde_big;
pub mod smooth;
pub mod sylvester;
pub mod verify;

pub use error::{Error, Result};
pub use identity::{
    gap_polynomial, genus_from_identity, hilbert_series, identity_sides, HilbertSeries,
    IdentityReport, TestFunction,
};
pub use poly::IntPoly;
pub use semigroup::{AperySet, GapSet, NumericalSemigroup, Symmetry, DEFAULT_ENUMERATION_CAP};
pub use smooth::{
    analyze_sequence, classify, compound_from_pair, detect_compound, explicit_apery,
    permute_rho, unique_representation, DigitRepresentation, Membership, SmoothAnalysis,
    SuitablePair,
};
pub use sylvester::{
    alternating_closed, invariant_report, power_sequence, sigma_tau, sums_by_enumeration,
    sylvester_closed, wang_wang_t, ClosedForms, PowerSequence, SylvesterReport,
};
