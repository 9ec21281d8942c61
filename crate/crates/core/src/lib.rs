//! Finite-dimensional Lorentz-group representations, spin lines, Clifford algebra
//! classification with the CPT group, SU(3) Okubo operators, a catalog of the three
//! hadron octets, and Gell-Mann-Okubo mass splitting.

pub mod catalog;
pub mod clifford_cpt;
pub mod error;
pub mod halfint;
pub mod mass_model;
pub mod rep_core;
pub mod rwe;
pub mod spin_lines;
pub mod su3;

pub use catalog::{builtin_octets, ChargeMultiplet, Octet, OctetName, ParticleState};
pub use clifford_cpt::{CliffordSignature, DivisionRingKind, ChargeClass};
pub use error::{Error, Result};
pub use halfint::HalfInt;
pub use mass_model::{GmoParams, QuantumNumbers};
pub use rep_core::{GelfandNaimarkPair, RepLabel};
pub use num_rational::Rational64;
