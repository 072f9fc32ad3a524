//! Workbench for the geometric McKay correspondence of cyclic SL(3,ℂ)
//! quotient singularities ℂ³ / (ℤ/r).
//!
//! The crate computes, exactly over ℚ wherever the objects are rational, the
//! algebraic side of the correspondence — exterior-power decomposition
//! multiplicities, the generalized Cartan-type matrix C̃ and its exact inverse,
//! eta invariants of the Dirac operator on the lens space at infinity, and the
//! predicted intersection matrix −C⁻¹ — and realizes the moduli of θ-stable
//! G-constellations numerically through a Kempf–Ness moment-map solver on the
//! McKay quiver.

pub mod correspondence;
pub mod eta;
pub mod group;
pub mod kempf_ness;
pub mod mckay;
pub mod quiver;

pub use correspondence::{CorrespondenceError, IntersectionPrediction, VerificationReport};
pub use eta::{EtaError, EtaTable};
pub use group::{CyclotomicNumber, GroupAction, GroupError, Rational};
pub use kempf_ness::{KempfNessError, SolveOutcome, SolverConfig};
pub use mckay::{MckayError, MckayMatrix};
pub use quiver::{
    Arrow, Constellation, FixedPoint, FixedPointCandidates, Genericity, QuiverError,
    StabilityParam, StabilityVerdict, VertexSet,
};
