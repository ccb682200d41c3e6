//! Exact Ehrhart theory for lattice polytopes at desk scale.
//!
//! This crate computes, in exact integer/rational arithmetic throughout:
//!
//! - lattice-point counts of dilates, the Ehrhart polynomial (by exact
//!   finite differences with a built-in verification node), the
//!   delta-vector, and interior counts cross-checked by reciprocity
//!   ([`counting`]);
//! - integral closedness with witness extraction, unimodular-simplex and
//!   smoothness predicates ([`normality`]);
//! - reflexivity together with its equivalent counting, volume, and
//!   palindromy characterizations, verified against each other
//!   ([`reflexivity`]);
//! - the Macaulay apparatus for Hilbert-function growth: i-binomial
//!   expansions, `h^{<i>}`, O-sequences, differentiability, the Gorenstein
//!   criterion for small embedding dimension, level and partial-sum
//!   inequalities ([`osequence`]);
//! - executable verifiers for the volume bounds and delta-vector
//!   inequalities, the cyclic-polytope facet formula, and the extremal
//!   classification ([`verify`]);
//! - polytope families, posets, order polytopes and the linear-extension
//!   descent oracle, plus seeded random polytopes ([`generators`]);
//! - an end-to-end analysis pipeline with a JSONL census sweep
//!   ([`analysis`]), exposed by the `ehrhart` binary.
//!
//! The `examples/` directory walks through each capability; start with
//! `cargo run --example ehrhart_basics`.

#![forbid(unsafe_code)]

pub mod analysis;
pub mod counting;
pub mod error;
pub mod generators;
mod jsonnum;
pub mod lattice;
mod linalg;
pub mod normality;
pub mod osequence;
pub mod reflexivity;
pub mod verify;

/// Arbitrary-precision integer used for all lattice data.
pub type Int = num_bigint::BigInt;

/// Exact rational, used for polynomial coefficients and membership tests.
pub type Rat = num_rational::BigRational;

pub use analysis::{analyze, census, AnalysisRecord, CensusParams, CensusSummary};
pub use counting::EhrhartData;
pub use error::{Error, Result};
pub use generators::Poset;
pub use lattice::{HalfSpace, LatticePoint, LatticePolytope};
pub use normality::ClosureReport;
pub use osequence::HSequence;
pub use reflexivity::ReflexivityReport;
pub use verify::{SchepersClass, VerificationReport};
