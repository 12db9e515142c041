//! Exact combinatorial commutative algebra for monomial ideals.
//!
//! The crate computes, for a monomial ideal `I` in `K[x_1, ..., x_n]`:
//!
//! - minimal generators, powers, monomial localizations, irreducible
//!   decompositions and associated primes ([`ideal`], [`decompose`]);
//! - simplicial complexes, Stanley–Reisner ideals, the Takayama complexes
//!   `Δ_a(I)` and their reduced homology over `Q` or `GF(p)`
//!   ([`complex`], [`homology`]);
//! - the Krull dimensions of the Matlis duals of the local cohomology modules
//!   `H^j_m(S/I)`, from which depth, the Serre depths `S_r-depth(S/I)` and the
//!   Serre-condition verdicts follow ([`cohomology`]);
//! - skeleton ideals `Σ_i^g(I)` and the skeleton characterization of Serre
//!   depth ([`skeleton`]);
//! - tables of depth strata along the powers `I^k` ([`powers`]).
//!
//! All arithmetic is exact. The local cohomology computation never sweeps
//! an infinite set of degrees: `Z^n` is partitioned into finitely many
//! [`DegreeClass`]es on which every graded piece is constant.
//!
//! # Feature flags
//!
//! - `std` (default): thread-safe memo caches.
//! - `parallel`: sweeps degree classes with `rayon`. Implies `std`.
//!
//! Without `std` the crate is `no_std` and only needs `alloc`.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod cohomology;
pub mod complex;
pub mod decompose;
pub mod dim;
pub mod error;
pub mod exponent;
pub mod field;
pub mod homology;
pub mod ideal;
mod linalg;
mod memo;
pub mod powers;
pub mod skeleton;
pub mod verify;

pub use cohomology::{Analyzer, ClassTag, CohomologyProfile, DegreeClass, SerreMode};
pub use complex::{Regime, SimplicialComplex};
pub use decompose::{ComponentClassification, PrimeFace};
pub use dim::KrullDim;
pub use error::{Error, Result};
pub use exponent::{Exponent, VarSet, MAX_VARS};
pub use field::FieldSpec;
pub use homology::{HomologyCache, ReducedHomology};
pub use ideal::MonomialIdeal;
pub use powers::{PowerRow, PowerTable, StabilizationReport, StrataProperties};
pub use skeleton::{SkeletonDepth, SkeletonReport};
pub use verify::{Check, CheckReport};
