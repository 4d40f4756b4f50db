//! Slope-semistability of logarithmic cotangent bundles, with certificates.
//!
//! Given a log pair `(X, D)` — a Fano manifold `X` of Picard rank one with
//! a reduced simple normal crossing boundary `D` — this crate decides, when
//! the implemented rule set suffices, whether the logarithmic cotangent
//! bundle `Omega_X(log D)` is slope-semistable with respect to the ample
//! generator, and produces a machine-checkable certificate either way.
//!
//! The pipeline:
//!
//! 1. [`engine::slope_log`] computes exact slopes and
//!    [`engine::destabilizing_candidates`] enumerates the finitely many
//!    `(a, t)` pairs whose sheaves of twisted logarithmic forms could
//!    destabilize.
//! 2. [`cohomology`] supplies the vanishing facts: closed-form dimensions
//!    on projective space (cross-checked against an independent recursive
//!    oracle), vanishing on quadrics, Kodaira-Akizuki-Nakano and Hodge-
//!    theoretic vanishing, and knowledge-base lookups for abstract Fano
//!    manifolds.
//! 3. [`engine::resolve_obligation`] discharges each candidate through
//!    residue sequences and divisor restrictions, recording every applied
//!    rule as a [`certificate::CertificateNode`].
//! 4. [`replay`] re-validates finished certificates from their recorded
//!    inputs alone, independently of how they were produced.
//!
//! Auxiliary surfaces: [`crosscheck`] compares the engine against a fixed
//! dimension-by-dimension statement of which pairs are settled,
//! [`covers`] transfers verdicts to cyclic covers, and [`catalog`] runs
//! the bundled classification of low-dimensional log Fano pairs.

pub mod arith;
pub mod catalog;
pub mod certificate;
pub mod cli;
pub mod cohomology;
pub mod covers;
pub mod crosscheck;
pub mod engine;
pub mod replay;
pub mod variety;

pub use arith::Rational;
