//! Branched-cover transfer: rephrasing log semistability through a
//! finite flat cover ramified along the boundary.
//!
//! A covering construction in the style of Kawamata (Lazarsfeld, 4.1.6
//! and 4.1.12) produces, for a smooth simple normal crossing pair
//! `(X, D)`, a finite flat `pi: W -> X` with `pi^* Omega_X(log D)`
//! sitting inside `Omega_W` with controlled ramification, and
//! `K_W = pi^* O(-s + sum (k_i - 1))`. Pullback along a finite map
//! multiplies slopes by the degree of the map, so semistability
//! statements move between `Omega_X(log D)` and the cover (Maruyama,
//! Lemma 1.17, p. 325). The transfer is only certified here in the
//! regime where the log canonical class of the base is ample or trivial;
//! otherwise the base's own obligations are surfaced unchanged.

use crate::arith::{rat, Rational};
use crate::certificate::{citations, CertificateNode, Rule};
use crate::engine::{
    ample_or_trivial_certificate, degrees_csv, destabilizing_candidates, validate_pair_basics,
    Candidate, EngineError,
};
use crate::variety::LogPair;

/// The degree of the line bundle pulled back to the cover's canonical
/// class: `K_W = pi^* O(-s + sum (k_i - 1))` for a cover branched to
/// order `k_i` along the degree-`k_i` components.
pub fn cover_canonical_twist(s: u32, degrees: &[u32]) -> i64 {
    -(s as i64) + degrees.iter().map(|&k| k as i64 - 1).sum::<i64>()
}

/// Slope of the log cotangent bundle seen on the cover, normalized by
/// the covering degree: the same `(-s + sum k_i)/n` as downstairs.
pub fn cover_log_slope(n: u32, s: u32, degrees: &[u32]) -> Rational {
    let total = degrees.iter().map(|&k| k as i64).sum::<i64>();
    rat(total - s as i64, n as i64).expect("dimension is positive")
}

/// Outcome of the transfer argument for a pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverVerdict {
    /// The base's log canonical class is ample or trivial: base
    /// semistability is certified by negative-twist vanishing, and
    /// pullback carries it to the cover.
    Semistable { certificate: CertificateNode },
    /// Log Fano base: pullback along a finite map does not preserve
    /// semistability without further input, so the base's destabilizing
    /// candidates are reported instead of a certificate.
    Unknown { candidates: Vec<Candidate> },
}

/// Runs the transfer argument: a `CoverPullback` certificate wrapping the
/// base pair's negative-twist certificate when the log canonical class is
/// ample or trivial, and the untransferred obligations otherwise.
pub fn cover_verdict(base: &LogPair) -> Result<CoverVerdict, EngineError> {
    validate_pair_basics(base)?;
    let n = base.ambient.dim;
    let s = base.ambient.index;
    let degrees = base.degrees();
    if !base.kd_ample_or_trivial() {
        return Ok(CoverVerdict::Unknown {
            candidates: destabilizing_candidates(n, s, base.total_degree()),
        });
    }
    let child = ample_or_trivial_certificate(base)?;
    let certificate = CertificateNode::new(Rule::CoverPullback, citations::COVER_PULLBACK)
        .with_input("n", n)
        .with_input("s", s)
        .with_input("degrees", degrees_csv(&degrees))
        .with_input("canonical_twist", cover_canonical_twist(s, &degrees))
        .with_input("slope", cover_log_slope(n, s, &degrees))
        .with_child(child);
    Ok(CoverVerdict::Semistable { certificate })
}
