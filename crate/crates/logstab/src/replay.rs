//! Independent verification of verdicts.
//!
//! Replay walks a certificate and re-derives every node from the pair,
//! the knowledge base, and the cohomology predicates alone: leaves are
//! rebuilt and compared byte for byte, claims are re-evaluated, and the
//! set of residue-sequence obligations is recomputed and matched exactly.
//! A verdict that replays cleanly is therefore trustworthy even if the
//! code that produced it were wrong — nothing here consults the engine's
//! decisions, only its leaf constructors and the underlying predicates.

use std::collections::BTreeSet;
use std::str::FromStr;

use num_traits::Zero;
use thiserror::Error;

use crate::certificate::{CertificateNode, Rule};
use crate::cohomology::{
    bott_dim, divisor_intrinsic_type, fano_hodge_vanishes, kan_h0_vanishes, quadric_h0_vanishes,
    stability_vanishing, TriBool,
};
use crate::engine::{
    self, destabilizing_candidates, slope_log, EngineError, Verdict, Witness,
};
use crate::variety::{LogPair, StabilityKb, VarietyKind, VarietySpec};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum ReplayError {
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error("node {rule} is missing input {key}")]
    MissingInput { rule: Rule, key: String },
    #[error("node {rule} input {key} is {got}, expected {expected}")]
    InputMismatch {
        rule: Rule,
        key: String,
        got: String,
        expected: String,
    },
    #[error("node {rule} has {got} children, expected {expected}")]
    ChildCount {
        rule: Rule,
        got: usize,
        expected: String,
    },
    #[error("rule {got} cannot stand where {expected} is required")]
    RuleMismatch { got: Rule, expected: String },
    #[error("claim at {rule} fails on re-derivation: {msg}")]
    ClaimFailed { rule: Rule, msg: String },
    #[error("node does not match its re-derivation; expected:\n{expected}\ngot:\n{got}")]
    NodeMismatch { expected: String, got: String },
    #[error("certificate misses obligation (a={a}, t={t})")]
    MissingObligation { a: u32, t: i64 },
    #[error("certificate carries obligation (a={a}, t={t}) outside the destabilizing set")]
    ExtraObligation { a: u32, t: i64 },
    #[error("certificate covers (a={a}, t={t}) twice")]
    DuplicateObligation { a: u32, t: i64 },
}

fn req(node: &CertificateNode, key: &str) -> Result<String, ReplayError> {
    node.get(key)
        .map(str::to_string)
        .ok_or_else(|| ReplayError::MissingInput {
            rule: node.rule,
            key: key.to_string(),
        })
}

fn req_int(node: &CertificateNode, key: &str) -> Result<i64, ReplayError> {
    let raw = req(node, key)?;
    raw.parse().map_err(|_| ReplayError::InputMismatch {
        rule: node.rule,
        key: key.to_string(),
        got: raw,
        expected: "an integer".to_string(),
    })
}

fn want(node: &CertificateNode, key: &str, expected: &str) -> Result<(), ReplayError> {
    let got = req(node, key)?;
    if got == expected {
        Ok(())
    } else {
        Err(ReplayError::InputMismatch {
            rule: node.rule,
            key: key.to_string(),
            got,
            expected: expected.to_string(),
        })
    }
}

fn want_int(node: &CertificateNode, key: &str, expected: i64) -> Result<(), ReplayError> {
    want(node, key, &expected.to_string())
}

fn want_children(node: &CertificateNode, expected: usize) -> Result<(), ReplayError> {
    if node.children.len() == expected {
        Ok(())
    } else {
        Err(ReplayError::ChildCount {
            rule: node.rule,
            got: node.children.len(),
            expected: expected.to_string(),
        })
    }
}

fn node_eq(got: &CertificateNode, expected: &CertificateNode) -> Result<(), ReplayError> {
    if got == expected {
        Ok(())
    } else {
        Err(ReplayError::NodeMismatch {
            expected: expected.to_text(),
            got: got.to_text(),
        })
    }
}

fn claim(rule: Rule, msg: &str) -> ReplayError {
    ReplayError::ClaimFailed {
        rule,
        msg: msg.to_string(),
    }
}

/// Verifies a verdict against the pair it claims to decide. `Unknown`
/// verdicts make no claim and replay vacuously.
pub fn replay_verdict(
    pair: &LogPair,
    kb: &StabilityKb,
    verdict: &Verdict,
) -> Result<(), ReplayError> {
    match verdict {
        Verdict::Unknown { .. } => Ok(()),
        Verdict::Semistable { certificate } => replay_semistable(pair, kb, certificate),
        Verdict::NotSemistable { witness } => replay_witness(pair, witness),
    }
}

/// Verifies a semistability certificate: the root must match the pair's
/// numerics, carry one twist-monotonicity tree per interior form degree,
/// and — on the slope-bound route — cover the recomputed destabilizing
/// set exactly, with every obligation discharged by a valid node.
pub fn replay_semistable(
    pair: &LogPair,
    kb: &StabilityKb,
    cert: &CertificateNode,
) -> Result<(), ReplayError> {
    engine::validate_pair_basics(pair)?;
    let n = pair.ambient.dim;
    let s = pair.ambient.index;
    let degrees = pair.degrees();
    let csv = engine::degrees_csv(&degrees);

    match cert.rule {
        Rule::AmpleOrTrivial => {
            if !pair.kd_ample_or_trivial() {
                return Err(EngineError::LogCanonicalNegative.into());
            }
            if !pair.all_irreducible() {
                return Err(EngineError::ReducibleComponent.into());
            }
            want_int(cert, "n", n as i64)?;
            want_int(cert, "s", s as i64)?;
            want(cert, "degrees", &csv)?;
            let mut seen = BTreeSet::new();
            for child in &cert.children {
                if child.rule != Rule::Norimatsu {
                    return Err(ReplayError::RuleMismatch {
                        got: child.rule,
                        expected: "Norimatsu".to_string(),
                    });
                }
                let a = req_int(child, "a")?;
                if !(1..n as i64).contains(&a) {
                    return Err(claim(Rule::Norimatsu, "form degree out of range"));
                }
                if !seen.insert(a as u32) {
                    return Err(claim(Rule::Norimatsu, "form degree covered twice"));
                }
                replay_norimatsu(child, n, -(s as i64), &degrees, a as u32, -1)?;
            }
            let expected: BTreeSet<u32> = (1..n).collect();
            if seen != expected {
                return Err(claim(
                    Rule::AmpleOrTrivial,
                    "not every interior form degree is covered",
                ));
            }
            Ok(())
        }
        Rule::SlopeBound => {
            if pair.kd_ample_or_trivial() {
                // The slope route enumerates candidates of a log Fano
                // pair; outside that regime the ample-or-trivial root is
                // the only accepted shape.
                return Err(claim(
                    Rule::SlopeBound,
                    "the log canonical class is not negative",
                ));
            }
            want_int(cert, "n", n as i64)?;
            want_int(cert, "s", s as i64)?;
            want(cert, "degrees", &csv)?;
            want(cert, "slope", &slope_log(pair, 1).to_string())?;

            let mut nori_seen = BTreeSet::new();
            let mut split_seen = BTreeSet::new();
            for child in &cert.children {
                match child.rule {
                    Rule::Norimatsu => {
                        let a = req_int(child, "a")?;
                        if !(1..n as i64).contains(&a) {
                            return Err(claim(Rule::Norimatsu, "form degree out of range"));
                        }
                        if !nori_seen.insert(a as u32) {
                            return Err(claim(Rule::Norimatsu, "form degree covered twice"));
                        }
                        replay_norimatsu(child, n, -(s as i64), &degrees, a as u32, -1)?;
                    }
                    Rule::ResidueSplit => {
                        let a = req_int(child, "a")?;
                        let t = req_int(child, "t")?;
                        if !(1..n as i64).contains(&a) {
                            return Err(claim(Rule::ResidueSplit, "form degree out of range"));
                        }
                        if !split_seen.insert((a as u32, t)) {
                            return Err(ReplayError::DuplicateObligation { a: a as u32, t });
                        }
                        replay_residue_split(child, pair, kb)?;
                    }
                    other => {
                        return Err(ReplayError::RuleMismatch {
                            got: other,
                            expected: "Norimatsu or ResidueSplit".to_string(),
                        })
                    }
                }
            }

            let expected_nori: BTreeSet<u32> = (1..n).collect();
            if nori_seen != expected_nori {
                return Err(claim(
                    Rule::SlopeBound,
                    "not every interior form degree has a negative-twist tree",
                ));
            }
            let expected_splits: BTreeSet<(u32, i64)> =
                destabilizing_candidates(n, s, pair.total_degree())
                    .into_iter()
                    .map(|c| (c.a, c.t))
                    .collect();
            if let Some(&(a, t)) = expected_splits.difference(&split_seen).next() {
                return Err(ReplayError::MissingObligation { a, t });
            }
            if let Some(&(a, t)) = split_seen.difference(&expected_splits).next() {
                return Err(ReplayError::ExtraObligation { a, t });
            }
            Ok(())
        }
        other => Err(ReplayError::RuleMismatch {
            got: other,
            expected: "SlopeBound or AmpleOrTrivial".to_string(),
        }),
    }
}

/// Verifies one twist-monotonicity vanishing tree against its context:
/// an ambient of the given dimension with canonical degree `canonical`,
/// the listed boundary degrees still to peel, form degree `a`, and
/// twist `t`. Interior nodes must peel the first listed component into
/// the two child claims; leaves must be rebuilt vanishing statements
/// whose hypotheses actually hold (in particular `t < 0`).
pub fn replay_norimatsu(
    node: &CertificateNode,
    dim: u32,
    canonical: i64,
    degrees: &[u32],
    a: u32,
    t: i64,
) -> Result<(), ReplayError> {
    match node.rule {
        Rule::Kan => {
            if t >= 0 {
                return Err(claim(Rule::Kan, "vanishing leaves need a negative twist"));
            }
            want_children(node, 0)?;
            if a == dim {
                // Top degree: the log form sheaf is the line bundle of
                // degree canonical + sum of the remaining boundary.
                let det = canonical + degrees.iter().map(|&d| d as i64).sum::<i64>();
                node_eq(node, &engine::kan_leaf(dim, a, t, Some(det)))?;
                if det + t >= 0 {
                    return Err(claim(Rule::Kan, "the twisted determinant has sections"));
                }
                Ok(())
            } else if a == 0 || degrees.is_empty() {
                node_eq(node, &engine::kan_leaf(dim, a, t, None))?;
                Ok(())
            } else {
                // A log form sheaf with boundary left over is not a plain
                // form sheaf; no bare vanishing leaf may stand here.
                Err(claim(
                    Rule::Kan,
                    "a plain vanishing leaf cannot absorb remaining boundary components",
                ))
            }
        }
        Rule::Norimatsu => {
            if a == 0 || a >= dim || degrees.is_empty() {
                return Err(claim(
                    Rule::Norimatsu,
                    "interior node where a leaf is required",
                ));
            }
            want_int(node, "dim", dim as i64)?;
            want_int(node, "canonical", canonical)?;
            want(node, "degrees", &engine::degrees_csv(degrees))?;
            want_int(node, "a", a as i64)?;
            want_int(node, "t", t)?;
            want_children(node, 2)?;
            replay_norimatsu(&node.children[0], dim, canonical, &degrees[1..], a, t)?;
            replay_norimatsu(
                &node.children[1],
                dim - 1,
                canonical + degrees[0] as i64,
                &degrees[1..],
                a - 1,
                t,
            )
        }
        other => Err(ReplayError::RuleMismatch {
            got: other,
            expected: "Norimatsu or KAN".to_string(),
        }),
    }
}

/// Verifies one residue-sequence node: the pair must really have a single
/// smooth irreducible boundary component, the ambient child must certify
/// `H^0(X, Omega^a_X(t)) = 0`, and the divisor child must certify
/// `H^0(D, Omega^{a-1}_D(t)) = 0` (or cupping injectivity at `a = 1`,
/// `t = 0`) — each by a rule whose hypotheses re-check against the pair.
pub fn replay_residue_split(
    node: &CertificateNode,
    pair: &LogPair,
    kb: &StabilityKb,
) -> Result<(), ReplayError> {
    if node.rule != Rule::ResidueSplit {
        return Err(ReplayError::RuleMismatch {
            got: node.rule,
            expected: "ResidueSplit".to_string(),
        });
    }
    let n = pair.ambient.dim;
    let a_raw = req_int(node, "a")?;
    if !(1..n as i64).contains(&a_raw) {
        return Err(claim(Rule::ResidueSplit, "form degree out of range"));
    }
    let a = a_raw as u32;
    let t = req_int(node, "t")?;
    if pair.r() != 1 || !pair.components[0].irreducible || !pair.components[0].smooth {
        return Err(EngineError::BoundaryNotIrreducible.into());
    }
    want_children(node, 2)?;
    let k = pair.components[0].degree;
    let intrinsic = divisor_intrinsic_type(&pair.ambient, k).map_err(EngineError::from)?;

    // Ambient sections.
    let ambient_child = &node.children[0];
    match ambient_child.rule {
        Rule::BottVanish => {
            if pair.ambient.kind != VarietyKind::ProjectiveSpace {
                return Err(claim(
                    Rule::BottVanish,
                    "exact form cohomology applies to projective space only",
                ));
            }
            node_eq(ambient_child, &engine::bott_leaf(&pair.ambient, a, t))?;
            if !bott_dim(n, a, t, 0).map_err(EngineError::from)?.is_zero() {
                return Err(claim(Rule::BottVanish, "the group is nonzero"));
            }
        }
        Rule::StabilityVanish => {
            let fact = kb
                .get(n)
                .ok_or_else(|| claim(Rule::StabilityVanish, "no stability fact at this dimension"))?;
            node_eq(ambient_child, &engine::stability_leaf(&pair.ambient, a, t, fact))?;
            if !stability_vanishing(&pair.ambient, a, t, kb)
                .map_err(EngineError::from)?
                .holds()
            {
                return Err(claim(Rule::StabilityVanish, "the slope inequality fails"));
            }
        }
        other => {
            return Err(ReplayError::RuleMismatch {
                got: other,
                expected: "BottVanish or StabilityVanish".to_string(),
            })
        }
    }

    // Divisor-side sections.
    let div = &node.children[1];
    match div.rule {
        Rule::Kan => {
            if t >= 0 {
                return Err(claim(Rule::Kan, "vanishing leaves need a negative twist"));
            }
            node_eq(div, &engine::kan_leaf(n - 1, a - 1, t, None))?;
            if !kan_h0_vanishes(n - 1, a - 1, t)
                .map_err(EngineError::from)?
                .holds()
            {
                return Err(claim(Rule::Kan, "the vanishing hypothesis fails"));
            }
        }
        Rule::CuppingInjective => {
            if a != 1 || t != 0 {
                return Err(claim(
                    Rule::CuppingInjective,
                    "the cupping argument lives at a=1, t=0",
                ));
            }
            if !engine::cupping_injective(pair)
                .map_err(ReplayError::Engine)?
                .holds()
            {
                return Err(claim(Rule::CuppingInjective, "the boundary is reducible"));
            }
            node_eq(
                div,
                &engine::cupping_leaf(1, &engine::h11_display(&pair.ambient)),
            )?;
        }
        Rule::FanoHodge => {
            if t != 0 || a < 2 {
                return Err(claim(
                    Rule::FanoHodge,
                    "Hodge-theoretic vanishing applies at twist zero for a >= 2",
                ));
            }
            node_eq(div, &engine::fano_hodge_leaf(&intrinsic, a - 1))?;
            if !fano_hodge_vanishes(&intrinsic, a - 1)
                .map_err(EngineError::from)?
                .holds()
            {
                return Err(claim(Rule::FanoHodge, "the vanishing hypothesis fails"));
            }
        }
        Rule::BottVanish => {
            if intrinsic.kind != VarietyKind::ProjectiveSpace {
                return Err(claim(
                    Rule::BottVanish,
                    "the divisor is not a projective space",
                ));
            }
            node_eq(div, &engine::bott_leaf(&intrinsic, a - 1, t))?;
            if !bott_dim(intrinsic.dim, a - 1, t, 0)
                .map_err(EngineError::from)?
                .is_zero()
            {
                return Err(claim(Rule::BottVanish, "the group is nonzero"));
            }
        }
        Rule::SnowVanish => {
            if intrinsic.kind != VarietyKind::Quadric {
                return Err(claim(Rule::SnowVanish, "the divisor is not a quadric"));
            }
            node_eq(div, &engine::snow_leaf(&intrinsic, a - 1, t))?;
            if !quadric_h0_vanishes(intrinsic.dim, a - 1, t)
                .map_err(EngineError::from)?
                .holds()
            {
                return Err(claim(Rule::SnowVanish, "the vanishing hypothesis fails"));
            }
        }
        Rule::StabilityVanish => {
            let fact = kb.get(intrinsic.dim).ok_or_else(|| {
                claim(Rule::StabilityVanish, "no stability fact at this dimension")
            })?;
            node_eq(div, &engine::stability_leaf(&intrinsic, a - 1, t, fact))?;
            if !stability_vanishing(&intrinsic, a - 1, t, kb)
                .map_err(EngineError::from)?
                .holds()
            {
                return Err(claim(Rule::StabilityVanish, "the slope inequality fails"));
            }
        }
        Rule::RestrictionSurjective => {
            let space_str = req(div, "space")?;
            let kk = req_int(div, "k")?;
            // The embedding must be one the divisor actually admits: its
            // defining embedding in the pair's ambient space, or the
            // intrinsic model Q^2 inside P^3.
            let via_ambient = space_str == pair.ambient.to_string() && kk == k as i64;
            let via_q2 = intrinsic.kind == VarietyKind::Quadric
                && intrinsic.dim == 2
                && space_str == "P3"
                && kk == 2;
            if !(via_ambient || via_q2) {
                return Err(claim(
                    Rule::RestrictionSurjective,
                    "embedding data does not match the divisor",
                ));
            }
            want_int(div, "q", (a - 1) as i64)?;
            want_int(div, "c", t)?;
            let space = VarietySpec::from_str(&space_str).map_err(EngineError::from)?;
            match engine::restriction_vanishing(&space, kk as u32, a - 1, t, kb)
                .map_err(ReplayError::Engine)?
            {
                (TriBool::Holds, Some(expected)) => node_eq(div, &expected)?,
                _ => {
                    return Err(claim(
                        Rule::RestrictionSurjective,
                        "the restriction lemma does not certify this group",
                    ))
                }
            }
        }
        other => {
            return Err(ReplayError::RuleMismatch {
                got: other,
                expected: "a divisor-side vanishing rule".to_string(),
            })
        }
    }
    Ok(())
}

/// Verifies a destabilizing witness: the boundary must really have at
/// least two irreducible pieces on a log Fano pair, the section-count
/// bound must equal pieces minus one, and the recorded slope and ambient
/// Hodge vanishing must re-derive.
pub fn replay_witness(pair: &LogPair, witness: &Witness) -> Result<(), ReplayError> {
    engine::validate_pair_basics(pair)?;
    let node = &witness.justification;
    if node.rule != Rule::ReducibleWitness {
        return Err(ReplayError::RuleMismatch {
            got: node.rule,
            expected: "ReducibleWitness".to_string(),
        });
    }
    let pieces = engine::effective_pieces(pair);
    if pieces < 2 {
        return Err(claim(
            Rule::ReducibleWitness,
            "the boundary has at most one irreducible piece",
        ));
    }
    if !pair.log_fano() {
        return Err(claim(
            Rule::ReducibleWitness,
            "the pair is not log Fano, so slope zero does not destabilize",
        ));
    }
    if witness.a != 1 || witness.t != 0 {
        return Err(claim(Rule::ReducibleWitness, "the witness lives at a=1, t=0"));
    }
    if witness.h0_lower_bound != pieces - 1 {
        return Err(claim(
            Rule::ReducibleWitness,
            "the section bound does not match the piece count",
        ));
    }
    want_int(node, "r", pieces as i64)?;
    want(node, "h11", &engine::h11_display(&pair.ambient))?;
    want_int(node, "a", 1)?;
    want_int(node, "t", 0)?;
    want_int(node, "h0_lower_bound", (pieces - 1) as i64)?;
    want(node, "slope", &slope_log(pair, 1).to_string())?;
    want_children(node, 1)?;
    let child = &node.children[0];
    if child.rule != Rule::FanoHodge {
        return Err(ReplayError::RuleMismatch {
            got: child.rule,
            expected: "FanoHodge".to_string(),
        });
    }
    node_eq(child, &engine::fano_hodge_leaf(&pair.ambient, 1))?;
    if !fano_hodge_vanishes(&pair.ambient, 1)
        .map_err(EngineError::from)?
        .holds()
    {
        return Err(claim(Rule::FanoHodge, "the vanishing hypothesis fails"));
    }
    Ok(())
}
