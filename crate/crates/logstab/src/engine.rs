//! The decision engine: slopes, destabilizing candidates, and the rule
//! pipeline that discharges them with certificates.
//!
//! For a pair `(X, D)` with `Pic(X) = Z`, `-K_X = O(s)`, and boundary
//! degrees `k_i`, semistability of `Omega_X(log D)` reduces to the
//! vanishing `H^0(X, Omega^a_X(log D)(t)) = 0` for all `1 <= a < n` and
//! all integers `t` below the slope bound `a(s - sum k_i)/n`:
//!
//! * every negative `t` follows from the `t = -1` case by twist
//!   monotonicity of sections, and `t = -1` is Norimatsu vanishing —
//!   certified by [`norimatsu_certificate`];
//! * the finitely many `t >= 0` below the bound are enumerated by
//!   [`destabilizing_candidates`] and discharged one at a time by
//!   [`resolve_obligation`] along the residue sequence.
//!
//! When the boundary has two or more pieces (and the pair is log Fano),
//! the cupping map cannot be injective and [`reducible_witness`] produces
//! a certified destabilizing section instead.

use num_traits::Zero;
use thiserror::Error;

use crate::arith::{rat, Rational};
use crate::certificate::{citations, CertificateNode, Rule};
use crate::cohomology::{
    bott_dim, divisor_intrinsic_type, fano_hodge_vanishes, kan_h0_vanishes, quadric_h0_vanishes,
    stability_vanishing, CohomologyError, TriBool,
};
use crate::variety::{
    default_kb, DivisorComponent, LogPair, StabilityFact, StabilityKb, VarietyError, VarietyKind,
    VarietySpec,
};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum EngineError {
    #[error(transparent)]
    Variety(#[from] VarietyError),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
    #[error("the boundary must have at least one component")]
    EmptyBoundary,
    #[error("the boundary must be simple normal crossing")]
    NotSnc,
    #[error("every boundary component must be smooth")]
    NotSmooth,
    #[error("Picard rank one must be known for the ambient space")]
    PicardUnknown,
    #[error("residue analysis needs a single smooth irreducible boundary component")]
    BoundaryNotIrreducible,
    #[error("a reducible boundary component must be listed as its irreducible pieces here")]
    ReducibleComponent,
    #[error("the log canonical class is negative; the ample-or-trivial rule does not apply")]
    LogCanonicalNegative,
    #[error("restriction analysis needs q <= dim - 2, got q={q} in ambient dimension {dim}")]
    RestrictionDegree { q: u32, dim: u32 },
    #[error("divisor degrees must be positive")]
    ZeroDegreeDivisor,
    #[error("case tables cover dimensions 2 through 6, got n={n}")]
    DimensionOutOfRange { n: u32 },
    #[error("case tables need 0 < k < s <= n + 1, got s={s}, k={k} at n={n}")]
    CaseOutOfRange { n: u32, s: u32, k: u32 },
}

/// Slope of `Omega^a_X(log D)` against the ample generator, as the exact
/// rational coefficient of the top self-intersection number:
/// `a (-s + sum k_i) / n`.
pub fn slope_log(pair: &LogPair, a: u32) -> Rational {
    let s = pair.ambient.index as i64;
    let total = pair.total_degree() as i64;
    rat(a as i64 * (total - s), pair.ambient.dim as i64)
        .expect("ambient dimension is positive")
}

/// A potentially destabilizing pair: the form degree `a` and twist `t` of
/// an obligation `H^0(X, Omega^a_X(log D)(t)) = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Candidate {
    pub a: u32,
    pub t: i64,
}

/// The nonnegative twists below the slope bound: all `(a, t)` with
/// `1 <= a < n`, `t >= 0`, and `t n < a (s - total)`. Negative twists are
/// excluded because they reduce to Norimatsu vanishing wholesale.
pub fn destabilizing_candidates(n: u32, s: u32, total_degree: u32) -> Vec<Candidate> {
    let mut out = Vec::new();
    if s <= total_degree {
        return out;
    }
    let d = (s - total_degree) as i64;
    let n_i = n as i64;
    for a in 1..n {
        // Largest t with t n < a d, i.e. floor((a d - 1) / n); a d >= 1.
        let t_max = (a as i64 * d - 1).div_euclid(n_i);
        for t in 0..=t_max {
            out.push(Candidate { a, t });
        }
    }
    out
}

pub(crate) fn degrees_csv(degrees: &[u32]) -> String {
    degrees
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

pub(crate) fn h11_display(space: &VarietySpec) -> String {
    match space.h11 {
        Some(v) => v.to_string(),
        None => "unknown".to_string(),
    }
}

pub(crate) fn bott_leaf(space: &VarietySpec, p: u32, t: i64) -> CertificateNode {
    CertificateNode::new(Rule::BottVanish, citations::BOTT_VANISH)
        .with_input("space", space)
        .with_input("p", p)
        .with_input("t", t)
}

pub(crate) fn snow_leaf(space: &VarietySpec, p: u32, t: i64) -> CertificateNode {
    CertificateNode::new(Rule::SnowVanish, citations::SNOW_VANISH)
        .with_input("space", space)
        .with_input("p", p)
        .with_input("t", t)
}

pub(crate) fn stability_leaf(
    space: &VarietySpec,
    a: u32,
    t: i64,
    fact: &StabilityFact,
) -> CertificateNode {
    CertificateNode::new(Rule::StabilityVanish, citations::stability(&fact.citation))
        .with_input("space", space)
        .with_input("a", a)
        .with_input("t", t)
}

pub(crate) fn kan_leaf(dim: u32, a: u32, t: i64, det: Option<i64>) -> CertificateNode {
    let node = CertificateNode::new(Rule::Kan, citations::KAN)
        .with_input("dim", dim)
        .with_input("a", a)
        .with_input("t", t);
    match det {
        Some(det) => node.with_input("det", det),
        None => node,
    }
}

pub(crate) fn fano_hodge_leaf(space: &VarietySpec, a: u32) -> CertificateNode {
    CertificateNode::new(Rule::FanoHodge, citations::FANO_HODGE)
        .with_input("space", space)
        .with_input("a", a)
}

pub(crate) fn cupping_leaf(pieces: u32, h11: &str) -> CertificateNode {
    CertificateNode::new(Rule::CuppingInjective, citations::CUPPING_INJECTIVE)
        .with_input("r", pieces)
        .with_input("h11", h11)
}

/// Lower bound on the number of irreducible pieces of the boundary: each
/// component contributes one, and each component flagged reducible at
/// least one more.
pub(crate) fn effective_pieces(pair: &LogPair) -> u32 {
    let extra = pair.components.iter().filter(|c| !c.irreducible).count();
    (pair.r() + extra) as u32
}

/// Certificate for `H^0(W, Omega^a_W(log sum D_i)(t)) = 0` on an
/// `n`-dimensional `W` with `Pic = Z`, `K_W = O(canonical)`, and smooth
/// boundary components of the given degrees (Norimatsu's theorem, proved
/// by induction along residue sequences).
///
/// Interior nodes peel the first boundary component; the two children
/// certify the same vanishing with one fewer component on `W` and on that
/// component. Base cases are Kodaira-Akizuki-Nakano leaves; in top degree
/// `a = dim W` the log form sheaf is the line bundle
/// `O(canonical + sum degrees)`, recorded on the leaf as `det`, and the
/// leaf claims `det + t < 0` instead.
///
/// The tree is built for any twist, but only replays as valid when every
/// leaf sees `t < 0` — the theorem's actual hypothesis.
pub fn norimatsu_certificate(
    dim: u32,
    canonical: i64,
    degrees: &[u32],
    a: u32,
    t: i64,
) -> Result<CertificateNode, EngineError> {
    if dim == 0 {
        return Err(CohomologyError::ZeroDimension.into());
    }
    if a > dim {
        return Err(CohomologyError::FormDegreeTooLarge { p: a, n: dim }.into());
    }
    if degrees.iter().any(|&d| d == 0) {
        return Err(EngineError::ZeroDegreeDivisor);
    }
    Ok(build_norimatsu(dim, canonical, degrees, a, t))
}

fn build_norimatsu(dim: u32, canonical: i64, degrees: &[u32], a: u32, t: i64) -> CertificateNode {
    if a == dim {
        let det = canonical + degrees.iter().map(|&d| d as i64).sum::<i64>();
        return kan_leaf(dim, a, t, Some(det));
    }
    if a == 0 || degrees.is_empty() {
        return kan_leaf(dim, a, t, None);
    }
    CertificateNode::new(Rule::Norimatsu, citations::NORIMATSU)
        .with_input("dim", dim)
        .with_input("canonical", canonical)
        .with_input("degrees", degrees_csv(degrees))
        .with_input("a", a)
        .with_input("t", t)
        .with_child(build_norimatsu(dim, canonical, &degrees[1..], a, t))
        .with_child(build_norimatsu(
            dim - 1,
            canonical + degrees[0] as i64,
            &degrees[1..],
            a - 1,
            t,
        ))
}

/// Divisor-side vanishing `H^0(D, Omega^q_D(c)) = 0` through the
/// surjective restriction `H^0(Y, Omega^q_Y(c)) -> H^0(D, Omega^q_D(c))`,
/// valid for `c < k` and `q <= dim Y - 2`.
///
/// The ambient group is decided by Bott on projective space and by Snow
/// (then knowledge-base stability) on quadrics of dimension at least
/// three. Other ambients — abstract Fano manifolds, `Q^2` — get no claim.
/// On `Holds`, the returned node records the embedding data and carries
/// the ambient vanishing leaf as its only child.
pub fn restriction_vanishing(
    ambient: &VarietySpec,
    k: u32,
    q: u32,
    c: i64,
    kb: &StabilityKb,
) -> Result<(TriBool, Option<CertificateNode>), EngineError> {
    if ambient.dim < 2 || q + 2 > ambient.dim {
        return Err(EngineError::RestrictionDegree {
            q,
            dim: ambient.dim,
        });
    }
    if k == 0 {
        return Err(EngineError::ZeroDegreeDivisor);
    }
    if c >= k as i64 {
        return Ok((TriBool::Unknown, None));
    }
    let leaf = match ambient.kind {
        VarietyKind::ProjectiveSpace => {
            if bott_dim(ambient.dim, q, c, 0)?.is_zero() {
                Some(bott_leaf(ambient, q, c))
            } else {
                None
            }
        }
        VarietyKind::Quadric if ambient.dim >= 3 && q >= 1 => {
            if quadric_h0_vanishes(ambient.dim, q, c)?.holds() {
                Some(snow_leaf(ambient, q, c))
            } else if stability_vanishing(ambient, q, c, kb)?.holds() {
                let fact = kb.get(ambient.dim).expect("stability held, so a fact exists");
                Some(stability_leaf(ambient, q, c, fact))
            } else {
                None
            }
        }
        _ => None,
    };
    Ok(match leaf {
        Some(leaf) => {
            let node = CertificateNode::new(
                Rule::RestrictionSurjective,
                citations::RESTRICTION_SURJECTIVE,
            )
            .with_input("space", ambient)
            .with_input("k", k)
            .with_input("q", q)
            .with_input("c", c)
            .with_child(leaf);
            (TriBool::Holds, Some(node))
        }
        None => (TriBool::Unknown, None),
    })
}

/// Injectivity of the cupping map `H^0(D, O_D) -> H^1(X, Omega^1_X)`
/// sending each boundary piece to its class. With `Pic(X) = Z` all piece
/// classes are proportional, so the map is injective exactly when the
/// boundary has at most one piece.
pub fn cupping_injective(pair: &LogPair) -> Result<TriBool, EngineError> {
    if !pair.ambient.picard_rank_one_known {
        return Err(EngineError::PicardUnknown);
    }
    Ok(if effective_pieces(pair) <= 1 {
        TriBool::Holds
    } else {
        TriBool::Fails
    })
}

/// A certified destabilizing section: a nonzero element of
/// `H^0(X, Omega^a_X(log D)(t))` whose image `O_X(-t)` sits above the
/// bundle's slope. The witness records the twist, a lower bound on `h^0`,
/// and the certificate justifying that bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub a: u32,
    pub t: i64,
    pub h0_lower_bound: u32,
    pub justification: CertificateNode,
}

/// A destabilizing witness for a log Fano pair whose boundary has at
/// least two irreducible pieces: the residue sequence at `a = 1, t = 0`
/// shows `h^0(X, Omega^1_X(log D)) >= pieces - 1 >= 1`, because the
/// cupping map out of `H^0(D, O_D)` has rank at most one and
/// `H^0(X, Omega^1_X) = 0`. A nonzero section embeds `O_X` with slope `0`
/// above the negative log slope, defeating semistability.
///
/// Returns `None` when the hypotheses are not met (fewer than two pieces,
/// Picard rank unknown, boundary not smooth simple normal crossing, or
/// the pair not log Fano).
pub fn reducible_witness(pair: &LogPair) -> Result<Option<Witness>, EngineError> {
    let pieces = effective_pieces(pair);
    if pieces < 2
        || !pair.ambient.picard_rank_one_known
        || !pair.snc
        || !pair.all_smooth()
        || !pair.log_fano()
    {
        return Ok(None);
    }
    let bound = pieces - 1;
    let node = CertificateNode::new(Rule::ReducibleWitness, citations::REDUCIBLE_WITNESS)
        .with_input("r", pieces)
        .with_input("h11", h11_display(&pair.ambient))
        .with_input("a", 1)
        .with_input("t", 0)
        .with_input("h0_lower_bound", bound)
        .with_input("slope", slope_log(pair, 1))
        .with_child(fano_hodge_leaf(&pair.ambient, 1));
    Ok(Some(Witness {
        a: 1,
        t: 0,
        h0_lower_bound: bound,
        justification: node,
    }))
}

/// Outcome of [`resolve_obligation`] on one `(a, t)` obligation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Resolution {
    /// A residue-sequence certificate with two children: ambient
    /// vanishing and divisor-side vanishing.
    Resolved(CertificateNode),
    /// No implemented rule certifies the obligation.
    Unresolved { reason: String },
}

/// Discharges `H^0(X, Omega^a_X(log D)(t)) = 0` for a pair with a single
/// smooth irreducible boundary component, along the residue sequence:
/// the ambient group `H^0(X, Omega^a_X(t))` must vanish, and the
/// divisor-side group `H^0(D, Omega^{a-1}_D(t))` must vanish (for
/// `a = 1, t = 0`, injectivity of the cupping map substitutes).
///
/// Any `t` is accepted, not only enumerated candidates, so boundary rows
/// beyond the strict slope bound can be probed directly.
pub fn resolve_obligation(
    pair: &LogPair,
    a: u32,
    t: i64,
    kb: &StabilityKb,
) -> Result<Resolution, EngineError> {
    let n = pair.ambient.dim;
    if a == 0 || a >= n {
        return Err(CohomologyError::FormDegreeNotInterior { a, dim: n }.into());
    }
    if pair.r() != 1 || !pair.components[0].irreducible || !pair.components[0].smooth {
        return Err(EngineError::BoundaryNotIrreducible);
    }
    let ambient = &pair.ambient;
    let k = pair.components[0].degree;
    // Validates 1 <= k < index along the way.
    let intrinsic = divisor_intrinsic_type(ambient, k)?;

    // Ambient sections: Bott decides exactly on projective space; on any
    // other rank-one ambient, a knowledge-base stability fact decides.
    let ambient_leaf = match ambient.kind {
        VarietyKind::ProjectiveSpace => {
            if bott_dim(n, a, t, 0)?.is_zero() {
                Some(bott_leaf(ambient, a, t))
            } else {
                None
            }
        }
        _ => {
            if stability_vanishing(ambient, a, t, kb)?.holds() {
                let fact = kb.get(n).expect("stability held, so a fact exists");
                Some(stability_leaf(ambient, a, t, fact))
            } else {
                None
            }
        }
    };
    let Some(ambient_leaf) = ambient_leaf else {
        return Ok(Resolution::Unresolved {
            reason: format!("ambient vanishing H^0(X, Omega^{a}({t})) not certified"),
        });
    };

    let divisor_node = divisor_side(pair, &intrinsic, a, t, kb)?;
    let Some(divisor_node) = divisor_node else {
        return Ok(Resolution::Unresolved {
            reason: format!(
                "divisor-side vanishing H^0(D, Omega^{}({t})) not certified",
                a - 1
            ),
        });
    };

    Ok(Resolution::Resolved(
        CertificateNode::new(Rule::ResidueSplit, citations::RESIDUE_SPLIT)
            .with_input("a", a)
            .with_input("t", t)
            .with_child(ambient_leaf)
            .with_child(divisor_node),
    ))
}

/// The divisor-side decision for `H^0(D, Omega^{a-1}_D(t))`, in rule
/// order: Kodaira-Akizuki-Nakano for negative twists; at twist zero the
/// cupping map (for `a = 1`) or Fano Hodge theory (for `a >= 2`); for
/// positive twists Bott on projective divisors, Snow on quadric divisors,
/// knowledge-base stability on abstract Fano divisors, and finally the
/// restriction lemma — through the natural embedding `Q^2 in P^3` for
/// two-dimensional quadric divisors, and through the pair's own ambient
/// space otherwise.
fn divisor_side(
    pair: &LogPair,
    intrinsic: &VarietySpec,
    a: u32,
    t: i64,
    kb: &StabilityKb,
) -> Result<Option<CertificateNode>, EngineError> {
    let k = pair.components[0].degree;
    if t < 0 {
        // a - 1 < dim D always, so the claim is unconditional.
        debug_assert!(kan_h0_vanishes(intrinsic.dim, a - 1, t)?.holds());
        return Ok(Some(kan_leaf(intrinsic.dim, a - 1, t, None)));
    }
    if t == 0 {
        if a == 1 {
            if !pair.ambient.picard_rank_one_known {
                return Ok(None);
            }
            return Ok(match cupping_injective(pair)? {
                TriBool::Holds => Some(cupping_leaf(
                    effective_pieces(pair),
                    &h11_display(&pair.ambient),
                )),
                _ => None,
            });
        }
        debug_assert!(fano_hodge_vanishes(intrinsic, a - 1)?.holds());
        return Ok(Some(fano_hodge_leaf(intrinsic, a - 1)));
    }
    // t >= 1.
    if a == 1 {
        // O_D(t) has sections for every positive twist; nothing can help.
        return Ok(None);
    }
    match intrinsic.kind {
        VarietyKind::ProjectiveSpace => {
            // Bott is exact: a zero settles the row, a nonzero means the
            // group really is nonzero and no rule can vanish it.
            if bott_dim(intrinsic.dim, a - 1, t, 0)?.is_zero() {
                return Ok(Some(bott_leaf(intrinsic, a - 1, t)));
            }
            Ok(None)
        }
        VarietyKind::Quadric if intrinsic.dim >= 3 => {
            if quadric_h0_vanishes(intrinsic.dim, a - 1, t)?.holds() {
                return Ok(Some(snow_leaf(intrinsic, a - 1, t)));
            }
            restriction_fallback(pair, k, a, t, kb)
        }
        VarietyKind::Quadric => {
            // A two-dimensional quadric divisor is itself the degree-two
            // hypersurface in P^3; try the restriction lemma there first.
            let p3 = VarietySpec::projective(3)?;
            if let (TriBool::Holds, Some(node)) = restriction_vanishing(&p3, 2, a - 1, t, kb)? {
                return Ok(Some(node));
            }
            restriction_fallback(pair, k, a, t, kb)
        }
        VarietyKind::AbstractFano if intrinsic.dim >= 3 => {
            if stability_vanishing(intrinsic, a - 1, t, kb)?.holds() {
                let fact = kb
                    .get(intrinsic.dim)
                    .expect("stability held, so a fact exists");
                return Ok(Some(stability_leaf(intrinsic, a - 1, t, fact)));
            }
            restriction_fallback(pair, k, a, t, kb)
        }
        VarietyKind::AbstractFano => restriction_fallback(pair, k, a, t, kb),
    }
}

fn restriction_fallback(
    pair: &LogPair,
    k: u32,
    a: u32,
    t: i64,
    kb: &StabilityKb,
) -> Result<Option<CertificateNode>, EngineError> {
    match restriction_vanishing(&pair.ambient, k, a - 1, t, kb)? {
        (TriBool::Holds, Some(node)) => Ok(Some(node)),
        _ => Ok(None),
    }
}

/// One obligation still open after every implemented rule was tried.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnresolvedCase {
    pub a: u32,
    pub t: i64,
    pub reason: String,
}

/// The checker's answer for a pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// Semistable, with a replayable certificate.
    Semistable { certificate: CertificateNode },
    /// Not semistable, with a certified destabilizing section.
    NotSemistable { witness: Witness },
    /// The rule set cannot settle the pair; the open obligations are
    /// listed. No claim is made either way.
    Unknown { unresolved: Vec<UnresolvedCase> },
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Semistable { .. } => "Semistable",
            Verdict::NotSemistable { .. } => "NotSemistable",
            Verdict::Unknown { .. } => "Unknown",
        }
    }

    /// Process exit code: 0 semistable, 3 not semistable, 4 unknown.
    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::Semistable { .. } => 0,
            Verdict::NotSemistable { .. } => 3,
            Verdict::Unknown { .. } => 4,
        }
    }
}

/// The input requirements shared by certification and replay: a nonempty
/// smooth simple normal crossing boundary on an ambient space actually
/// known to have Picard rank one.
pub(crate) fn validate_pair_basics(pair: &LogPair) -> Result<(), EngineError> {
    if pair.components.is_empty() {
        return Err(EngineError::EmptyBoundary);
    }
    if !pair.snc {
        return Err(EngineError::NotSnc);
    }
    if !pair.all_smooth() {
        return Err(EngineError::NotSmooth);
    }
    if !pair.ambient.picard_rank_one_known {
        return Err(EngineError::PicardUnknown);
    }
    Ok(())
}

/// Semistability certificate for a pair whose log canonical class is
/// ample or trivial (`s <= sum k_i`): every destabilizing twist is then
/// negative, and twist monotonicity reduces them all to `t = -1`, which
/// Norimatsu vanishing certifies for each form degree.
pub fn ample_or_trivial_certificate(pair: &LogPair) -> Result<CertificateNode, EngineError> {
    if !pair.kd_ample_or_trivial() {
        return Err(EngineError::LogCanonicalNegative);
    }
    // The induction peels one smooth irreducible component at a time; a
    // reducible entry would misstate the geometry of the restriction.
    if !pair.all_irreducible() {
        return Err(EngineError::ReducibleComponent);
    }
    let n = pair.ambient.dim;
    let s = pair.ambient.index;
    let degrees = pair.degrees();
    let mut root = CertificateNode::new(Rule::AmpleOrTrivial, citations::AMPLE_OR_TRIVIAL)
        .with_input("n", n)
        .with_input("s", s)
        .with_input("degrees", degrees_csv(&degrees));
    for a in 1..n {
        root = root.with_child(norimatsu_certificate(n, -(s as i64), &degrees, a, -1)?);
    }
    Ok(root)
}

/// Decides semistability of `Omega_X(log D)` with the bundled knowledge
/// base. See [`certify_with_kb`].
pub fn certify(pair: &LogPair) -> Result<Verdict, EngineError> {
    certify_with_kb(pair, default_kb())
}

/// Decides semistability of `Omega_X(log D)`, producing a certificate
/// (semistable), a destabilizing witness (not semistable), or the list of
/// open obligations (unknown).
///
/// Input requirements: a nonempty smooth simple normal crossing boundary
/// and an ambient space actually known to have Picard rank one.
pub fn certify_with_kb(pair: &LogPair, kb: &StabilityKb) -> Result<Verdict, EngineError> {
    validate_pair_basics(pair)?;

    if pair.kd_ample_or_trivial() {
        return Ok(Verdict::Semistable {
            certificate: ample_or_trivial_certificate(pair)?,
        });
    }

    // Log Fano from here on.
    if let Some(witness) = reducible_witness(pair)? {
        return Ok(Verdict::NotSemistable { witness });
    }

    // A single smooth irreducible component remains.
    let n = pair.ambient.dim;
    let s = pair.ambient.index;
    let k = pair.total_degree();
    let mut residue_nodes = Vec::new();
    let mut unresolved = Vec::new();
    for cand in destabilizing_candidates(n, s, k) {
        match resolve_obligation(pair, cand.a, cand.t, kb)? {
            Resolution::Resolved(node) => residue_nodes.push(node),
            Resolution::Unresolved { reason } => unresolved.push(UnresolvedCase {
                a: cand.a,
                t: cand.t,
                reason,
            }),
        }
    }
    if !unresolved.is_empty() {
        return Ok(Verdict::Unknown { unresolved });
    }

    let mut root = CertificateNode::new(Rule::SlopeBound, citations::SLOPE_BOUND)
        .with_input("n", n)
        .with_input("s", s)
        .with_input("degrees", degrees_csv(&pair.degrees()))
        .with_input("slope", slope_log(pair, 1));
    for a in 1..n {
        root = root.with_child(norimatsu_certificate(
            n,
            -(s as i64),
            &pair.degrees(),
            a,
            -1,
        )?);
    }
    root = root.with_children(residue_nodes);
    Ok(Verdict::Semistable { certificate: root })
}

/// The generic rank-one ambient space of dimension `n` and index `s`:
/// projective space for `s = n + 1`, the quadric for `s = n` (with its
/// honest Picard flag — `Q^2` is not rank one), and an abstract Fano
/// otherwise, taken with Picard rank one as the case analysis assumes.
pub fn generic_ambient(n: u32, s: u32) -> Result<VarietySpec, EngineError> {
    if s == n + 1 {
        Ok(VarietySpec::projective(n)?)
    } else if s == n {
        Ok(VarietySpec::quadric(n)?)
    } else {
        Ok(VarietySpec::abstract_fano(n, s, true)?)
    }
}

/// Status of one case-table row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CaseStatus {
    /// The obligation was discharged; the rule that settled the
    /// divisor-side group is recorded.
    Resolved { divisor_rule: Rule },
    Unresolved { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseRow {
    pub a: u32,
    pub t: i64,
    pub status: CaseStatus,
}

/// The full case analysis for one `(n, s, k)` cell of the grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseTable {
    pub n: u32,
    pub s: u32,
    pub k: u32,
    pub ambient: VarietySpec,
    pub rows: Vec<CaseRow>,
}

impl CaseTable {
    pub fn fully_resolved(&self) -> bool {
        self.rows
            .iter()
            .all(|row| matches!(row.status, CaseStatus::Resolved { .. }))
    }

    pub fn open_rows(&self) -> Vec<(u32, i64)> {
        self.rows
            .iter()
            .filter(|row| matches!(row.status, CaseStatus::Unresolved { .. }))
            .map(|row| (row.a, row.t))
            .collect()
    }
}

/// Enumerates and resolves every destabilizing candidate for the generic
/// pair of dimension `n` (between 2 and 6), ambient index `s`, and a
/// single smooth irreducible boundary of degree `k < s`.
///
/// Rows the rule set cannot settle are reported as unresolved, never
/// guessed — in particular every row on the `n = 2, s = 2` cell, whose
/// ambient `Q^2` does not have Picard rank one.
pub fn case_table(n: u32, s: u32, k: u32, kb: &StabilityKb) -> Result<CaseTable, EngineError> {
    if !(2..=6).contains(&n) {
        return Err(EngineError::DimensionOutOfRange { n });
    }
    if k == 0 || k >= s || s > n + 1 {
        return Err(EngineError::CaseOutOfRange { n, s, k });
    }
    let ambient = generic_ambient(n, s)?;
    let component =
        DivisorComponent::smooth_irreducible(k).expect("k is positive, so the degree is valid");
    let pair = LogPair::new(ambient.clone(), vec![component]);
    let mut rows = Vec::new();
    for cand in destabilizing_candidates(n, s, k) {
        let status = match resolve_obligation(&pair, cand.a, cand.t, kb)? {
            Resolution::Resolved(node) => CaseStatus::Resolved {
                divisor_rule: node.children[1].rule,
            },
            Resolution::Unresolved { reason } => CaseStatus::Unresolved { reason },
        };
        rows.push(CaseRow {
            a: cand.a,
            t: cand.t,
            status,
        });
    }
    Ok(CaseTable {
        n,
        s,
        k,
        ambient,
        rows,
    })
}
