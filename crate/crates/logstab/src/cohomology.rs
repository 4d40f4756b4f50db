//! Cohomology dimensions and vanishing predicates.
//!
//! Two independent computations of `h^q(P^n, Omega^p(t))` live here:
//!
//! * [`bott_dim`] — the closed-form dimension formula (Bott);
//! * [`euler_oracle`] — a recursion on `p` along the exterior powers of the
//!   Euler sequence, chasing dimensions through the long exact sequence in
//!   cohomology and never consulting the closed form.
//!
//! The test suite requires the two to agree on an entire grid, so a
//! transcription slip in either one is caught by the other.
//!
//! The remaining predicates return a [`TriBool`] and are one-sided: `Holds`
//! is only ever returned when the cited theorem actually applies, `Unknown`
//! is the safe default, and `Fails` is reserved for certified
//! non-vanishing. Downstream certificates only ever consume `Holds`.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::arith::binomial;
use crate::variety::{StabilityKb, Strength, VarietyKind, VarietySpec};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CohomologyError {
    #[error("projective space dimension must be >= 1")]
    ZeroDimension,
    #[error("form degree p={p} exceeds dimension n={n}")]
    FormDegreeTooLarge { p: u32, n: u32 },
    #[error("cohomological degree q={q} exceeds dimension n={n}")]
    CohomDegreeTooLarge { q: u32, n: u32 },
    #[error("need an interior form degree 1 <= a <= dim - 1, got a={a} in dimension {dim}")]
    FormDegreeNotInterior { a: u32, dim: u32 },
    #[error("quadric vanishing requires dimension >= 3 and 1 <= p <= m - 1, got m={m}, p={p}")]
    QuadricOutOfRange { m: u32, p: u32 },
    #[error("divisor degree must satisfy 1 <= k <= index - 1, got k={k} with index {index}")]
    DivisorDegreeOutOfRange { k: u32, index: u32 },
    #[error("ambient dimension {dim} is too small for divisor analysis")]
    AmbientTooSmall { dim: u32 },
    #[error("dimension chase hit an inconsistency at n={n}, p={p}, t={t}")]
    ChaseInconsistent { n: u32, p: u32, t: i64 },
}

/// Three-valued answer of a vanishing predicate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriBool {
    /// The vanishing is certified by the predicate's theorem.
    Holds,
    /// The group is certified to be nonzero.
    Fails,
    /// The predicate's hypotheses do not apply; nothing is claimed.
    Unknown,
}

impl TriBool {
    pub fn holds(self) -> bool {
        self == TriBool::Holds
    }
}

/// A single cohomology dimension query `h^q(P^n, Omega^p(t))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CohomQuery {
    pub n: u32,
    pub p: u32,
    pub t: i64,
    pub q: u32,
}

impl std::fmt::Display for CohomQuery {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "h^{}(P^{}, Omega^{}({}))", self.q, self.n, self.p, self.t)
    }
}

fn check_range(n: u32, p: u32, q: u32) -> Result<(), CohomologyError> {
    if n == 0 {
        return Err(CohomologyError::ZeroDimension);
    }
    if p > n {
        return Err(CohomologyError::FormDegreeTooLarge { p, n });
    }
    if q > n {
        return Err(CohomologyError::CohomDegreeTooLarge { q, n });
    }
    Ok(())
}

/// Closed-form `h^q(P^n, Omega^p(t))` (Bott's formula).
///
/// The untwisted case `t = 0` is the Hodge diagonal `h^q = delta_{pq}` in
/// every degree, including `q = 0` (the constants in `H^0(O)`) and `q = n`
/// (the top class in `H^n(Omega^n)`); the two product formulas below give 0
/// at `t = 0`, so that case is split off first rather than folded into the
/// `q = 0` and `q = n` branches.
pub fn bott_dim(n: u32, p: u32, t: i64, q: u32) -> Result<BigUint, CohomologyError> {
    check_range(n, p, q)?;
    let (n_i, p_i) = (n as i64, p as i64);
    if t == 0 {
        return Ok(if p == q { BigUint::one() } else { BigUint::zero() });
    }
    if q == 0 {
        if t > p_i {
            return Ok(binomial(t + n_i - p_i, t) * binomial(t - 1, p_i));
        }
        return Ok(BigUint::zero());
    }
    if q == n {
        // Serre-dual of the q = 0 branch.
        if t < p_i - n_i {
            return Ok(binomial(-t + p_i, -t) * binomial(-t - 1, n_i - p_i));
        }
        return Ok(BigUint::zero());
    }
    Ok(BigUint::zero())
}

/// All cohomology dimensions of `O_{P^n}(t)` as a vector indexed by `q`.
///
/// Requires `n >= 1`. Only `q = 0` (for `t >= 0`) and `q = n` (for
/// `t <= -n-1`) can be nonzero; the out-of-range convention of
/// [`binomial`] makes both closed forms correct for every `t`, so the
/// computation is branch-free.
pub fn line_bundle_cohomology(n: u32, t: i64) -> Vec<BigUint> {
    assert!(n >= 1, "line bundles live on P^n with n >= 1");
    let n_i = n as i64;
    let mut v = vec![BigUint::zero(); n as usize + 1];
    v[0] = binomial(n_i + t, n_i);
    v[n as usize] = binomial(-t - 1, n_i);
    v
}

/// Outcome of the long-exact-sequence dimension chase.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChaseResult {
    /// Every `h^q` was pinned down; the vector is indexed by `q`.
    Determined(Vec<BigUint>),
    /// Some degrees could not be resolved by exactness and the pinning
    /// rules; unresolved slots are `None`.
    Ambiguous(Vec<Option<BigUint>>),
}

impl ChaseResult {
    /// The dimension in degree `q`, if that slot was resolved.
    pub fn get(&self, q: u32) -> Option<&BigUint> {
        match self {
            ChaseResult::Determined(v) => v.get(q as usize),
            ChaseResult::Ambiguous(v) => v.get(q as usize).and_then(|o| o.as_ref()),
        }
    }

    pub fn is_determined(&self) -> bool {
        matches!(self, ChaseResult::Determined(_))
    }
}

/// All of `h^q(P^n, Omega^p(t))` computed independently of [`bott_dim`],
/// by recursion on `p` along the exterior powers of the Euler sequence
///
/// ```text
/// 0 -> Omega^p(t) -> O(t - p)^{C(n+1, p)} -> Omega^{p-1}(t) -> 0
/// ```
///
/// The long exact sequence in cohomology is chased numerically: it is cut
/// into segments at entries known to vanish, and any segment containing a
/// single unknown is solved by the alternating-sum identity. When the
/// chase stalls, three pins are tried in order — Serre duality for `h^0`
/// at positive twist (computed by a second chase at negative twist, which
/// never stalls), the Hodge decomposition at twist zero, and
/// Kodaira-Akizuki-Nakano vanishing at negative twist. Anything still
/// unresolved is reported as [`ChaseResult::Ambiguous`] rather than
/// guessed.
pub fn euler_oracle(n: u32, p: u32, t: i64) -> Result<ChaseResult, CohomologyError> {
    check_range(n, p, 0)?;
    euler_vector(n, p, t, true)
}

/// Single entry of [`euler_oracle`]: `None` when that degree is ambiguous.
pub fn euler_oracle_dim(
    n: u32,
    p: u32,
    t: i64,
    q: u32,
) -> Result<Option<BigUint>, CohomologyError> {
    check_range(n, p, q)?;
    Ok(euler_vector(n, p, t, true)?.get(q).cloned())
}

fn euler_vector(
    n: u32,
    p: u32,
    t: i64,
    allow_serre: bool,
) -> Result<ChaseResult, CohomologyError> {
    if p == 0 {
        return Ok(ChaseResult::Determined(line_bundle_cohomology(n, t)));
    }
    let slots = n as usize + 1;
    let sub = match euler_vector(n, p - 1, t, allow_serre)? {
        ChaseResult::Determined(v) => v,
        ChaseResult::Ambiguous(_) => return Ok(ChaseResult::Ambiguous(vec![None; slots])),
    };
    let mult = binomial(n as i64 + 1, p as i64);
    let middle: Vec<BigUint> = line_bundle_cohomology(n, t - p as i64)
        .into_iter()
        .map(|v| v * &mult)
        .collect();

    // Long exact sequence entries in order, three per degree:
    // h^q(Omega^p(t)) [unknown], h^q(O(t-p)^mult), h^q(Omega^{p-1}(t)).
    let mut entries: Vec<Option<BigUint>> = Vec::with_capacity(3 * slots);
    for q in 0..slots {
        entries.push(None);
        entries.push(Some(middle[q].clone()));
        entries.push(Some(sub[q].clone()));
    }

    loop {
        let progress = chase_pass(&mut entries, n, p, t)?;
        if entries.iter().all(|e| e.is_some()) {
            break;
        }
        if progress {
            continue;
        }
        if let Some(pinned) = try_pins(&mut entries, n, p, t, allow_serre)? {
            if pinned {
                continue;
            }
        }
        let out = (0..slots).map(|q| entries[3 * q].clone()).collect();
        return Ok(ChaseResult::Ambiguous(out));
    }
    let out = (0..slots)
        .map(|q| entries[3 * q].clone().expect("all slots resolved"))
        .collect();
    Ok(ChaseResult::Determined(out))
}

/// One sweep over the sequence: split at known zeros, solve every segment
/// with at most one unknown, and verify fully known segments sum to zero.
fn chase_pass(
    entries: &mut [Option<BigUint>],
    n: u32,
    p: u32,
    t: i64,
) -> Result<bool, CohomologyError> {
    let len = entries.len();
    let mut progress = false;
    let mut seg_start = 0usize;
    for i in 0..=len {
        let at_split = i == len || matches!(&entries[i], Some(v) if v.is_zero());
        if !at_split {
            continue;
        }
        let seg = seg_start..i;
        seg_start = i + 1;
        if seg.is_empty() {
            continue;
        }
        let mut signed_sum = BigInt::zero();
        let mut unknowns = 0usize;
        let mut unknown_at = 0usize;
        for (j, idx) in seg.clone().enumerate() {
            match &entries[idx] {
                Some(v) => {
                    let term = BigInt::from(v.clone());
                    if j % 2 == 0 {
                        signed_sum += term;
                    } else {
                        signed_sum -= term;
                    }
                }
                None => {
                    unknowns += 1;
                    unknown_at = j;
                }
            }
        }
        match unknowns {
            0 => {
                // Exact segment flanked by zeros: alternating sum must vanish.
                if !signed_sum.is_zero() {
                    return Err(CohomologyError::ChaseInconsistent { n, p, t });
                }
            }
            1 => {
                // unknown * (-1)^j + signed_sum = 0.
                let value = if unknown_at % 2 == 0 {
                    -signed_sum
                } else {
                    signed_sum
                };
                if value.is_negative() {
                    return Err(CohomologyError::ChaseInconsistent { n, p, t });
                }
                entries[seg.start + unknown_at] =
                    Some(value.to_biguint().expect("checked non-negative"));
                progress = true;
            }
            _ => {}
        }
    }
    Ok(progress)
}

/// Pin stalled unknowns from facts independent of this sequence. Returns
/// `Ok(Some(true))` if anything was pinned.
fn try_pins(
    entries: &mut [Option<BigUint>],
    n: u32,
    p: u32,
    t: i64,
    allow_serre: bool,
) -> Result<Option<bool>, CohomologyError> {
    let slots = n as usize + 1;
    // Serre duality: h^0(Omega^p(t)) = h^n(Omega^{n-p}(-t)). The dual twist
    // is negative, so the inner chase cannot re-enter this pin.
    if allow_serre && t > 0 && entries[0].is_none() {
        if let ChaseResult::Determined(dual) = euler_vector(n, n - p, -t, false)? {
            entries[0] = Some(dual[n as usize].clone());
            return Ok(Some(true));
        }
    }
    // Hodge decomposition: untwisted forms contribute exactly delta_{pq}.
    if t == 0 {
        let mut pinned = false;
        for q in 0..slots {
            if entries[3 * q].is_none() {
                entries[3 * q] = Some(if q == p as usize {
                    BigUint::one()
                } else {
                    BigUint::zero()
                });
                pinned = true;
            }
        }
        if pinned {
            return Ok(Some(true));
        }
    }
    // Kodaira-Akizuki-Nakano: h^0(Omega^p(t)) = 0 for t < 0, p < n.
    if t < 0 && p < n && entries[0].is_none() {
        entries[0] = Some(BigUint::zero());
        return Ok(Some(true));
    }
    Ok(Some(false))
}

/// Kodaira-Akizuki-Nakano vanishing of global sections on any smooth
/// projective `Y`: `H^0(Y, Omega^a_Y(t)) = 0` whenever `t < 0` and
/// `a < dim Y`, for any ample polarization.
pub fn kan_h0_vanishes(dim_y: u32, a: u32, t: i64) -> Result<TriBool, CohomologyError> {
    if a > dim_y {
        return Err(CohomologyError::FormDegreeTooLarge { p: a, n: dim_y });
    }
    if t < 0 && a < dim_y {
        return Ok(TriBool::Holds);
    }
    Ok(TriBool::Unknown)
}

/// Hodge-theoretic vanishing on a Fano manifold: `H^0(X, Omega^a_X) = 0`
/// for `a >= 1`, since `h^{a,0} = h^{0,a} = h^a(O_X) = 0` by Kodaira
/// vanishing. At `a = 0` the constants survive, so the predicate fails.
pub fn fano_hodge_vanishes(space: &VarietySpec, a: u32) -> Result<TriBool, CohomologyError> {
    if a > space.dim {
        return Err(CohomologyError::FormDegreeTooLarge {
            p: a,
            n: space.dim,
        });
    }
    if a == 0 {
        return Ok(TriBool::Fails);
    }
    Ok(TriBool::Holds)
}

/// Section vanishing for twisted form bundles from known (semi)stability of
/// the cotangent bundle.
///
/// On a Fano `n`-fold with `Pic = Z`, a knowledge-base fact that `Omega_X`
/// is semistable makes every `Omega^a_X` semistable of slope `-as/n + t`
/// after twisting, so `H^0(X, Omega^a_X(t)) = 0` whenever that slope is
/// negative, i.e. `tn < as`. When the fact asserts stability and `a = 1`,
/// the twisted bundle is stable and sections also vanish at slope zero.
pub fn stability_vanishing(
    space: &VarietySpec,
    a: u32,
    t: i64,
    kb: &StabilityKb,
) -> Result<TriBool, CohomologyError> {
    if a == 0 || a >= space.dim {
        return Err(CohomologyError::FormDegreeNotInterior { a, dim: space.dim });
    }
    if !space.picard_rank_one_known || space.dim == 2 {
        return Ok(TriBool::Unknown);
    }
    let Some(fact) = kb.get(space.dim) else {
        return Ok(TriBool::Unknown);
    };
    let lhs = t * space.dim as i64;
    let rhs = a as i64 * space.index as i64;
    if lhs < rhs {
        return Ok(TriBool::Holds);
    }
    if fact.strength == Strength::Stable && a == 1 && lhs == rhs {
        return Ok(TriBool::Holds);
    }
    Ok(TriBool::Unknown)
}

/// Section vanishing on a smooth quadric `Q^m`, `m >= 3` (Snow):
/// `H^0(Q^m, Omega^p(t)) = 0` exactly when `t <= p`, for `1 <= p <= m-1`.
/// Only the vanishing direction is certified.
pub fn quadric_h0_vanishes(m: u32, p: u32, t: i64) -> Result<TriBool, CohomologyError> {
    if m <= 2 || p == 0 || p >= m {
        return Err(CohomologyError::QuadricOutOfRange { m, p });
    }
    if t <= p as i64 {
        return Ok(TriBool::Holds);
    }
    Ok(TriBool::Unknown)
}

/// The intrinsic type of a smooth irreducible divisor `D` of degree `k` on
/// the given ambient space, with its restricted polarization.
///
/// By adjunction `-K_D = O_D(index - k)`, so `D` is Fano exactly when
/// `k < index`; degrees outside `1 <= k <= index - 1` are rejected.
/// Hyperplanes in `P^n` and quadrics in `P^n` keep closed-form types, as
/// do hyperplane sections of quadrics; anything else is an abstract Fano
/// known through `(dim - 1, index - k)`. The Picard flag of an abstract
/// type is set exactly for `dim D >= 3`, where the Grothendieck-Lefschetz
/// theorem transfers `Pic = Z` from the ambient space.
pub fn divisor_intrinsic_type(
    ambient: &VarietySpec,
    k: u32,
) -> Result<VarietySpec, CohomologyError> {
    if ambient.dim < 2 {
        return Err(CohomologyError::AmbientTooSmall { dim: ambient.dim });
    }
    if k == 0 || k >= ambient.index {
        return Err(CohomologyError::DivisorDegreeOutOfRange {
            k,
            index: ambient.index,
        });
    }
    let d = ambient.dim - 1;
    let ok = |v: Result<VarietySpec, crate::variety::VarietyError>| {
        Ok(v.expect("constructed intrinsic type is valid"))
    };
    match (ambient.kind, k) {
        (VarietyKind::ProjectiveSpace, 1) => ok(VarietySpec::projective(d)),
        (VarietyKind::ProjectiveSpace, 2) if d >= 2 => ok(VarietySpec::quadric(d)),
        (VarietyKind::ProjectiveSpace, 2) => ok(VarietySpec::projective(1)),
        (VarietyKind::Quadric, 1) if d >= 2 => ok(VarietySpec::quadric(d)),
        (VarietyKind::Quadric, 1) => ok(VarietySpec::projective(1)),
        _ => ok(VarietySpec::abstract_fano(d, ambient.index - k, d >= 3)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::variety::default_kb;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn bott(n: u32, p: u32, t: i64, q: u32) -> BigUint {
        bott_dim(n, p, t, q).unwrap()
    }

    #[test]
    fn bott_reference_values() {
        assert_eq!(bott(3, 1, 1, 0), big(0));
        assert_eq!(bott(2, 1, 2, 0), big(3));
        assert_eq!(bott(4, 3, 5, 0), big(24));
        assert_eq!(bott(4, 2, -6, 4), big(280));
        assert_eq!(bott(4, 1, -6, 4), big(70));
        // Line-bundle specializations.
        assert_eq!(bott(2, 0, 2, 0), big(6));
        assert_eq!(bott(3, 0, -4, 3), big(1));
        assert_eq!(bott(3, 3, 0, 3), big(1));
    }

    #[test]
    fn bott_hodge_diagonal_at_twist_zero() {
        for n in 1..=5u32 {
            for p in 0..=n {
                for q in 0..=n {
                    let expected = if p == q { big(1) } else { big(0) };
                    assert_eq!(bott(n, p, 0, q), expected, "n={n} p={p} q={q}");
                }
            }
        }
    }

    #[test]
    fn bott_interior_degrees_vanish_for_nonzero_twist() {
        for n in 2..=5u32 {
            for p in 0..=n {
                for q in 1..n {
                    for t in [-7i64, -3, -1, 1, 2, 9] {
                        assert_eq!(bott(n, p, t, q), big(0), "n={n} p={p} t={t} q={q}");
                    }
                }
            }
        }
    }

    #[test]
    fn bott_rejects_out_of_range_degrees() {
        assert!(bott_dim(3, 4, 0, 0).is_err());
        assert!(bott_dim(3, 0, 0, 4).is_err());
        assert!(bott_dim(0, 0, 0, 0).is_err());
    }

    #[test]
    fn bott_satisfies_serre_duality() {
        for n in 1..=6u32 {
            for p in 0..=n {
                for q in 0..=n {
                    for t in -8i64..=8 {
                        assert_eq!(
                            bott(n, p, t, q),
                            bott(n, n - p, -t, n - q),
                            "n={n} p={p} t={t} q={q}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn line_bundle_vectors() {
        assert_eq!(line_bundle_cohomology(3, 2), vec![big(10), big(0), big(0), big(0)]);
        assert_eq!(line_bundle_cohomology(3, 0), vec![big(1), big(0), big(0), big(0)]);
        assert_eq!(line_bundle_cohomology(3, -2), vec![big(0); 4]);
        assert_eq!(
            line_bundle_cohomology(3, -5),
            vec![big(0), big(0), big(0), big(4)]
        );
        assert_eq!(line_bundle_cohomology(1, -1), vec![big(0), big(0)]);
        assert_eq!(line_bundle_cohomology(2, -3), vec![big(0), big(0), big(1)]);
    }

    #[test]
    fn oracle_reference_values() {
        let val = |n, p, t, q| euler_oracle_dim(n, p, t, q).unwrap().unwrap();
        assert_eq!(val(2, 0, 2, 0), big(6));
        assert_eq!(val(2, 2, 0, 2), big(1));
        assert_eq!(val(3, 2, 1, 0), big(0));
        assert_eq!(val(4, 3, 5, 0), big(24));
        assert_eq!(val(4, 2, -6, 4), big(280));
        assert_eq!(val(4, 1, -6, 4), big(70));
    }

    #[test]
    fn oracle_matches_closed_form_on_full_grid() {
        for n in 1..=4u32 {
            for p in 0..=n {
                for t in -6i64..=6 {
                    let chase = euler_oracle(n, p, t).unwrap();
                    assert!(
                        chase.is_determined(),
                        "ambiguous chase at n={n} p={p} t={t}"
                    );
                    for q in 0..=n {
                        let query = CohomQuery { n, p, t, q };
                        assert_eq!(
                            chase.get(q).unwrap(),
                            &bott(n, p, t, q),
                            "mismatch at {query}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn kan_predicate() {
        assert_eq!(kan_h0_vanishes(3, 1, -1).unwrap(), TriBool::Holds);
        assert_eq!(kan_h0_vanishes(3, 2, -5).unwrap(), TriBool::Holds);
        // Top-degree forms are a determinant line bundle; no claim.
        assert_eq!(kan_h0_vanishes(3, 3, -1).unwrap(), TriBool::Unknown);
        // Nonnegative twist: no claim.
        assert_eq!(kan_h0_vanishes(3, 1, 0).unwrap(), TriBool::Unknown);
        assert_eq!(kan_h0_vanishes(3, 1, 2).unwrap(), TriBool::Unknown);
        assert!(kan_h0_vanishes(2, 4, -1).is_err());
    }

    #[test]
    fn fano_hodge_predicate() {
        let p3 = VarietySpec::projective(3).unwrap();
        assert_eq!(fano_hodge_vanishes(&p3, 1).unwrap(), TriBool::Holds);
        assert_eq!(fano_hodge_vanishes(&p3, 3).unwrap(), TriBool::Holds);
        assert_eq!(fano_hodge_vanishes(&p3, 0).unwrap(), TriBool::Fails);
        assert!(fano_hodge_vanishes(&p3, 4).is_err());
        let q4 = VarietySpec::quadric(4).unwrap();
        assert_eq!(fano_hodge_vanishes(&q4, 2).unwrap(), TriBool::Holds);
    }

    #[test]
    fn stability_predicate_strict_slope() {
        let kb = default_kb();
        let p3 = VarietySpec::projective(3).unwrap();
        assert_eq!(stability_vanishing(&p3, 1, 0, kb).unwrap(), TriBool::Holds);
        let p5 = VarietySpec::projective(5).unwrap();
        assert_eq!(stability_vanishing(&p5, 2, 1, kb).unwrap(), TriBool::Holds);
        // Slope exactly zero with a >= 2: semistability alone is silent.
        let q3 = VarietySpec::quadric(3).unwrap();
        assert_eq!(stability_vanishing(&q3, 2, 2, kb).unwrap(), TriBool::Unknown);
    }

    #[test]
    fn stability_predicate_stable_boundary() {
        let kb = default_kb();
        // Q^3: dim 3, index 3, knowledge base says stable. At a=1, t=1 the
        // twisted slope is exactly zero; stability still kills sections.
        let q3 = VarietySpec::quadric(3).unwrap();
        assert_eq!(stability_vanishing(&q3, 1, 1, kb).unwrap(), TriBool::Holds);
        // Dimension 6 is only semistable: the same boundary gives no claim.
        let q6 = VarietySpec::quadric(6).unwrap();
        assert_eq!(stability_vanishing(&q6, 1, 1, kb).unwrap(), TriBool::Unknown);
        // Above the boundary: never a claim.
        assert_eq!(stability_vanishing(&q3, 1, 2, kb).unwrap(), TriBool::Unknown);
    }

    #[test]
    fn stability_predicate_guards() {
        let kb = default_kb();
        let p2 = VarietySpec::projective(2).unwrap();
        assert_eq!(stability_vanishing(&p2, 1, -3, kb).unwrap(), TriBool::Unknown);
        let q2 = VarietySpec::quadric(2).unwrap();
        assert_eq!(stability_vanishing(&q2, 1, -3, kb).unwrap(), TriBool::Unknown);
        let f7 = VarietySpec::abstract_fano(7, 3, true).unwrap();
        assert_eq!(stability_vanishing(&f7, 1, -1, kb).unwrap(), TriBool::Unknown);
        let p3 = VarietySpec::projective(3).unwrap();
        assert!(stability_vanishing(&p3, 0, 0, kb).is_err());
        assert!(stability_vanishing(&p3, 3, 0, kb).is_err());
    }

    #[test]
    fn quadric_predicate() {
        assert_eq!(quadric_h0_vanishes(3, 1, 1).unwrap(), TriBool::Holds);
        assert_eq!(quadric_h0_vanishes(3, 1, 2).unwrap(), TriBool::Unknown);
        assert_eq!(quadric_h0_vanishes(4, 2, 2).unwrap(), TriBool::Holds);
        assert_eq!(quadric_h0_vanishes(5, 4, -3).unwrap(), TriBool::Holds);
        assert!(quadric_h0_vanishes(2, 1, 0).is_err());
        assert!(quadric_h0_vanishes(3, 0, 0).is_err());
        assert!(quadric_h0_vanishes(3, 3, 0).is_err());
    }

    #[test]
    fn divisor_types() {
        let p = |n| VarietySpec::projective(n).unwrap();
        let q = |m| VarietySpec::quadric(m).unwrap();
        let f = |d, i, known| VarietySpec::abstract_fano(d, i, known).unwrap();

        assert_eq!(divisor_intrinsic_type(&p(3), 1).unwrap(), p(2));
        assert_eq!(divisor_intrinsic_type(&p(3), 2).unwrap(), q(2));
        assert_eq!(divisor_intrinsic_type(&p(2), 2).unwrap(), p(1));
        assert_eq!(divisor_intrinsic_type(&p(4), 2).unwrap(), q(3));
        assert_eq!(divisor_intrinsic_type(&q(4), 1).unwrap(), q(3));
        assert_eq!(divisor_intrinsic_type(&q(3), 1).unwrap(), q(2));
        assert_eq!(divisor_intrinsic_type(&q(2), 1).unwrap(), p(1));
        assert_eq!(divisor_intrinsic_type(&p(4), 3).unwrap(), f(3, 2, true));
        assert_eq!(divisor_intrinsic_type(&q(5), 2).unwrap(), f(4, 3, true));
        assert_eq!(divisor_intrinsic_type(&p(3), 3).unwrap(), f(2, 1, false));
        assert_eq!(
            divisor_intrinsic_type(&f(5, 4, true), 2).unwrap(),
            f(4, 2, true)
        );

        assert!(divisor_intrinsic_type(&p(3), 0).is_err());
        assert!(divisor_intrinsic_type(&p(3), 4).is_err());
        assert!(divisor_intrinsic_type(&p(1), 1).is_err());
    }
}
