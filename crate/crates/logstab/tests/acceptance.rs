//! Acceptance gate: one test per criterion, each printing a PASS/FAIL
//! line. Failing tests are kept faithful to the recorded expectation
//! rather than adjusted to what the engine produces; where the two
//! disagree the failure message states the divergence precisely.

use std::collections::BTreeSet;
use std::time::Instant;

use num_traits::ToPrimitive;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use logstab::catalog::{certify_catalog, default_catalog, parse_catalog, print_catalog};
use logstab::certificate::{CertificateNode, Rule};
use logstab::cohomology::{bott_dim, euler_oracle_dim};
use logstab::covers::{cover_canonical_twist, cover_log_slope, cover_verdict, CoverVerdict};
use logstab::crosscheck::crosscheck;
use logstab::engine::{
    case_table, certify, destabilizing_candidates, norimatsu_certificate, resolve_obligation,
    slope_log, Resolution, Verdict,
};
use logstab::replay::{replay_norimatsu, replay_semistable, replay_verdict};
use logstab::variety::{default_kb, DivisorComponent, LogPair, VarietySpec};

fn pass(name: &str) {
    println!("{name}: PASS");
}

fn fail(name: &str, detail: &str) -> ! {
    println!("{name}: FAIL - {detail}");
    panic!("{name}: {detail}");
}

fn check(name: &str, ok: bool, detail: &str) {
    if !ok {
        fail(name, detail);
    }
}

fn single_pair(n: u32, s: u32, k: u32) -> LogPair {
    LogPair::new(
        logstab::engine::generic_ambient(n, s).unwrap(),
        vec![DivisorComponent::smooth_irreducible(k).unwrap()],
    )
}

fn plane_pair(degrees: &[u32]) -> LogPair {
    LogPair::new(
        VarietySpec::projective(2).unwrap(),
        degrees
            .iter()
            .map(|&k| DivisorComponent::smooth_irreducible(k).unwrap())
            .collect(),
    )
}

/// Closed-form dimensions equal the independent exact-sequence chase on
/// the whole desk grid, with Serre duality and the Hodge diagonal as
/// extra invariants, inside the time budget.
#[test]
fn criterion_1_oracle_equivalence() {
    const NAME: &str = "criterion 1 (oracle equivalence)";
    let start = Instant::now();
    let mut groups = 0u32;
    for n in 1..=4u32 {
        for p in 0..=n {
            for t in -6..=6i64 {
                for q in 0..=n {
                    let closed = bott_dim(n, p, t, q).unwrap();
                    match euler_oracle_dim(n, p, t, q).unwrap() {
                        Some(chased) => check(
                            NAME,
                            chased == closed,
                            &format!("closed form and chase disagree at ({n},{p},{t},{q})"),
                        ),
                        None => fail(NAME, &format!("chase ambiguous at ({n},{p},{t},{q})")),
                    }
                    // Serre duality pairs (p, q, t) with (n-p, n-q, -t).
                    let dual = bott_dim(n, n - p, -t, n - q).unwrap();
                    check(
                        NAME,
                        dual == closed,
                        &format!("Serre duality broken at ({n},{p},{t},{q})"),
                    );
                    // Twist zero is the Hodge diagonal.
                    if t == 0 {
                        let expected = u32::from(p == q);
                        check(
                            NAME,
                            closed.to_u32() == Some(expected),
                            &format!("Hodge diagonal broken at ({n},{p},{q})"),
                        );
                    }
                    groups += 1;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    check(
        NAME,
        elapsed.as_secs_f64() < 5.0,
        &format!("grid took {elapsed:?}, budget is 5s"),
    );
    check(NAME, groups == 702, "unexpected grid size");
    pass(NAME);
}

/// The three rank-one surface pairs: line and conic semistable, two
/// lines destabilized by the trivial subsheaf with a rank-count witness.
#[test]
fn criterion_2_surface_pairs() {
    const NAME: &str = "criterion 2 (surface pairs)";
    let start = Instant::now();

    for degrees in [&[1u32][..], &[2][..]] {
        let pair = plane_pair(degrees);
        match certify(&pair).unwrap() {
            Verdict::Semistable { certificate } => {
                replay_semistable(&pair, default_kb(), &certificate).unwrap()
            }
            other => fail(
                NAME,
                &format!("P2 + degree {degrees:?} should certify, got {}", other.label()),
            ),
        }
    }

    let two_lines = plane_pair(&[1, 1]);
    match certify(&two_lines).unwrap() {
        Verdict::NotSemistable { witness } => {
            check(
                NAME,
                witness.h0_lower_bound == 1,
                &format!("two lines: expected h0 bound 1, got {}", witness.h0_lower_bound),
            );
            check(NAME, witness.a == 1 && witness.t == 0, "witness at wrong (a, t)");
        }
        other => fail(NAME, &format!("two lines should destabilize, got {}", other.label())),
    }

    let elapsed = start.elapsed();
    check(
        NAME,
        elapsed.as_secs_f64() < 1.0,
        &format!("surface checks took {elapsed:?}, budget is 1s"),
    );
    pass(NAME);
}

/// Threefolds: the candidate enumeration for a quadric boundary in P3
/// is exactly {(1,0), (2,0), (2,1)}, every candidate is discharged, and
/// the bundled threefold entries split by boundary irreducibility.
#[test]
fn criterion_3_threefold_enumeration() {
    const NAME: &str = "criterion 3 (threefold enumeration)";

    let candidates: Vec<(u32, i64)> = destabilizing_candidates(3, 4, 2)
        .iter()
        .map(|c| (c.a, c.t))
        .collect();
    check(
        NAME,
        candidates == vec![(1, 0), (2, 0), (2, 1)],
        &format!("candidates for (n=3, s=4, k=2): {candidates:?}"),
    );

    let pair = single_pair(3, 4, 2);
    for (a, t) in candidates {
        match resolve_obligation(&pair, a, t, default_kb()).unwrap() {
            Resolution::Resolved(_) => {}
            Resolution::Unresolved { reason } => {
                fail(NAME, &format!("candidate (a={a}, t={t}) undischarged: {reason}"))
            }
        }
    }

    for entry in default_catalog().iter().filter(|e| e.pair.ambient.dim == 3) {
        let verdict = certify(&entry.pair).unwrap();
        replay_verdict(&entry.pair, default_kb(), &verdict).unwrap();
        let want_semistable = entry.pair.r() == 1;
        let got_semistable = matches!(verdict, Verdict::Semistable { .. });
        check(
            NAME,
            got_semistable == want_semistable
                && !matches!(verdict, Verdict::Unknown { .. }),
            &format!("{}: got {}", entry.id, verdict.label()),
        );
    }
    pass(NAME);
}

/// The eleven listed fivefold cases, expanded to (s, k, a, t) tuples
/// (the ninth is the family t = a-1, a = 2..4).
fn fivefold_case_list() -> BTreeSet<(u32, u32, u32, i64)> {
    [
        (3, 1, 3, 1),
        (4, 1, 2, 1),
        (4, 2, 3, 1),
        (5, 1, 2, 1),
        (5, 1, 3, 2),
        (5, 1, 4, 3),
        (5, 2, 2, 1),
        (5, 3, 3, 1),
        (6, 2, 2, 1),
        (6, 2, 3, 2),
        (6, 2, 4, 3),
        (6, 3, 2, 1),
        (6, 4, 3, 1),
    ]
    .into_iter()
    .collect()
}

/// On fivefolds, the positive-twist candidates that survive the
/// divisor-stability bound t < (a-1)(s-k)/4 are exactly the
/// hand-transcribed case list.
#[test]
fn criterion_4a_survivor_union() {
    const NAME: &str = "criterion 4a (fivefold survivor union)";
    let mut survivors = BTreeSet::new();
    for s in 2..=6u32 {
        for k in 1..s {
            for c in destabilizing_candidates(5, s, k) {
                let stability_kills = c.t * 4 < (i64::from(c.a) - 1) * i64::from(s - k);
                if c.t >= 1 && !stability_kills {
                    survivors.insert((s, k, c.a, c.t));
                }
            }
        }
    }
    let expected = fivefold_case_list();
    check(
        NAME,
        survivors == expected,
        &format!(
            "survivor set diverges: extra {:?}, missing {:?}",
            survivors.difference(&expected).collect::<Vec<_>>(),
            expected.difference(&survivors).collect::<Vec<_>>()
        ),
    );
    pass(NAME);
}

/// The classical treatment of the fivefold list discharges cases
/// 4, 5, 6 and 9 by quadric vanishing, 8, 10 and 11 by restriction, and
/// leaves {(3,1,3,1), (4,1,2,1), (4,2,3,1), (5,2,2,1)} open. This test
/// asserts that split verbatim. The engine applies its restriction rule
/// uniformly, and that rule's hypotheses hold at (5,2,2,1) — twist 1 is
/// below the boundary degree 2 and the ambient quadric group vanishes —
/// so the engine closes a case the classical split keeps open, and this
/// check records the divergence by failing.
#[test]
fn criterion_4b_resolution_split() {
    const NAME: &str = "criterion 4b (fivefold resolution split)";
    let classical_open: BTreeSet<(u32, u32, u32, i64)> =
        [(3, 1, 3, 1), (4, 1, 2, 1), (4, 2, 3, 1), (5, 2, 2, 1)]
            .into_iter()
            .collect();

    let mut engine_open = BTreeSet::new();
    let mut engine_resolved = BTreeSet::new();
    for &(s, k, a, t) in fivefold_case_list().iter() {
        let pair = single_pair(5, s, k);
        match resolve_obligation(&pair, a, t, default_kb()).unwrap() {
            Resolution::Resolved(_) => engine_resolved.insert((s, k, a, t)),
            Resolution::Unresolved { .. } => engine_open.insert((s, k, a, t)),
        };
    }

    let classical_resolved: BTreeSet<_> = fivefold_case_list()
        .difference(&classical_open)
        .copied()
        .collect();
    check(
        NAME,
        engine_resolved == classical_resolved && engine_open == classical_open,
        &format!(
            "engine discharges {:?} beyond the classical split (classically open: {:?})",
            engine_resolved
                .difference(&classical_resolved)
                .collect::<Vec<_>>(),
            classical_open
        ),
    );
    pass(NAME);
}

/// Sixfolds: the s <= 4 grid is fully discharged, and the six listed
/// hard cases all resolve, the two quadric-boundary families directly
/// by Snow's vanishing theorem.
#[test]
fn criterion_5_sixfold_cases() {
    const NAME: &str = "criterion 5 (sixfold cases)";
    let kb = default_kb();

    for s in 2..=4u32 {
        for k in 1..s {
            let table = case_table(6, s, k, kb).unwrap();
            check(
                NAME,
                table.fully_resolved(),
                &format!("cell (s={s}, k={k}) not fully discharged: {:?}", table.open_rows()),
            );
        }
    }

    // Two of the six listed cases sit outside the strict slope bound
    // (their twist only reaches equality), so they are queried directly
    // rather than through the candidate table.
    let divisor_rule = |s: u32, k: u32, a: u32, t: i64| -> Rule {
        let pair = single_pair(6, s, k);
        match resolve_obligation(&pair, a, t, kb).unwrap() {
            Resolution::Resolved(node) => node.children[1].rule,
            Resolution::Unresolved { reason } => {
                fail(NAME, &format!("case (s={s}, k={k}, a={a}, t={t}) open: {reason}"))
            }
        }
    };

    // Families 1 and 5: boundary is a quadric fivefold, twist a-1 on
    // (a-1)-forms vanishes by Snow's theorem.
    for a in 2..=5u32 {
        let t = i64::from(a) - 1;
        check(
            NAME,
            divisor_rule(6, 1, a, t) == Rule::SnowVanish,
            &format!("(s=6, k=1, a={a}, t={t}) should close via quadric vanishing"),
        );
        check(
            NAME,
            divisor_rule(7, 2, a, t) == Rule::SnowVanish,
            &format!("(s=7, k=2, a={a}, t={t}) should close via quadric vanishing"),
        );
    }

    // The remaining four single cases resolve (via the restriction map
    // backed by an ambient vanishing).
    for (s, k, a, t) in [(6u32, 2u32, 2u32, 1i64), (6, 3, 2, 1), (6, 4, 3, 1), (7, 3, 2, 1)] {
        let rule = divisor_rule(s, k, a, t);
        check(
            NAME,
            rule == Rule::RestrictionSurjective,
            &format!("(s={s}, k={k}, a={a}, t={t}) closed via {rule}, expected restriction"),
        );
    }
    pass(NAME);
}

/// Positive-twist rows of one cell that survive the divisor-stability
/// bound, recomputed from the defining inequality
/// (a-1)(s-k)/(n-1) <= t < a(s-k)/n.
fn gap_rows(n: u32, s: u32, k: u32) -> BTreeSet<(u32, i64)> {
    let mut rows = BTreeSet::new();
    for c in destabilizing_candidates(n, s, k) {
        let lo = i64::from(c.a - 1) * i64::from(s - k); // (a-1)(s-k) <= t(n-1)
        if c.t >= 1 && c.t * i64::from(n - 1) >= lo {
            rows.insert((c.a, c.t));
        }
    }
    rows
}

/// Sixfold crosscheck: the engine settles (s=5, k=2) even though the
/// published coverage statement omits it, and leaves nothing open that
/// the statement includes; verified against a hand enumeration of the
/// gap inequality.
#[test]
fn criterion_6a_crosscheck_sixfolds() {
    const NAME: &str = "criterion 6a (sixfold crosscheck)";

    // Hand enumeration: at (s=5, k=2) divisor stability alone empties
    // the gap, so the cell must settle...
    check(NAME, gap_rows(6, 5, 2).is_empty(), "cell (5,2) should have no surviving rows");
    // ...while (s=5, k=1) keeps one genuinely hard row.
    check(
        NAME,
        gap_rows(6, 5, 1) == BTreeSet::from([(2u32, 1i64)]),
        "cell (5,1) should keep exactly the row (a=2, t=1)",
    );

    let report = crosscheck(6, default_kb()).unwrap();
    check(
        NAME,
        report.engine_resolves_statement_excludes == vec![(5, 2)],
        &format!(
            "expected the engine to settle exactly (5,2) beyond the statement, got {:?}",
            report.engine_resolves_statement_excludes
        ),
    );
    check(
        NAME,
        report.statement_includes_engine_unresolved.is_empty(),
        &format!(
            "statement-covered cells left open: {:?}",
            report.statement_includes_engine_unresolved
        ),
    );
    check(NAME, report.agree.len() == 20 && report.cells.len() == 21, "cell bookkeeping off");
    pass(NAME);
}

/// Fivefold crosscheck: the recorded expectation flags (s=5, k=2) as
/// covered by the statement but unresolved by the engine — mirroring
/// the classically open case. The engine's uniform restriction rule
/// settles that cell (the same application that passes at criterion 6a
/// one dimension up), so no such flag is produced and this check
/// records the divergence by failing.
#[test]
fn criterion_6b_crosscheck_fivefolds() {
    const NAME: &str = "criterion 6b (fivefold crosscheck)";

    // Hand enumeration: the cell keeps exactly one hard row...
    check(
        NAME,
        gap_rows(5, 5, 2) == BTreeSet::from([(2u32, 1i64)]),
        "cell (5,2) should keep exactly the row (a=2, t=1)",
    );

    // ...and the expectation is that the engine cannot discharge it.
    let report = crosscheck(5, default_kb()).unwrap();
    check(
        NAME,
        report.statement_includes_engine_unresolved == vec![(5, 2)],
        &format!(
            "expected (5,2) flagged as statement-included-but-unresolved; engine flags {:?} \
             (it discharges the row (a=2, t=1) by restriction below the boundary degree)",
            report.statement_includes_engine_unresolved
        ),
    );
    pass(NAME);
}

/// Slope proportionality and the cover identities, property-tested;
/// the cover transfer succeeds on exactly the ample-or-trivial pairs.
#[test]
fn criterion_7_slope_and_cover_identities() {
    const NAME: &str = "criterion 7 (slope and cover identities)";

    let pair_strategy = (3u32..=8)
        .prop_flat_map(|n| (Just(n), 1u32..=(n + 1).min(9)))
        .prop_flat_map(|(n, s)| {
            (
                Just(n),
                Just(s),
                proptest::collection::vec(1u32..=4, 1..=3),
                1u32..,
            )
        })
        .prop_map(|(n, s, degrees, a_seed)| {
            let ambient = VarietySpec::abstract_fano(n, s, true).unwrap();
            let comps = degrees
                .iter()
                .map(|&k| DivisorComponent::smooth_irreducible(k).unwrap())
                .collect();
            (LogPair::new(ambient, comps), 1 + a_seed % (n - 1))
        });

    // Slope proportionality in the form degree.
    let mut runner = TestRunner::new(Config { cases: 256, ..Config::default() });
    runner
        .run(&pair_strategy, |(pair, a)| {
            let unit = slope_log(&pair, 1);
            let expected = logstab::Rational::from_integer(a.into()) * unit;
            prop_assert_eq!(slope_log(&pair, a), expected);
            Ok(())
        })
        .unwrap_or_else(|e| fail(NAME, &format!("slope proportionality: {e}")));

    // Cover identities and exact transfer on 100 cases.
    let mut runner = TestRunner::new(Config { cases: 100, ..Config::default() });
    runner
        .run(&pair_strategy, |(pair, _)| {
            let n = pair.ambient.dim;
            let s = pair.ambient.index;
            let degrees = pair.degrees();
            let hand_twist: i64 = -i64::from(s)
                + degrees.iter().map(|&k| i64::from(k) - 1).sum::<i64>();
            prop_assert_eq!(cover_canonical_twist(s, &degrees), hand_twist);
            prop_assert_eq!(cover_log_slope(n, s, &degrees), slope_log(&pair, 1));

            match cover_verdict(&pair).unwrap() {
                CoverVerdict::Semistable { certificate } => {
                    prop_assert!(pair.kd_ample_or_trivial(), "transferred a log Fano pair");
                    prop_assert_eq!(certificate.rule, Rule::CoverPullback);
                    prop_assert_eq!(certificate.children.len(), 1);
                    prop_assert!(
                        replay_semistable(&pair, default_kb(), &certificate.children[0]).is_ok()
                    );
                }
                CoverVerdict::Unknown { candidates } => {
                    prop_assert!(!pair.kd_ample_or_trivial(), "ample-or-trivial pair left open");
                    prop_assert!(!candidates.is_empty());
                }
            }
            Ok(())
        })
        .unwrap_or_else(|e| fail(NAME, &format!("cover identities: {e}")));
    pass(NAME);
}

/// Peel-and-restrict certificates for plane arrangements: every leaf is
/// a bare vanishing statement, every tree replays, and bumping any leaf
/// twist to zero is caught.
#[test]
fn criterion_8_norimatsu_replay() {
    const NAME: &str = "criterion 8 (peel-and-restrict replay)";

    fn bump_nth_kan_twist(node: &mut CertificateNode, seen: &mut usize, target: usize) -> bool {
        if node.rule == Rule::Kan {
            if *seen == target {
                node.inputs.insert("t".into(), "0".into());
                return true;
            }
            *seen += 1;
        }
        node.children
            .iter_mut()
            .any(|c| bump_nth_kan_twist(c, seen, target))
    }

    for planes in 1..=3usize {
        let degrees = vec![1u32; planes];
        for a in 1..=3u32 {
            for t in -3..=-1i64 {
                let tree = norimatsu_certificate(3, -4, &degrees, a, t).unwrap();
                let leaves = tree.leaves();
                check(
                    NAME,
                    leaves.iter().all(|l| l.rule == Rule::Kan),
                    &format!("non-vanishing leaf in ({planes} planes, a={a}, t={t})"),
                );
                replay_norimatsu(&tree, 3, -4, &degrees, a, t).unwrap_or_else(|e| {
                    fail(NAME, &format!("({planes} planes, a={a}, t={t}) fails replay: {e}"))
                });

                let kan_count = leaves.iter().filter(|l| l.rule == Rule::Kan).count();
                for target in 0..kan_count {
                    let mut tampered = tree.clone();
                    let mut seen = 0;
                    assert!(bump_nth_kan_twist(&mut tampered, &mut seen, target));
                    check(
                        NAME,
                        replay_norimatsu(&tampered, 3, -4, &degrees, a, t).is_err(),
                        &format!(
                            "leaf {target} of ({planes} planes, a={a}, t={t}) tampered \
                             to twist 0 but replay accepted it"
                        ),
                    );
                }
            }
        }
    }
    pass(NAME);
}

/// Catalog regression: thirteen entries, byte-stable round-trip, and
/// the recorded verdict snapshot of 10 semistable / 3 not / 0 unknown.
/// Five of the thirteen boundaries have two or more pieces, and every
/// such log Fano pair is destabilized by the trivial subsheaf at
/// (a, t) = (1, 0) — the same argument the two-lines case is accepted
/// on — so the reproducible snapshot is 8 / 5 / 0 and this check
/// records the divergence by failing.
#[test]
fn criterion_9_catalog_regression() {
    const NAME: &str = "criterion 9 (catalog regression)";

    let entries = default_catalog();
    check(NAME, entries.len() == 13, &format!("expected 13 entries, got {}", entries.len()));

    let printed = print_catalog(entries);
    let reparsed = parse_catalog(&printed).unwrap();
    check(NAME, reparsed == entries, "round-trip changed the catalog");

    let first = certify_catalog(entries, default_kb()).unwrap();
    let second = certify_catalog(entries, default_kb()).unwrap();
    check(
        NAME,
        first.outcomes.iter().map(|(id, v)| (id, v.label())).eq(
            second.outcomes.iter().map(|(id, v)| (id, v.label()))
        ),
        "snapshot not stable across runs",
    );

    let counts = (first.semistable, first.not_semistable, first.unknown);
    check(
        NAME,
        counts == (10, 3, 0),
        &format!(
            "expected snapshot (10, 3, 0), got {counts:?}: the five multi-piece \
             boundaries all destabilize, so only 8 entries certify"
        ),
    );
    pass(NAME);
}
