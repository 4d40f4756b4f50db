//! Transferring semistability through a Kawamata cover.
//!
//! A finite flat cover adapted to the boundary pulls each component
//! back to a multiple, and the pullback of the log cotangent bundle is
//! the cover's own cotangent bundle up to that twist. Pullback under a
//! finite map preserves slope ratios, so a certificate for the base
//! pair transfers upstairs — but only the ample-or-trivial route is
//! available, because a log Fano base leaves genuine obligations open.

use logstab::covers::{cover_canonical_twist, cover_log_slope, cover_verdict, CoverVerdict};
use logstab::engine::slope_log;
use logstab::variety::{DivisorComponent, LogPair, VarietySpec};

fn pair(ambient: VarietySpec, degrees: &[u32]) -> LogPair {
    let comps = degrees
        .iter()
        .map(|&k| DivisorComponent::smooth_irreducible(k).unwrap())
        .collect();
    LogPair::new(ambient, comps)
}

fn main() {
    // The numerical identities that make the transfer meaningful.
    for (n, s, degrees) in [(3u32, 3u32, vec![2u32]), (4, 4, vec![2, 1]), (3, 4, vec![4])] {
        let twist = cover_canonical_twist(s, &degrees);
        let slope = cover_log_slope(n, s, &degrees);
        println!(
            "n={n} s={s} degrees={degrees:?}: canonical twist upstairs = {twist}, log slope = {slope}"
        );
    }
    println!();

    // A quartic surface in P3: the log canonical bundle is trivial, the
    // boundary route certifies, and the certificate pulls back.
    let quartic = pair(VarietySpec::projective(3).unwrap(), &[4]);
    println!("base pair P3 + quartic, slope(a=1) = {}", slope_log(&quartic, 1));
    match cover_verdict(&quartic).unwrap() {
        CoverVerdict::Semistable { certificate } => {
            println!("cover verdict: Semistable via pullback");
            println!("{}", certificate.to_text());
        }
        CoverVerdict::Unknown { .. } => unreachable!("ample-or-trivial case transfers"),
    }

    // A line in P2 is log Fano: nothing transfers for free and the
    // destabilizing candidates upstairs are reported instead.
    let line = pair(VarietySpec::projective(2).unwrap(), &[1]);
    match cover_verdict(&line).unwrap() {
        CoverVerdict::Semistable { .. } => unreachable!("log Fano base does not transfer"),
        CoverVerdict::Unknown { candidates } => {
            println!();
            println!("base pair P2 + line is log Fano; open candidates upstairs:");
            for c in candidates {
                println!("  (a={}, t={})", c.a, c.t);
            }
        }
    }
}
