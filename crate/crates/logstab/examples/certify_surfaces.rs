//! Certifying the three del Pezzo surface pairs with a rank-one ambient:
//! a line, a conic, and a pair of lines in the plane.
//!
//! The first two are semistable and come back with a replayable
//! certificate tree; the third is destabilized by the trivial subsheaf
//! once the boundary has two pieces, and comes back with a witness.

use logstab::engine::{certify, slope_log, Verdict};
use logstab::variety::{DivisorComponent, LogPair, VarietySpec};

fn pair(degrees: &[u32]) -> LogPair {
    let comps = degrees
        .iter()
        .map(|&k| DivisorComponent::smooth_irreducible(k).unwrap())
        .collect();
    LogPair::new(VarietySpec::projective(2).unwrap(), comps)
}

fn main() {
    for (label, degrees) in [
        ("line", &[1u32][..]),
        ("conic", &[2][..]),
        ("two lines", &[1, 1][..]),
    ] {
        let p = pair(degrees);
        println!("== P2 + {label} ==");
        println!("slope(a=1) = {}", slope_log(&p, 1));
        match certify(&p).unwrap() {
            Verdict::Semistable { certificate } => {
                println!("verdict: Semistable");
                println!("{}", certificate.to_text());
            }
            Verdict::NotSemistable { witness } => {
                println!("verdict: NotSemistable");
                println!(
                    "witness: O(-{t}) inside the degree-{a} log forms with h0 >= {lb}",
                    t = witness.t,
                    a = witness.a,
                    lb = witness.h0_lower_bound
                );
                println!("{}", witness.justification.to_text());
            }
            Verdict::Unknown { unresolved } => {
                println!("verdict: Unknown ({} open obligations)", unresolved.len());
            }
        }
        println!();
    }
}
