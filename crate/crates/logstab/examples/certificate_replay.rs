//! Certificates are only worth shipping if an independent verifier can
//! reject tampered ones. This example certifies a pair, round-trips the
//! tree through both serializations, replays it, and then shows that
//! corrupting any single numeric input makes the replay fail.

use logstab::certificate::CertificateNode;
use logstab::engine::{certify, Verdict};
use logstab::replay::{replay_semistable, ReplayError};
use logstab::variety::{default_kb, DivisorComponent, LogPair, VarietySpec};

fn main() {
    let pair = LogPair::new(
        VarietySpec::projective(3).unwrap(),
        vec![DivisorComponent::smooth_irreducible(2).unwrap()],
    );
    let Verdict::Semistable { certificate } = certify(&pair).unwrap() else {
        unreachable!("a quadric boundary in P3 certifies");
    };

    println!("certificate ({} nodes):", certificate.count_nodes());
    println!("{}", certificate.to_text());

    // Round-trip through the text and JSON forms.
    let text = certificate.to_text();
    let reparsed = CertificateNode::parse_text(&text).unwrap();
    assert_eq!(reparsed, certificate);
    let json = serde_json::to_string(&certificate).unwrap();
    let rejson: CertificateNode = serde_json::from_str(&json).unwrap();
    assert_eq!(rejson, certificate);
    println!("round-trips: text ok, json ok");

    // The honest tree replays.
    replay_semistable(&pair, default_kb(), &certificate).unwrap();
    println!("replay of the honest tree: ok");

    // Tamper with the root slope.
    let mut bad = certificate.clone();
    bad.inputs.insert("slope".into(), "0".into());
    report("root slope set to 0", replay_semistable(&pair, default_kb(), &bad));

    // Tamper with a leaf: flip one vanishing claim's twist.
    let mut bad = certificate.clone();
    flip_first_leaf_twist(&mut bad);
    report(
        "one leaf twist bumped by 5",
        replay_semistable(&pair, default_kb(), &bad),
    );

    // Drop an obligation: remove the last child of the root.
    let mut bad = certificate.clone();
    bad.children.pop();
    report("one obligation removed", replay_semistable(&pair, default_kb(), &bad));
}

fn flip_first_leaf_twist(node: &mut CertificateNode) -> bool {
    if node.children.is_empty() {
        if let Some(t) = node.get_int("t") {
            node.inputs.insert("t".into(), (t + 5).to_string());
            return true;
        }
        return false;
    }
    node.children.iter_mut().any(flip_first_leaf_twist)
}

fn report(what: &str, outcome: Result<(), ReplayError>) {
    match outcome {
        Ok(()) => println!("{what}: replay ACCEPTED (this would be a verifier bug)"),
        Err(err) => println!("{what}: replay rejected — {err}"),
    }
}
