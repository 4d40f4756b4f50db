//! Certificates: explicit, replayable records of why a verdict holds.
//!
//! A certificate is a tree of [`CertificateNode`]s. Each node names the
//! rule it applies, a literature citation for that rule, the inputs the
//! rule was applied to (as strings, so certificates survive
//! serialization), and child nodes carrying the rule's hypotheses. The
//! [`crate::replay`] module re-validates a tree from these recorded
//! inputs alone.
//!
//! Certificates print to an indented text format and parse back
//! losslessly; they also serialize through serde.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Literature citations attached to certificate nodes.
pub mod citations {
    pub const SLOPE_BOUND: &str =
        "Mumford-Takemoto slope criterion via sections of twisted exterior powers";
    pub const AMPLE_OR_TRIVIAL: &str =
        "nonnegative log canonical class forces negative destabilizing twists; Norimatsu vanishing";
    pub const RESIDUE_SPLIT: &str =
        "residue sequence of logarithmic differentials, Esnault-Viehweg, Properties 2.3, p. 13";
    pub const NORIMATSU: &str = "Norimatsu, Proc. Japan Acad. 54 (1978)";
    pub const KAN: &str = "Kodaira-Akizuki-Nakano vanishing, Esnault-Viehweg, 1.3, p. 4";
    pub const BOTT_VANISH: &str = "Bott, Homogeneous vector bundles, Ann. of Math. 66 (1957)";
    pub const SNOW_VANISH: &str = "Snow, Theorem 1, p. 174";
    pub const FANO_HODGE: &str =
        "Kodaira vanishing and Hodge symmetry: h^{a,0} = 0 on a Fano manifold for a >= 1";
    pub const RESTRICTION_SURJECTIVE: &str = "Peternell-Wisniewski, Lemma 2.9 a)";
    pub const CUPPING_INJECTIVE: &str =
        "hard Lefschetz cupping, Peternell-Wisniewski, Lemma 1.2";
    pub const REDUCIBLE_WITNESS: &str =
        "proportional boundary classes defeat cupping injectivity, cf. Peternell-Wisniewski, Lemma 1.2";
    pub const COVER_PULLBACK: &str =
        "Kawamata covering, Lazarsfeld, 4.1.6 and 4.1.12; pullback semistability, Maruyama, Lemma 1.17, p. 325";

    /// Citation for a knowledge-base stability fact, extended with the
    /// exterior-power step.
    pub fn stability(fact_citation: &str) -> String {
        format!("{fact_citation}; exterior powers semistable by Maruyama")
    }
}

/// The rules a certificate node may apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Rule {
    /// Root of a semistability certificate in the log Fano regime: lists
    /// the finitely many destabilizing twists and discharges each.
    SlopeBound,
    /// Root of a semistability certificate when the log canonical class
    /// is ample or trivial: every destabilizing twist is negative.
    AmpleOrTrivial,
    /// Splits one twisted log-form vanishing along the residue sequence
    /// into an ambient obligation and a divisor obligation.
    ResidueSplit,
    /// Inductive step of Norimatsu vanishing: peel one boundary component.
    Norimatsu,
    /// Kodaira-Akizuki-Nakano vanishing of sections at negative twist
    /// (with a determinant computation in top degree).
    #[serde(rename = "KAN")]
    Kan,
    /// Closed-form vanishing of `h^0(P^n, Omega^p(t))`.
    BottVanish,
    /// Snow's vanishing of `h^0(Q^m, Omega^p(t))` for `t <= p`.
    SnowVanish,
    /// Vanishing from known (semi)stability of the cotangent bundle.
    StabilityVanish,
    /// `h^0(X, Omega^a) = 0` on a Fano manifold, `a >= 1`.
    FanoHodge,
    /// Surjectivity of the restriction of twisted `q`-forms to a divisor.
    RestrictionSurjective,
    /// Injectivity of the cupping map for a single irreducible boundary.
    CuppingInjective,
    /// Destabilizing sections of the log cotangent bundle produced by a
    /// boundary with at least two pieces.
    ReducibleWitness,
    /// Transfer of semistability to a Kawamata cover by pullback.
    CoverPullback,
}

impl Rule {
    pub const ALL: [Rule; 13] = [
        Rule::SlopeBound,
        Rule::AmpleOrTrivial,
        Rule::ResidueSplit,
        Rule::Norimatsu,
        Rule::Kan,
        Rule::BottVanish,
        Rule::SnowVanish,
        Rule::StabilityVanish,
        Rule::FanoHodge,
        Rule::RestrictionSurjective,
        Rule::CuppingInjective,
        Rule::ReducibleWitness,
        Rule::CoverPullback,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Rule::SlopeBound => "SlopeBound",
            Rule::AmpleOrTrivial => "AmpleOrTrivial",
            Rule::ResidueSplit => "ResidueSplit",
            Rule::Norimatsu => "Norimatsu",
            Rule::Kan => "KAN",
            Rule::BottVanish => "BottVanish",
            Rule::SnowVanish => "SnowVanish",
            Rule::StabilityVanish => "StabilityVanish",
            Rule::FanoHodge => "FanoHodge",
            Rule::RestrictionSurjective => "RestrictionSurjective",
            Rule::CuppingInjective => "CuppingInjective",
            Rule::ReducibleWitness => "ReducibleWitness",
            Rule::CoverPullback => "CoverPullback",
        }
    }

    pub fn from_name(name: &str) -> Option<Rule> {
        Rule::ALL.into_iter().find(|r| r.name() == name)
    }

    /// Leaves assert a single cohomological fact; interior rules reduce
    /// their claim to their children's.
    pub fn is_leaf(self) -> bool {
        matches!(
            self,
            Rule::Kan
                | Rule::BottVanish
                | Rule::SnowVanish
                | Rule::StabilityVanish
                | Rule::FanoHodge
                | Rule::CuppingInjective
        )
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One node of a certificate tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateNode {
    pub rule: Rule,
    pub citation: String,
    pub inputs: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub children: Vec<CertificateNode>,
}

impl CertificateNode {
    pub fn new(rule: Rule, citation: impl Into<String>) -> Self {
        CertificateNode {
            rule,
            citation: citation.into(),
            inputs: BTreeMap::new(),
            children: Vec::new(),
        }
    }

    pub fn with_input(mut self, key: &str, value: impl ToString) -> Self {
        self.inputs.insert(key.to_string(), value.to_string());
        self
    }

    pub fn with_child(mut self, child: CertificateNode) -> Self {
        self.children.push(child);
        self
    }

    pub fn with_children(mut self, children: Vec<CertificateNode>) -> Self {
        self.children.extend(children);
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.inputs.get(key).map(|s| s.as_str())
    }

    pub fn get_int(&self, key: &str) -> Option<i64> {
        self.get(key)?.parse().ok()
    }

    /// All nodes whose rule is a leaf rule, in depth-first order.
    pub fn leaves(&self) -> Vec<&CertificateNode> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves<'a>(&'a self, out: &mut Vec<&'a CertificateNode>) {
        if self.rule.is_leaf() {
            out.push(self);
        }
        for child in &self.children {
            child.collect_leaves(out);
        }
    }

    pub fn count_nodes(&self) -> usize {
        1 + self.children.iter().map(|c| c.count_nodes()).sum::<usize>()
    }

    /// Indented text rendering; [`CertificateNode::parse_text`] inverts it.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        self.write_text(0, &mut out);
        out
    }

    fn write_text(&self, depth: usize, out: &mut String) {
        let pad = "  ".repeat(depth);
        out.push_str(&format!("{pad}{} {{\n", self.rule.name()));
        out.push_str(&format!(
            "{pad}  citation: {}\n",
            encode_value(&self.citation)
        ));
        for (key, value) in &self.inputs {
            out.push_str(&format!("{pad}  {key}: {}\n", encode_value(value)));
        }
        for child in &self.children {
            child.write_text(depth + 1, out);
        }
        out.push_str(&format!("{pad}}}\n"));
    }

    pub fn parse_text(text: &str) -> Result<Self, CertificateParseError> {
        let mut parser = TextParser::new(text);
        let node = parser.parse_node()?;
        parser.expect_end()?;
        Ok(node)
    }
}

fn is_bare(value: &str) -> bool {
    !value.is_empty()
        && value
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || "_.,:+/-".contains(c))
}

fn encode_value(value: &str) -> String {
    if is_bare(value) {
        value.to_string()
    } else {
        format!("{value:?}")
    }
}

fn decode_value(raw: &str, line: usize) -> Result<String, CertificateParseError> {
    let raw = raw.trim();
    if !raw.starts_with('"') {
        if is_bare(raw) {
            return Ok(raw.to_string());
        }
        return Err(CertificateParseError::Syntax {
            line,
            msg: format!("value {raw:?} is neither bare nor quoted"),
        });
    }
    let mut out = String::new();
    let mut chars = raw[1..].chars();
    loop {
        match chars.next() {
            None => {
                return Err(CertificateParseError::Syntax {
                    line,
                    msg: "unterminated quoted value".to_string(),
                })
            }
            Some('"') => break,
            Some('\\') => match chars.next() {
                Some('n') => out.push('\n'),
                Some('t') => out.push('\t'),
                Some('\\') => out.push('\\'),
                Some('"') => out.push('"'),
                other => {
                    return Err(CertificateParseError::Syntax {
                        line,
                        msg: format!("unsupported escape {other:?}"),
                    })
                }
            },
            Some(c) => out.push(c),
        }
    }
    if chars.next().is_some() {
        return Err(CertificateParseError::Syntax {
            line,
            msg: "trailing characters after quoted value".to_string(),
        });
    }
    Ok(out)
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CertificateParseError {
    #[error("certificate text line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("certificate text ended unexpectedly")]
    UnexpectedEnd,
}

struct TextParser<'a> {
    // (1-based line number, trimmed content) for nonblank lines.
    lines: Vec<(usize, &'a str)>,
    pos: usize,
}

impl<'a> TextParser<'a> {
    fn new(text: &'a str) -> Self {
        let lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty())
            .collect();
        TextParser { lines, pos: 0 }
    }

    fn peek(&self) -> Option<(usize, &'a str)> {
        self.lines.get(self.pos).copied()
    }

    fn next(&mut self) -> Option<(usize, &'a str)> {
        let item = self.peek();
        if item.is_some() {
            self.pos += 1;
        }
        item
    }

    fn parse_node(&mut self) -> Result<CertificateNode, CertificateParseError> {
        let (line, header) = self.next().ok_or(CertificateParseError::UnexpectedEnd)?;
        let Some(rule_name) = header.strip_suffix('{').map(str::trim) else {
            return Err(CertificateParseError::Syntax {
                line,
                msg: format!("expected a rule header ending in '{{', got {header:?}"),
            });
        };
        let Some(rule) = Rule::from_name(rule_name) else {
            return Err(CertificateParseError::Syntax {
                line,
                msg: format!("unknown rule {rule_name:?}"),
            });
        };
        let mut node = CertificateNode::new(rule, "");
        let mut saw_citation = false;
        loop {
            let (line, content) = self.peek().ok_or(CertificateParseError::UnexpectedEnd)?;
            if content == "}" {
                self.pos += 1;
                if !saw_citation {
                    return Err(CertificateParseError::Syntax {
                        line,
                        msg: format!("node {rule_name} closed without a citation"),
                    });
                }
                return Ok(node);
            }
            // A nested rule header opens a child; otherwise expect key: value.
            if let Some(name) = content.strip_suffix('{').map(str::trim) {
                if Rule::from_name(name).is_some() {
                    let child = self.parse_node()?;
                    node.children.push(child);
                    continue;
                }
            }
            self.pos += 1;
            let Some((key, raw)) = content.split_once(':') else {
                return Err(CertificateParseError::Syntax {
                    line,
                    msg: format!("expected 'key: value', got {content:?}"),
                });
            };
            let key = key.trim();
            let value = decode_value(raw, line)?;
            if key == "citation" {
                node.citation = value;
                saw_citation = true;
            } else {
                node.inputs.insert(key.to_string(), value);
            }
        }
    }

    fn expect_end(&mut self) -> Result<(), CertificateParseError> {
        match self.peek() {
            None => Ok(()),
            Some((line, content)) => Err(CertificateParseError::Syntax {
                line,
                msg: format!("unexpected trailing content {content:?}"),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_tree() -> CertificateNode {
        CertificateNode::new(Rule::ResidueSplit, citations::RESIDUE_SPLIT)
            .with_input("a", 2)
            .with_input("t", 1)
            .with_child(
                CertificateNode::new(Rule::BottVanish, citations::BOTT_VANISH)
                    .with_input("space", "P3")
                    .with_input("p", 2)
                    .with_input("t", 1),
            )
            .with_child(
                CertificateNode::new(
                    Rule::RestrictionSurjective,
                    citations::RESTRICTION_SURJECTIVE,
                )
                .with_input("space", "P3")
                .with_input("k", 2)
                .with_input("q", 1)
                .with_input("c", 1)
                .with_child(
                    CertificateNode::new(Rule::BottVanish, citations::BOTT_VANISH)
                        .with_input("space", "P3")
                        .with_input("p", 1)
                        .with_input("t", 1),
                ),
            )
    }

    #[test]
    fn rule_names_round_trip() {
        for rule in Rule::ALL {
            assert_eq!(Rule::from_name(rule.name()), Some(rule));
        }
        assert_eq!(Rule::Kan.name(), "KAN");
        assert_eq!(Rule::from_name("NoSuchRule"), None);
    }

    #[test]
    fn leaf_classification() {
        let leaves = [
            Rule::Kan,
            Rule::BottVanish,
            Rule::SnowVanish,
            Rule::StabilityVanish,
            Rule::FanoHodge,
            Rule::CuppingInjective,
        ];
        for rule in Rule::ALL {
            assert_eq!(rule.is_leaf(), leaves.contains(&rule), "{rule}");
        }
    }

    #[test]
    fn text_round_trip() {
        let tree = sample_tree();
        let text = tree.to_text();
        let parsed = CertificateNode::parse_text(&text).unwrap();
        assert_eq!(parsed, tree);
        // Printing the parse reproduces the text exactly.
        assert_eq!(parsed.to_text(), text);
    }

    #[test]
    fn text_round_trip_with_awkward_values() {
        let tree = CertificateNode::new(Rule::Kan, "quotes \" and \\ backslash\nnewline\ttab")
            .with_input("dim", 3)
            .with_input("a", 1)
            .with_input("t", -1)
            .with_input("note", "value with spaces {and braces}");
        let parsed = CertificateNode::parse_text(&tree.to_text()).unwrap();
        assert_eq!(parsed, tree);
    }

    #[test]
    fn text_negative_numbers_stay_bare() {
        let tree = CertificateNode::new(Rule::Kan, citations::KAN)
            .with_input("dim", 4)
            .with_input("a", 2)
            .with_input("t", -3);
        let text = tree.to_text();
        assert!(text.contains("t: -3"), "{text}");
        assert_eq!(CertificateNode::parse_text(&text).unwrap(), tree);
    }

    #[test]
    fn parse_rejects_malformed_text() {
        assert!(CertificateNode::parse_text("").is_err());
        assert!(CertificateNode::parse_text("NoSuchRule {\n}\n").is_err());
        // Missing closing brace.
        assert!(CertificateNode::parse_text("KAN {\n  citation: x\n").is_err());
        // Missing citation.
        assert!(CertificateNode::parse_text("KAN {\n  dim: 3\n}\n").is_err());
        // Unterminated quote.
        assert!(CertificateNode::parse_text("KAN {\n  citation: \"oops\n}\n").is_err());
        // Trailing garbage after the root.
        assert!(CertificateNode::parse_text("KAN {\n  citation: x\n}\nextra\n").is_err());
        // Value neither bare nor quoted.
        assert!(CertificateNode::parse_text("KAN {\n  citation: a b\n}\n").is_err());
    }

    #[test]
    fn parse_reports_line_numbers() {
        let text = "ResidueSplit {\n  citation: ok\n  KAN {\n    dim: 3\n  }\n}\n";
        match CertificateNode::parse_text(text) {
            Err(CertificateParseError::Syntax { line, msg }) => {
                assert_eq!(line, 5);
                assert!(msg.contains("citation"), "{msg}");
            }
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn json_round_trip() {
        let tree = sample_tree();
        let json = serde_json::to_string_pretty(&tree).unwrap();
        let parsed: CertificateNode = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed, tree);
        // The KAN rename is honored in JSON.
        let kan = CertificateNode::new(Rule::Kan, "c");
        let kan_json = serde_json::to_string(&kan).unwrap();
        assert!(kan_json.contains("\"KAN\""), "{kan_json}");
    }

    #[test]
    fn helpers() {
        let tree = sample_tree();
        assert_eq!(tree.get_int("a"), Some(2));
        assert_eq!(tree.get("missing"), None);
        assert_eq!(tree.count_nodes(), 4);
        let leaves = tree.leaves();
        assert_eq!(leaves.len(), 2);
        assert!(leaves.iter().all(|l| l.rule == Rule::BottVanish));
    }
}
