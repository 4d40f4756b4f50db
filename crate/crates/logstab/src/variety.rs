//! Input data: polarized varieties, boundary divisors, log pairs, and the
//! knowledge base of published (semi)stability facts for cotangent bundles.
//!
//! A [`VarietySpec`] records everything the decision procedures are allowed
//! to know about the ambient space: its coarse kind, dimension, Fano index
//! (the integer `s` with `-K_X = O_X(s)` against the fixed polarization),
//! whether `Pic = Z` is actually known, and `h^{1,1}` when known.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum VarietyError {
    #[error("{kind} requires dimension >= {min}, got {dim}")]
    InvalidDimension {
        kind: &'static str,
        min: u32,
        dim: u32,
    },
    #[error("Fano index must satisfy 1 <= index <= dim + 1, got index {index} in dimension {dim}")]
    InvalidIndex { dim: u32, index: u32 },
    #[error("cannot parse variety from {input:?}: {msg}")]
    Parse { input: String, msg: String },
}

/// Coarse classification of the spaces the engine can reason about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum VarietyKind {
    /// Projective space `P^n`.
    ProjectiveSpace,
    /// Smooth quadric hypersurface `Q^m` in `P^{m+1}`.
    Quadric,
    /// A Fano manifold known only through its dimension and index.
    AbstractFano,
}

/// A polarized Fano manifold, described by the invariants the rules consume.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarietySpec {
    pub kind: VarietyKind,
    /// Complex dimension `n >= 1`.
    pub dim: u32,
    /// Fano index `s >= 1`: `-K_X = O_X(s)` for the ample generator `O_X(1)`.
    pub index: u32,
    /// Whether `Pic(X) = Z * O_X(1)` is known to hold.
    pub picard_rank_one_known: bool,
    /// Hodge number `h^{1,1}(X)` when known.
    pub h11: Option<u32>,
}

impl VarietySpec {
    /// Projective space `P^n`, `n >= 1`.
    pub fn projective(n: u32) -> Result<Self, VarietyError> {
        if n < 1 {
            return Err(VarietyError::InvalidDimension {
                kind: "projective space",
                min: 1,
                dim: n,
            });
        }
        Ok(VarietySpec {
            kind: VarietyKind::ProjectiveSpace,
            dim: n,
            index: n + 1,
            picard_rank_one_known: true,
            h11: Some(1),
        })
    }

    /// Smooth quadric `Q^m`, `m >= 2`. For `m >= 3` the Picard group is
    /// `Z * O(1)`; `Q^2 = P^1 x P^1` has Picard rank two, so the flag is
    /// off and `h^{1,1} = 2`.
    pub fn quadric(m: u32) -> Result<Self, VarietyError> {
        if m < 2 {
            return Err(VarietyError::InvalidDimension {
                kind: "quadric",
                min: 2,
                dim: m,
            });
        }
        Ok(VarietySpec {
            kind: VarietyKind::Quadric,
            dim: m,
            index: m,
            picard_rank_one_known: m >= 3,
            h11: Some(if m >= 3 { 1 } else { 2 }),
        })
    }

    /// A Fano manifold known only through `(dim, index)`, plus the caller's
    /// assertion about its Picard group.
    pub fn abstract_fano(
        dim: u32,
        index: u32,
        picard_rank_one_known: bool,
    ) -> Result<Self, VarietyError> {
        if dim < 1 {
            return Err(VarietyError::InvalidDimension {
                kind: "Fano manifold",
                min: 1,
                dim,
            });
        }
        if index < 1 || index > dim + 1 {
            return Err(VarietyError::InvalidIndex { dim, index });
        }
        Ok(VarietySpec {
            kind: VarietyKind::AbstractFano,
            dim,
            index,
            picard_rank_one_known,
            h11: None,
        })
    }
}

impl fmt::Display for VarietySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            VarietyKind::ProjectiveSpace => write!(f, "P{}", self.dim),
            VarietyKind::Quadric => write!(f, "Q{}", self.dim),
            VarietyKind::AbstractFano => write!(f, "fano:{},{}", self.dim, self.index),
        }
    }
}

impl FromStr for VarietySpec {
    type Err = VarietyError;

    /// Accepts `P<n>`, `Q<m>`, and `fano:<dim>,<index>`.
    ///
    /// For `fano:` inputs the Picard flag is set exactly when `dim >= 3`,
    /// matching the policy used for intrinsic divisor types, so printing
    /// and re-parsing reproduces the flag for every spec this crate emits.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_err = |msg: &str| VarietyError::Parse {
            input: s.to_string(),
            msg: msg.to_string(),
        };
        if let Some(rest) = s.strip_prefix("fano:") {
            let (d, i) = rest
                .split_once(',')
                .ok_or_else(|| parse_err("expected fano:<dim>,<index>"))?;
            let dim: u32 = d
                .trim()
                .parse()
                .map_err(|_| parse_err("dimension is not a number"))?;
            let index: u32 = i
                .trim()
                .parse()
                .map_err(|_| parse_err("index is not a number"))?;
            return VarietySpec::abstract_fano(dim, index, dim >= 3);
        }
        if let Some(n) = s.strip_prefix('P') {
            let n: u32 = n
                .parse()
                .map_err(|_| parse_err("expected P<n> with numeric n"))?;
            return VarietySpec::projective(n);
        }
        if let Some(m) = s.strip_prefix('Q') {
            let m: u32 = m
                .parse()
                .map_err(|_| parse_err("expected Q<m> with numeric m"))?;
            return VarietySpec::quadric(m);
        }
        Err(parse_err("expected P<n>, Q<m>, or fano:<dim>,<index>"))
    }
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum DivisorError {
    #[error("component degree must be >= 1")]
    ZeroDegree,
    #[error("cannot parse divisor component from {input:?}: {msg}")]
    Parse { input: String, msg: String },
}

/// One irreducible-or-not piece of the boundary divisor, of degree `k_i`
/// against the polarization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DivisorComponent {
    pub degree: u32,
    pub smooth: bool,
    pub irreducible: bool,
}

impl DivisorComponent {
    pub fn new(degree: u32, smooth: bool, irreducible: bool) -> Result<Self, DivisorError> {
        if degree == 0 {
            return Err(DivisorError::ZeroDegree);
        }
        Ok(DivisorComponent {
            degree,
            smooth,
            irreducible,
        })
    }

    /// A smooth irreducible component of the given degree.
    pub fn smooth_irreducible(degree: u32) -> Result<Self, DivisorError> {
        DivisorComponent::new(degree, true, true)
    }

    /// Parses the catalog triple form `degree:smooth:irreducible`,
    /// e.g. `2:true:true`.
    pub fn parse_triple(s: &str) -> Result<Self, DivisorError> {
        let parse_err = |msg: &str| DivisorError::Parse {
            input: s.to_string(),
            msg: msg.to_string(),
        };
        let mut parts = s.split(':');
        let (Some(d), Some(sm), Some(ir), None) =
            (parts.next(), parts.next(), parts.next(), parts.next())
        else {
            return Err(parse_err("expected degree:smooth:irreducible"));
        };
        let degree: u32 = d
            .trim()
            .parse()
            .map_err(|_| parse_err("degree is not a number"))?;
        let parse_bool = |t: &str| -> Result<bool, DivisorError> {
            match t.trim() {
                "true" => Ok(true),
                "false" => Ok(false),
                _ => Err(parse_err("flags must be true or false")),
            }
        };
        DivisorComponent::new(degree, parse_bool(sm)?, parse_bool(ir)?)
    }

    /// Parses the command-line form `degree[:flags]`, where `flags` is a
    /// comma-separated subset of `sing` (not smooth) and `red` (reducible).
    /// A bare degree means smooth and irreducible.
    pub fn parse_cli(s: &str) -> Result<Self, DivisorError> {
        let parse_err = |msg: &str| DivisorError::Parse {
            input: s.to_string(),
            msg: msg.to_string(),
        };
        let (deg_part, flag_part) = match s.split_once(':') {
            Some((d, f)) => (d, Some(f)),
            None => (s, None),
        };
        let degree: u32 = deg_part
            .trim()
            .parse()
            .map_err(|_| parse_err("degree is not a number"))?;
        let mut smooth = true;
        let mut irreducible = true;
        if let Some(flags) = flag_part {
            for flag in flags.split(',') {
                match flag.trim() {
                    "sing" => smooth = false,
                    "red" => irreducible = false,
                    other => {
                        return Err(parse_err(&format!(
                            "unknown flag {other:?}; expected sing or red"
                        )))
                    }
                }
            }
        }
        DivisorComponent::new(degree, smooth, irreducible)
    }
}

impl fmt::Display for DivisorComponent {
    /// Prints the catalog triple form, `degree:smooth:irreducible`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.degree, self.smooth, self.irreducible)
    }
}

/// A log pair `(X, D)`: ambient space plus the components of the boundary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogPair {
    pub ambient: VarietySpec,
    pub components: Vec<DivisorComponent>,
    /// Whether the whole boundary is known to be a simple normal crossing
    /// divisor. A single smooth component is automatically so.
    pub snc: bool,
}

impl LogPair {
    /// A pair whose boundary is asserted to be simple normal crossing.
    pub fn new(ambient: VarietySpec, components: Vec<DivisorComponent>) -> Self {
        LogPair {
            ambient,
            components,
            snc: true,
        }
    }

    pub fn with_snc(ambient: VarietySpec, components: Vec<DivisorComponent>, snc: bool) -> Self {
        LogPair {
            ambient,
            components,
            snc,
        }
    }

    /// Number of boundary components.
    pub fn r(&self) -> usize {
        self.components.len()
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.components.iter().map(|c| c.degree).collect()
    }

    /// Total boundary degree `sum k_i`.
    pub fn total_degree(&self) -> u32 {
        self.components.iter().map(|c| c.degree).sum()
    }

    /// Whether `-(K_X + D)` is ample, i.e. `sum k_i < s`.
    pub fn log_fano(&self) -> bool {
        self.total_degree() < self.ambient.index
    }

    /// Whether `K_X + D` is ample or trivial, i.e. `sum k_i >= s`.
    pub fn kd_ample_or_trivial(&self) -> bool {
        self.total_degree() >= self.ambient.index
    }

    pub fn all_smooth(&self) -> bool {
        self.components.iter().all(|c| c.smooth)
    }

    pub fn all_irreducible(&self) -> bool {
        self.components.iter().all(|c| c.irreducible)
    }
}

/// How strong a published fact about a cotangent bundle is.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strength {
    Stable,
    Semistable,
}

impl fmt::Display for Strength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Strength::Stable => write!(f, "stable"),
            Strength::Semistable => write!(f, "semistable"),
        }
    }
}

impl FromStr for Strength {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "stable" => Ok(Strength::Stable),
            "semistable" => Ok(Strength::Semistable),
            other => Err(format!("unknown strength {other:?}")),
        }
    }
}

/// A published (semi)stability fact for the cotangent bundle of every Fano
/// manifold of Picard rank one in a fixed dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityFact {
    pub dim: u32,
    pub strength: Strength,
    pub citation: String,
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum KbError {
    #[error("knowledge base line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// The knowledge base of cotangent-bundle facts, keyed by dimension.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StabilityKb {
    pub facts: BTreeMap<u32, StabilityFact>,
}

impl StabilityKb {
    /// Parses the line format
    /// `dim=<n> strength=<stable|semistable> citation=<free text>`.
    /// Blank lines and lines starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Self, KbError> {
        let mut facts = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: String| KbError::Parse { line: line_no, msg };
            let dim_rest = line
                .strip_prefix("dim=")
                .ok_or_else(|| err("expected dim=<n>".to_string()))?;
            let (dim_tok, rest) = dim_rest
                .split_once(char::is_whitespace)
                .ok_or_else(|| err("expected strength= after dim=".to_string()))?;
            let dim: u32 = dim_tok
                .parse()
                .map_err(|_| err(format!("dimension {dim_tok:?} is not a number")))?;
            let strength_rest = rest
                .trim_start()
                .strip_prefix("strength=")
                .ok_or_else(|| err("expected strength=<stable|semistable>".to_string()))?;
            let (strength_tok, rest) = strength_rest
                .split_once(char::is_whitespace)
                .ok_or_else(|| err("expected citation= after strength=".to_string()))?;
            let strength: Strength = strength_tok.parse().map_err(|m| err(m))?;
            let citation = rest
                .trim_start()
                .strip_prefix("citation=")
                .ok_or_else(|| err("expected citation=<text>".to_string()))?
                .trim()
                .to_string();
            if citation.is_empty() {
                return Err(err("citation must be nonempty".to_string()));
            }
            if facts.contains_key(&dim) {
                return Err(err(format!("duplicate entry for dimension {dim}")));
            }
            facts.insert(
                dim,
                StabilityFact {
                    dim,
                    strength,
                    citation,
                },
            );
        }
        Ok(StabilityKb { facts })
    }

    /// Prints in the same line format `parse` accepts, sorted by dimension.
    pub fn print(&self) -> String {
        let mut out = String::new();
        for fact in self.facts.values() {
            out.push_str(&format!(
                "dim={} strength={} citation={}\n",
                fact.dim, fact.strength, fact.citation
            ));
        }
        out
    }

    pub fn get(&self, dim: u32) -> Option<&StabilityFact> {
        self.facts.get(&dim)
    }
}

/// The knowledge base shipped with the crate: one fact per dimension from
/// three to six, each with its literature citation.
pub fn default_kb() -> &'static StabilityKb {
    static KB: OnceLock<StabilityKb> = OnceLock::new();
    KB.get_or_init(|| {
        StabilityKb::parse(include_str!("../data/stability_kb.txt"))
            .expect("bundled knowledge base must parse")
    })
}
