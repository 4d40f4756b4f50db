//! Catalogs of classified log Fano pairs.
//!
//! The bundled catalog lists the surface pairs of Fujita's classification
//! and the threefold pairs of Maeda's, each with its literature citation;
//! [`parse_catalog`] reads the same record format from user files, and
//! [`certify_catalog`] runs the checker over every entry.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use thiserror::Error;

use crate::engine::{certify_with_kb, EngineError, Verdict};
use crate::variety::{DivisorComponent, LogPair, StabilityKb, VarietySpec};

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum CatalogError {
    #[error("catalog line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("catalog line {line}: duplicate id {id:?}")]
    DuplicateId { line: usize, id: String },
    #[error("catalog entry {id:?} is not log Fano: index {s} with total boundary degree {total}")]
    NotLogFano { id: String, s: u32, total: u32 },
}

/// One classified pair: a unique id, the pair itself, and the citation
/// locating it in the classification literature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub id: String,
    pub pair: LogPair,
    pub citation: String,
}

/// Parses a catalog file: records of `key: value` lines (`id`, `ambient`,
/// `components`, `citation`, each exactly once) separated by blank lines,
/// with `#` comment lines ignored. Every entry must be log Fano — the
/// catalog format exists for the classified `-(K+D)` ample lists.
pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>, CatalogError> {
    let mut entries = Vec::new();
    let mut seen = BTreeSet::new();
    let mut record: Vec<(usize, &str)> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() {
            if !record.is_empty() {
                entries.push(parse_record(&record, &mut seen)?);
                record.clear();
            }
            continue;
        }
        if line.starts_with('#') {
            continue;
        }
        record.push((idx + 1, line));
    }
    if !record.is_empty() {
        entries.push(parse_record(&record, &mut seen)?);
    }
    Ok(entries)
}

fn parse_record(
    lines: &[(usize, &str)],
    seen: &mut BTreeSet<String>,
) -> Result<CatalogEntry, CatalogError> {
    let first_line = lines[0].0;
    let mut id: Option<(usize, String)> = None;
    let mut ambient: Option<VarietySpec> = None;
    let mut components: Option<Vec<DivisorComponent>> = None;
    let mut citation: Option<String> = None;

    for &(line, text) in lines {
        let Some((key, value)) = text.split_once(':') else {
            return Err(CatalogError::Parse {
                line,
                msg: "expected a `key: value` line".to_string(),
            });
        };
        let key = key.trim();
        let value = value.trim();
        let duplicate = |line| CatalogError::Parse {
            line,
            msg: format!("key {key:?} given twice in one record"),
        };
        match key {
            "id" => {
                if id.is_some() {
                    return Err(duplicate(line));
                }
                if value.is_empty() {
                    return Err(CatalogError::Parse {
                        line,
                        msg: "id must be nonempty".to_string(),
                    });
                }
                id = Some((line, value.to_string()));
            }
            "ambient" => {
                if ambient.is_some() {
                    return Err(duplicate(line));
                }
                ambient = Some(value.parse().map_err(|e: crate::variety::VarietyError| {
                    CatalogError::Parse {
                        line,
                        msg: e.to_string(),
                    }
                })?);
            }
            "components" => {
                if components.is_some() {
                    return Err(duplicate(line));
                }
                let mut parsed = Vec::new();
                for token in value.split(',') {
                    parsed.push(DivisorComponent::parse_triple(token.trim()).map_err(|e| {
                        CatalogError::Parse {
                            line,
                            msg: e.to_string(),
                        }
                    })?);
                }
                components = Some(parsed);
            }
            "citation" => {
                if citation.is_some() {
                    return Err(duplicate(line));
                }
                citation = Some(value.to_string());
            }
            other => {
                return Err(CatalogError::Parse {
                    line,
                    msg: format!("unknown key {other:?}"),
                });
            }
        }
    }

    let missing = |key: &str| CatalogError::Parse {
        line: first_line,
        msg: format!("record is missing {key:?}"),
    };
    let (id_line, id) = id.ok_or_else(|| missing("id"))?;
    let ambient = ambient.ok_or_else(|| missing("ambient"))?;
    let components = components.ok_or_else(|| missing("components"))?;
    let citation = citation.ok_or_else(|| missing("citation"))?;
    if !seen.insert(id.clone()) {
        return Err(CatalogError::DuplicateId { line: id_line, id });
    }
    let pair = LogPair::new(ambient, components);
    if !pair.log_fano() {
        return Err(CatalogError::NotLogFano {
            id,
            s: pair.ambient.index,
            total: pair.total_degree(),
        });
    }
    Ok(CatalogEntry { id, pair, citation })
}

/// Prints entries back in the record format accepted by
/// [`parse_catalog`].
pub fn print_catalog(entries: &[CatalogEntry]) -> String {
    let mut out = String::new();
    for (i, entry) in entries.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        out.push_str(&format!("id: {}\n", entry.id));
        out.push_str(&format!("ambient: {}\n", entry.pair.ambient));
        let components = entry
            .pair
            .components
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        out.push_str(&format!("components: {components}\n"));
        out.push_str(&format!("citation: {}\n", entry.citation));
    }
    out
}

/// The bundled classification: Fujita's surface pairs and Maeda's
/// threefold pairs.
pub fn default_catalog() -> &'static [CatalogEntry] {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        parse_catalog(include_str!("../data/catalog_default.txt"))
            .expect("the bundled catalog parses")
    })
}

/// Verdicts for a batch of entries, with summary counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogReport {
    /// `(id, verdict)` in catalog order.
    pub outcomes: Vec<(String, Verdict)>,
    pub semistable: usize,
    pub not_semistable: usize,
    pub unknown: usize,
}

/// Runs the checker over every entry.
pub fn certify_catalog(
    entries: &[CatalogEntry],
    kb: &StabilityKb,
) -> Result<CatalogReport, EngineError> {
    let mut report = CatalogReport {
        outcomes: Vec::new(),
        semistable: 0,
        not_semistable: 0,
        unknown: 0,
    };
    for entry in entries {
        let verdict = certify_with_kb(&entry.pair, kb)?;
        match &verdict {
            Verdict::Semistable { .. } => report.semistable += 1,
            Verdict::NotSemistable { .. } => report.not_semistable += 1,
            Verdict::Unknown { .. } => report.unknown += 1,
        }
        report.outcomes.push((entry.id.clone(), verdict));
    }
    Ok(report)
}
