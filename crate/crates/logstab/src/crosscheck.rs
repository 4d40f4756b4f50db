//! Cell-by-cell comparison of the engine's coverage with the published
//! case analysis of log pairs on rank-one spaces.
//!
//! For each dimension `n` the grid ranges over the ambient index `s` and
//! the boundary degree `k` of a generic single-component pair. A cell is
//! *engine-resolved* when every destabilizing candidate row of its case
//! table is discharged, and *statement-included* when the published
//! analysis claims the pair semistable. The two classifications are
//! compared and every disagreement is reported in one of two buckets:
//!
//! * `engine_resolves_statement_excludes` — the uniform rule set settles
//!   a cell the published analysis left open (an extension, harmless);
//! * `statement_includes_engine_unresolved` — the published analysis
//!   claims a cell the rule set cannot re-derive (a gap worth auditing).

use crate::engine::{case_table, EngineError};
use crate::variety::StabilityKb;

/// Whether the published case analysis settles the generic pair with
/// ambient dimension `n`, index `s`, and one smooth irreducible boundary
/// component of degree `k`.
///
/// Dimensions two through four are covered in full (except the `n = 2`,
/// `s = 2` cell, whose ambient quadric surface is not rank one). In
/// dimension five, coverage spans `s` in {2, 5, 6} plus the cells (3,2)
/// and (4,3); the remaining index-3 and index-4 cells were left open. In
/// dimension six, coverage spans `s <= 4` and `s` in {6, 7} plus (5,3)
/// and (5,4); the index-5 cells with boundary degree below three were not
/// claimed.
pub fn statement_covers(n: u32, s: u32, k: u32) -> bool {
    match n {
        2 => s == 3,
        3 => s <= 4,
        4 => s <= 5,
        5 => matches!(s, 2 | 5 | 6) || matches!((s, k), (3, 2) | (4, 3)),
        6 => s <= 4 || matches!(s, 6 | 7) || matches!((s, k), (5, 3) | (5, 4)),
        _ => false,
    }
}

/// One `(s, k)` cell of the comparison grid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GridCell {
    pub s: u32,
    pub k: u32,
    pub engine_resolved: bool,
    pub statement_included: bool,
    /// The `(a, t)` rows the engine could not discharge (empty when
    /// resolved).
    pub open_rows: Vec<(u32, i64)>,
}

/// The full comparison for one dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiscrepancyReport {
    pub n: u32,
    pub cells: Vec<GridCell>,
    /// Cells where engine and statement agree (both settle or both open).
    pub agree: Vec<(u32, u32)>,
    pub engine_resolves_statement_excludes: Vec<(u32, u32)>,
    pub statement_includes_engine_unresolved: Vec<(u32, u32)>,
}

impl DiscrepancyReport {
    /// True when engine and statement classify every cell identically.
    pub fn discrepancy_free(&self) -> bool {
        self.engine_resolves_statement_excludes.is_empty()
            && self.statement_includes_engine_unresolved.is_empty()
    }
}

/// Runs the comparison over every `(s, k)` cell of dimension `n`
/// (`2 <= n <= 6`, `2 <= s <= n + 1`, `1 <= k < s`).
pub fn crosscheck(n: u32, kb: &StabilityKb) -> Result<DiscrepancyReport, EngineError> {
    if !(2..=6).contains(&n) {
        return Err(EngineError::DimensionOutOfRange { n });
    }
    let mut report = DiscrepancyReport {
        n,
        cells: Vec::new(),
        agree: Vec::new(),
        engine_resolves_statement_excludes: Vec::new(),
        statement_includes_engine_unresolved: Vec::new(),
    };
    for s in 2..=n + 1 {
        for k in 1..s {
            let table = case_table(n, s, k, kb)?;
            let engine_resolved = table.fully_resolved();
            let statement_included = statement_covers(n, s, k);
            match (engine_resolved, statement_included) {
                (true, false) => report.engine_resolves_statement_excludes.push((s, k)),
                (false, true) => report.statement_includes_engine_unresolved.push((s, k)),
                _ => report.agree.push((s, k)),
            }
            report.cells.push(GridCell {
                s,
                k,
                engine_resolved,
                statement_included,
                open_rows: table.open_rows(),
            });
        }
    }
    Ok(report)
}
