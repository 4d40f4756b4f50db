//! Comparing the engine's resolved set against the published coverage
//! statement for semistability of log cotangent bundles, dimension by
//! dimension.
//!
//! Both directions of disagreement are interesting: a cell the engine
//! resolves that the statement excludes is a (modest) extension; a cell
//! the statement includes that the engine cannot resolve would be a gap
//! in the mechanization.

use logstab::crosscheck::crosscheck;
use logstab::variety::default_kb;

fn main() {
    for n in 2..=6u32 {
        let report = crosscheck(n, default_kb()).unwrap();
        println!(
            "dimension {n}: {} cells, {} agree",
            report.cells.len(),
            report.agree.len()
        );
        if report.discrepancy_free() {
            println!("  no discrepancies");
        }
        for (s, k) in &report.engine_resolves_statement_excludes {
            println!("  engine resolves, statement excludes: (s={s}, k={k})");
        }
        for (s, k) in &report.statement_includes_engine_unresolved {
            println!("  statement includes, engine unresolved: (s={s}, k={k})");
        }
        for cell in &report.cells {
            if !cell.engine_resolved && !cell.statement_included {
                let rows = cell
                    .open_rows
                    .iter()
                    .map(|(a, t)| format!("(a={a}, t={t})"))
                    .collect::<Vec<_>>()
                    .join(", ");
                println!(
                    "  open on both sides: (s={}, k={}) rows {rows}",
                    cell.s, cell.k
                );
            }
        }
        println!();
    }
}
