//! The finite case analysis behind semistability on fivefolds: for each
//! Fano index s and boundary degree k, enumerate the destabilizing
//! candidates (a, t) that survive the slope bound and report which rule
//! discharges each one.
//!
//! Three cells stay open — their surviving rows land outside every
//! vanishing criterion the engine is allowed to use. One cell (s=5,
//! k=2) resolves even though it is usually treated as open: the
//! restriction-to-the-boundary lemma applies to it verbatim.

use logstab::engine::{case_table, CaseStatus};
use logstab::variety::default_kb;

fn main() {
    let kb = default_kb();
    for s in 2..=6u32 {
        for k in 1..s {
            let table = case_table(5, s, k, kb).unwrap();
            let open = table.open_rows();
            let status = if open.is_empty() {
                format!("resolved ({} rows)", table.rows.len())
            } else {
                format!(
                    "OPEN at {}",
                    open.iter()
                        .map(|(a, t)| format!("(a={a}, t={t})"))
                        .collect::<Vec<_>>()
                        .join(", ")
                )
            };
            println!("s={s} k={k} ambient={:<8} {status}", table.ambient.to_string());
        }
    }

    // The interesting cell in detail: quadric fivefold with a degree-2
    // boundary. Its lone positive-twist row needs H^0 of twisted 1-forms
    // on the boundary fourfold, and restriction from the ambient quadric
    // (twist 1 < degree 2) reduces that to Snow's vanishing.
    println!();
    let table = case_table(5, 5, 2, default_kb()).unwrap();
    println!("case table n=5 s=5 k=2, row by row:");
    for row in &table.rows {
        match &row.status {
            CaseStatus::Resolved { divisor_rule } => {
                println!("  (a={}, t={}) resolved via {divisor_rule}", row.a, row.t)
            }
            CaseStatus::Unresolved { reason } => {
                println!("  (a={}, t={}) open: {reason}", row.a, row.t)
            }
        }
    }
}
