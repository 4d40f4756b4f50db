//! Command-line front end.
//!
//! Subcommands: `bott` (one twisted form cohomology dimension, optionally
//! cross-checked against the Euler-sequence oracle), `certify` (decide
//! one pair and print the certificate), `table` (candidate resolution for
//! generic pairs), `crosscheck` (engine coverage vs the published case
//! analysis), `cover` (branched-cover transfer), and `catalog`
//! (list or batch-certify classified pairs).
//!
//! Exit codes: `0` success (for `certify`, semistable), `1` oracle
//! mismatch in `bott --oracle`, `2` usage or input error, `3` not
//! semistable, `4` undecided by the rule set.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::catalog::{certify_catalog, default_catalog, parse_catalog, CatalogEntry};
use crate::cohomology::{bott_dim, euler_oracle_dim};
use crate::covers::{cover_canonical_twist, cover_verdict, CoverVerdict};
use crate::crosscheck::crosscheck;
use crate::engine::{case_table, certify_with_kb, slope_log, CaseStatus, Verdict};
use crate::replay::replay_verdict;
use crate::variety::{default_kb, DivisorComponent, LogPair, StabilityKb, VarietySpec};

#[derive(Parser)]
#[command(
    name = "logstab",
    version,
    about = "Certificate-producing slope-semistability checker for logarithmic cotangent bundles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Dimension of H^q(P^n, Omega^p(t)) by the closed-form formulas.
    Bott {
        /// Ambient projective space dimension.
        #[arg(long)]
        n: u32,
        /// Form degree p.
        #[arg(long)]
        p: u32,
        /// Twist t.
        #[arg(long, allow_hyphen_values = true)]
        t: i64,
        /// Cohomological degree q.
        #[arg(long)]
        q: u32,
        /// Re-derive the value through the Euler-sequence oracle and
        /// compare (exit 1 on mismatch).
        #[arg(long)]
        oracle: bool,
    },
    /// Decide semistability of Omega_X(log D) for one pair.
    Certify {
        /// Ambient space: P<n>, Q<m>, or fano:<dim>,<index>.
        #[arg(long)]
        ambient: String,
        /// Boundary component as <degree>[:sing][:red]; repeatable.
        #[arg(long = "divisor", required = true)]
        divisors: Vec<String>,
        /// Declare the boundary NOT simple normal crossing.
        #[arg(long)]
        non_snc: bool,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Stability knowledge base file (bundled facts by default).
        #[arg(long)]
        kb: Option<PathBuf>,
    },
    /// Resolve the destabilizing candidates of generic pairs.
    Table {
        /// Ambient dimension (2 through 6).
        #[arg(long)]
        n: u32,
        /// Ambient index; requires --k.
        #[arg(long, requires = "k")]
        s: Option<u32>,
        /// Boundary degree; requires --s.
        #[arg(long, requires = "s")]
        k: Option<u32>,
        /// Stability knowledge base file (bundled facts by default).
        #[arg(long)]
        kb: Option<PathBuf>,
    },
    /// Compare engine coverage with the published case analysis.
    Crosscheck {
        /// Ambient dimension (2 through 6).
        #[arg(long)]
        n: u32,
        /// Stability knowledge base file (bundled facts by default).
        #[arg(long)]
        kb: Option<PathBuf>,
    },
    /// Transfer semistability through a cover branched along the boundary.
    Cover {
        /// Ambient space: P<n>, Q<m>, or fano:<dim>,<index>.
        #[arg(long)]
        ambient: String,
        /// Boundary component as <degree>[:sing][:red]; repeatable.
        #[arg(long = "divisor", required = true)]
        divisors: Vec<String>,
    },
    /// Work with catalogs of classified log Fano pairs.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Print the catalog entries.
    List {
        /// Catalog file, or "default" for the bundled classification.
        #[arg(long)]
        file: Option<String>,
    },
    /// Certify every entry, replay each verdict, and print a summary.
    Run {
        /// Catalog file, or "default" for the bundled classification.
        #[arg(long)]
        file: Option<String>,
        /// Stability knowledge base file (bundled facts by default).
        #[arg(long)]
        kb: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Parses and runs a command line, returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = err.exit_code();
            let _ = err.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, String> {
    match cli.command {
        Command::Bott { n, p, t, q, oracle } => run_bott(n, p, t, q, oracle),
        Command::Certify {
            ambient,
            divisors,
            non_snc,
            format,
            kb,
        } => run_certify(&ambient, &divisors, non_snc, format, kb.as_ref()),
        Command::Table { n, s, k, kb } => run_table(n, s, k, kb.as_ref()),
        Command::Crosscheck { n, kb } => run_crosscheck(n, kb.as_ref()),
        Command::Cover { ambient, divisors } => run_cover(&ambient, &divisors),
        Command::Catalog { action } => match action {
            CatalogAction::List { file } => run_catalog_list(file.as_deref()),
            CatalogAction::Run { file, kb } => run_catalog_run(file.as_deref(), kb.as_ref()),
        },
    }
}

fn build_pair(ambient: &str, divisors: &[String], snc: bool) -> Result<LogPair, String> {
    let ambient: VarietySpec = ambient.parse().map_err(|e| format!("--ambient: {e}"))?;
    let mut components = Vec::new();
    for d in divisors {
        components.push(DivisorComponent::parse_cli(d).map_err(|e| format!("--divisor: {e}"))?);
    }
    Ok(LogPair::with_snc(ambient, components, snc))
}

fn load_kb(path: Option<&PathBuf>) -> Result<StabilityKb, String> {
    match path {
        None => Ok(default_kb().clone()),
        Some(p) => {
            let text =
                fs::read_to_string(p).map_err(|e| format!("--kb {}: {e}", p.display()))?;
            StabilityKb::parse(&text).map_err(|e| e.to_string())
        }
    }
}

fn load_catalog(file: Option<&str>) -> Result<Vec<CatalogEntry>, String> {
    match file {
        None | Some("default") => Ok(default_catalog().to_vec()),
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| format!("--file {path}: {e}"))?;
            parse_catalog(&text).map_err(|e| e.to_string())
        }
    }
}

fn run_bott(n: u32, p: u32, t: i64, q: u32, oracle: bool) -> Result<i32, String> {
    let closed = bott_dim(n, p, t, q).map_err(|e| e.to_string())?;
    if !oracle {
        println!("{closed}");
        return Ok(0);
    }
    let independent = euler_oracle_dim(n, p, t, q)
        .map_err(|e| e.to_string())?
        .ok_or("the oracle could not determine this entry")?;
    if closed == independent {
        println!("{closed} {independent} OK");
        Ok(0)
    } else {
        println!("{closed} {independent} MISMATCH");
        Ok(1)
    }
}

fn pair_display(pair: &LogPair) -> String {
    let components = pair
        .components
        .iter()
        .map(|c| c.to_string())
        .collect::<Vec<_>>()
        .join(", ");
    format!("{} + {components}", pair.ambient)
}

fn run_certify(
    ambient: &str,
    divisors: &[String],
    non_snc: bool,
    format: Format,
    kb_path: Option<&PathBuf>,
) -> Result<i32, String> {
    let pair = build_pair(ambient, divisors, !non_snc)?;
    let kb = load_kb(kb_path)?;
    let verdict = certify_with_kb(&pair, &kb).map_err(|e| e.to_string())?;
    replay_verdict(&pair, &kb, &verdict)
        .map_err(|e| format!("internal: the produced verdict failed replay: {e}"))?;
    let slope = slope_log(&pair, 1);
    match format {
        Format::Json => {
            let pair_value = json!({
                "ambient": pair.ambient.to_string(),
                "components": pair
                    .components
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>(),
                "snc": pair.snc,
            });
            let value = match &verdict {
                Verdict::Semistable { certificate } => json!({
                    "verdict": "Semistable",
                    "pair": pair_value,
                    "slope": slope.to_string(),
                    "certificate": certificate,
                }),
                Verdict::NotSemistable { witness } => json!({
                    "verdict": "NotSemistable",
                    "pair": pair_value,
                    "slope": slope.to_string(),
                    "witness": {
                        "a": witness.a,
                        "t": witness.t,
                        "h0_lower_bound": witness.h0_lower_bound,
                        "justification": witness.justification,
                    },
                }),
                Verdict::Unknown { unresolved } => json!({
                    "verdict": "Unknown",
                    "pair": pair_value,
                    "slope": slope.to_string(),
                    "unresolved": unresolved
                        .iter()
                        .map(|u| json!({"a": u.a, "t": u.t, "reason": u.reason}))
                        .collect::<Vec<_>>(),
                }),
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&value).map_err(|e| e.to_string())?
            );
        }
        Format::Text => {
            println!("verdict: {}", verdict.label());
            println!("pair: {}", pair_display(&pair));
            println!("slope(a=1): {slope}");
            match &verdict {
                Verdict::Semistable { certificate } => {
                    println!("replay: ok");
                    println!("certificate:");
                    print!("{}", certificate.to_text());
                }
                Verdict::NotSemistable { witness } => {
                    println!("replay: ok");
                    println!(
                        "witness: a={} t={} with h0 >= {}",
                        witness.a, witness.t, witness.h0_lower_bound
                    );
                    println!("justification:");
                    print!("{}", witness.justification.to_text());
                }
                Verdict::Unknown { unresolved } => {
                    println!("open obligations:");
                    for u in unresolved {
                        println!("  (a={}, t={}): {}", u.a, u.t, u.reason);
                    }
                }
            }
        }
    }
    Ok(verdict.exit_code())
}

fn run_table(
    n: u32,
    s: Option<u32>,
    k: Option<u32>,
    kb_path: Option<&PathBuf>,
) -> Result<i32, String> {
    let kb = load_kb(kb_path)?;
    match (s, k) {
        (Some(s), Some(k)) => {
            let table = case_table(n, s, k, &kb).map_err(|e| e.to_string())?;
            println!(
                "case table n={} s={} k={} ambient={}",
                table.n, table.s, table.k, table.ambient
            );
            for row in &table.rows {
                match &row.status {
                    CaseStatus::Resolved { divisor_rule } => {
                        println!("  (a={}, t={}) resolved via {divisor_rule}", row.a, row.t);
                    }
                    CaseStatus::Unresolved { reason } => {
                        println!("  (a={}, t={}) open: {reason}", row.a, row.t);
                    }
                }
            }
            let open = table.open_rows().len();
            println!(
                "summary: {} resolved, {} open",
                table.rows.len() - open,
                open
            );
            Ok(0)
        }
        (None, None) => {
            println!("case tables for n={n}");
            for s in 2..=n + 1 {
                for k in 1..s {
                    let table = case_table(n, s, k, &kb).map_err(|e| e.to_string())?;
                    let open = table.open_rows();
                    if open.is_empty() {
                        println!(
                            "  s={s} k={k} ambient={}: resolved ({} rows)",
                            table.ambient,
                            table.rows.len()
                        );
                    } else {
                        let rows = open
                            .iter()
                            .map(|(a, t)| format!("(a={a}, t={t})"))
                            .collect::<Vec<_>>()
                            .join(", ");
                        println!("  s={s} k={k} ambient={}: open {rows}", table.ambient);
                    }
                }
            }
            Ok(0)
        }
        // clap's `requires` pairing makes the mixed cases unreachable.
        _ => Err("--s and --k must be given together".to_string()),
    }
}

fn run_crosscheck(n: u32, kb_path: Option<&PathBuf>) -> Result<i32, String> {
    let kb = load_kb(kb_path)?;
    let report = crosscheck(n, &kb).map_err(|e| e.to_string())?;
    println!("crosscheck n={} over {} cells", report.n, report.cells.len());
    println!("agree: {}", report.agree.len());
    let fmt = |cells: &[(u32, u32)]| {
        if cells.is_empty() {
            "none".to_string()
        } else {
            cells
                .iter()
                .map(|(s, k)| format!("(s={s}, k={k})"))
                .collect::<Vec<_>>()
                .join(", ")
        }
    };
    println!(
        "engine resolves, statement excludes: {}",
        fmt(&report.engine_resolves_statement_excludes)
    );
    println!(
        "statement includes, engine unresolved: {}",
        fmt(&report.statement_includes_engine_unresolved)
    );
    for cell in &report.cells {
        if !cell.engine_resolved && !cell.statement_included {
            let rows = cell
                .open_rows
                .iter()
                .map(|(a, t)| format!("(a={a}, t={t})"))
                .collect::<Vec<_>>()
                .join(", ");
            println!("open on both sides: s={} k={} rows {rows}", cell.s, cell.k);
        }
    }
    Ok(0)
}

fn run_cover(ambient: &str, divisors: &[String]) -> Result<i32, String> {
    let pair = build_pair(ambient, divisors, true)?;
    let degrees = pair.degrees();
    println!("pair: {}", pair_display(&pair));
    println!(
        "cover canonical twist: {}",
        cover_canonical_twist(pair.ambient.index, &degrees)
    );
    match cover_verdict(&pair).map_err(|e| e.to_string())? {
        CoverVerdict::Semistable { certificate } => {
            println!("transfer: semistability pulls back");
            println!("certificate:");
            print!("{}", certificate.to_text());
            Ok(0)
        }
        CoverVerdict::Unknown { candidates } => {
            println!("transfer: unavailable on a log Fano base; open candidates:");
            for c in &candidates {
                println!("  (a={}, t={})", c.a, c.t);
            }
            Ok(4)
        }
    }
}

fn run_catalog_list(file: Option<&str>) -> Result<i32, String> {
    let entries = load_catalog(file)?;
    for entry in &entries {
        println!(
            "{}: {}  [{}]",
            entry.id,
            pair_display(&entry.pair),
            entry.citation
        );
    }
    println!("{} entries", entries.len());
    Ok(0)
}

fn run_catalog_run(file: Option<&str>, kb_path: Option<&PathBuf>) -> Result<i32, String> {
    let entries = load_catalog(file)?;
    let kb = load_kb(kb_path)?;
    let report = certify_catalog(&entries, &kb).map_err(|e| e.to_string())?;
    for (entry, (id, verdict)) in entries.iter().zip(&report.outcomes) {
        replay_verdict(&entry.pair, &kb, verdict)
            .map_err(|e| format!("internal: verdict for {id} failed replay: {e}"))?;
        println!("{id}: {}", verdict.label());
    }
    println!(
        "semistable: {}  not semistable: {}  unknown: {}",
        report.semistable, report.not_semistable, report.unknown
    );
    Ok(0)
}
