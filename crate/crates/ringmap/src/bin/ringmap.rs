//! Command-line interface: domain scans, table reproduction, patch
//! filling, map enumeration with export, claim verification and
//! exploration of undecided parameters.
//!
//! Exit codes: 0 on success/pass, 1 on any claim failure or error, 2 when
//! a run was inconclusive (budget exhausted).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ringmap::catalog::{
    enumerate_maps, explore_open, table_one_cells, verify_theorem, ClaimStatus, ExploreVerdict,
    Scope,
};
use ringmap::export::{export, persist_catalog, ExportFormat, PersistOutcome};
use ringmap::patch::{fill, pentagonal_table, FillMode, FillResult};
use ringmap::seq::BoundarySequence;
use ringmap::{Caps, RingError};

#[derive(Parser)]
#[command(name = "ringmap", about = "Enumerate and verify 3-valent maps built from a ring of q-gons filled with p-gons", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Scan the admissible parameter domain
    Domain {
        /// p range, e.g. 3..12
        #[arg(long, value_parser = parse_range)]
        p: (u32, u32),
        /// q range, e.g. 4..12
        #[arg(long, value_parser = parse_range)]
        q: (u32, u32),
        #[arg(long = "n-max", default_value_t = 40)]
        n_max: u32,
    },
    /// Reproduce the table of pentagonal boundary sequences
    Table1 {
        #[arg(long = "k-max", default_value_t = 9)]
        k_max: u32,
    },
    /// Decide or enumerate p-gon fillings of a boundary sequence
    Fill {
        /// sequence, e.g. 30103010 or 3,0,1,0 or deg(5)
        #[arg(long)]
        seq: String,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        enumerate: bool,
    },
    /// Enumerate all maps for one parameter triple
    Enumerate {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        format: Option<ExportFormatArg>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the published-claim suite
    VerifyTheorem {
        #[arg(long)]
        full: bool,
    },
    /// Run the pipeline on undecided parameters (exploratory output)
    Explore {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
        /// n range, e.g. 17..19
        #[arg(long, value_parser = parse_range)]
        n: (u32, u32),
    },
    /// Re-export previously persisted results
    Export {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        format: ExportFormatArg,
    },
}

#[derive(Clone, Copy)]
struct ExportFormatArg(ExportFormat);

impl std::str::FromStr for ExportFormatArg {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        s.parse::<ExportFormat>().map(ExportFormatArg).map_err(|e| e.to_string())
    }
}

fn parse_range(s: &str) -> Result<(u32, u32), String> {
    if let Some((a, b)) = s.split_once("..") {
        let lo: u32 = a.trim().parse().map_err(|_| format!("bad range: {s}"))?;
        let hi: u32 = b.trim().trim_start_matches('=').parse().map_err(|_| format!("bad range: {s}"))?;
        if lo > hi {
            return Err(format!("empty range: {s}"));
        }
        Ok((lo, hi))
    } else {
        let v: u32 = s.trim().parse().map_err(|_| format!("bad range: {s}"))?;
        Ok((v, v))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let caps = Caps::from_env();
    match run(cli, caps) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli, caps: Caps) -> ringmap::Result<ExitCode> {
    match cli.command {
        Command::Domain { p, q, n_max } => {
            let rows = ringmap::domain::scan_domain(p, q, n_max)?;
            println!("{:>3} {:>3} {:>4}  excess", "p", "q", "n");
            for r in rows {
                let excess = match &r.adm {
                    ringmap::domain::Admissibility::Admissible { excess } => excess.to_string(),
                    ringmap::domain::Admissibility::AdmissibleUnconstrained => "free".into(),
                    _ => unreachable!(),
                };
                println!("{:>3} {:>3} {:>4}  {excess}", r.p, r.q, r.n);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Table1 { k_max } => {
            let table = pentagonal_table(k_max, caps)?;
            let listed: std::collections::BTreeSet<(u32, u32)> =
                table_one_cells().iter().map(|c| (c.k, c.n)).collect();
            println!("{:>2} {:>3}  sequences", "k", "n");
            for ((k, n), seqs) in &table {
                let strings: Vec<String> = seqs.iter().map(|s| s.to_string()).collect();
                let mark = if listed.contains(&(*k, *n)) || *n < 2 { "" } else { "  (unlisted)" };
                println!("{k:>2} {n:>3}  {}{}", strings.join(" "), mark);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Fill { seq, p, enumerate } => {
            let a: BoundarySequence = seq.parse()?;
            if enumerate {
                match fill(&a, p, FillMode::Enumerate, caps)? {
                    FillResult::Enumerate(patches) => {
                        println!("{} filling(s) of {a} by {p}-gons", patches.len());
                        for (i, patch) in patches.iter().enumerate() {
                            let s = patch.stats();
                            println!(
                                "  {i}: v2={} v3={} interior={} faces={}",
                                s.v2, s.v3, s.x, s.f
                            );
                        }
                    }
                    _ => unreachable!(),
                }
            } else {
                match fill(&a, p, FillMode::Decide, caps)? {
                    FillResult::Decide(ok) => {
                        println!("{a} is {}fillable by {p}-gons", if ok { "" } else { "not " })
                    }
                    _ => unreachable!(),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { p, q, n, format, out } => {
            let entries = enumerate_maps(p, q, n, caps)?;
            println!("{} map(s) for p={p} q={q} n={n}", entries.len());
            for e in &entries {
                let r = &e.record;
                println!(
                    "  V={} E={} F={} aut={} inner={} outer={} self_comp={} two_paths={}{}",
                    r.v,
                    r.e,
                    r.f,
                    r.aut_order,
                    r.inner_seq,
                    r.outer_seq,
                    r.self_complementary,
                    r.two_paths,
                    if r.non_polyhedral { " non_polyhedral" } else { "" }
                );
            }
            if let Some(dir) = out {
                match persist_catalog(&dir, p, q, n, &entries)? {
                    PersistOutcome::Created => println!("results written to {}", dir.display()),
                    PersistOutcome::Unchanged => println!("results unchanged in {}", dir.display()),
                    PersistOutcome::Changed { removed, added } => {
                        println!(
                            "results differ from previous run: {} removed, {} added; overwritten",
                            removed.len(),
                            added.len()
                        );
                        for c in removed {
                            println!("  - {c}");
                        }
                        for c in added {
                            println!("  + {c}");
                        }
                    }
                }
                if let Some(ExportFormatArg(fmt)) = format {
                    if fmt != ExportFormat::Json {
                        for path in export(&entries, fmt, &dir)? {
                            println!("wrote {}", path.display());
                        }
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyTheorem { full } => {
            let scope = if full { Scope::Full } else { Scope::Fast };
            let report = verify_theorem(scope, caps);
            for c in &report.claims {
                let tag = match c.status {
                    ClaimStatus::Pass => "PASS",
                    ClaimStatus::Fail => "FAIL",
                    ClaimStatus::Inconclusive => "INCONCLUSIVE",
                };
                println!(
                    "[{tag}] {} ({:.1}s)\n       expected: {}\n       computed: {}",
                    c.name, c.seconds, c.expected, c.computed
                );
            }
            let code = report.exit_code();
            println!(
                "{} claims, {} failed, {} inconclusive",
                report.claims.len(),
                report.claims.iter().filter(|c| c.status == ClaimStatus::Fail).count(),
                report
                    .claims
                    .iter()
                    .filter(|c| c.status == ClaimStatus::Inconclusive)
                    .count()
            );
            Ok(ExitCode::from(code as u8))
        }
        Command::Explore { p, q, n } => {
            let rows = explore_open(p, q, n, caps);
            let mut inconclusive = false;
            println!("exploratory run; results below are not established claims");
            for r in rows {
                match r.verdict {
                    ExploreVerdict::Completed { count } => println!(
                        "  p={} q={} n={}: {} map(s), search completed",
                        r.p, r.q, r.n, count
                    ),
                    ExploreVerdict::Inconclusive { reason } => {
                        inconclusive = true;
                        println!("  p={} q={} n={}: inconclusive ({reason})", r.p, r.q, r.n)
                    }
                }
            }
            Ok(ExitCode::from(if inconclusive { 2 } else { 0 }))
        }
        Command::Export { input, format } => {
            let mut count = 0;
            for entry in std::fs::read_dir(&input)? {
                let path = entry?.path();
                let Some(name) = path.file_name().and_then(|s| s.to_str()) else { continue };
                let Some(stem) = name.strip_suffix(".json") else { continue };
                let parts: Vec<u32> = stem.split('_').filter_map(|t| t.parse().ok()).collect();
                if parts.len() != 3 {
                    continue;
                }
                let (p, q, n) = (parts[0], parts[1], parts[2]);
                // re-enumerate to regain the map structures, then compare
                let entries = enumerate_maps(p, q, n, caps)?;
                let stored = ringmap::export::load_catalog(&input, p, q, n)?;
                let fresh = ringmap::export::records_json(&entries);
                if stored != fresh {
                    return Err(RingError::Parameter(format!(
                        "stored results for {p}_{q}_{n} do not match a fresh enumeration; rerun enumerate"
                    )));
                }
                for path in export(&entries, format.0, &input)? {
                    println!("wrote {}", path.display());
                }
                count += 1;
            }
            if count == 0 {
                eprintln!("no result files found in {}", input.display());
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
