//! Command-line front end: group summaries, graph export, property
//! analysis, and corpus verification runs.
//!
//! Exit codes: 0 success, 1 verification counterexample, 2 parse/usage
//! error, 3 undefined permutability graph. Timing goes to stderr so that
//! identical invocations produce byte-identical stdout.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use permugraph::analysis::analyze;
use permugraph::error::Error;
use permugraph::harness::{
    corpus_specs, prepare_cases_from_config, run_all_verifiers, CorpusConfig, FamilyKind,
};
use permugraph::subgroup::cyclic_subgroups;
use permugraph::{build_gamma_all, build_gamma_c, GroupSpec, GroupTable};

#[derive(Parser)]
#[command(
    name = "permugraph",
    version,
    about = "Permutability graphs of cyclic subgroups of finite groups",
    after_help = "Group specs: `Z n`, `D n` (order), `Q n` (order), `M p alpha`, \
                  `SD q p alpha t`, `S n`, `A n`, `P <perm>;<perm>` (cycle notation), \
                  and `x` for direct products, e.g. \"Z 4 x Z 2\"."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Summarize a group: order, abelianness, cyclic subgroup count
    #[command(name = "group-info")]
    GroupInfo {
        /// Group spec, e.g. "Q 8" or "Z 4 x Z 2"
        spec: String,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Export the permutability graph (DOT by default)
    Graph {
        spec: String,
        /// DOT output (default)
        #[arg(long, conflicts_with = "json")]
        dot: bool,
        /// JSON output
        #[arg(long)]
        json: bool,
        /// Use all proper subgroups instead of only the cyclic ones
        #[arg(long)]
        all: bool,
        /// Write to a file instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Full graph-property report for a group's permutability graph
    Analyze {
        spec: String,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Build the corpus and run every theorem verifier
    Verify {
        /// Maximum group order in the corpus
        #[arg(long, default_value_t = 200)]
        max_order: usize,
        /// Write the JSON report array to this path
        #[arg(long)]
        report: Option<PathBuf>,
        /// Comma-separated family list (abelian, dihedral, quaternion,
        /// modular, semidirect, symmetric, alternating); default all
        #[arg(long)]
        families: Option<String>,
        /// Worker threads (default: all cores; PERMUGRAPH_THREADS also works)
        #[arg(long)]
        threads: Option<usize>,
        /// Also print one verdict line per group
        #[arg(short, long)]
        verbose: bool,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::UndefinedGraph(_) => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn build_group(spec: &str) -> Result<GroupTable, Error> {
    GroupSpec::parse(spec)?.build()
}

#[derive(Serialize)]
struct GroupInfo {
    group: String,
    order: usize,
    abelian: bool,
    cyclic: bool,
    proper_cyclic_subgroups: usize,
    gamma_c_defined: bool,
}

fn run(command: Command) -> Result<u8, Error> {
    match command {
        Command::GroupInfo { spec, json } => {
            let g = build_group(&spec)?;
            let catalog = cyclic_subgroups(&g);
            let info = GroupInfo {
                group: g.spec().to_string(),
                order: g.order(),
                abelian: g.is_abelian(),
                cyclic: g.is_cyclic(),
                proper_cyclic_subgroups: catalog.proper.len(),
                gamma_c_defined: !catalog.proper.is_empty(),
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&info).unwrap());
            } else {
                println!("group: {}", info.group);
                println!("order: {}", info.order);
                println!("abelian: {}", info.abelian);
                println!("cyclic: {}", info.cyclic);
                println!("proper_cyclic_subgroups: {}", info.proper_cyclic_subgroups);
                println!("gamma_c_defined: {}", info.gamma_c_defined);
            }
            if !info.gamma_c_defined {
                return Err(Error::UndefinedGraph(info.group));
            }
            Ok(0)
        }
        Command::Graph {
            spec,
            dot: _,
            json,
            all,
            output,
        } => {
            let g = build_group(&spec)?;
            let pg = if all {
                build_gamma_all(&g)?
            } else {
                build_gamma_c(&g)?
            };
            let body = if json {
                pg.to_json() + "\n"
            } else {
                pg.to_dot()
            };
            match output {
                Some(path) => std::fs::write(&path, body).map_err(|e| {
                    Error::InvalidParameter(format!("cannot write {}: {e}", path.display()))
                })?,
                None => print!("{body}"),
            }
            Ok(0)
        }
        Command::Analyze { spec, json } => {
            let g = build_group(&spec)?;
            let pg = build_gamma_c(&g)?;
            let report = analyze(&pg.graph);
            if json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
            } else {
                print!("{}", report.to_text());
            }
            Ok(0)
        }
        Command::Verify {
            max_order,
            report,
            families,
            threads,
            verbose,
        } => {
            let families = match families {
                None => FamilyKind::ALL.to_vec(),
                Some(list) => list
                    .split(',')
                    .map(|s| {
                        FamilyKind::parse(s.trim())
                            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
                    })
                    .collect::<Result<Vec<_>, _>>()?,
            };
            let threads = threads.or_else(|| {
                std::env::var("PERMUGRAPH_THREADS")
                    .ok()
                    .and_then(|s| s.parse().ok())
            });
            let config = CorpusConfig {
                max_order,
                families,
                ..CorpusConfig::default()
            };
            let started = std::time::Instant::now();
            println!(
                "corpus: {} groups, orders 2..={} ({} families; abelian classes \
                 complete up to the cap, S_m/A_m up to degree {})",
                corpus_specs(&config).len(),
                config.max_order,
                config.families.len(),
                config.perm_degree_cap
            );
            let cases = match threads {
                Some(t) => rayon::ThreadPoolBuilder::new()
                    .num_threads(t)
                    .build()
                    .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?
                    .install(|| prepare_cases_from_config(&config)),
                None => prepare_cases_from_config(&config),
            }?;
            let reports = run_all_verifiers(&cases);
            let mut failed = false;
            for r in &reports {
                println!(
                    "{}: {} ({} groups checked, {} counterexamples)",
                    r.theorem,
                    if r.pass { "PASS" } else { "FAIL" },
                    r.groups_checked,
                    r.counterexamples.len()
                );
                eprintln!("  [{} in {:?}]", r.theorem, r.duration);
                for note in &r.notes {
                    println!("  note: {note}");
                }
                if verbose {
                    for v in &r.verdicts {
                        println!("  {} {}", if v.ok { "ok " } else { "FAIL" }, v.group);
                    }
                }
                for c in &r.counterexamples {
                    println!("  counterexample: {c}");
                }
                failed |= !r.pass;
            }
            eprintln!("total: {:?}", started.elapsed());
            if let Some(path) = report {
                let json = serde_json::to_string_pretty(&reports).unwrap();
                let mut f = std::fs::File::create(&path).map_err(|e| {
                    Error::InvalidParameter(format!("cannot write {}: {e}", path.display()))
                })?;
                f.write_all(json.as_bytes())
                    .and_then(|_| f.write_all(b"\n"))
                    .map_err(|e| {
                        Error::InvalidParameter(format!("cannot write {}: {e}", path.display()))
                    })?;
            }
            Ok(if failed { 1 } else { 0 })
        }
    }
}
