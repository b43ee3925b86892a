use std::fs;
use std::io::{self, BufRead, BufWriter, Write};
use std::ops::ControlFlow;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use indram::arrow::{decide, CopyKind, Outcome, DEFAULT_BUDGET};
use indram::bundle::{certify, write_bundle};
use indram::claims::Profile;
use indram::enumerate::{generate, GenFilter};
use indram::family::graph;
use indram::graph::Graph;
use indram::graph6;
use indram::ramsey::{ir_exact, ir_exact_multicopy, IrConfig, IrValue};
use indram::strategies::{avoid_2k2_coloring, chromatic_partition_coloring, matching_partition, triangle_coloring};
use indram::verify::{verify_all, VerifyOptions};

const EXIT_DIFFERENT: u8 = 2;
const EXIT_UNKNOWN: u8 = 3;
const EXIT_USAGE: u8 = 4;

/// Exact search for induced Ramsey arrowing on small graphs.
///
/// Graphs are given as family expressions (P5, C7, K4, S3, K3,3,2, 2K2,
/// K3+2K2) or as graph6 strings. The red pattern is always the first one.
#[derive(Parser)]
#[command(name = "indram", version)]
struct Cli {
    /// Worker threads for sweeps and claim checks.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a host arrows (red, blue).
    Arrows {
        #[arg(long)]
        host: String,
        #[arg(long)]
        red: String,
        #[arg(long)]
        blue: String,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Ordinary (non-induced) copies.
        #[arg(long)]
        weak: bool,
        /// Write the good colouring here when one is found.
        #[arg(long)]
        witness: Option<PathBuf>,
        /// Exit with status 2 unless the decision is this one.
        #[arg(long, value_enum)]
        expect: Option<Expect>,
    },
    /// Compute IR(red, blue), optionally writing a certificate bundle.
    Ir {
        #[arg(long)]
        red: String,
        #[arg(long)]
        blue: String,
        /// Use IR(red, t·blue) through the connected reduction.
        #[arg(long)]
        copies: Option<usize>,
        #[arg(long, default_value_t = 8)]
        cap: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Exit with status 2 unless the exact value is this one.
        #[arg(long)]
        expect: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Print every graph of the order up to isomorphism, one graph6 per line.
    Gen {
        order: usize,
        #[arg(long)]
        connected: bool,
        #[arg(long)]
        min_edges: Option<usize>,
        #[arg(long)]
        max_edges: Option<usize>,
        /// Print only the number of graphs.
        #[arg(long)]
        count: bool,
    },
    /// Find an induced copy of the pattern. Without --host, graph6 hosts are
    /// read from stdin and those containing the pattern are echoed.
    Embed {
        #[arg(long)]
        host: Option<String>,
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        weak: bool,
    },
    /// Run an explicit colouring strategy and print the witness.
    Strategy {
        #[arg(value_enum)]
        name: StrategyName,
        #[arg(long)]
        host: String,
        /// Red pattern for avoid-2k2 and chromatic-partition.
        #[arg(long)]
        red: Option<String>,
        /// Number of parts for chromatic-partition.
        #[arg(long, default_value_t = 2)]
        parts: usize,
        /// Blue pattern size for triangle (blue is tK3).
        #[arg(long, default_value_t = 2)]
        t: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the table of known statements.
    VerifyPaper {
        #[arg(long, value_enum, default_value_t = ProfileArg::Quick)]
        profile: ProfileArg,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Machine-readable summary.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Directory for certificate bundles of exact instances.
        #[arg(long)]
        evidence: Option<PathBuf>,
        /// Include per-instance timings in the text report.
        #[arg(long)]
        timing: bool,
    },
    /// Re-validate a certificate bundle written by `ir --out`.
    Certify { bundle: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Expect {
    Arrows,
    NotArrows,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyName {
    Avoid2k2,
    ChromaticPartition,
    MatchingPartition,
    Triangle,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileArg {
    Quick,
    Full,
}

fn parse_graph(expr: &str) -> Result<Graph> {
    graph(expr).map_err(|e| anyhow::Error::new(UsageError(e.to_string())))
}

#[derive(Debug)]
struct UsageError(String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::FAILURE;
        }
    }
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) if e.downcast_ref::<UsageError>().is_some() => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Arrows { host, red, blue, budget, weak, witness, expect } => {
            let (f, g, h) = (parse_graph(&host)?, parse_graph(&red)?, parse_graph(&blue)?);
            let kind = if weak { CopyKind::Weak } else { CopyKind::Induced };
            let v = decide(&f, &g, &h, budget, kind);
            println!("{}", v.outcome.label());
            println!(
                "nodes {} propagations {} red copies {} blue copies {}",
                v.stats.nodes, v.stats.propagations, v.stats.red_copies, v.stats.blue_copies
            );
            if let Outcome::NotArrows(c) = &v.outcome {
                let text = c.to_witness(&f);
                match &witness {
                    Some(path) => fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?,
                    None => print!("{text}"),
                }
            }
            Ok(match (&v.outcome, expect) {
                (Outcome::Unknown, _) => EXIT_UNKNOWN,
                (Outcome::Arrows, Some(Expect::NotArrows)) | (Outcome::NotArrows(_), Some(Expect::Arrows)) => EXIT_DIFFERENT,
                _ => 0,
            })
        }
        Command::Ir { red, blue, copies, cap, budget, out, expect, json } => {
            let (g, h) = (parse_graph(&red)?, parse_graph(&blue)?);
            let config = IrConfig { cap, budget };
            let r = match copies {
                Some(t) => ir_exact_multicopy(&g, &h, t, &config)?,
                None => ir_exact(&g, &h, &config)?,
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&r)?);
            } else {
                println!("IR = {}", r.value);
                println!("lower bound {}", r.lower_bound);
                if let Some(c) = &r.arrow_certificate {
                    println!("arrowing host {} ({} vertices): {}", graph6::encode(&c.host), c.host.order(), c.description);
                }
                if let Some(n) = r.witness_order {
                    println!("good colourings for {} hosts of order {n}", r.witness_count);
                }
                for o in &r.orders {
                    let kind = if o.connected_only { "connected hosts" } else { "hosts" };
                    let end = if o.arrows { ", stopped at an arrowing host" } else { "" };
                    println!(
                        "order {}: {} {kind}, {} with good colourings, {} undecided, {} nodes{end}",
                        o.order, o.hosts, o.not_arrows, o.unknown, o.nodes
                    );
                }
            }
            if let Some(dir) = &out {
                write_bundle(&r, dir)?;
                println!("bundle written to {}", dir.display());
            }
            Ok(match (r.value, expect) {
                (IrValue::Interval { .. }, _) => EXIT_UNKNOWN,
                (IrValue::Exact(v), Some(e)) if v != e => EXIT_DIFFERENT,
                _ => 0,
            })
        }
        Command::Gen { order, connected, min_edges, max_edges, count } => {
            let filter = GenFilter { connected_only: connected, min_edges, max_edges, ..Default::default() };
            if count {
                println!("{}", indram::enumerate::count(order, &filter)?);
                return Ok(0);
            }
            let stdout = io::stdout();
            let mut out = BufWriter::new(stdout.lock());
            let mut err = None;
            generate(order, &filter, |g| match writeln!(out, "{}", graph6::encode(g)) {
                Ok(()) => ControlFlow::Continue(()),
                Err(e) => {
                    err = Some(e);
                    ControlFlow::Break(())
                }
            })?;
            match err {
                Some(e) if e.kind() == io::ErrorKind::BrokenPipe => {}
                Some(e) => return Err(e.into()),
                None => out.flush()?,
            }
            Ok(0)
        }
        Command::Embed { host, pattern, weak } => {
            let p = parse_graph(&pattern)?;
            let find = |f: &Graph| {
                if weak {
                    indram::embed::find_subgraph(f, &p)
                } else {
                    indram::embed::find_induced(f, &p)
                }
            };
            match host {
                Some(host) => {
                    let f = parse_graph(&host)?;
                    match find(&f) {
                        Some(e) => {
                            let map: Vec<String> = e.map.iter().map(|v| v.to_string()).collect();
                            println!("found: {}", map.join(" "));
                            Ok(0)
                        }
                        None => {
                            println!("not found");
                            Ok(EXIT_DIFFERENT)
                        }
                    }
                }
                None => {
                    for line in io::stdin().lock().lines() {
                        let line = line?;
                        let line = line.trim();
                        if line.is_empty() {
                            continue;
                        }
                        let f = graph6::decode(line).map_err(|e| UsageError(format!("{line}: {e}")))?;
                        if find(&f).is_some() {
                            println!("{line}");
                        }
                    }
                    Ok(0)
                }
            }
        }
        Command::Strategy { name, host, red, parts, t, out } => {
            let f = parse_graph(&host)?;
            let red = || -> Result<Graph> {
                parse_graph(red.as_deref().ok_or_else(|| UsageError("this strategy needs --red".into()))?)
            };
            let coloring = match name {
                StrategyName::Avoid2k2 => avoid_2k2_coloring(&f, &red()?)?,
                StrategyName::ChromaticPartition => chromatic_partition_coloring(&f, &red()?, parts)?,
                StrategyName::Triangle => triangle_coloring(&f, t)?,
                StrategyName::MatchingPartition => {
                    let p = matching_partition(&f)?;
                    let side = |mask: u64| -> String {
                        (0..f.order()).filter(|v| mask >> v & 1 == 1).map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
                    };
                    println!("V1: {}", side(p.v1));
                    println!("V2: {}", side(p.v2));
                    println!("largest induced matching inside the parts: {}", p.within_part_matching(&f));
                    return Ok(0);
                }
            };
            let Some(c) = coloring else {
                println!("host has no induced copy of the pattern; any colouring is good");
                return Ok(0);
            };
            let text = c.to_witness(&f);
            match out {
                Some(path) => fs::write(&path, text).with_context(|| format!("writing {}", path.display()))?,
                None => print!("{text}"),
            }
            Ok(0)
        }
        Command::VerifyPaper { profile, budget, seed, json, evidence, timing } => {
            let profile = match profile {
                ProfileArg::Quick => Profile::Quick,
                ProfileArg::Full => Profile::Full,
            };
            let report = verify_all(&VerifyOptions { profile, budget, seed, evidence_dir: evidence });
            print!("{}", report.to_text(timing));
            if let Some(path) = json {
                fs::write(&path, report.to_json()).with_context(|| format!("writing {}", path.display()))?;
            }
            Ok(if report.failed() { EXIT_DIFFERENT } else { 0 })
        }
        Command::Certify { bundle } => match certify(&bundle) {
            Ok(r) => {
                println!("OK, IR = {}, {} witnesses validated", r.value, r.witnesses);
                if r.arrow_host_confirmed {
                    println!("arrowing host confirmed");
                }
                Ok(0)
            }
            Err(e) => {
                println!("INVALID: {e}");
                Ok(EXIT_DIFFERENT)
            }
        },
    }
}
